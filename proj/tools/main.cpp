// helgason-super: batch front door for the pair/root/c-function/sphericity
// computations. Machine-readable JSON ("schema": 1) or aligned text.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "helgason/cfunction.hpp"
#include "helgason/chains.hpp"
#include "helgason/pair.hpp"
#include "helgason/roots.hpp"
#include "helgason/sphericity.hpp"
#include "helgason/weights.hpp"

using json = nlohmann::ordered_json;
using namespace helgason;

namespace {

// ---------------------------------------------------------------- plumbing

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitUsage = 64;

struct CommonArgs {
    long long p = 0, q = 0, r = 0, s = 0;
    std::string format = "text";
    std::vector<std::string> weight;
    long long bound = 4;
};

void add_params(CLI::App* sub, CommonArgs& a) {
    sub->add_option("p", a.p, "size of the first even block")->required();
    sub->add_option("q", a.q, "size of the second even block")->required();
    sub->add_option("r", a.r, "size of the first odd block")->required();
    sub->add_option("s", a.s, "size of the second odd block")->required();
    sub->add_option("--format", a.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
}

void add_weight(CLI::App* sub, CommonArgs& a) {
    sub->add_option("--weight", a.weight,
                    "weight coordinates lambda^delta_1..q then lambda^eps_1..s, "
                    "rationals like -2 or 5/3; e.g. for (p,q,r,s) = (1,1,1,1) the "
                    "weight with lambda^delta_1 = -2, lambda^eps_1 = 0 is "
                    "`--weight -2 0`")
        ->expected(-1);
}

int fail_invalid(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return kExitInvalid;
}

std::optional<PairParams> checked_params(const CommonArgs& a, std::string& err) {
    if (a.p < 0 || a.q < 0 || a.r < 0 || a.s < 0) {
        err = "pair parameters must be nonnegative";
        return std::nullopt;
    }
    PairParams params{static_cast<std::size_t>(a.p), static_cast<std::size_t>(a.q),
                      static_cast<std::size_t>(a.r), static_cast<std::size_t>(a.s)};
    err = params.validate();
    if (!err.empty()) return std::nullopt;
    return params;
}

std::optional<AStarWeight> parse_weight(const CommonArgs& a, const PairParams& params) {
    // accept both space-separated values and one comma-joined token
    std::vector<std::string> tokens;
    for (const auto& t : a.weight) {
        std::size_t start = 0;
        while (start <= t.size()) {
            const std::size_t comma = t.find(',', start);
            tokens.push_back(t.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    if (tokens.size() != params.q + params.s) return std::nullopt;
    AStarWeight lam(params.q, params.s);
    for (std::size_t k = 0; k < tokens.size(); ++k) {
        const auto val = parse_rational(tokens[k]);
        if (!val) return std::nullopt;
        (k < params.q ? lam.ldelta[k] : lam.leps[k - params.q]) = *val;
    }
    return lam;
}

std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

// Bounded worker pool; results land in a pre-sized vector by index, so
// output order never depends on scheduling.
std::size_t pool_size() {
    std::size_t n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("HELGASON_SUPER_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && static_cast<std::size_t>(v) < n)
            n = static_cast<std::size_t>(v);
    }
    return n;
}

template <class F>
void parallel_for(std::size_t count, F&& body) {
    const std::size_t workers = std::min(pool_size(), std::max<std::size_t>(count, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        threads.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                body(i);
        });
    for (auto& t : threads) t.join();
}

// ------------------------------------------------------------ serializers

json params_json(const PairParams& params) {
    return json{{"p", params.p}, {"q", params.q}, {"r", params.r}, {"s", params.s}};
}

json report_header(const std::string& command, const PairParams& params) {
    json out;
    out["schema"] = 1;
    out["command"] = command;
    out["params"] = params_json(params);
    return out;
}

json weight_json(const AStarWeight& w) {
    json out;
    out["ldelta"] = json::array();
    for (const auto& c : w.ldelta) out["ldelta"].push_back(rational_to_string(c));
    out["leps"] = json::array();
    for (const auto& c : w.leps) out["leps"].push_back(rational_to_string(c));
    out["rendered"] = astar_to_string(w);
    return out;
}

json restricted_json(const RestrictedRootDatum& d) {
    json out;
    out["root"] = astar_to_string(d.root);
    out["even_dim"] = d.even_dim;
    out["odd_dim"] = d.odd_dim;
    out["m"] = d.m;
    out["isotropic"] = d.isotropic;
    out["indivisible"] = d.indivisible;
    out["has_double"] = d.has_double;
    out["m_double"] = d.m_double;
    return out;
}

json complex_json(const std::complex<double>& z) {
    return json{{"re", fmt12(z.real())}, {"im", fmt12(z.imag())}};
}

json factor_json(const FactorEvaluation& fe) {
    json out;
    out["alpha"] = astar_to_string(fe.factor.alpha);
    out["isotropic"] = fe.factor.isotropic;
    if (fe.factor.isotropic) {
        out["qexp"] = fe.factor.qexp;
    } else {
        out["m"] = fe.factor.m;
        out["m_double"] = fe.factor.m_double;
    }
    switch (fe.status) {
        case FactorStatus::finite: out["status"] = "finite"; break;
        case FactorStatus::symbolic_zero: out["status"] = "zero"; break;
        case FactorStatus::symbolic_pole: out["status"] = "pole"; break;
        case FactorStatus::indeterminate: out["status"] = "indeterminate"; break;
    }
    out["zero_order"] = fe.zero_order;
    out["pole_order"] = fe.pole_order;
    out["value"] = complex_json(fe.value);
    return out;
}

json sphericity_json(const SphericityReport& rep) {
    json out;
    out["lam"] = weight_json(rep.lam);
    out["cond_even_lambda_alpha"] = rep.cond_even_lambda_alpha;
    out["cond_gl_pairing"] = rep.cond_gl_pairing;
    out["gl_dominant"] = rep.gl_dominant;
    out["high_enough"] = rep.high_enough;
    out["c_nonzero_at_shift"] = rep.c_nonzero_at_shift;
    out["self_dual"] = rep.self_dual;
    out["atypical"] = rep.atypical;
    out["notes"] = rep.notes;
    return out;
}

void emit(const json& out, const std::string& format) {
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
        return;
    }
    // text: flat key/value walk with indentation; tables stay readable and
    // the content is identical to the json route.
    std::function<void(const json&, int)> walk = [&](const json& node, int indent) {
        const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
        if (node.is_object()) {
            for (const auto& [key, value] : node.items()) {
                if (value.is_object() || value.is_array()) {
                    std::cout << pad << key << ":\n";
                    walk(value, indent + 1);
                } else {
                    std::cout << pad << key << ": "
                              << (value.is_string() ? value.get<std::string>()
                                                    : value.dump())
                              << "\n";
                }
            }
        } else if (node.is_array()) {
            for (const auto& value : node) {
                if (value.is_object() || value.is_array()) {
                    std::cout << pad << "-\n";
                    walk(value, indent + 1);
                } else {
                    std::cout << pad << "- "
                              << (value.is_string() ? value.get<std::string>()
                                                    : value.dump())
                              << "\n";
                }
            }
        }
    };
    walk(out, 0);
}

// ------------------------------------------------------------- subcommands

int run_pair(const CommonArgs& a) {
    std::string err;
    const auto params = checked_params(a, err);
    if (!params) return fail_invalid(err);
    const PairData pair = build_pair(*params);
    json out = report_header("pair", *params);
    out["dims"] = {{"even", params->p + params->q}, {"odd", params->r + params->s}};
    out["h_basis"] = h_basis_labels(*params);
    json ab = json::array();
    for (std::size_t k = 1; k <= params->q; ++k) ab.push_back("aB" + std::to_string(k));
    for (std::size_t l = 1; l <= params->s; ++l) ab.push_back("aF" + std::to_string(l));
    out["a_basis"] = ab;
    json sig = json::array();
    for (std::size_t i = 0; i < params->p; ++i) sig.push_back(1);
    for (std::size_t i = 0; i < params->q; ++i) sig.push_back(-1);
    for (std::size_t i = 0; i < params->r; ++i) sig.push_back(1);
    for (std::size_t i = 0; i < params->s; ++i) sig.push_back(-1);
    out["sigma_diag"] = sig;
    (void)pair;
    emit(out, a.format);
    return kExitOk;
}

int run_roots(const CommonArgs& a, bool restricted) {
    std::string err;
    const auto params = checked_params(a, err);
    if (!params) return fail_invalid(err);
    const PairData pair = build_pair(*params);
    json out = report_header("roots", *params);
    if (restricted) {
        json arr = json::array();
        for (const auto& d : positive_restricted_system(pair))
            arr.push_back(restricted_json(d));
        out["restricted_positive"] = arr;
    } else {
        json arr = json::array();
        for (const auto& d : full_root_table(pair)) {
            json row;
            row["tag"] = d.table_tag;
            row["root"] = hweight_to_string(d.root);
            row["parity"] = d.parity == Parity::even ? "even" : "odd";
            arr.push_back(row);
        }
        out["full_roots"] = arr;
    }
    emit(out, a.format);
    return kExitOk;
}

int run_rho(const CommonArgs& a) {
    std::string err;
    const auto params = checked_params(a, err);
    if (!params) return fail_invalid(err);
    const PairData pair = build_pair(*params);
    const auto sigma_plus = positive_restricted_system(pair);
    const AStarWeight rho = weyl_vector(sigma_plus);
    const AStarWeight rho_str = weyl_vector_supertrace(pair);
    json out = report_header("rho", *params);
    out["rho"] = weight_json(rho);
    out["rho_supertrace"] = weight_json(rho_str);
    out["routes_agree"] = rho == rho_str;
    json pairings = json::array();
    for (std::size_t k = 1; k <= params->q; ++k)
        pairings.push_back({{"basis", "iaB" + std::to_string(k)},
                            {"value", rational_to_string(pairing(rho, ia_b(*params, k)))}});
    for (std::size_t l = 1; l <= params->s; ++l)
        pairings.push_back({{"basis", "iaF" + std::to_string(l)},
                            {"value", rational_to_string(pairing(rho, ia_f(*params, l)))}});
    out["pairings_with_ia"] = pairings;
    emit(out, a.format);
    return kExitOk;
}

int run_cfunction(const CommonArgs& a) {
    std::string err;
    const auto params = checked_params(a, err);
    if (!params) return fail_invalid(err);
    const auto lam = parse_weight(a, *params);
    if (!lam) return fail_invalid("malformed weight: expected " +
                                  std::to_string(params->q + params->s) +
                                  " rational coordinates");
    const PairData pair = build_pair(*params);
    const auto sigma_plus = positive_restricted_system(pair);
    const CValue cv = c_evaluate(sigma_plus, *lam);
    const ZeroSetReport zs = zeros_predicate(sigma_plus, *lam);
    json out = report_header("cfunction", *params);
    out["lam"] = weight_json(*lam);
    out["rho"] = weight_json(weyl_vector(sigma_plus));
    json factors = json::array();
    for (const auto& fe : cv.per_factor) factors.push_back(factor_json(fe));
    out["factors"] = factors;
    out["value"] = complex_json(cv.value);
    out["zero_flag"] = cv.zero_flag;
    out["pole_flag"] = cv.pole_flag;
    out["indeterminate_warning"] = cv.indeterminate_warning;
    json witnesses = json::array();
    for (const auto& w : zs.witnesses)
        witnesses.push_back({{"alpha", astar_to_string(w.alpha)}, {"clause", w.clause}});
    out["zeros_predicate"] = {{"zero", zs.zero}, {"witnesses", witnesses}};
    out["high_enough"] = high_enough(sigma_plus, *lam);
    out["km_nonvanishing"] = km_nonvanishing(sigma_plus, *lam);
    emit(out, a.format);
    return kExitOk;
}

int run_spherical(const CommonArgs& a) {
    std::string err;
    const auto params = checked_params(a, err);
    if (!params) return fail_invalid(err);
    if (a.bound < 0 || a.bound % 2 != 0)
        return fail_invalid("bound must be a nonnegative even integer");
    const PairData pair = build_pair(*params);
    const auto weights = enumerate_spherical(*params, a.bound);
    std::vector<SphericityReport> reports(weights.size());
    parallel_for(weights.size(),
                 [&](std::size_t i) { reports[i] = classify(pair, weights[i]); });
    json out = report_header("spherical", *params);
    out["bound"] = a.bound;
    out["count"] = weights.size();
    json arr = json::array();
    for (const auto& rep : reports) arr.push_back(sphericity_json(rep));
    out["weights"] = arr;
    emit(out, a.format);
    return kExitOk;
}

int run_selfdual(const CommonArgs& a) {
    std::string err;
    const auto params = checked_params(a, err);
    if (!params) return fail_invalid(err);
    const auto lam = parse_weight(a, *params);
    if (!lam) return fail_invalid("malformed weight: expected " +
                                  std::to_string(params->q + params->s) +
                                  " rational coordinates");
    json out = report_header("selfdual", *params);
    out["lam"] = weight_json(*lam);
    out["self_dual"] = self_dual_check(*params, *lam);
    emit(out, a.format);
    return kExitOk;
}

int run_chain(const CommonArgs& a) {
    std::string err;
    const auto params = checked_params(a, err);
    if (!params) return fail_invalid(err);
    const DeltaEpsChain chain = compatible_chain(*params);
    const ReflectionChain rc = reversal_chain(chain);
    json out = report_header("chain", *params);
    out["chain"] = chain_to_string(chain);
    out["kinds"] = chain.kinds();
    out["length"] = chain.symbols.size();
    out["palindrome"] = is_palindrome(chain);
    std::size_t odd = 0;
    json steps = json::array();
    for (const auto& step : rc.steps) {
        if (step.parity == Parity::odd) ++odd;
        json row;
        row["root"] = hweight_to_string(
            reflection_root(step, chain.n_delta, chain.n_eps));
        row["parity"] = step.parity == Parity::odd ? "odd" : "even";
        row["depth"] = step.depth;
        steps.push_back(row);
    }
    out["reversal"] = {{"step_count", rc.steps.size()},
                       {"odd_steps", odd},
                       {"even_steps", rc.steps.size() - odd},
                       {"steps", steps}};
    // The fourth chain segment is eps_{s+1}..eps_r; some printed versions of
    // the source tables show eps_{s+1}..eps_{s+r}, which double-books symbols.
    out["metadata"] = {{"fourth_segment_convention", "eps_{s+1}..eps_r"},
                       {"deviates_from_printed_source", true}};
    emit(out, a.format);
    return kExitOk;
}

int run_verify(const CommonArgs& a) {
    std::string err;
    const auto params = checked_params(a, err);
    if (!params) return fail_invalid(err);
    const PairData pair = build_pair(*params);
    json suites = json::array();
    bool all_ok = true;
    auto record = [&](const std::string& name, bool ok, const std::string& detail) {
        suites.push_back({{"suite", name}, {"ok", ok}, {"detail", detail}});
        all_ok = all_ok && ok;
    };

    const RootOracleReport oracle = oracle_verify_roots(pair);
    record("root_table_oracle", oracle.ok,
           "root spaces " + std::to_string(oracle.root_space_count) + ", zero-weight dim " +
               std::to_string(oracle.zero_weight_dim) + ", mismatches " +
               std::to_string(oracle.mismatches.size()));

    const auto sigma_plus = positive_restricted_system(pair);
    const AStarWeight rho = weyl_vector(sigma_plus);
    record("weyl_vector_cross_check", rho == weyl_vector_supertrace(pair),
           "rho = " + astar_to_string(rho));

    // rho pairing identity on every system within 3 flips, at its simple
    // indivisible roots
    {
        const auto sigma = restricted_root_data(pair);
        auto key_of = [](const std::vector<RestrictedRootDatum>& sys) {
            std::vector<std::string> k;
            for (const auto& d : sys) k.push_back(astar_to_string(d.root));
            std::sort(k.begin(), k.end());
            return k;
        };
        std::set<std::vector<std::string>> seen{key_of(sigma_plus)};
        std::vector<std::vector<RestrictedRootDatum>> frontier{sigma_plus}, all{sigma_plus};
        for (int depth = 0; depth < 3; ++depth) {
            std::vector<std::vector<RestrictedRootDatum>> next;
            for (const auto& phi : frontier)
                for (const auto& alpha : simple_roots(phi)) {
                    if (!alpha.indivisible) continue;
                    auto psi = flip_positive_system(phi, alpha, sigma);
                    if (seen.insert(key_of(psi)).second) {
                        next.push_back(psi);
                        all.push_back(psi);
                    }
                }
            frontier = std::move(next);
        }
        std::size_t checks = 0, fails = 0;
        for (const auto& psi : all) {
            const AStarWeight rho_psi = weyl_vector(psi);
            for (const auto& alpha : simple_roots(psi)) {
                if (!alpha.indivisible) continue;
                ++checks;
                if (pairing(rho_psi, alpha.root) !=
                    pairing(rho_alpha(alpha, sigma), alpha.root))
                    ++fails;
            }
        }
        record("rho_pairing_under_flips", fails == 0,
               std::to_string(all.size()) + " systems, " + std::to_string(checks) +
                   " checks, " + std::to_string(fails) + " failures");
    }

    // spherical / self-dual sweep at bound 4
    {
        const auto weights = enumerate_spherical(*params, 4);
        std::vector<unsigned char> ok(weights.size(), 0);
        parallel_for(weights.size(), [&](std::size_t i) {
            const SphericityReport rep = classify(pair, weights[i]);
            ok[i] = rep.self_dual && rep.cond_gl_pairing && rep.gl_dominant;
        });
        std::size_t fails = 0;
        for (const auto flag : ok)
            if (!flag) ++fails;
        record("spherical_self_dual_sweep", fails == 0,
               std::to_string(weights.size()) + " weights at bound 4, " +
                   std::to_string(fails) + " failures");
    }

    json out = report_header("verify", *params);
    out["suites"] = suites;
    out["ok"] = all_ok;
    emit(out, a.format);
    return all_ok ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
    const std::set<std::string> known = {"pair",      "roots",    "rho",   "cfunction",
                                        "spherical", "selfdual", "chain", "verify"};
    if (argc >= 2 && argv[1][0] != '-' && !known.count(argv[1])) {
        std::cerr << "error: unknown subcommand '" << argv[1] << "'\n";
        return kExitUsage;
    }

    CLI::App app{
        "helgason-super: restricted root data, c-function and spherical weight "
        "classification for the gl(p+q|r+s) symmetric pair"};
    app.require_subcommand(1);

    CommonArgs pair_a, roots_a, rho_a, cf_a, sph_a, sd_a, chain_a, verify_a;
    bool restricted = false;

    add_params(app.add_subcommand("pair", "Cartan data of the pair"), pair_a);
    auto* roots_cmd =
        app.add_subcommand("roots", "full root table or restricted root data");
    add_params(roots_cmd, roots_a);
    roots_cmd->add_flag("--restricted", restricted,
                        "positive restricted roots with multiplicities instead of "
                        "the full table");
    add_params(app.add_subcommand("rho", "Weyl vector, both computation routes"), rho_a);
    auto* cf_cmd = app.add_subcommand(
        "cfunction",
        "c-function factorization at the given weight (no implicit rho shift)");
    add_params(cf_cmd, cf_a);
    add_weight(cf_cmd, cf_a);
    auto* sph_cmd =
        app.add_subcommand("spherical", "enumerate and classify spherical weights");
    add_params(sph_cmd, sph_a);
    sph_cmd->add_option("--bound", sph_a.bound,
                        "even coefficient bound for the enumeration");
    auto* sd_cmd = app.add_subcommand("selfdual", "self-duality check for one weight");
    add_params(sd_cmd, sd_a);
    add_weight(sd_cmd, sd_a);
    add_params(app.add_subcommand("chain", "compatible chain and its reversal"),
               chain_a);
    add_params(app.add_subcommand("verify", "rerun all internal oracle suites"),
               verify_a);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (app.got_subcommand("pair")) return run_pair(pair_a);
        if (app.got_subcommand("roots")) return run_roots(roots_a, restricted);
        if (app.got_subcommand("rho")) return run_rho(rho_a);
        if (app.got_subcommand("cfunction")) return run_cfunction(cf_a);
        if (app.got_subcommand("spherical")) return run_spherical(sph_a);
        if (app.got_subcommand("selfdual")) return run_selfdual(sd_a);
        if (app.got_subcommand("chain")) return run_chain(chain_a);
        if (app.got_subcommand("verify")) return run_verify(verify_a);
    } catch (const std::exception& e) {
        return fail_invalid(e.what());
    }
    return kExitUsage;
}
