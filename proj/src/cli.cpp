#include "braidwrench/cli.hpp"

#include "braidwrench/artin.hpp"
#include "braidwrench/braid_index.hpp"
#include "braidwrench/errors.hpp"
#include "braidwrench/fdtc.hpp"
#include "braidwrench/fuzz.hpp"
#include "braidwrench/parse.hpp"
#include "braidwrench/upsilon.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <set>

namespace braidwrench {

namespace {

using nlohmann::json;

long long to_ll(const BigInt& x) { return x.convert_to<long long>(); }

json rat_json(const Rat& x) {
    return json{{"num", to_ll(rat_num(x))}, {"den", to_ll(rat_den(x))}};
}

json pl_json(const PLFunction& f) {
    json bp = json::array(), vals = json::array(), slopes = json::array();
    for (const Rat& t : f.breakpoints()) bp.push_back(rat_json(t));
    for (const Rat& v : f.values()) vals.push_back(rat_json(v));
    for (const Rat& s : f.slopes()) slopes.push_back(rat_json(s));
    return json{{"breakpoints", bp}, {"values", vals}, {"slopes", slopes}};
}

std::string rats_line(const std::vector<Rat>& xs) {
    std::string out;
    for (const Rat& x : xs) {
        if (!out.empty()) out += ' ';
        out += rat_str(x);
    }
    return out;
}

void print_pl_text(const PLFunction& f, std::ostream& out) {
    out << "domain: [0, " << rat_str(f.domain_end()) << "]\n"
        << "breakpoints: " << rats_line(f.breakpoints()) << "\n"
        << "values: " << rats_line(f.values()) << "\n"
        << "slopes: " << rats_line(f.slopes()) << "\n";
}

// Contractual plot format: exact rationals, never floats.
void print_pl_csv(const PLFunction& f, int samples, std::ostream& out) {
    std::set<Rat> ts(f.breakpoints().begin(), f.breakpoints().end());
    for (int j = 0; j <= samples; ++j)
        ts.insert(f.domain_end() * j / std::max(samples, 1));
    out << "t_num,t_den,v_num,v_den\n";
    for (const Rat& t : ts) {
        const Rat v = pl_eval(f, t);
        out << rat_num(t) << ',' << rat_den(t) << ',' << rat_num(v) << ','
            << rat_den(v) << "\n";
    }
}

BraidWord make_family(const std::string& name,
                      const std::vector<long long>& params) {
    auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw BadParams("family " + name + " takes " + std::to_string(k) +
                            " parameter(s)");
    };
    const auto p = [&](std::size_t j) { return static_cast<int>(params[j]); };
    if (name == "delta") { want(1); return delta(p(0)); }
    if (name == "delta_rev") { want(1); return delta_rev(p(0)); }
    if (name == "full_twist") { want(1); return full_twist(p(0)); }
    if (name == "torus") { want(2); return torus_braid(p(0), params[1]); }
    if (name == "beta_nm") { want(2); return beta_nm(p(0), p(1)); }
    if (name == "elrifai_K") { want(1); return elrifai_K(p(0)); }
    if (name == "elrifai_L") { want(1); return elrifai_L(p(0)); }
    throw BadParams("unknown family '" + name + "'");
}

std::uint64_t env_budget() {
    if (const char* env = std::getenv("BRAIDWRENCH_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultBudget;
}

struct WordArgs {
    std::string text;
    int strands = 0;  // 0 = infer

    ParsedInput parsed() const {
        return parse_braid(text, strands > 0 ? std::optional<int>(strands)
                                             : std::nullopt);
    }
};

// Parses two words over a common strand count: the explicit -n if given,
// otherwise the larger of the two inferred counts.
std::pair<BraidWord, BraidWord> parse_pair(const std::string& a,
                                           const std::string& b, int strands) {
    if (strands > 0) {
        return {parse_braid(a, strands).word, parse_braid(b, strands).word};
    }
    ParsedInput pa = parse_braid(a);
    ParsedInput pb = parse_braid(b);
    const int n = std::max(pa.strands, pb.strands);
    return {BraidWord(n, pa.word.letters()), BraidWord(n, pb.word.letters())};
}

void add_word_options(CLI::App* cmd, WordArgs& args) {
    cmd->add_option("word", args.text, "braid word, e.g. \"s1 S2 s1\"")
        ->required();
    cmd->add_option("-n,--strands", args.strands,
                    "strand count (default: 1 + max generator index)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"braidwrench: Dehornoy order, fractional Dehn twists, and "
                 "homogenized Upsilon for braids"};
    app.require_subcommand(1);

    std::uint64_t budget = env_budget();
    std::uint64_t oracle_budget = kDefaultOracleBudget;
    bool as_json = false;
    app.add_option("--budget", budget,
                   "handle-reduction step cap (env BRAIDWRENCH_BUDGET)")
        ->capture_default_str();
    app.add_option("--oracle-budget", oracle_budget,
                   "Artin-oracle total image-letter cap")
        ->capture_default_str();
    app.add_flag("--json", as_json, "machine-readable output");
    app.fallthrough();

    WordArgs reduce_args, sign_args, floor_args, fdtc_args, index_args,
        wr_args, perm_args, comp_args;
    std::string cmp_a, cmp_b, eq_a, eq_b;
    int cmp_n = 0, eq_n = 0;
    bool eq_oracle = false;
    bool index_experimental = false;

    auto* cmd_reduce = app.add_subcommand("reduce", "handle-reduce a word");
    add_word_options(cmd_reduce, reduce_args);
    auto* cmd_sign = app.add_subcommand("sign", "Dehornoy sign");
    add_word_options(cmd_sign, sign_args);
    auto* cmd_cmp = app.add_subcommand("cmp", "compare two braids");
    cmd_cmp->add_option("a", cmp_a)->required();
    cmd_cmp->add_option("b", cmp_b)->required();
    cmd_cmp->add_option("-n,--strands", cmp_n);
    auto* cmd_eq = app.add_subcommand("eq", "braid equality");
    cmd_eq->add_option("a", eq_a)->required();
    cmd_eq->add_option("b", eq_b)->required();
    cmd_eq->add_option("-n,--strands", eq_n);
    cmd_eq->add_flag("--oracle", eq_oracle, "decide via the Artin action");
    auto* cmd_floor = app.add_subcommand("floor", "Dehornoy floor");
    add_word_options(cmd_floor, floor_args);
    auto* cmd_fdtc =
        app.add_subcommand("fdtc", "fractional Dehn twist coefficient");
    add_word_options(cmd_fdtc, fdtc_args);

    WordArgs ups_args;
    std::vector<std::string> ups_family;
    bool ups_csv = false;
    int ups_samples = 0;
    auto* cmd_ups =
        app.add_subcommand("upsilon", "homogenized Upsilon of a braid");
    cmd_ups->add_option("word", ups_args.text);
    cmd_ups->add_option("-n,--strands", ups_args.strands);
    cmd_ups->add_option("--family", ups_family,
                        "family name and parameters instead of a word")
        ->expected(2, 3);
    cmd_ups->add_flag("--csv", ups_csv, "emit t,value rows");
    cmd_ups->add_option("--samples", ups_samples,
                        "extra uniform sample rows in CSV output");

    int torus_n = 0, torus_k = 0;
    bool torus_csv = false;
    int torus_samples = 0;
    auto* cmd_torus =
        app.add_subcommand("torus-upsilon", "Upsilon of T_{n,nk+1}");
    cmd_torus->add_option("n", torus_n)->required();
    cmd_torus->add_option("k", torus_k)->required();
    cmd_torus->add_flag("--csv", torus_csv);
    cmd_torus->add_option("--samples", torus_samples);

    auto* cmd_index = app.add_subcommand("index", "braid-index certificate");
    add_word_options(cmd_index, index_args);
    cmd_index->add_flag("--experimental", index_experimental,
                        "also report the open-question n-2 threshold");

    auto* cmd_wr = app.add_subcommand("wr", "writhe (exponent sum)");
    add_word_options(cmd_wr, wr_args);
    auto* cmd_perm = app.add_subcommand("perm", "strand permutation");
    add_word_options(cmd_perm, perm_args);
    auto* cmd_comp =
        app.add_subcommand("components", "components of the closure");
    add_word_options(cmd_comp, comp_args);

    std::string family_name;
    std::vector<long long> family_params;
    auto* cmd_family = app.add_subcommand("family", "named braid families");
    cmd_family->add_option("name", family_name,
                           "delta|delta_rev|full_twist|torus|beta_nm|"
                           "elrifai_K|elrifai_L")
        ->required();
    cmd_family->add_option("params", family_params, "integer parameters");

    std::string fuzz_suite;
    std::uint64_t fuzz_seed = 0, fuzz_count = 200;
    auto* cmd_fuzz =
        app.add_subcommand("fuzz", "randomized property suites");
    cmd_fuzz->add_option("--suite", fuzz_suite,
                         "oracle|order|fdtc|hu|markov")
        ->required();
    cmd_fuzz->add_option("--seed", fuzz_seed)->capture_default_str();
    cmd_fuzz->add_option("--count", fuzz_count, "cases per strand count")
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(cmd_reduce)) {
            const ParsedInput in = reduce_args.parsed();
            const ReductionReport report = handle_reduce(in.word, budget);
            if (as_json) {
                out << json{{"command", "reduce"},
                            {"strands", in.strands},
                            {"reduced", print_braid(report.reduced)},
                            {"steps", report.steps},
                            {"sign", to_string(report.sign)}}
                            .dump()
                    << "\n";
            } else {
                out << "reduced: " << print_braid(report.reduced) << "\n"
                    << "steps: " << report.steps << "\n"
                    << "sign: " << to_string(report.sign) << "\n";
            }
        } else if (app.got_subcommand(cmd_sign)) {
            const ParsedInput in = sign_args.parsed();
            const DehornoySign s = dehornoy_sign(in.word, budget);
            if (as_json)
                out << json{{"command", "sign"},
                            {"strands", in.strands},
                            {"sign", to_string(s)}}
                            .dump()
                    << "\n";
            else
                out << to_string(s) << "\n";
        } else if (app.got_subcommand(cmd_cmp)) {
            const auto [a, b] = parse_pair(cmp_a, cmp_b, cmp_n);
            const Ordering o = compare(a, b, budget);
            if (as_json)
                out << json{{"command", "cmp"},
                            {"strands", a.strands()},
                            {"order", to_string(o)}}
                            .dump()
                    << "\n";
            else
                out << to_string(o) << "\n";
        } else if (app.got_subcommand(cmd_eq)) {
            const auto [a, b] = parse_pair(eq_a, eq_b, eq_n);
            const bool equal =
                eq_oracle
                    ? artin_equal(a, b, oracle_budget)
                    : dehornoy_sign(concat(inverse(a), b), budget) ==
                          DehornoySign::Zero;
            if (as_json)
                out << json{{"command", "eq"},
                            {"strands", a.strands()},
                            {"equal", equal},
                            {"method", eq_oracle ? "artin" : "dehornoy"}}
                            .dump()
                    << "\n";
            else
                out << (equal ? "true" : "false") << "\n";
        } else if (app.got_subcommand(cmd_floor)) {
            const ParsedInput in = floor_args.parsed();
            const long long m = dehornoy_floor(in.word, budget);
            if (as_json)
                out << json{{"command", "floor"},
                            {"strands", in.strands},
                            {"floor", m}}
                            .dump()
                    << "\n";
            else
                out << m << "\n";
        } else if (app.got_subcommand(cmd_fdtc)) {
            const ParsedInput in = fdtc_args.parsed();
            const Fdtc omega = fdtc(in.word, budget);
            if (as_json)
                out << json{{"command", "fdtc"},
                            {"strands", in.strands},
                            {"value", rat_json(omega.value)}}
                            .dump()
                    << "\n";
            else
                out << rat_str(omega.value) << "\n";
        } else if (app.got_subcommand(cmd_ups)) {
            BraidWord word = BraidWord::identity(2);
            if (!ups_family.empty()) {
                if (!ups_args.text.empty())
                    throw BadParams("give either a word or --family");
                std::vector<long long> params;
                for (std::size_t j = 1; j < ups_family.size(); ++j) {
                    try {
                        params.push_back(std::stoll(ups_family[j]));
                    } catch (const std::exception&) {
                        throw BadParams("family parameter '" + ups_family[j] +
                                        "' is not an integer");
                    }
                }
                word = make_family(ups_family[0], params);
            } else {
                word = ups_args.parsed().word;
            }
            const HUResult hu = homogenized_upsilon(word, budget);
            if (ups_csv) {
                print_pl_csv(hu.fn, ups_samples, out);
            } else if (as_json) {
                json j = pl_json(hu.fn);
                j["command"] = "upsilon";
                j["strands"] = word.strands();
                j["writhe"] = hu.writhe;
                j["omega"] = rat_json(hu.omega.value);
                j["slope_change"] = rat_json(hu.slope_change_at_two_over_n);
                out << j.dump() << "\n";
            } else {
                print_pl_text(hu.fn, out);
                out << "writhe: " << hu.writhe << "\n"
                    << "omega: " << rat_str(hu.omega.value) << "\n"
                    << "slope-change: "
                    << rat_str(hu.slope_change_at_two_over_n) << "\n";
            }
        } else if (app.got_subcommand(cmd_torus)) {
            const PLFunction f = torus_upsilon(torus_n, torus_k);
            if (torus_csv) {
                print_pl_csv(f, torus_samples, out);
            } else if (as_json) {
                json j = pl_json(f);
                j["command"] = "torus-upsilon";
                j["n"] = torus_n;
                j["k"] = torus_k;
                out << j.dump() << "\n";
            } else {
                print_pl_text(f, out);
            }
        } else if (app.got_subcommand(cmd_index)) {
            const ParsedInput in = index_args.parsed();
            const IndexCertificate cert = index_certificate(in.word, budget);
            if (as_json) {
                json j{{"command", "index"},
                       {"strands", cert.strands},
                       {"omega", rat_json(cert.omega.value)},
                       {"verdict", to_string(cert.verdict)}};
                j["rule"] = cert.rule ? json(to_string(*cert.rule)) : json();
                if (index_experimental)
                    j["experimental_exceeds_n_minus_2"] =
                        cert.experimental_exceeds_n_minus_2;
                out << j.dump() << "\n";
            } else {
                out << "verdict: " << to_string(cert.verdict) << "\n";
                if (cert.rule) out << "rule: " << to_string(*cert.rule) << "\n";
                out << "omega: " << rat_str(cert.omega.value) << "\n"
                    << "strands: " << cert.strands << "\n";
                if (index_experimental)
                    out << "experimental |omega| > n-2: "
                        << (cert.experimental_exceeds_n_minus_2 ? "yes" : "no")
                        << "\n";
            }
        } else if (app.got_subcommand(cmd_wr)) {
            const ParsedInput in = wr_args.parsed();
            if (as_json)
                out << json{{"command", "wr"},
                            {"strands", in.strands},
                            {"writhe", writhe(in.word)}}
                            .dump()
                    << "\n";
            else
                out << writhe(in.word) << "\n";
        } else if (app.got_subcommand(cmd_perm)) {
            const ParsedInput in = perm_args.parsed();
            const Perm p = perm_of(in.word);
            if (as_json) {
                out << json{{"command", "perm"},
                            {"strands", in.strands},
                            {"images", p.images}}
                            .dump()
                    << "\n";
            } else {
                std::string line;
                for (int v : p.images) {
                    if (!line.empty()) line += ' ';
                    line += std::to_string(v);
                }
                out << line << "\n";
            }
        } else if (app.got_subcommand(cmd_comp)) {
            const ParsedInput in = comp_args.parsed();
            const int c = closure_components(in.word);
            if (as_json)
                out << json{{"command", "components"},
                            {"strands", in.strands},
                            {"components", c}}
                            .dump()
                    << "\n";
            else
                out << c << "\n";
        } else if (app.got_subcommand(cmd_family)) {
            const BraidWord w = make_family(family_name, family_params);
            if (as_json)
                out << json{{"command", "family"},
                            {"name", family_name},
                            {"strands", w.strands()},
                            {"word", print_braid(w)}}
                            .dump()
                    << "\n";
            else
                out << print_braid(w) << "\n";
        } else if (app.got_subcommand(cmd_fuzz)) {
            FuzzResult total;
            auto run_per_n = [&](auto&& fn, std::vector<int> ns) {
                for (int n : ns) {
                    const FuzzResult r = fn(n);
                    out << "suite=" << fuzz_suite << " n=" << n
                        << " cases=" << r.cases
                        << " violations=" << r.violations << "\n";
                    total += r;
                }
            };
            if (fuzz_suite == "oracle") {
                total = oracle_suite(5, 30, fuzz_count, fuzz_seed, out, budget,
                                     oracle_budget);
                out << "suite=oracle cases=" << total.cases
                    << " violations=" << total.violations << "\n";
            } else if (fuzz_suite == "order") {
                run_per_n(
                    [&](int n) {
                        return order_suite(n, fuzz_count, fuzz_seed + n, out,
                                           budget);
                    },
                    {2, 3, 4});
            } else if (fuzz_suite == "fdtc") {
                run_per_n(
                    [&](int n) {
                        return fdtc_suite(n, fuzz_count, fuzz_seed + n, out,
                                          budget);
                    },
                    {3, 4});
            } else if (fuzz_suite == "hu") {
                run_per_n(
                    [&](int n) {
                        return hu_suite(n, fuzz_count, fuzz_seed + n, out,
                                        budget);
                    },
                    {3, 4});
            } else if (fuzz_suite == "markov") {
                total = markov_suite(fuzz_count, fuzz_seed, out, budget);
                out << "suite=markov cases=" << total.cases
                    << " violations=" << total.violations << "\n";
            } else {
                throw BadParams("unknown suite '" + fuzz_suite + "'");
            }
            if (total.violations > 0) return 1;
        }
        return 0;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const OracleBudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        // BadParams, StrandMismatch, DomainError
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace braidwrench
