// Acceptance runner: executes every contractual criterion at its stated
// tolerance and prints one pass/fail line per criterion. Exits with the
// number of failed criteria.

#include "braidwrench/artin.hpp"
#include "braidwrench/braid_index.hpp"
#include "braidwrench/dehornoy.hpp"
#include "braidwrench/fdtc.hpp"
#include "braidwrench/fuzz.hpp"
#include "braidwrench/parse.hpp"
#include "braidwrench/upsilon.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace braidwrench;

namespace {

struct Criterion {
    int id;
    std::string label;
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    std::vector<std::string> details;
    double seconds = 0;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++violations;
            if (details.size() < 12) details.push_back(what);
        }
    }
    void absorb(const FuzzResult& r) {
        checks += r.cases;
        violations += r.violations;
    }
    bool pass() const { return violations == 0; }
};

double g_max_example_seconds = 0;
std::uint64_t g_budget_failures = 0;

template <typename F>
auto timed_example(F&& f) {
    const auto start = std::chrono::steady_clock::now();
    auto value = f();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    g_max_example_seconds = std::max(g_max_example_seconds, secs);
    return std::pair{std::move(value), secs};
}

std::string rat_or_throw(const std::function<Rat()>& f) {
    try {
        return rat_str(f());
    } catch (const BudgetExceeded& e) {
        ++g_budget_failures;
        return std::string("<budget exceeded>");
    }
}

// ---- criterion bodies --------------------------------------------------

void criterion_1(Criterion& c) {
    auto check_value = [&](const std::string& name, const BraidWord& b,
                           const Rat& expected) {
        const auto [shown, secs] = timed_example(
            [&] { return rat_or_throw([&] { return fdtc(b).value; }); });
        const bool ok = shown == rat_str(expected);
        c.expect(ok, name + ": fdtc = " + shown + ", expected " +
                         rat_str(expected));
        c.expect(secs < 60.0, name + ": took " + std::to_string(secs) + "s");
    };
    for (int n = 2; n <= 5; ++n)
        for (int m = 2; m <= 5; ++m)
            check_value("beta_nm(" + std::to_string(n) + "," +
                            std::to_string(m) + ")",
                        beta_nm(n, m), Rat(m - 1));
    for (int k = 1; k <= 3; ++k) {
        check_value("elrifai_K(" + std::to_string(k) + ")", elrifai_K(k),
                    Rat(2 * k));
        check_value("elrifai_L(" + std::to_string(k) + ")", elrifai_L(k),
                    Rat(2 * k + 1));
    }
    check_value("B4 word s1 s2 s3 s3", parse_braid("s1 s2 s3 s3", 4).word,
                Rat(1, 3));
    check_value("B5 word s1 s2 s3 s4 s1 s2",
                parse_braid("s1 s2 s3 s4 s1 s2", 5).word, Rat(1, 3));
}

void criterion_2(Criterion& c) {
    for (int n = 2; n <= 5; ++n) {
        for (int d = -3; d <= 3; ++d) {
            const auto [shown, secs] = timed_example([&] {
                return rat_or_throw(
                    [&] { return fdtc(power(full_twist(n), d)).value; });
            });
            c.expect(shown == rat_str(Rat(d)),
                     "fdtc(Delta^" + std::to_string(2 * d) + ") on " +
                         std::to_string(n) + " strands = " + shown);
            c.expect(secs < 60.0, "full twist power too slow");
        }
        c.expect(homogenized_upsilon(full_twist(n)).fn == torus_upsilon(n, 1),
                 "HU(full_twist) != torus_upsilon on " + std::to_string(n) +
                     " strands");
    }
}

void criterion_6(Criterion& c) {
    std::vector<std::pair<std::string, BraidWord>> examples;
    for (int n = 2; n <= 5; ++n)
        for (int m = 2; m <= 5; ++m)
            examples.emplace_back(
                "beta_nm(" + std::to_string(n) + "," + std::to_string(m) + ")",
                beta_nm(n, m));
    for (int k = 1; k <= 3; ++k) {
        examples.emplace_back("elrifai_K(" + std::to_string(k) + ")",
                              elrifai_K(k));
        examples.emplace_back("elrifai_L(" + std::to_string(k) + ")",
                              elrifai_L(k));
    }
    examples.emplace_back("A", parse_braid("s1 s2 s3 s3", 4).word);
    examples.emplace_back("B", parse_braid("s1 s2 s3 s4 s1 s2", 5).word);
    for (int n = 2; n <= 5; ++n)
        examples.emplace_back("full_twist(" + std::to_string(n) + ")",
                              full_twist(n));

    for (const auto& [name, b] : examples) {
        const int n = b.strands();
        const HUResult hu = homogenized_upsilon(b);
        const Rat knee(2, n);
        const Rat end = hu.fn.domain_end();
        c.expect(hu.slope_change_at_two_over_n == n * hu.omega.value,
                 name + ": recorded slope change inconsistent");
        if (knee < end) {
            c.expect(slope_change_at(hu.fn, knee) == n * hu.omega.value,
                     name + ": slope change at 2/n != n * omega");
        } else {
            c.expect(hu.fn.slopes().size() == 1,
                     name + ": two-strand HU must be a single line");
        }
        c.expect(rat_den(hu.slope_change_at_two_over_n / n) <= n,
                 name + ": slope change outside {np/q, q <= n}");

        // Dehornoy-floor sandwich at 10 sampled t past the knee
        const long long m = dehornoy_floor(b);
        const Rat lo_t = knee < end ? knee : Rat(0);
        for (int j = 0; j <= 9; ++j) {
            const Rat t = lo_t + (end - lo_t) * j / 9;
            const Rat value = pl_eval(hu.fn, t);
            if (t < knee) continue;
            const Rat base = Rat(-hu.writhe) * t / 2;
            c.expect(base + Rat(m) * n * (t - knee) <= value &&
                         value <= base + Rat(m + 1) * n * (t - knee),
                     name + ": floor sandwich fails at t = " + rat_str(t));
        }
    }
}

void criterion_8(Criterion& c, std::ostream& log) {
    c.absorb(markov_suite(200, 801, log));
    for (int n : {3, 4, 5})
        c.expect(index_certificate(beta_nm(n, n - 1)).verdict ==
                     IndexVerdict::NoConclusion,
                 "beta_nm(n, n-1) must be NoConclusion at n = " +
                     std::to_string(n));
    for (int n = 2; n <= 5; ++n)
        for (int m = 2; m <= 5; ++m) {
            if (m - 1 <= n - 1) continue;
            c.expect(index_certificate(beta_nm(n, m)).verdict ==
                         IndexVerdict::ExactlyN,
                     "beta_nm(" + std::to_string(n) + "," + std::to_string(m) +
                         ") must certify ExactlyN");
        }
}

void criterion_9(Criterion& c) {
    std::mt19937_64 rng(901);
    std::uniform_int_distribution<int> n_dist(2, 4);
    std::uniform_int_distribution<int> extra_dist(1, 2);
    for (int i = 0; i < 200; ++i) {
        const int n = n_dist(rng);
        const int target = n + extra_dist(rng);
        const BraidWord base = random_word(n, 8, rng);
        const MarkovTrace trace = markov_perturb(base, target, rng());
        const HUResult hu_base = homogenized_upsilon(base);
        const HUResult hu_result = homogenized_upsilon(trace.result);
        const Rat end =
            std::min(hu_base.fn.domain_end(), hu_result.fn.domain_end());
        for (int j = 0; j <= 4; ++j) {
            const Rat t = end * j / 4;
            const Rat diff =
                abs(pl_eval(hu_base.fn, t) - pl_eval(hu_result.fn, t));
            c.expect(diff <= t * (n + target - 2) / 2,
                     "HU Markov bound fails at t = " + rat_str(t) + " for " +
                         print_braid(base));
        }
    }
}

}  // namespace

int main() {
    std::ostringstream fuzz_log;
    std::vector<Criterion> criteria;
    auto run = [&](int id, const std::string& label, auto&& body) {
        Criterion c;
        c.id = id;
        c.label = label;
        const auto start = std::chrono::steady_clock::now();
        try {
            body(c);
        } catch (const BudgetExceeded& e) {
            ++g_budget_failures;
            c.expect(false, std::string("budget exceeded: ") + e.what());
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        c.seconds = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        criteria.push_back(std::move(c));
    };

    run(1, "exact fdtc of the example families", criterion_1);
    run(2, "full-twist calibration", [&](Criterion& c) { criterion_2(c); });
    run(3, "order-engine soundness vs the Artin oracle", [&](Criterion& c) {
        c.absorb(oracle_suite(5, 30, 1000, 101, fuzz_log, kDefaultBudget,
                              10'000'000));
    });
    run(4, "order axioms", [&](Criterion& c) {
        for (int n : {2, 3, 4})
            c.absorb(order_suite(n, 500, 200 + n, fuzz_log));
    });
    run(5, "fdtc quasimorphism properties", [&](Criterion& c) {
        for (int n : {3, 4}) c.absorb(fdtc_suite(n, 300, 300 + n, fuzz_log));
    });
    run(6, "slope change and floor sandwich", criterion_6);
    run(7, "homogenized-Upsilon lemmas", [&](Criterion& c) {
        for (int n : {3, 4}) c.absorb(hu_suite(n, 200, 700 + n, fuzz_log));
    });
    run(8, "stabilized braids stay below the index threshold",
        [&](Criterion& c) { criterion_8(c, fuzz_log); });
    run(9, "Markov HU difference bound", [&](Criterion& c) { criterion_9(c); });
    run(10, "performance budget", [&](Criterion& c) {
        c.expect(g_budget_failures == 0,
                 std::to_string(g_budget_failures) +
                     " computations exceeded the default reduction budget");
        c.expect(g_max_example_seconds < 60.0,
                 "slowest example took " +
                     std::to_string(g_max_example_seconds) + "s");
    });

    int failed = 0;
    for (const Criterion& c : criteria) {
        std::cout << (c.pass() ? "PASS" : "FAIL") << " criterion " << c.id
                  << ": " << c.label << " [" << c.checks << " checks, "
                  << c.violations << " violations, " << c.seconds << "s]\n";
        for (const std::string& d : c.details) std::cout << "  - " << d << "\n";
        if (!c.pass()) ++failed;
    }
    const std::string fuzz_text = fuzz_log.str();
    if (!fuzz_text.empty()) std::cout << fuzz_text;
    std::cout << (failed == 0 ? "ACCEPTANCE PASSED"
                              : "ACCEPTANCE FAILED (" + std::to_string(failed) +
                                    " criteria)")
              << "\n";
    return failed;
}
