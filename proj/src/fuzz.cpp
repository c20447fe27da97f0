#include "braidwrench/fuzz.hpp"

#include "braidwrench/braid_index.hpp"
#include "braidwrench/fdtc.hpp"
#include "braidwrench/parse.hpp"
#include "braidwrench/upsilon.hpp"

#include <string>
#include <vector>

namespace braidwrench {

BraidWord random_word(int strands, int max_len, std::mt19937_64& rng) {
    if (strands < 2) return BraidWord::identity(strands);
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> idx_dist(1, strands - 1);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    std::vector<Letter> w;
    const int len = len_dist(rng);
    w.reserve(len);
    for (int j = 0; j < len; ++j) {
        const int i = idx_dist(rng);
        w.push_back(sign_dist(rng) ? i : -i);
    }
    return BraidWord(strands, std::move(w));
}

namespace {

// count+1 evenly spaced rationals on [from, to], endpoints included
std::vector<Rat> sample_points(const Rat& from, const Rat& to, int count) {
    std::vector<Rat> ts;
    for (int j = 0; j <= count; ++j)
        ts.push_back(from + (to - from) * j / count);
    return ts;
}

struct Reporter {
    std::ostream& log;
    const char* suite;
    FuzzResult result;

    void violation(const std::string& what) {
        ++result.violations;
        log << "VIOLATION [" << suite << "] " << what << "\n";
    }
    void check(bool ok, const std::string& what) {
        if (!ok) violation(what);
    }
};

std::string show(const BraidWord& w) {
    return "B" + std::to_string(w.strands()) + "(" +
           (w.empty() ? std::string("1") : print_braid(w)) + ")";
}

}  // namespace

FuzzResult oracle_suite(int max_strands, int max_len, std::uint64_t count,
                        std::uint64_t seed, std::ostream& log,
                        std::uint64_t budget, std::uint64_t oracle_budget) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> n_dist(2, max_strands);
    Reporter rep{log, "oracle", {}};
    for (std::uint64_t i = 0; i < count; ++i) {
        ++rep.result.cases;
        const int n = n_dist(rng);
        const BraidWord a = random_word(n, max_len, rng);
        const BraidWord b = random_word(n, max_len, rng);
        const bool dehornoy_eq =
            dehornoy_sign(concat(inverse(a), b), budget) == DehornoySign::Zero;
        const bool oracle_eq = artin_equal(a, b, oracle_budget);
        rep.check(dehornoy_eq == oracle_eq,
                  "order/oracle equality disagree on " + show(a) + " vs " +
                      show(b));
        const ReductionReport r = handle_reduce(a, budget);
        rep.check(writhe(r.reduced) == writhe(a),
                  "reduction changed writhe of " + show(a));
        rep.check(perm_of(r.reduced) == perm_of(a),
                  "reduction changed permutation of " + show(a));
        rep.check(artin_equal(r.reduced, a, oracle_budget),
                  "reduction changed the braid element of " + show(a));
    }
    return rep.result;
}

FuzzResult order_suite(int strands, std::uint64_t count, std::uint64_t seed,
                       std::ostream& log, std::uint64_t budget) {
    std::mt19937_64 rng(seed);
    Reporter rep{log, "order", {}};
    for (std::uint64_t i = 0; i < count; ++i) {
        ++rep.result.cases;
        const BraidWord a = random_word(strands, 12, rng);
        const BraidWord b = random_word(strands, 12, rng);
        const BraidWord c = random_word(strands, 12, rng);

        const Ordering ab = compare(a, b, budget);
        const Ordering ba = compare(b, a, budget);
        const bool antisym =
            (ab == Ordering::Less && ba == Ordering::Greater) ||
            (ab == Ordering::Greater && ba == Ordering::Less) ||
            (ab == Ordering::Equal && ba == Ordering::Equal);
        rep.check(antisym, "antisymmetry fails on " + show(a) + " vs " +
                               show(b));
        rep.check(compare(concat(c, a), concat(c, b), budget) == ab,
                  "left-invariance fails on " + show(a) + ", " + show(b) +
                      " under " + show(c));

        // force sign-definite inputs so the cone check is exercised
        BraidWord pa = a, pb = b;
        if (dehornoy_sign(pa, budget) == DehornoySign::Negative)
            pa = inverse(pa);
        if (dehornoy_sign(pb, budget) == DehornoySign::Negative)
            pb = inverse(pb);
        if (dehornoy_sign(pa, budget) == DehornoySign::Positive &&
            dehornoy_sign(pb, budget) == DehornoySign::Positive) {
            rep.check(dehornoy_sign(concat(pa, pb), budget) ==
                          DehornoySign::Positive,
                      "positive cone not closed: " + show(pa) + " * " +
                          show(pb));
        }
    }
    return rep.result;
}

FuzzResult fdtc_suite(int strands, std::uint64_t count, std::uint64_t seed,
                      std::ostream& log, std::uint64_t budget) {
    std::mt19937_64 rng(seed);
    Reporter rep{log, "fdtc", {}};
    for (std::uint64_t i = 0; i < count; ++i) {
        ++rep.result.cases;
        const BraidWord a = random_word(strands, 8, rng);
        const BraidWord b = random_word(strands, 8, rng);

        const FdtcPropertyReport props = fdtc_properties_check(a, b, budget);
        rep.check(props.quasimorphism_ok,
                  "quasimorphism defect " + rat_str(props.product_defect) +
                      " > 1 on " + show(a) + ", " + show(b));
        rep.check(props.full_twist_ok, "full-twist shift fails on " + show(a));
        rep.check(props.conjugation_ok,
                  "conjugation invariance fails on " + show(a) + " by " +
                      show(b));
        rep.check(props.denominator_ok, "denominator bound fails on " +
                                            show(a) + ", " + show(b));

        const Rat omega = props.omega_a;
        for (long long k = -3; k <= 3; ++k) {
            const Rat powered = fdtc(power(a, k), budget).value;
            rep.check(powered == k * omega,
                      "homogeneity fails at k=" + std::to_string(k) + " on " +
                          show(a));
        }
        const long long floor_a = dehornoy_floor(a, budget);
        rep.check(Rat(floor_a) <= omega && omega <= Rat(floor_a) + 1,
                  "floor sandwich fails on " + show(a));
        const OmegaBounds window = occurrence_bounds(a);
        rep.check(window.lo <= omega && omega <= window.hi,
                  "occurrence window fails on " + show(a));
    }
    return rep.result;
}

FuzzResult hu_suite(int strands, std::uint64_t count, std::uint64_t seed,
                    std::ostream& log, std::uint64_t budget) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> idx_dist(1, strands - 1);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    std::uniform_int_distribution<int> pow_dist(-2, 3);
    std::uniform_int_distribution<int> part_n_dist(2, 3);
    Reporter rep{log, "hu", {}};
    const int n = strands;
    for (std::uint64_t i = 0; i < count; ++i) {
        ++rep.result.cases;
        const BraidWord b = random_word(n, 10, rng);
        const HUResult hub = homogenized_upsilon(b, budget);
        const Rat end = hub.fn.domain_end();
        const Rat knee(2, n);

        rep.check(slope_change_at(hub.fn, knee) ==
                      hub.slope_change_at_two_over_n ||
                      knee >= end,
                  "slope change mismatch on " + show(b));

        // Lemma item I: single-generator perturbation moves HU by <= t/2.
        const int gi = idx_dist(rng);
        const Letter pert = sign_dist(rng) ? gi : -gi;
        const BraidWord b_pert =
            concat(b, BraidWord(n, std::vector<Letter>{pert}));
        const HUResult hup = homogenized_upsilon(b_pert, budget);
        for (const Rat& t : sample_points(Rat(0), end, 10)) {
            const Rat diff = abs(pl_eval(hup.fn, t) - pl_eval(hub.fn, t));
            rep.check(diff <= t / 2, "generator perturbation bound fails on " +
                                         show(b) + " at t=" + rat_str(t));
        }

        // Lemma item II: additivity defect <= t(n-1); exact for powers of b
        // and for the full twist.
        const BraidWord a = random_word(n, 10, rng);
        const HUResult hua = homogenized_upsilon(a, budget);
        const HUResult huab = homogenized_upsilon(concat(a, b), budget);
        for (const Rat& t : sample_points(Rat(0), end, 10)) {
            const Rat defect = abs(pl_eval(huab.fn, t) - pl_eval(hua.fn, t) -
                                   pl_eval(hub.fn, t));
            rep.check(defect <= t * (n - 1),
                      "additivity defect bound fails on " + show(a) + ", " +
                          show(b) + " at t=" + rat_str(t));
        }
        const BraidWord bj = power(b, pow_dist(rng));
        rep.check(homogenized_upsilon(concat(bj, b), budget).fn ==
                      pl_combine(homogenized_upsilon(bj, budget).fn, hub.fn,
                                 Rat(1), Rat(1)),
                  "exact additivity fails for a power of " + show(b));
        rep.check(homogenized_upsilon(concat(full_twist(n), b), budget).fn ==
                      pl_combine(torus_upsilon(n, 1), hub.fn, Rat(1), Rat(1)),
                  "exact additivity fails under a full twist on " + show(b));

        // Lemma item III: disjoint unions split, and their omega vanishes.
        std::vector<BraidWord> parts(2 + sign_dist(rng));
        for (BraidWord& part : parts)
            part = random_word(part_n_dist(rng), 6, rng);
        const BraidWord u = disjoint_union(parts);
        const HUResult huu = homogenized_upsilon(u, budget);
        for (const Rat& t : sample_points(Rat(0), huu.fn.domain_end(), 8)) {
            Rat sum(0);
            for (const BraidWord& part : parts)
                sum += pl_eval(homogenized_upsilon(part, budget).fn, t);
            rep.check(pl_eval(huu.fn, t) == sum,
                      "disjoint-union additivity fails on " + show(u) +
                          " at t=" + rat_str(t));
        }
        rep.check(huu.omega.value == 0,
                  "split braid has nonzero omega: " + show(u));

        // Dehornoy-floor sandwich for t past the knee.
        const long long m = dehornoy_floor(b, budget);
        if (knee < end) {
            for (const Rat& t : sample_points(knee, end, 10)) {
                const Rat base = Rat(-hub.writhe) * t / 2;
                const Rat low = base + Rat(m) * n * (t - knee);
                const Rat high = base + Rat(m + 1) * n * (t - knee);
                const Rat value = pl_eval(hub.fn, t);
                rep.check(low <= value && value <= high,
                          "floor sandwich fails on " + show(b) + " at t=" +
                              rat_str(t));
            }
        }

        // Lipschitz: |HU(t) - HU(s)| <= |t - s| * length / 2.
        const auto grid = sample_points(Rat(0), end, 6);
        for (std::size_t x = 0; x < grid.size(); ++x)
            for (std::size_t y = x + 1; y < grid.size(); ++y) {
                const Rat lhs =
                    abs(pl_eval(hub.fn, grid[x]) - pl_eval(hub.fn, grid[y]));
                const Rat rhs = abs(grid[x] - grid[y]) *
                                Rat(static_cast<long long>(b.length()), 2);
                rep.check(lhs <= rhs, "Lipschitz bound fails on " + show(b));
            }
    }
    return rep.result;
}

FuzzResult markov_suite(std::uint64_t count, std::uint64_t seed,
                        std::ostream& log, std::uint64_t budget) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> n_dist(2, 4);
    std::uniform_int_distribution<int> extra_dist(1, 2);
    Reporter rep{log, "markov", {}};
    for (std::uint64_t i = 0; i < count; ++i) {
        ++rep.result.cases;
        const int n = n_dist(rng);
        const int target = n + extra_dist(rng);
        const BraidWord base = random_word(n, 8, rng);
        const MarkovTrace trace = markov_perturb(base, target, rng());

        rep.check(markov_replay(trace) == trace.result,
                  "trace replay mismatch for " + show(base));
        rep.check(trace.result.strands() == target,
                  "wrong strand count for " + show(base));
        long long stab_writhe = 0;
        int stabs = 0;
        for (const MarkovMove& move : trace.moves)
            if (const auto* stab = std::get_if<StabilizeMove>(&move)) {
                ++stabs;
                stab_writhe += stab->sign;
            }
        rep.check(stabs == target - n, "wrong stabilization count");
        rep.check(writhe(trace.result) == writhe(base) + stab_writhe,
                  "writhe bookkeeping off for " + show(base));

        const Fdtc omega = fdtc(trace.result, budget);
        rep.check(abs(omega.value) <= target - 1,
                  "stabilized braid exceeds index threshold: " +
                      show(trace.result) + " omega=" + rat_str(omega.value));
        const IndexCertificate cert = index_certificate(trace.result, budget);
        rep.check(cert.rule != IndexRule::GeneralThreshold,
                  "general threshold fired on a stabilized braid: " +
                      show(trace.result));

        const HUResult hu_base = homogenized_upsilon(base, budget);
        const HUResult hu_result =
            homogenized_upsilon(trace.result, budget);
        const Rat end = std::min(hu_base.fn.domain_end(),
                                 hu_result.fn.domain_end());
        for (const Rat& t : sample_points(Rat(0), end, 4)) {
            const Rat diff =
                abs(pl_eval(hu_base.fn, t) - pl_eval(hu_result.fn, t));
            rep.check(diff <= t * (n + target - 2) / 2,
                      "Markov HU bound fails for " + show(base) + " at t=" +
                          rat_str(t));
        }
    }
    return rep.result;
}

}  // namespace braidwrench
