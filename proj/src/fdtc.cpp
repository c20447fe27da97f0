#include "braidwrench/fdtc.hpp"

#include "braidwrench/errors.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace braidwrench {

OmegaBounds occurrence_bounds(const BraidWord& w) {
    const int n = w.strands();
    if (n <= 1) return {Rat(0), Rat(0)};
    long long lo = std::numeric_limits<long long>::min();
    long long hi = std::numeric_limits<long long>::max();
    for (int i = 1; i < n; ++i) {
        long long r = 0, s = 0;
        for (Letter g : w.letters()) {
            if (g == i) ++r;
            if (g == -i) ++s;
        }
        lo = std::max(lo, -s);
        hi = std::min(hi, r);
    }
    return {Rat(lo), Rat(hi)};
}

namespace {

bool has_prefix(const std::vector<Letter>& w, const std::vector<Letter>& p,
                std::size_t offset) {
    if (w.size() - offset < p.size()) return false;
    return std::equal(p.begin(), p.end(), w.begin() + offset);
}

bool has_suffix(const std::vector<Letter>& w, const std::vector<Letter>& p,
                std::size_t trimmed) {
    if (w.size() - trimmed < p.size()) return false;
    return std::equal(p.rbegin(), p.rend(), w.rbegin() + trimmed);
}

// Strip literal copies of the full-twist word (or its inverse) from either
// end. Syntactic only: Delta^2 is central, so each stripped copy shifts
// omega by exactly +-1.
BraidWord peel_full_twists(const BraidWord& b, long long& twists) {
    const std::vector<Letter> twist = full_twist(b.strands()).letters();
    const std::vector<Letter> twist_inv =
        inverse(full_twist(b.strands())).letters();
    const std::vector<Letter>& w = b.letters();
    std::size_t begin = 0, trimmed = 0;
    twists = 0;
    bool changed = true;
    while (changed && w.size() - begin - trimmed >= twist.size()) {
        changed = false;
        if (has_prefix(w, twist, begin)) {
            begin += twist.size();
            ++twists;
            changed = true;
        } else if (has_prefix(w, twist_inv, begin)) {
            begin += twist.size();
            --twists;
            changed = true;
        } else if (has_suffix(w, twist, trimmed)) {
            trimmed += twist.size();
            ++twists;
            changed = true;
        } else if (has_suffix(w, twist_inv, trimmed)) {
            trimmed += twist.size();
            --twists;
            changed = true;
        }
    }
    return BraidWord(b.strands(),
                     std::vector<Letter>(w.begin() + begin,
                                         w.end() - trimmed));
}

// The unique rational with denominator <= n inside [lo, hi], if exactly one
// exists.
std::optional<Rat> unique_bounded_rational(const Rat& lo, const Rat& hi,
                                           int n) {
    std::set<Rat> candidates;
    for (int q = 1; q <= n; ++q) {
        for (BigInt p = rat_ceil(lo * q); Rat(p, q) <= hi; ++p)
            candidates.insert(Rat(p, q));
    }
    if (candidates.size() == 1) return *candidates.begin();
    return std::nullopt;
}

}  // namespace

Fdtc fdtc(const BraidWord& b, std::uint64_t budget) {
    const int n = b.strands();
    if (n <= 1) return {Rat(0), n};

    long long twists = 0;
    const BraidWord core = peel_full_twists(b, twists);
    if (core.empty()) return {Rat(twists), n};

    Rat lo, hi;
    bool have_interval = false;
    const long long isolation_k = static_cast<long long>(n) * (n - 1) + 1;
    for (long long k = 1;; k *= 2) {
        const long long m = dehornoy_floor(power(core, k), budget);
        const Rat lo_k(m, k), hi_k(m + 1, k);
        if (!have_interval) {
            lo = lo_k;
            hi = hi_k;
            have_interval = true;
        } else {
            lo = std::max(lo, lo_k);
            hi = std::min(hi, hi_k);
        }
        if (lo > hi)
            throw std::logic_error("fdtc: floor intervals inconsistent");
        if (auto omega = unique_bounded_rational(lo, hi, n))
            return {*omega + twists, n};
        // A width-1/k interval with k >= n(n-1)+1 separates rationals of
        // denominator <= n, so doubling k must isolate by 2 * isolation_k.
        if (k > 2 * isolation_k)
            throw std::logic_error("fdtc: no isolation past separation bound");
    }
}

FdtcPropertyReport fdtc_properties_check(const BraidWord& a,
                                         const BraidWord& b,
                                         std::uint64_t budget) {
    if (a.strands() != b.strands())
        throw StrandMismatch("fdtc_properties_check: strand counts differ");
    const int n = a.strands();
    FdtcPropertyReport rep;
    rep.omega_a = fdtc(a, budget).value;
    rep.omega_b = fdtc(b, budget).value;
    const Rat omega_ab = fdtc(concat(a, b), budget).value;
    rep.product_defect = abs(omega_ab - rep.omega_a - rep.omega_b);
    rep.quasimorphism_ok = rep.product_defect <= 1;

    rep.sampled_power = 3;
    rep.power_value = fdtc(power(a, rep.sampled_power), budget).value;
    rep.homogeneity_ok = rep.power_value == rep.sampled_power * rep.omega_a;

    rep.full_twist_shifted = fdtc(concat(full_twist(n), a), budget).value;
    rep.full_twist_ok = rep.full_twist_shifted == rep.omega_a + 1;

    rep.conjugated =
        fdtc(concat(concat(b, a), inverse(b)), budget).value;
    rep.conjugation_ok = rep.conjugated == rep.omega_a;

    rep.denominator_ok = rat_den(rep.omega_a) <= n &&
                         rat_den(rep.omega_b) <= n && rat_den(omega_ab) <= n;
    return rep;
}

}  // namespace braidwrench
