// Exact fractional Dehn twist coefficient.
//
// omega(b) = lim_k floor(b^k)/k is rational with denominator at most n, so
// it is pinned down exactly by finitely many floors: each floor m_k of b^k
// confines omega to [m_k/k, (m_k+1)/k], and intersecting these intervals
// while doubling k eventually isolates a single rational of denominator
// <= n. Distinct such rationals are at least 1/(n(n-1)) apart, so isolation
// is guaranteed once k reaches n(n-1)+1.

#pragma once

#include "braidwrench/braid.hpp"
#include "braidwrench/dehornoy.hpp"
#include "braidwrench/rational.hpp"

#include <cstdint>

namespace braidwrench {

// Exact omega(b) together with the ambient strand count; the value's
// denominator never exceeds the strand count.
struct Fdtc {
    Rat value;
    int strands;
};

struct OmegaBounds {
    Rat lo;
    Rat hi;
};

// Per-generator occurrence window: lo = max_i(-s_i), hi = min_i(r_i) over
// counts (r_i, s_i) of a_i^{+1}, a_i^{-1} in the given word.
OmegaBounds occurrence_bounds(const BraidWord& w);

Fdtc fdtc(const BraidWord& b, std::uint64_t budget = kDefaultBudget);

// Witnessed verification of omega's quasimorphism package on a concrete
// pair: defect bound, homogeneity on a sampled power, full-twist shift,
// conjugation invariance, and the denominator bound.
struct FdtcPropertyReport {
    Rat omega_a, omega_b;
    Rat product_defect;        // |omega(ab) - omega(a) - omega(b)|
    int sampled_power;
    Rat power_value;           // omega(a^k) for the sampled k
    Rat full_twist_shifted;    // omega(Delta^2 a)
    Rat conjugated;            // omega(b a b^{-1})
    bool quasimorphism_ok, homogeneity_ok, full_twist_ok, conjugation_ok,
        denominator_ok;

    bool pass() const {
        return quasimorphism_ok && homogeneity_ok && full_twist_ok &&
               conjugation_ok && denominator_ok;
    }
};

FdtcPropertyReport fdtc_properties_check(const BraidWord& a,
                                         const BraidWord& b,
                                         std::uint64_t budget = kDefaultBudget);

}  // namespace braidwrench
