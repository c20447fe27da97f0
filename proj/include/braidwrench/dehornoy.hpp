// Dehornoy order decision via handle reduction, plus comparison and the
// Dehornoy floor.
//
// A sigma_i-handle is a subword a_i^e ... a_i^{-e} (e = +-1) whose interior
// letters all have index >= i+1. Reducing it deletes the bracketing pair and
// replaces each interior a_{i+1}^d by a_{i+1}^{-e} a_i^d a_{i+1}^{e}; the
// braid element is unchanged. Repeatedly reducing the leftmost handle whose
// interior is handle-free terminates in a handle-free word (Dehornoy), from
// which the sign of the element is read off the lowest-index generator.

#pragma once

#include "braidwrench/braid.hpp"

#include <cstdint>

namespace braidwrench {

enum class DehornoySign { Negative = -1, Zero = 0, Positive = 1 };
enum class Ordering { Less, Equal, Greater };

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct ReductionReport {
    BraidWord reduced;    // handle-free, same braid element as the input
    std::uint64_t steps;  // handle rewrites performed
    DehornoySign sign;
};

// No canonical form is claimed for `reduced`: handle-free representatives
// are not unique; only sign and emptiness are contractual.
ReductionReport handle_reduce(const BraidWord& w,
                              std::uint64_t budget = kDefaultBudget);

// Zero iff w is the identity braid; otherwise the sign of the lowest-index
// generator in a handle-free representative.
DehornoySign dehornoy_sign(const BraidWord& w,
                           std::uint64_t budget = kDefaultBudget);

// a < b iff dehornoy_sign(a^{-1} b) is Positive.
Ordering compare(const BraidWord& a, const BraidWord& b,
                 std::uint64_t budget = kDefaultBudget);

// The unique m with Delta^{2m} <= b < Delta^{2(m+1)}. Binary search over the
// window [lo-1, hi] given by per-generator occurrence counts, which bound
// the fractional Dehn twist coefficient and hence the floor.
long long dehornoy_floor(const BraidWord& b,
                         std::uint64_t budget = kDefaultBudget);

const char* to_string(DehornoySign s);
const char* to_string(Ordering o);

}  // namespace braidwrench
