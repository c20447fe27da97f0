// Word-problem oracle via the faithful Artin action of B_n on the free
// group F_n: a_i maps x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i, and fixes
// the other generators. Desk-scale cross-checks only; never on a hot path.

#pragma once

#include "braidwrench/braid.hpp"

#include <cstdint>
#include <vector>

namespace braidwrench {

// Freely reduced word over x_1..x_n; sign encodes inversion.
struct FreeWord {
    std::vector<std::int32_t> letters;
    bool operator==(const FreeWord&) const = default;
};

// Endomorphism of F_n recorded by generator images.
struct FreeEndo {
    std::vector<FreeWord> images;
    bool operator==(const FreeEndo&) const = default;

    static FreeEndo identity(int n);
    bool is_identity() const;
    std::size_t total_letters() const;
};

// Image lengths can grow exponentially in the braid-word length, so the
// oracle enforces a total-letter cap and fails loudly rather than truncate.
inline constexpr std::uint64_t kDefaultOracleBudget = 1'000'000;

FreeWord free_reduce(const std::vector<std::int32_t>& letters);

// Substitute the endomorphism's generator images into `w`, freely reducing.
FreeWord endo_apply(const FreeEndo& endo, const FreeWord& w,
                    std::uint64_t budget = kDefaultOracleBudget);

// Letters act left to right, matching braid words read left to right.
FreeEndo artin_action(const BraidWord& b,
                      std::uint64_t budget = kDefaultOracleBudget);

bool artin_equal(const BraidWord& a, const BraidWord& b,
                 std::uint64_t budget = kDefaultOracleBudget);

}  // namespace braidwrench
