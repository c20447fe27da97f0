// Braid words in the Artin generators, group operations, strand-permutation
// combinatorics, named families, and Markov moves.
//
// A word on n strands is a sequence of nonzero letters g with 1 <= |g| <= n-1;
// g = +i encodes the generator a_i, g = -i its inverse. Letters are plain
// signed integers because handle reduction is the hot loop and wants flat,
// cache-friendly data.

#pragma once

#include "braidwrench/errors.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace braidwrench {

using Letter = std::int32_t;

class BraidWord {
  public:
    BraidWord() = default;  // identity in B_1
    BraidWord(int strands, std::vector<Letter> letters);

    static BraidWord identity(int strands) { return BraidWord(strands, {}); }

    int strands() const { return strands_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    bool operator==(const BraidWord&) const = default;  // syntactic equality

  private:
    int strands_ = 1;
    std::vector<Letter> letters_;
};

// Strand permutation of a braid: images[j-1] is the strand (numbered by its
// bottom position, 1-based) arriving at top slot j.
struct Perm {
    std::vector<int> images;

    static Perm identity(int n);
    bool is_identity() const;
    int cycle_count() const;
    // cycle id per slot, 0-based, for cycle-membership queries
    std::vector<int> cycle_ids() const;

    bool operator==(const Perm&) const = default;
};

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& a);
BraidWord power(const BraidWord& a, long long k);
long long writhe(const BraidWord& a);
Perm perm_of(const BraidWord& a);
int closure_components(const BraidWord& a);

// A positive word of exactly closure_components(a) - 1 generators chosen so
// that the closure of concat(a, result) is a knot. Greedy rule: scan
// i = 1..n-1 and append a_i whenever i and i+1 lie in distinct cycles of the
// running permutation.
BraidWord knotting_suffix(const BraidWord& a);

// Stack the given braids side by side: strand counts add, letters of part i
// are shifted past all earlier parts.
BraidWord disjoint_union(const std::vector<BraidWord>& parts);

// --- named families ---------------------------------------------------

BraidWord delta(int n);       // a_1 a_2 ... a_{n-1}
BraidWord delta_rev(int n);   // a_{n-1} ... a_1
BraidWord full_twist(int n);  // Delta^2 = (a_1 ... a_{n-1})^n, central
BraidWord torus_braid(int p, long long q);  // (a_1 ... a_{p-1})^q
BraidWord beta_nm(int n, int m);            // (delta delta_rev)^{m-1} delta
BraidWord elrifai_K(int k);  // (a1 a2 a2 a1)^{2k}   a1 a2^{-2k-1}, 3 strands
BraidWord elrifai_L(int k);  // (a1 a2 a2 a1)^{2k+1} a1 a2^{-2k+1}, 3 strands

// --- Markov moves -----------------------------------------------------

struct ConjugateMove {
    BraidWord by;  // w -> by . w . by^{-1}
};
struct StabilizeMove {
    int sign;  // +1 or -1: w in B_j -> w . a_j^{sign} in B_{j+1}
};
using MarkovMove = std::variant<ConjugateMove, StabilizeMove>;

// Closure-isotopy certificate: `result` is obtained from `base` by applying
// `moves` in order, so the closures agree by Markov's theorem.
struct MarkovTrace {
    BraidWord base;
    std::vector<MarkovMove> moves;
    BraidWord result;
};

// Random Markov-equivalent representative on `target_strands` strands:
// alternates conjugation by short words (length <= 4) with random-sign
// stabilization until the strand count is reached, then conjugates once
// more. Deterministic for a fixed seed.
MarkovTrace markov_perturb(const BraidWord& a, int target_strands,
                           std::uint64_t seed);

// Re-applies the recorded moves to the base word.
BraidWord markov_replay(const MarkovTrace& trace);

}  // namespace braidwrench
