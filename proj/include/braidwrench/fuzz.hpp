// Randomized property suites over the order engine, the twist coefficient,
// and the homogenized Upsilon. Deterministic for a fixed seed; each suite
// logs a witness line per violation and reports case/violation counts.

#pragma once

#include "braidwrench/artin.hpp"
#include "braidwrench/dehornoy.hpp"

#include <cstdint>
#include <ostream>
#include <random>

namespace braidwrench {

struct FuzzResult {
    std::uint64_t cases = 0;
    std::uint64_t violations = 0;

    FuzzResult& operator+=(const FuzzResult& other) {
        cases += other.cases;
        violations += other.violations;
        return *this;
    }
};

BraidWord random_word(int strands, int max_len, std::mt19937_64& rng);

// Dehornoy equality verdict vs the Artin oracle on random pairs
// (n <= max_strands, length <= max_len); also checks that handle reduction
// preserves writhe, permutation, and Artin action case by case.
FuzzResult oracle_suite(int max_strands, int max_len, std::uint64_t count,
                        std::uint64_t seed, std::ostream& log,
                        std::uint64_t budget = kDefaultBudget,
                        std::uint64_t oracle_budget = kDefaultOracleBudget);

// Order axioms on random triples in B_n: trichotomy/antisymmetry,
// left-invariance, and closure of the positive cone under products.
FuzzResult order_suite(int strands, std::uint64_t count, std::uint64_t seed,
                       std::ostream& log,
                       std::uint64_t budget = kDefaultBudget);

// Quasimorphism package of omega on random pairs in B_n: defect <= 1,
// homogeneity for k in [-3, 3], full-twist shift, conjugation invariance,
// denominator bound, plus the floor sandwich and the occurrence window.
FuzzResult fdtc_suite(int strands, std::uint64_t count, std::uint64_t seed,
                      std::ostream& log,
                      std::uint64_t budget = kDefaultBudget);

// Homogenized-Upsilon lemmas on random braids in B_n: the t/2 bound under a
// single-generator perturbation, the t(n-1) additivity defect with exact
// additivity for commuting pairs, disjoint-union additivity (with omega = 0
// for split braids), the Dehornoy-floor sandwich, and the length/2
// Lipschitz bound.
FuzzResult hu_suite(int strands, std::uint64_t count, std::uint64_t seed,
                    std::ostream& log, std::uint64_t budget = kDefaultBudget);

// Markov-move traces with at least one stabilization: replay consistency,
// writhe bookkeeping, |omega(result)| <= strands(result) - 1 (so the
// general index threshold can never fire on a stabilized braid), and the
// t(n+m-2)/2 bound between the homogenized Upsilon of base and result.
FuzzResult markov_suite(std::uint64_t count, std::uint64_t seed,
                        std::ostream& log,
                        std::uint64_t budget = kDefaultBudget);

}  // namespace braidwrench
