// Braid-index certificates from fractional Dehn twist thresholds: an
// n-braid with |omega| > n-1 realizes the braid index of its closure, and
// for 3-braids |omega| > 1 already suffices. Certificates only ever claim
// ExactlyN; absence of evidence is reported as NoConclusion.

#pragma once

#include "braidwrench/braid.hpp"
#include "braidwrench/dehornoy.hpp"
#include "braidwrench/fdtc.hpp"

#include <optional>

namespace braidwrench {

enum class IndexVerdict { ExactlyN, NoConclusion };
enum class IndexRule { GeneralThreshold, ThreeBraidRefinement,
                       FullTwistDomination };

struct IndexCertificate {
    int strands;
    Fdtc omega;
    IndexVerdict verdict;
    std::optional<IndexRule> rule;  // set iff verdict is ExactlyN
    // Would-be verdict under the open-question threshold |omega| > n-2;
    // reported separately, never merged into `verdict`.
    bool experimental_exceeds_n_minus_2;
};

IndexCertificate index_certificate(const BraidWord& b,
                                   std::uint64_t budget = kDefaultBudget);

// Whether Delta^{2n} <= b or b <= Delta^{-2n} in the Dehornoy order; either
// way the closure is not realizable on fewer strands.
bool full_twist_domination(const BraidWord& b,
                           std::uint64_t budget = kDefaultBudget);

// Order-theoretic certificate issued from full_twist_domination alone,
// independent of the fdtc route.
IndexCertificate domination_certificate(const BraidWord& b,
                                        std::uint64_t budget = kDefaultBudget);

const char* to_string(IndexVerdict v);
const char* to_string(IndexRule r);

}  // namespace braidwrench
