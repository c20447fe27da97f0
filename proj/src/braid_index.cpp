#include "braidwrench/braid_index.hpp"

#include "braidwrench/errors.hpp"

namespace braidwrench {

IndexCertificate index_certificate(const BraidWord& b, std::uint64_t budget) {
    const int n = b.strands();
    if (n < 2) throw BadParams("index_certificate: need >= 2 strands");
    IndexCertificate cert;
    cert.strands = n;
    cert.omega = fdtc(b, budget);
    const Rat mag = abs(cert.omega.value);
    cert.experimental_exceeds_n_minus_2 = mag > n - 2;
    if (mag > n - 1) {
        cert.verdict = IndexVerdict::ExactlyN;
        cert.rule = IndexRule::GeneralThreshold;
    } else if (n == 3 && mag > 1) {
        cert.verdict = IndexVerdict::ExactlyN;
        cert.rule = IndexRule::ThreeBraidRefinement;
    } else {
        cert.verdict = IndexVerdict::NoConclusion;
        cert.rule = std::nullopt;
    }
    return cert;
}

bool full_twist_domination(const BraidWord& b, std::uint64_t budget) {
    const int n = b.strands();
    if (n <= 1) return false;
    const BraidWord twist_n = power(full_twist(n), n);
    return compare(twist_n, b, budget) != Ordering::Greater ||
           compare(b, inverse(twist_n), budget) != Ordering::Greater;
}

IndexCertificate domination_certificate(const BraidWord& b,
                                        std::uint64_t budget) {
    const int n = b.strands();
    if (n < 2) throw BadParams("domination_certificate: need >= 2 strands");
    IndexCertificate cert;
    cert.strands = n;
    cert.omega = fdtc(b, budget);
    cert.experimental_exceeds_n_minus_2 = abs(cert.omega.value) > n - 2;
    if (full_twist_domination(b, budget)) {
        cert.verdict = IndexVerdict::ExactlyN;
        cert.rule = IndexRule::FullTwistDomination;
    } else {
        cert.verdict = IndexVerdict::NoConclusion;
        cert.rule = std::nullopt;
    }
    return cert;
}

const char* to_string(IndexVerdict v) {
    return v == IndexVerdict::ExactlyN ? "exactly-n" : "no-conclusion";
}

const char* to_string(IndexRule r) {
    switch (r) {
        case IndexRule::GeneralThreshold: return "general-threshold";
        case IndexRule::ThreeBraidRefinement: return "three-braid-refinement";
        default: return "full-twist-domination";
    }
}

}  // namespace braidwrench
