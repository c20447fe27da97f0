#include "braidwrench/braid_index.hpp"
#include "braidwrench/errors.hpp"
#include "braidwrench/fuzz.hpp"

#include <doctest.h>

using namespace braidwrench;

TEST_CASE("certificates on the named examples") {
    SUBCASE("three full twists on three strands") {
        const IndexCertificate cert =
            index_certificate(power(full_twist(3), 3));
        CHECK(cert.omega.value == 3);
        CHECK(cert.verdict == IndexVerdict::ExactlyN);
        CHECK(cert.rule == IndexRule::GeneralThreshold);
    }
    SUBCASE("elrifai_K(1) needs the 3-braid refinement") {
        const IndexCertificate cert = index_certificate(elrifai_K(1));
        CHECK(cert.omega.value == 2);
        CHECK(cert.verdict == IndexVerdict::ExactlyN);
        CHECK(cert.rule == IndexRule::ThreeBraidRefinement);
    }
    SUBCASE("beta_nm(4,3) is out of reach") {
        const IndexCertificate cert = index_certificate(beta_nm(4, 3));
        CHECK(cert.omega.value == 2);
        CHECK(cert.verdict == IndexVerdict::NoConclusion);
        CHECK_FALSE(cert.rule.has_value());
    }
    CHECK_THROWS_AS(index_certificate(BraidWord::identity(1)), BadParams);
}

TEST_CASE("experimental threshold is reported separately") {
    // beta_nm(n, n-1) has omega = n-2: even the conjectured bound must not
    // fire, matching the fact that it does not realize the braid index
    for (int n : {3, 4, 5}) {
        const IndexCertificate cert = index_certificate(beta_nm(n, n - 1));
        CHECK(cert.verdict == IndexVerdict::NoConclusion);
        CHECK_FALSE(cert.experimental_exceeds_n_minus_2);
    }
    // beta_nm(n, n) has omega = n-1: for n >= 4 the open-question threshold
    // would fire while the contractual verdict stays NoConclusion
    for (int n : {4, 5}) {
        const IndexCertificate cert = index_certificate(beta_nm(n, n));
        CHECK(cert.verdict == IndexVerdict::NoConclusion);
        CHECK(cert.experimental_exceeds_n_minus_2);
    }
    // at n = 3 the three-braid refinement already certifies beta_nm(3,3)
    const IndexCertificate three = index_certificate(beta_nm(3, 3));
    CHECK(three.verdict == IndexVerdict::ExactlyN);
    CHECK(three.rule == IndexRule::ThreeBraidRefinement);
}

TEST_CASE("the twisted 3-braid families all certify index three") {
    for (int k = 1; k <= 3; ++k) {
        CHECK(index_certificate(elrifai_K(k)).verdict ==
              IndexVerdict::ExactlyN);
        CHECK(index_certificate(elrifai_L(k)).verdict ==
              IndexVerdict::ExactlyN);
    }
    // only K_1 sits at omega = 2 and needs the refinement
    CHECK(index_certificate(elrifai_K(2)).rule ==
          IndexRule::GeneralThreshold);
    CHECK(index_certificate(elrifai_L(1)).rule ==
          IndexRule::GeneralThreshold);
}

TEST_CASE("stabilizing a1^3 to four strands caps omega at 3") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const MarkovTrace t =
            markov_perturb(BraidWord(2, {1, 1, 1}), 4, seed);
        const Rat omega = fdtc(t.result).value;
        CHECK(abs(omega) <= 3);
        CHECK(index_certificate(t.result).rule !=
              IndexRule::GeneralThreshold);
    }
}

TEST_CASE("full twist domination") {
    CHECK(full_twist_domination(power(full_twist(3), 3)));
    CHECK_FALSE(full_twist_domination(BraidWord::identity(3)));
    CHECK(full_twist_domination(beta_nm(3, 4)));
    CHECK(full_twist_domination(inverse(power(full_twist(3), 4))));

    SUBCASE("domination certificates agree with the fdtc route") {
        for (const BraidWord& b :
             {power(full_twist(3), 3), beta_nm(3, 4), beta_nm(3, 5)}) {
            const IndexCertificate dom = domination_certificate(b);
            REQUIRE(dom.verdict == IndexVerdict::ExactlyN);
            CHECK(dom.rule == IndexRule::FullTwistDomination);
            CHECK(index_certificate(b).verdict == IndexVerdict::ExactlyN);
        }
    }
}
