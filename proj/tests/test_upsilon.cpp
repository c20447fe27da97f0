#include "braidwrench/errors.hpp"
#include "braidwrench/fuzz.hpp"
#include "braidwrench/upsilon.hpp"

#include <doctest.h>

#include <random>

using namespace braidwrench;

namespace {
BraidWord bw(int n, std::vector<Letter> letters) {
    return BraidWord(n, std::move(letters));
}
}  // namespace

TEST_CASE("torus upsilon closed form") {
    const PLFunction t31 = torus_upsilon(3, 1);
    CHECK(t31.breakpoints() == std::vector<Rat>{Rat(0), Rat(2, 3), Rat(1)});
    CHECK(t31.values() == std::vector<Rat>{Rat(0), Rat(-2), Rat(-2)});
    CHECK(t31.slopes() == std::vector<Rat>{Rat(-3), Rat(0)});

    const PLFunction t21 = torus_upsilon(2, 1);
    CHECK(t21.breakpoints() == std::vector<Rat>{Rat(0), Rat(1)});
    CHECK(t21.values() == std::vector<Rat>{Rat(0), Rat(-1)});

    CHECK(torus_upsilon(3, 2) == pl_combine(t31, t31, Rat(1), Rat(1)));
    CHECK(pl_eval(torus_upsilon(3, 2), Rat(1, 2)) ==
          2 * pl_eval(t31, Rat(1, 2)));

    CHECK_THROWS_AS(torus_upsilon(1, 1), BadParams);
    CHECK_THROWS_AS(torus_upsilon(3, 0), BadParams);
}

TEST_CASE("pl evaluation") {
    const PLFunction t31 = torus_upsilon(3, 1);
    CHECK(pl_eval(t31, Rat(2, 3)) == Rat(-2));
    CHECK(pl_eval(t31, Rat(0)) == Rat(0));
    CHECK(pl_eval(t31, Rat(1, 3)) == Rat(-1));
    CHECK(pl_eval(torus_upsilon(2, 1), Rat(1, 2)) == Rat(-1, 2));
    CHECK_THROWS_AS(pl_eval(t31, Rat(11, 10)), DomainError);
    CHECK_THROWS_AS(pl_eval(t31, Rat(-1, 10)), DomainError);
}

TEST_CASE("pl combination") {
    const PLFunction t31 = torus_upsilon(3, 1);
    const PLFunction zero = pl_combine(t31, t31, Rat(1), Rat(-1));
    CHECK(zero.breakpoints() == std::vector<Rat>{Rat(0), Rat(1)});
    CHECK(zero.values() == std::vector<Rat>{Rat(0), Rat(0)});

    // combining across different domains clips to the overlap
    const PLFunction t41 = torus_upsilon(4, 1);  // domain [0, 2/3]
    CHECK(pl_combine(t31, t41, Rat(1), Rat(1)).domain_end() == Rat(2, 3));

    const PLFunction point({Rat(0)}, {Rat(0)});
    CHECK_THROWS_AS(pl_combine(t31, point, Rat(1), Rat(1)), DomainError);
}

TEST_CASE("homogenized upsilon of the named examples") {
    SUBCASE("full twist matches the torus knot") {
        const HUResult hu = homogenized_upsilon(full_twist(3));
        CHECK(hu.fn == torus_upsilon(3, 1));
        CHECK(hu.writhe == 6);
        CHECK(hu.omega.value == 1);
        CHECK(hu.slope_change_at_two_over_n == 3);
    }
    SUBCASE("identity braid") {
        const HUResult hu = homogenized_upsilon(BraidWord::identity(3));
        CHECK(hu.fn.breakpoints() == std::vector<Rat>{Rat(0), Rat(1)});
        CHECK(hu.fn.values() == std::vector<Rat>{Rat(0), Rat(0)});
    }
    SUBCASE("two strands stay a single line") {
        const HUResult hu = homogenized_upsilon(bw(2, {1}));
        CHECK(hu.fn.breakpoints() == std::vector<Rat>{Rat(0), Rat(1)});
        CHECK(hu.fn.values() == std::vector<Rat>{Rat(0), Rat(-1, 2)});
        CHECK(hu.omega.value == Rat(1, 2));
    }
    SUBCASE("beta_nm(4,3)") {
        // letter count: (delta delta_rev)^2 delta on 4 strands
        CHECK(writhe(beta_nm(4, 3)) == 15);
        const HUResult hu = homogenized_upsilon(beta_nm(4, 3));
        CHECK(hu.omega.value == 2);
        CHECK(hu.fn.breakpoints() ==
              std::vector<Rat>{Rat(0), Rat(1, 2), Rat(2, 3)});
        CHECK(hu.fn.slopes() == std::vector<Rat>{Rat(-15, 2), Rat(1, 2)});
        CHECK(hu.slope_change_at_two_over_n == 8);
        CHECK(slope_change_at(hu.fn, Rat(1, 2)) == 8);
    }
    CHECK_THROWS_AS(homogenized_upsilon(BraidWord::identity(1)), BadParams);
}

TEST_CASE("full twist adds the torus term") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const BraidWord b = random_word(n, 8, rng);
        const PLFunction lhs =
            homogenized_upsilon(concat(full_twist(n), b)).fn;
        const PLFunction rhs = pl_combine(homogenized_upsilon(b).fn,
                                          torus_upsilon(n, 1), Rat(1), Rat(1));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("third-twist braids and their slope changes") {
    const HUResult a = homogenized_upsilon(bw(4, {1, 2, 3, 3}));
    CHECK(a.omega.value == Rat(1, 3));
    CHECK(slope_change_at(a.fn, Rat(1, 2)) == Rat(4, 3));

    const HUResult b = homogenized_upsilon(bw(5, {1, 2, 3, 4, 1, 2}));
    CHECK(b.omega.value == Rat(1, 3));
    CHECK(slope_change_at(b.fn, Rat(2, 5)) == Rat(5, 3));
}

TEST_CASE("combining across different knees merges breakpoints") {
    // torus(3,1): slope -3 then 0 on [0,1]; torus(4,1): -6 then -2 on [0,2/3]
    const PLFunction sum =
        pl_combine(torus_upsilon(3, 1), torus_upsilon(4, 1), Rat(1), Rat(1));
    CHECK(sum.domain_end() == Rat(2, 3));
    CHECK(sum.breakpoints() ==
          std::vector<Rat>{Rat(0), Rat(1, 2), Rat(2, 3)});
    CHECK(sum.slopes() == std::vector<Rat>{Rat(-9), Rat(-5)});
    CHECK(pl_eval(sum, Rat(2, 3)) == Rat(-16, 3));
}

TEST_CASE("slope change equals n times omega") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 2);
        const BraidWord b = random_word(n, 10, rng);
        const HUResult hu = homogenized_upsilon(b);
        CHECK(slope_change_at(hu.fn, Rat(2, n)) == n * hu.omega.value);
        // Corollary: the change is n p / q with q <= n
        const Rat change = hu.slope_change_at_two_over_n / n;
        CHECK(rat_den(change) <= n);
    }
}
