#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ncx/ncomplex.hpp"
#include "ncx/randomgen.hpp"

using namespace ncx;

namespace {

const CoefficientDomain F2 = CoefficientDomain::prime_field(2);
const CoefficientDomain F5 = CoefficientDomain::prime_field(5);
const CoefficientDomain Q = CoefficientDomain::rationals();
const CoefficientDomain Z = CoefficientDomain::integers();

// 0 -> k -> k -> 0 in degrees 0, 1 with the identity differential
NComplex two_term(int n, const CoefficientDomain& dom) {
    return NComplex(n, dom, 0, {1, 1}, {ExactMatrix::identity(dom, 1)});
}

NComplex stalk(int n, const CoefficientDomain& dom, int deg = 0, std::size_t dim = 1) {
    return NComplex(n, dom, deg, {dim}, {});
}

} // namespace

TEST_CASE("validate distinguishes nilpotent families") {
    SUBCASE("all-zero differentials are always valid") {
        NComplex x(3, F2, 0, {2, 1, 2}, {ExactMatrix(F2, 1, 2), ExactMatrix(F2, 2, 1)});
        CHECK(validate(x));
    }
    SUBCASE("identity squared is nonzero for N=2") {
        NComplex x(2, F2, 0, {1, 1, 1}, {ExactMatrix::identity(F2, 1), ExactMatrix::identity(F2, 1)});
        CHECK(!validate(x));
        CHECK(first_nilpotency_failure(x) == 0);
    }
    SUBCASE("the same two identities are fine for N=3") {
        NComplex x(3, F2, 0, {1, 1, 1}, {ExactMatrix::identity(F2, 1), ExactMatrix::identity(F2, 1)});
        CHECK(validate(x));
    }
}

TEST_CASE("shape errors cite the offending degree") {
    CHECK_THROWS_WITH_AS(NComplex(2, F2, 4, {1, 2}, {ExactMatrix(F2, 1, 1)}),
                         doctest::Contains("degree 4"), ShapeError);
}

TEST_CASE("composite endpoints") {
    NComplex x = two_term(3, F5);
    CHECK(composite(x, 0, 0) == ExactMatrix::identity(F5, 1));
    CHECK(composite(x, 0, 3).is_zero());
    CHECK(composite(x, 0, 1) == ExactMatrix::identity(F5, 1));
    NComplex y(3, F2, 0, {1, 1, 1}, {ExactMatrix::identity(F2, 1), ExactMatrix::identity(F2, 1)});
    CHECK(composite(y, 0, 2) == ExactMatrix::identity(F2, 1));
    CHECK_THROWS_AS(composite(x, 0, 4), AmplitudeError);
}

TEST_CASE("cycles and boundaries") {
    SUBCASE("zero differentials: everything is a cycle, nothing bounds") {
        NComplex x(3, F5, 0, {2, 2}, {ExactMatrix(F5, 2, 2)});
        CHECK(cycles(x, 0, 1).cols() == 2);
        CHECK(boundaries(x, 1, 1).is_zero());
    }
    SUBCASE("two-term complex at N=3") {
        NComplex x = two_term(3, F5);
        CHECK(cycles(x, 0, 1).cols() == 0); // Z^0_1 = ker(identity) = 0
        CHECK(cycles(x, 0, 2).cols() == 1); // Z^0_2 = ker(0 after identity) = k
    }
    SUBCASE("top-amplitude cycles span the whole object") {
        Rng rng(41);
        NComplex x = random_complex(rng, ComplexOptions{});
        for (int i = x.lo(); i <= x.hi(); ++i) {
            ExactMatrix z = cycles(x, i, x.n());
            CHECK(z.cols() == x.dim_at(i));
        }
    }
}

TEST_CASE("worked homology of the two-term complex at N=3 over F_5") {
    NComplex x = two_term(3, F5);
    CHECK(homology(x, 0, 2).free_rank == 1);
    CHECK(homology(x, 1, 1).free_rank == 1);
    CHECK(homology(x, 0, 1).is_zero());
    CHECK(homology(x, 1, 2).is_zero());
    CHECK(!is_N_exact(x));
}

TEST_CASE("discs are exact in every amplitude and degree") {
    for (int n = 2; n <= 5; ++n)
        for (int top = -2; top <= 2; ++top) {
            NComplex d = disc(n, top, n, 2, F5);
            CHECK(validate(d));
            for (int i = d.lo(); i <= d.hi(); ++i)
                for (int r = 1; r < n; ++r)
                    CHECK(homology(d, i, r).is_zero());
            CHECK(is_N_exact(d));
        }
}

TEST_CASE("stalks and truncated discs are not exact") {
    NComplex s = stalk(3, F5);
    CHECK(homology(s, 0, 1).free_rank == 1);
    CHECK(homology(s, 0, 2).free_rank == 1);
    CHECK(!is_N_exact(s));
    for (int n = 3; n <= 5; ++n)
        for (int r = 1; r < n; ++r)
            CHECK(!is_N_exact(disc(n, 0, r, 1, F2)));
}

TEST_CASE("disc construction matches its description") {
    NComplex d = disc(3, 1, 3, 1, F2);
    CHECK(d.lo() == -1);
    CHECK(d.hi() == 1);
    CHECK(d.dim_at(-1) == 1);
    CHECK(d.dim_at(0) == 1);
    CHECK(d.dim_at(1) == 1);
    CHECK(d.diff_at(-1) == ExactMatrix::identity(F2, 1));
    CHECK(d.diff_at(0) == ExactMatrix::identity(F2, 1));
    CHECK(validate(d));

    CHECK(disc(2, 0, 1, 1, Q) == stalk(2, Q));
    CHECK_THROWS_AS(disc(3, 0, 4, 1, Q), AmplitudeError);
}

TEST_CASE("homology over the integers sees torsion") {
    // 0 -> Z -(2)-> Z -> 0 at N=2: H^1 = Z/2
    NComplex x(2, Z, 0, {1, 1}, {ExactMatrix::from_rows(Z, {{2}})});
    AmplitudeHomology h1 = homology(x, 1, 1);
    CHECK(h1.free_rank == 0);
    REQUIRE(h1.torsion.size() == 1);
    CHECK(h1.torsion[0] == 2);
    CHECK(homology(x, 0, 1).is_zero());
}

TEST_CASE("boundaries are contained in cycles") {
    Rng rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        NComplex x = random_complex(rng, ComplexOptions{});
        for (int i = x.lo(); i <= x.hi(); ++i)
            for (int r = 1; r < x.n(); ++r)
                CHECK(solve(cycles(x, i, r), boundaries(x, i, x.n() - r)).has_value());
    }
}

TEST_CASE("single-amplitude exactness agrees with all-amplitude exactness") {
    Rng rng(77);
    int exact_seen = 0, inexact_seen = 0;
    for (int trial = 0; trial < 30; ++trial) {
        NComplex x = random_complex(rng, ComplexOptions{});
        bool all = is_N_exact(x);
        (all ? exact_seen : inexact_seen)++;
        for (int r = 1; r < x.n(); ++r)
            CHECK(is_N_exact(x, ExactnessMode::single(r)) == all);
    }
    CHECK(inexact_seen > 0);
}

TEST_CASE("direct sum homology is additive") {
    Rng rng(99);
    for (int trial = 0; trial < 15; ++trial) {
        ComplexOptions opts;
        NComplex x = random_complex(rng, opts);
        NComplex y = random_complex_with(rng, x.n(), x.domain(), 3, x.n() + 2);
        NComplex s = direct_sum(x, y);
        CHECK(validate(s));
        for (int i = s.lo(); i <= s.hi(); ++i)
            for (int r = 1; r < s.n(); ++r) {
                AmplitudeHomology hs = homology(s, i, r);
                AmplitudeHomology hx = homology(x, i, r);
                AmplitudeHomology hy = homology(y, i, r);
                CHECK(hs.free_rank == hx.free_rank + hy.free_rank);
                std::vector<Int> merged = hx.torsion;
                merged.insert(merged.end(), hy.torsion.begin(), hy.torsion.end());
                std::sort(merged.begin(), merged.end());
                std::vector<Int> got = hs.torsion;
                std::sort(got.begin(), got.end());
                CHECK(got == merged);
            }
    }
}

TEST_CASE("map arithmetic") {
    NComplex x = two_term(3, F5);
    ChainMap id = ChainMap::identity(x);
    CHECK(compose(id, id) == id);
    CHECK((id - id).is_zero());
    CHECK(id.scaled(Rat(2)) + id.scaled(Rat(3)) == id.scaled(Rat(5)));
    CHECK(id.commutes());
    CHECK(ChainMap::zero(x, x).commutes());
}

TEST_CASE("cokernel presentation") {
    NComplex x(2, Z, 0, {1, 1}, {ExactMatrix::from_rows(Z, {{3}})});
    SubquotientInvariants q = cokernel_presentation(x, 1, 1);
    CHECK(q.free_rank == 0);
    REQUIRE(q.torsion.size() == 1);
    CHECK(q.torsion[0] == 3);
}

TEST_CASE("support is trimmed and zero complexes are canonical") {
    NComplex x(2, Q, -2, {0, 0, 1, 0}, {ExactMatrix(Q, 0, 0), ExactMatrix(Q, 1, 0), ExactMatrix(Q, 0, 1)});
    CHECK(x.lo() == 0);
    CHECK(x.hi() == 0);
    CHECK(NComplex::zero(2, Q) == NComplex(2, Q, 5, {0, 0}, {ExactMatrix(Q, 0, 0)}));
}
