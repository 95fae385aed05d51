#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncx/homotopy.hpp"
#include "ncx/randomgen.hpp"
#include "ncx/triangle.hpp"

using namespace ncx;

namespace {

const CoefficientDomain F2 = CoefficientDomain::prime_field(2);
const CoefficientDomain F5 = CoefficientDomain::prime_field(5);
const CoefficientDomain Z = CoefficientDomain::integers();

NComplex stalk(int n, const CoefficientDomain& dom, int deg = 0) {
    return NComplex(n, dom, deg, {1}, {});
}

} // namespace

TEST_CASE("the zero map has the zero witness") {
    Rng rng(5);
    NComplex x = random_complex(rng, ComplexOptions{});
    NComplex y = random_complex_with(rng, x.n(), x.domain(), 3, x.n() + 2);
    auto w = null_homotopy(ChainMap::zero(x, y));
    REQUIRE(w.has_value());
    CHECK(w->realize().is_zero());
}

TEST_CASE("identity of a full disc has the expected one-entry witness") {
    NComplex d = disc(3, 1, 3, 1, F2);
    auto w = null_homotopy(ChainMap::identity(d));
    REQUIRE(w.has_value());
    // the witness space is one-dimensional here: s^1 : D^1 -> D^{-1} must be 1
    CHECK(w->witness_at(1) == ExactMatrix::identity(F2, 1));
    for (int i = -4; i <= 4; ++i) {
        if (i == 1)
            continue;
        CHECK(w->witness_at(i).is_zero());
    }
    CHECK(w->realize() == ChainMap::identity(d));
}

TEST_CASE("identity of a stalk is not null-homotopic") {
    CHECK(!null_homotopy(ChainMap::identity(stalk(3, F2))).has_value());
    CHECK(!is_contractible(stalk(3, F2)));
}

TEST_CASE("witness verification is exact") {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        NComplex x = random_complex(rng, ComplexOptions::fields_only());
        NComplex y = random_complex_with(rng, x.n(), x.domain(), 3, x.n() + 2);
        ChainMap f = random_witness(rng, x, y).realize();
        auto w = null_homotopy(f);
        REQUIRE(w.has_value());
        CHECK(w->realize() == f);
    }
}

TEST_CASE("realized witness families are chain maps") {
    Rng rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        NComplex x = random_complex(rng, ComplexOptions{});
        NComplex y = random_complex_with(rng, x.n(), x.domain(), 3, x.n() + 2);
        CHECK(random_witness(rng, x, y).realize().commutes());
    }
}

TEST_CASE("homotopic is reflexive and detects witness perturbations") {
    Rng rng(31);
    NComplex x = random_complex(rng, ComplexOptions::fields_only());
    NComplex y = random_complex_with(rng, x.n(), x.domain(), 3, x.n() + 2);
    ChainMap f = random_chain_map(rng, x, y);
    CHECK(homotopic(f, f));
    ChainMap g = f + random_witness(rng, x, y).realize();
    CHECK(homotopic(f, g));

    NComplex s = stalk(3, F2);
    CHECK(!homotopic(ChainMap::identity(s), ChainMap::zero(s, s)));
}

TEST_CASE("homotopy congruence with composition") {
    Rng rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        ComplexOptions opts = ComplexOptions::small_fields_only();
        NComplex x = random_complex(rng, opts);
        NComplex y = random_complex_with(rng, x.n(), x.domain(), 2, x.n() + 1);
        NComplex z = random_complex_with(rng, x.n(), x.domain(), 2, x.n() + 1);
        ChainMap f = random_chain_map(rng, x, y);
        ChainMap fp = f + random_witness(rng, x, y).realize();
        ChainMap g = random_chain_map(rng, y, z);
        CHECK(homotopic(compose(g, f), compose(g, fp)));
        ChainMap h = random_chain_map(rng, z, x);
        CHECK(homotopic(compose(f, h), compose(fp, h)));
    }
}

TEST_CASE("hom_k worked examples") {
    SUBCASE("stalk against itself at N=3") {
        NComplex s = stalk(3, F5);
        HomKSpace h = hom_k(s, s);
        CHECK(h.dim_chain_maps == 1);
        CHECK(h.dim_null_homotopic == 0);
        CHECK(h.dim_homotopy_classes == 1);
    }
    SUBCASE("maps into the zero complex") {
        NComplex s = stalk(3, F5);
        HomKSpace h = hom_k(s, NComplex::zero(3, F5));
        CHECK(h.dim_chain_maps == 0);
        CHECK(h.dim_homotopy_classes == 0);
    }
    SUBCASE("maps out of a full disc all die in the homotopy category") {
        Rng rng(43);
        for (int trial = 0; trial < 10; ++trial) {
            int n = rng.in(2, 4);
            NComplex d = disc(n, rng.in(-1, 1), n, 1, F5);
            NComplex y = random_complex_with(rng, n, F5, 2, n + 1);
            CHECK(hom_k(d, y).dim_homotopy_classes == 0);
        }
    }
    SUBCASE("integer domain is rejected") {
        CHECK_THROWS_AS(hom_k(stalk(2, Z), stalk(2, Z)), DomainError);
    }
}

TEST_CASE("contractibility battery over discs") {
    for (int n = 2; n <= 5; ++n)
        for (int top = -1; top <= 1; ++top) {
            CHECK(is_contractible(disc(n, top, n, 1, F2)));
            CHECK(is_contractible(disc(n, top, n, 2, F5)));
            for (int r = 1; r < n; ++r)
                CHECK(!is_contractible(disc(n, top, r, 1, F2)));
        }
    CHECK(is_contractible(NComplex::zero(3, F2)));
}

TEST_CASE("full discs over the integers are contractible") {
    CHECK(is_contractible(disc(3, 0, 3, 2, Z)));
    CHECK(!is_contractible(disc(3, 0, 2, 1, Z)));
}

TEST_CASE("hom_basis spans chain maps") {
    Rng rng(53);
    NComplex x = random_complex(rng, ComplexOptions::fields_only());
    NComplex y = random_complex_with(rng, x.n(), x.domain(), 3, x.n() + 2);
    for (const ChainMap& b : hom_basis(x, y))
        CHECK(b.commutes());
    ChainMap f = random_chain_map(rng, x, y);
    CHECK(f.commutes());
}

TEST_CASE("homotopy inverse of the identity and of equivalences") {
    Rng rng(59);
    NComplex x = random_complex(rng, ComplexOptions::small_fields_only());
    auto inv = homotopy_inverse(ChainMap::identity(x));
    REQUIRE(inv.has_value());
    CHECK(homotopic(*inv, ChainMap::identity(x)));

    NComplex s = stalk(3, F2);
    CHECK(!homotopy_inverse(ChainMap::zero(s, s)).has_value());
}
