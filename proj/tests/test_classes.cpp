#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncx/classes.hpp"
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

TEST_CASE("class membership") {
    Rng rng(3);
    NComplex x = random_complex(rng, ComplexOptions{});
    CHECK(class_membership(x, {BaseClass::All, ClassVariant::Degreewise}));

    NComplex d = disc(3, 0, 3, 1, F2);
    CHECK(class_membership(d, {BaseClass::All, ClassVariant::ExactTilde}));
    CHECK(class_membership(d, {BaseClass::All, ClassVariant::Ex}));

    NComplex s = stalk(3, F2);
    CHECK(!class_membership(s, {BaseClass::All, ClassVariant::Ex}));
    CHECK(!class_membership(s, {BaseClass::All, ClassVariant::ExactTilde}));
}

TEST_CASE("free base class over the integers") {
    NComplex d = disc(3, 0, 3, 2, Z);
    CHECK(class_membership(d, {BaseClass::Free, ClassVariant::Degreewise}));
    CHECK(class_membership(d, {BaseClass::Free, ClassVariant::ExactTilde}));
    CHECK_THROWS_AS(class_membership(disc(3, 0, 3, 1, F2), {BaseClass::Free, ClassVariant::Degreewise}),
                    DomainError);
}

TEST_CASE("class implications on random complexes") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        NComplex x = random_complex(rng, ComplexOptions{});
        bool tilde = class_membership(x, {BaseClass::All, ClassVariant::ExactTilde});
        bool ex = class_membership(x, {BaseClass::All, ClassVariant::Ex});
        bool dw = class_membership(x, {BaseClass::All, ClassVariant::Degreewise});
        if (tilde)
            CHECK(ex);
        if (ex)
            CHECK(dw);
    }
}

TEST_CASE("ext_dw examples") {
    SUBCASE("full discs annihilate ext in either slot") {
        Rng rng(11);
        for (int trial = 0; trial < 8; ++trial) {
            int n = rng.in(2, 4);
            NComplex d = disc(n, rng.in(-1, 1), n, 1, F5);
            NComplex y = random_complex_with(rng, n, F5, 2, n + 1);
            CHECK(ext_dw_dim(d, y) == 0);
            CHECK(ext_dw_dim(y, d) == 0);
        }
    }
    SUBCASE("stalk against stalk at N=3") {
        CHECK(ext_dw_dim(stalk(3, F5), stalk(3, F5)) == 0);
    }
    SUBCASE("zero source") {
        CHECK(ext_dw_dim(NComplex::zero(3, F5), stalk(3, F5)) == 0);
    }
    SUBCASE("a nonzero extension group: stalks at adjacent degrees for N=2") {
        // extensions of the stalk at 0 by the stalk at 1 include the disc
        CHECK(ext_dw_dim(stalk(2, F2, 0), stalk(2, F2, 1)) == 1);
    }
    SUBCASE("integers are rejected") {
        CHECK_THROWS_AS(ext_dw_dim(stalk(2, Z), stalk(2, Z)), DomainError);
    }
}

TEST_CASE("ext_dw is additive in the first slot") {
    Rng rng(13);
    for (int trial = 0; trial < 8; ++trial) {
        ComplexOptions opts = ComplexOptions::small_fields_only();
        NComplex y1 = random_complex(rng, opts);
        NComplex y2 = random_complex_with(rng, y1.n(), y1.domain(), 2, y1.n() + 1);
        NComplex x = random_complex_with(rng, y1.n(), y1.domain(), 2, y1.n() + 1);
        CHECK(ext_dw_dim(direct_sum(y1, y2), x) == ext_dw_dim(y1, x) + ext_dw_dim(y2, x));
    }
}

TEST_CASE("extension criterion examples") {
    CHECK(prop31_criterion(NComplex::zero(3, F5)));
    CHECK(prop31_criterion(disc(4, 1, 4, 2, F5)));
    CHECK(prop31_criterion(direct_sum(disc(3, 0, 3, 1, F2), disc(3, 2, 3, 2, F2))));
    CHECK(!prop31_criterion(stalk(3, F5)));
    CHECK(!prop31_criterion(disc(4, 0, 2, 1, F2)));
}

TEST_CASE("extension criterion is equivalent to exactness") {
    Rng rng(17);
    int exact_seen = 0, inexact_seen = 0;
    for (int trial = 0; trial < 40; ++trial) {
        NComplex x = random_complex(rng, ComplexOptions::fields_only());
        bool ex = is_N_exact(x);
        (ex ? exact_seen : inexact_seen)++;
        CHECK(prop31_criterion(x) == ex);
    }
    // force both truth values into the sample
    CHECK(prop31_criterion(disc(3, 0, 3, 1, F2)));
    CHECK(!prop31_criterion(stalk(3, F2)));
    CHECK(inexact_seen > 0);
}

TEST_CASE("orthogonality spot test") {
    Rng rng(19);
    SUBCASE("full discs pass against any exact tests") {
        NComplex d = disc(3, 0, 3, 1, F5);
        std::vector<NComplex> tests{disc(3, 1, 3, 2, F5), random_exact_complex(rng, 3, F5, 1)};
        SpotTestReport rep = orthogonality_spot_test(d, tests);
        CHECK(rep.pass);
        CHECK(rep.entries.size() == 2);
    }
    SUBCASE("empty test list passes vacuously") {
        CHECK(orthogonality_spot_test(stalk(3, F5), {}).pass);
    }
    SUBCASE("non-exact test complexes are rejected") {
        CHECK_THROWS_AS(orthogonality_spot_test(stalk(3, F5), {stalk(3, F5)}), Error);
    }
    SUBCASE("exact field-coefficient tests are always orthogonal") {
        // over a field every exact complex is contractible, so the necessary
        // condition can never fail; the stalk passes too
        std::vector<NComplex> tests{random_exact_complex(rng, 3, F5, 1)};
        CHECK(orthogonality_spot_test(stalk(3, F5), tests).pass);
    }
}

TEST_CASE("disc ext checks") {
    Rng rng(23);
    SUBCASE("random targets") {
        for (int trial = 0; trial < 6; ++trial) {
            int n = rng.in(2, 4);
            NComplex y = random_complex_with(rng, n, F5, 2, n + 1);
            DiscExtReport rep = disc_ext_checks(1, y, rng.in(-1, 1), rng.in(1, n - 1));
            CHECK(rep.from_full_disc == 0);
            CHECK(rep.to_full_disc == 0);
            CHECK(rep.ok());
        }
    }
    SUBCASE("exact targets also kill amplitude discs") {
        NComplex y = random_exact_complex(rng, 3, F5, 1);
        DiscExtReport rep = disc_ext_checks(2, y, 0, 2);
        CHECK(rep.y_exact);
        CHECK(rep.from_amplitude_disc == 0);
        CHECK(rep.to_amplitude_disc == 0);
    }
    SUBCASE("zero target") {
        DiscExtReport rep = disc_ext_checks(1, NComplex::zero(3, F5), 0, 1);
        CHECK(rep.ok());
    }
}
