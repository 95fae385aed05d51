#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncx/io.hpp"
#include "ncx/randomgen.hpp"

using namespace ncx;

namespace {

const CoefficientDomain F5 = CoefficientDomain::prime_field(5);
const CoefficientDomain Q = CoefficientDomain::rationals();

} // namespace

TEST_CASE("complex documents round-trip") {
    NComplex d = disc(3, 1, 3, 1, F5);
    std::string text = to_json_string(d);
    NComplex back = complex_from_json_string(text);
    CHECK(back == d);
    CHECK(to_json_string(back) == text); // canonical form is stable
}

TEST_CASE("random complexes round-trip exactly") {
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        ComplexOptions opts;
        opts.domains.push_back(CoefficientDomain::integers());
        NComplex x = random_complex(rng, opts);
        NComplex back = complex_from_json_string(to_json_string(x));
        CHECK(back == x);
        CHECK(to_json_string(back) == to_json_string(x));
    }
}

TEST_CASE("chain map documents round-trip") {
    Rng rng(11);
    NComplex x = random_complex(rng, ComplexOptions::fields_only());
    NComplex y = random_complex_with(rng, x.n(), x.domain(), 3, x.n() + 2);
    ChainMap f = random_chain_map(rng, x, y);
    ChainMap back = chain_map_from_json_string(to_json_string(f));
    CHECK(back == f);
    CHECK(to_json_string(back) == to_json_string(f));
}

TEST_CASE("rational entries parse to lowest terms") {
    std::string text = R"({
      "format_version": "1", "kind": "complex", "N": 2, "coeff": "Q",
      "objects": {"0": 1, "1": 1},
      "diff": {"0": [["6/4"]]}
    })";
    NComplex x = complex_from_json_string(text);
    CHECK(x.diff_at(0).at(0, 0) == Rat(3, 2));
    // and the canonical save renders it reduced
    CHECK(to_json_string(x).find("3/2") != std::string::npos);
}

TEST_CASE("prime field entries canonicalize") {
    std::string text = R"({
      "format_version": "1", "kind": "complex", "N": 3, "coeff": "Fp:5",
      "objects": {"0": 1, "1": 1},
      "diff": {"0": [["-1"]]}
    })";
    NComplex x = complex_from_json_string(text);
    CHECK(x.diff_at(0).at(0, 0) == Rat(4));
}

TEST_CASE("nilpotency failures are rejected with the offending degree") {
    std::string text = R"({
      "format_version": "1", "kind": "complex", "N": 2, "coeff": "Fp:2",
      "objects": {"0": 1, "1": 1, "2": 1},
      "diff": {"0": [[1]], "1": [[1]]}
    })";
    CHECK_THROWS_WITH_AS(complex_from_json_string(text), doctest::Contains("degree 0"), ValidationError);
    CHECK(!validate(complex_from_json_string(text, false)));
}

TEST_CASE("parse errors carry diagnostics") {
    CHECK_THROWS_AS(complex_from_json_string("{"), ParseError);
    CHECK_THROWS_AS(complex_from_json_string(R"({"format_version":"1","N":2,"coeff":"F7"})"), ParseError);
    std::string bad_shape = R"({
      "format_version": "1", "kind": "complex", "N": 2, "coeff": "Q",
      "objects": {"0": 2, "1": 1},
      "diff": {"0": [[1]]}
    })";
    CHECK_THROWS_WITH_AS(complex_from_json_string(bad_shape), doctest::Contains("degree 0"), ParseError);
}

TEST_CASE("domain tokens") {
    CHECK(domain_token(CoefficientDomain::prime_field(7)) == "Fp:7");
    CHECK(domain_from_token("Fp:7") == CoefficientDomain::prime_field(7));
    CHECK(domain_from_token("Q") == Q);
    CHECK_THROWS_AS(domain_from_token("Fp:4"), Error);
}
