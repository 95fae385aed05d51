#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncx/ncomplex.hpp"

namespace ncx {

struct VerifyFailure {
    int trial = 0;
    std::string counterexample;
};

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<VerifyFailure> failures;
    double elapsed_seconds = 0.0;
    bool ok() const { return failures.empty(); }
};

/// Seeded randomized law checks. Identical (suite, seed, trials) triples
/// produce identical reports; trials are generated independently of each
/// other, so failure lists are stable under reordering.
VerifyReport run_suite(const std::string& name, std::uint64_t seed, int trials);

const std::vector<std::string>& suite_names();

/// The epimorphism characterization of exactness: the restriction of each
/// differential to cycle generators maps onto the next cycle subobject, for
/// every degree and every amplitude. Computed from cycle spans and solve,
/// independently of the homology route.
bool epi_criterion_holds(const NComplex& x);

} // namespace ncx
