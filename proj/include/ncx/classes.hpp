#pragma once

#include <string>
#include <vector>

#include "ncx/homotopy.hpp"
#include "ncx/ncomplex.hpp"

namespace ncx {

/// Predicate applied to component objects / cycle subobjects. "Free" is only
/// meaningful over the integers, where it asks for a torsion-free saturated
/// span (all Smith invariant factors 1).
enum class BaseClass { All, Free };

enum class ClassVariant {
    Degreewise, // every component satisfies the base predicate
    ExactTilde, // N-exact with every cycle subobject in the base class
    Ex          // degreewise and N-exact
};

struct ClassSpec {
    BaseClass base = BaseClass::All;
    ClassVariant variant = ClassVariant::Degreewise;
};

bool class_membership(const NComplex& x, const ClassSpec& spec);

/// Dimension of the degreewise-split extension group of y by x, computed as
/// the homotopy-class dimension of maps y -> suspension(x). Field domains.
std::size_t ext_dw_dim(const NComplex& y, const NComplex& x);

/// Extension criterion for N-exactness over a field: for every degree i in
/// the widened support and every amplitude r, postcomposition with the
/// canonical epi from the full disc onto its bottom-aligned amplitude-r
/// quotient is surjective on chain maps out of x. Equivalent to is_N_exact;
/// the two sides are computed by independent routes.
bool prop31_criterion(const NComplex& x);

/// Finite orthogonality surrogate: hom_k(x, t) for each declared test
/// complex. A necessary condition for dg-class membership, not a decision
/// procedure. Every test complex must itself be N-exact.
struct SpotTestEntry {
    std::size_t index = 0;
    std::size_t dim_homotopy_classes = 0;
};
struct SpotTestReport {
    std::vector<SpotTestEntry> entries;
    bool pass = true;
};
SpotTestReport orthogonality_spot_test(const NComplex& x, const std::vector<NComplex>& tests);

/// Vanishing checks of ext_dw against disc complexes: full discs on either
/// side always vanish over a field, and amplitude-r discs vanish against
/// N-exact complexes.
struct DiscExtReport {
    std::size_t from_full_disc = 0;
    std::size_t to_full_disc = 0;
    bool y_exact = false;
    std::size_t from_amplitude_disc = 0; // meaningful when y_exact
    std::size_t to_amplitude_disc = 0;   // meaningful when y_exact
    bool ok() const {
        return from_full_disc == 0 && to_full_disc == 0 &&
               (!y_exact || (from_amplitude_disc == 0 && to_amplitude_disc == 0));
    }
};
DiscExtReport disc_ext_checks(std::size_t m_dim, const NComplex& y, int deg, int r);

} // namespace ncx
