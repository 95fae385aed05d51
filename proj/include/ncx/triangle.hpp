#pragma once

#include <optional>

#include "ncx/homotopy.hpp"
#include "ncx/ncomplex.hpp"

namespace ncx {

/// The strict triangle of f : X -> Y. The underlying degreewise sequence
/// 0 -> Y -> C(f) -> SX -> 0 is split exact in every degree.
struct StrictTriangle {
    ChainMap f;
    ChainMap into_cone;       // Y -> C(f)
    ChainMap onto_suspension; // C(f) -> SX
};

struct ConeResult {
    NComplex complex;
    StrictTriangle triangle;
};

/// Mapping cone: C(f)^m = Y^m + X^{m+1} + ... + X^{m+N-1} with the block
/// differential (first row d_Y, f; identity superdiagonal on the X part;
/// bottom row the negated composites).
ConeResult cone(const ChainMap& f);

/// (SX)^m = X^{m+1} + ... + X^{m+N-1}; identity superdiagonal, bottom row the
/// negated composites of increasing start degree.
NComplex suspension(const NComplex& x);

/// (S^{-1}X)^m = X^{m-N+1} + ... + X^{m-1} (blocks in ascending degree);
/// identity superdiagonal, first column the negated composites out of the
/// lowest block.
NComplex inv_suspension(const NComplex& x);

struct HullResult {
    NComplex complex;
    ChainMap embedding; // X -> hull(X), a degreewise split mono
};

/// hull(X)^m = X^m + ... + X^{m+N-1} with the pure shift differential; a
/// contractible complex containing X via x |-> (x, dx, d^{(2)}x, ...).
HullResult hull(const NComplex& x);

/// Canonical block maps S S^{-1} Y <-> Y. counit . counit_section is the
/// identity of Y exactly; the other composite is homotopic to the identity,
/// witnessed by counit_homotopy_witness.
ChainMap counit(const NComplex& y);
ChainMap counit_section(const NComplex& y);
/// Explicit witness realizing counit_section . counit - id on S S^{-1} Y.
Homotopy counit_homotopy_witness(const NComplex& y);

/// Canonical block map X -> S^{-1} S X, a homotopy equivalence.
ChainMap unit(const NComplex& x);

/// A short exact sequence of N-complexes that is split exact in every degree.
/// Construction verifies the invariants: surj . inj = 0, the degreewise
/// dimension count, a degreewise section of surj and retraction of inj, and
/// ker(surj) = im(inj) (saturated over Z).
struct DegreewiseSplitSES {
    NComplex left, middle, right;
    ChainMap inj;  // left -> middle
    ChainMap surj; // middle -> right
};
DegreewiseSplitSES make_dw_split_ses(const ChainMap& inj, const ChainMap& surj);

/// The degreewise split extension of Y by X classified by f : S^{-1}Y -> X.
/// The middle complex is X^m + Y^m with differential [[d_X, sigma], [0, d_Y]]
/// where sigma^m is the top block of f^{m+1}; this is the degreewise-reduced
/// form of the mapping cone of f (they agree on the nose for N = 2 and are
/// canonically homotopy equivalent in general). The canonical identification
/// maps S S^{-1} Y <-> Y are constructed and verified before use.
DegreewiseSplitSES extension_of(const ChainMap& f, const NComplex& y);

/// Decides strict splitness by solving for a chain retraction r of inj with
/// r . inj = id; returns the retraction when the sequence splits.
std::optional<ChainMap> split_test(const DegreewiseSplitSES& ses);

/// Turns a homotopy retraction of u : Y -> C(f) into a strict one: given a
/// chain map r : C(f) -> Y and a witness t realizing id_Y - r.u, returns a
/// chain map a : C(f) -> Y with a . u = id_Y exactly. Throws WitnessInvalid
/// when t does not realize id - r.u.
ChainMap strict_retraction(const ChainMap& f, const ChainMap& r, const Homotopy& t);

} // namespace ncx
