#pragma once

#include <optional>
#include <vector>

#include "ncx/ncomplex.hpp"

namespace ncx {

/// A witness family s^i : X^i -> Y^{i-N+1}. The map it realizes is
///   f^i = sum_{j=0}^{N-1}  d_Y^{(N-1-j) fold}  s^{i+j}  d_X^{(j) fold},
/// the degree-(1-N) analogue of the classical f = ds + sd.
class Homotopy {
public:
    Homotopy(NComplex source, NComplex target, std::vector<std::pair<int, ExactMatrix>> witnesses);

    static Homotopy zero(const NComplex& source, const NComplex& target);

    const NComplex& source() const { return src_; }
    const NComplex& target() const { return tgt_; }

    /// Witness at degree i, shape dim_target(i-N+1) x dim_source(i).
    ExactMatrix witness_at(int i) const;
    void set_witness(int i, const ExactMatrix& m);

    /// Degrees where a nonzero witness can live (both endpoints nonzero).
    std::vector<int> support() const;

    /// The chain map this family realizes; realized maps always commute with
    /// the differentials.
    ChainMap realize() const;

private:
    NComplex src_, tgt_;
    int lo_;
    std::vector<ExactMatrix> s_;
};

/// Hom-space of the homotopy category: chain maps modulo null-homotopic ones.
struct HomKSpace {
    std::size_t dim_chain_maps = 0;
    std::size_t dim_null_homotopic = 0;
    std::size_t dim_homotopy_classes = 0;
};

/// Decides null-homotopy: a witness with realize() == f, or nullopt. The
/// unknowns are the witness entries over the support window; the system is
/// assembled degree-major and solved exactly (over Z through the Smith form).
std::optional<Homotopy> null_homotopy(const ChainMap& f);

/// f and g are homotopic iff f - g is null-homotopic.
bool homotopic(const ChainMap& f, const ChainMap& g);

/// Exact dimensions of Hom in the homotopy category; field domains only.
HomKSpace hom_k(const NComplex& x, const NComplex& y);

/// Basis of the space of chain maps X -> Y (field domains).
std::vector<ChainMap> hom_basis(const NComplex& x, const NComplex& y);

/// True iff the identity is null-homotopic.
bool is_contractible(const NComplex& x);

/// A two-sided inverse of h up to homotopy, found by one joint linear solve,
/// or nullopt when h is not a homotopy equivalence.
std::optional<ChainMap> homotopy_inverse(const ChainMap& h);

} // namespace ncx
