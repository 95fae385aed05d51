#pragma once

#include <optional>
#include <vector>

#include "ncx/linalg.hpp"
#include "ncx/matrix.hpp"

namespace ncx {

/// A finitely supported N-complex: graded objects X^i connected by
/// degree-raising differentials d^i : X^i -> X^{i+1}, with every composite of
/// N consecutive differentials equal to zero. Objects are dimensions (free
/// ranks over Z). Degrees outside the support are zero objects.
///
/// Construction only checks shapes; the nilpotency law is a separate,
/// decidable property (see validate), so candidate complexes that fail it can
/// be represented and reported on.
class NComplex {
public:
    /// dims[k] is the dimension at degree lo + k; diffs[k] maps degree lo+k
    /// to lo+k+1 and must have shape dims[k+1] x dims[k]. diffs may have
    /// dims.size()-1 entries (or be empty when dims has at most one).
    NComplex(int n, CoefficientDomain dom, int lo, std::vector<std::size_t> dims, std::vector<ExactMatrix> diffs);

    static NComplex zero(int n, const CoefficientDomain& dom);

    int n() const { return n_; }
    const CoefficientDomain& domain() const { return dom_; }

    /// Tight support [lo, hi]; empty complexes report lo = 0, hi = -1.
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
    bool is_zero_complex() const { return dims_.empty(); }

    std::size_t dim_at(int i) const;
    /// Differential at degree i as a dim(i+1) x dim(i) matrix (zero outside
    /// the stored range).
    ExactMatrix diff_at(int i) const;

    bool operator==(const NComplex& rhs) const;
    bool operator!=(const NComplex& rhs) const { return !(*this == rhs); }

private:
    int n_;
    CoefficientDomain dom_;
    int lo_;
    std::vector<std::size_t> dims_;
    std::vector<ExactMatrix> diffs_;
};

/// Degreewise map between two N-complexes with the same N and domain.
/// Construction checks shapes only; commutation with the differentials is
/// checked by commutes().
class ChainMap {
public:
    ChainMap(NComplex source, NComplex target, std::vector<std::pair<int, ExactMatrix>> components);

    static ChainMap zero(const NComplex& source, const NComplex& target);
    static ChainMap identity(const NComplex& x);

    const NComplex& source() const { return src_; }
    const NComplex& target() const { return tgt_; }

    /// Component at degree i, shape dim_target(i) x dim_source(i).
    ExactMatrix component_at(int i) const;
    void set_component(int i, const ExactMatrix& m);

    /// d_Y^i f^i = f^{i+1} d_X^i at every degree.
    bool commutes() const;
    bool is_zero() const;

    ChainMap operator+(const ChainMap& rhs) const;
    ChainMap operator-(const ChainMap& rhs) const;
    ChainMap scaled(const Rat& c) const;

    bool operator==(const ChainMap& rhs) const;
    bool operator!=(const ChainMap& rhs) const { return !(*this == rhs); }

private:
    NComplex src_, tgt_;
    int lo_; // components stored for degrees [lo_, lo_ + comps_.size() - 1]
    std::vector<ExactMatrix> comps_;
};

/// g after f.
ChainMap compose(const ChainMap& g, const ChainMap& f);

/// Invariants of one amplitude homology H^i_r = Z^i_r / B^i_{N-r}.
struct AmplitudeHomology {
    int degree = 0;
    int amplitude = 0;
    std::size_t free_rank = 0;
    std::vector<Int> torsion;
    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
};

/// True when every composite of N consecutive differentials vanishes.
bool validate(const NComplex& x);
/// Degree of the first nonvanishing N-fold composite, if any.
std::optional<int> first_nilpotency_failure(const NComplex& x);

/// d^{i+r-1} ... d^i as a dim(i+r) x dim(i) matrix; r = 0 gives the identity
/// on X^i and r = N is forced to zero by the nilpotency law. Requires
/// 0 <= r <= N.
ExactMatrix composite(const NComplex& x, int i, int r);

/// Basis of Z^i_r = ker(composite(x, i, r)), 1 <= r <= N (Z^i_N is all of X^i).
ExactMatrix cycles(const NComplex& x, int i, int r);

/// Generators of B^i_r = im(composite(x, i-r, r)), 1 <= r <= N.
ExactMatrix boundaries(const NComplex& x, int i, int r);

/// Invariants of X^i / B^i_r.
SubquotientInvariants cokernel_presentation(const NComplex& x, int i, int r);

/// H^i_r for 1 <= r <= N-1.
AmplitudeHomology homology(const NComplex& x, int i, int r);

/// All-amplitude or single-amplitude exactness test; the two agree for every
/// r, which the verification suites exercise.
struct ExactnessMode {
    std::optional<int> single_r;
    static ExactnessMode all() { return {}; }
    static ExactnessMode single(int r) { return {r}; }
};
bool is_N_exact(const NComplex& x, ExactnessMode mode = ExactnessMode::all());
/// First (i, r) with nonzero homology under the given mode, if any.
std::optional<std::pair<int, int>> first_inexactness(const NComplex& x, ExactnessMode mode = ExactnessMode::all());

/// Disc complex: an object of dimension m placed in amplitude consecutive
/// degrees ending at top, joined by identity maps. Requires 1 <= amplitude <= n.
NComplex disc(int n, int top, int amplitude, std::size_t m, const CoefficientDomain& dom);

NComplex direct_sum(const NComplex& x, const NComplex& y);
/// The block injections/projections of a direct sum.
ChainMap sum_injection(const NComplex& x, const NComplex& y, int which);
ChainMap sum_projection(const NComplex& x, const NComplex& y, int which);

} // namespace ncx
