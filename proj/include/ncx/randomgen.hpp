#pragma once

#include <cstdint>
#include <vector>

#include "ncx/homotopy.hpp"
#include "ncx/ncomplex.hpp"

namespace ncx {

/// Deterministic generator (splitmix64). Identical seeds give identical
/// instance streams on every platform, which the verification reports rely on.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Uniform in [lo, hi], inclusive.
    int in(int lo, int hi);
    /// Derived generator for trial `id`, independent of call order.
    Rng fork(std::uint64_t id) const;

private:
    std::uint64_t state_;
};

struct ComplexOptions {
    std::vector<int> allowed_n{2, 3, 4, 5};
    std::vector<CoefficientDomain> domains{
        CoefficientDomain::prime_field(2),
        CoefficientDomain::prime_field(3),
        CoefficientDomain::prime_field(5),
        CoefficientDomain::rationals(),
    };
    int max_dim = 4;       // per-degree dimension bound (smaller N gets the full bound)
    int max_extra_len = 3; // support length <= N + max_extra_len

    static ComplexOptions fields_only();
    static ComplexOptions small_fields_only();
};

/// Random valid complex: dimensions and entries drawn uniformly, then the
/// differentials are projected onto the nilpotency law by zeroing the
/// trailing map of each window whose N-fold composite is nonzero. Large N
/// draws smaller dimensions to keep solver sizes at desk scale.
NComplex random_complex(Rng& rng, const ComplexOptions& opts);
NComplex random_complex_with(Rng& rng, int n, const CoefficientDomain& dom, int max_dim, int max_len);

/// Uniform-ish element of the chain-map space: random combination of a
/// hom-space basis (field domains).
ChainMap random_chain_map(Rng& rng, const NComplex& x, const NComplex& y);

/// Random witness family with uniformly drawn entries; its realization is a
/// null-homotopic chain map by construction.
Homotopy random_witness(Rng& rng, const NComplex& x, const NComplex& y);

/// Random N-exact complex: disc sums, their suspensions, and iterated cones
/// of maps between exact complexes.
NComplex random_exact_complex(Rng& rng, int n, const CoefficientDomain& dom, int depth);

/// Random contractible complex: a finite direct sum of full discs.
NComplex random_contractible(Rng& rng, int n, const CoefficientDomain& dom);

} // namespace ncx
