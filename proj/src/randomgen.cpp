#include "ncx/randomgen.hpp"

#include "ncx/triangle.hpp"

namespace ncx {

std::uint64_t Rng::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

int Rng::in(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rng Rng::fork(std::uint64_t id) const {
    Rng r(state_ ^ (0x9e3779b97f4a7c15ull * (id + 1)));
    r.next();
    return r;
}

ComplexOptions ComplexOptions::fields_only() {
    ComplexOptions o;
    o.domains = {CoefficientDomain::prime_field(2), CoefficientDomain::prime_field(3),
                 CoefficientDomain::prime_field(5)};
    return o;
}

ComplexOptions ComplexOptions::small_fields_only() {
    ComplexOptions o = fields_only();
    o.max_dim = 2;
    o.max_extra_len = 2;
    return o;
}

namespace {

Rat random_entry(Rng& rng, const CoefficientDomain& dom) {
    if (dom.kind() == DomainKind::PrimeField && dom.modulus().fits_sint_p())
        return Rat(rng.in(0, static_cast<int>(dom.modulus().get_si()) - 1));
    return Rat(rng.in(-2, 2));
}

} // namespace

NComplex random_complex_with(Rng& rng, int n, const CoefficientDomain& dom, int max_dim, int max_len) {
    int len = rng.in(1, max_len);
    int lo = rng.in(-3, 2);
    std::vector<std::size_t> dims;
    for (int k = 0; k < len; ++k)
        dims.push_back(static_cast<std::size_t>(rng.in(0, max_dim)));
    std::vector<ExactMatrix> diffs;
    for (int k = 0; k + 1 < len; ++k) {
        ExactMatrix d(dom, dims[static_cast<std::size_t>(k + 1)], dims[static_cast<std::size_t>(k)]);
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (std::size_t j = 0; j < d.cols(); ++j)
                d.set(i, j, random_entry(rng, dom));
        diffs.push_back(std::move(d));
    }
    NComplex x(n, dom, lo, std::move(dims), std::move(diffs));

    // project onto the nilpotency law: when the window starting at i has a
    // nonzero N-fold composite, zero its trailing differential
    for (int i = x.lo(); i + n <= x.hi(); ++i) {
        if (composite(x, i, n).is_zero())
            continue;
        std::vector<std::size_t> dims2;
        std::vector<ExactMatrix> diffs2;
        for (int m = x.lo(); m <= x.hi(); ++m)
            dims2.push_back(x.dim_at(m));
        for (int m = x.lo(); m < x.hi(); ++m)
            diffs2.push_back(m == i + n - 1 ? ExactMatrix(dom, x.dim_at(m + 1), x.dim_at(m)) : x.diff_at(m));
        x = NComplex(n, dom, x.lo(), std::move(dims2), std::move(diffs2));
    }
    return x;
}

NComplex random_complex(Rng& rng, const ComplexOptions& opts) {
    int n = opts.allowed_n[static_cast<std::size_t>(rng.in(0, static_cast<int>(opts.allowed_n.size()) - 1))];
    const CoefficientDomain& dom =
        opts.domains[static_cast<std::size_t>(rng.in(0, static_cast<int>(opts.domains.size()) - 1))];
    int max_dim = n >= 4 ? std::min(opts.max_dim, 2) : opts.max_dim;
    return random_complex_with(rng, n, dom, max_dim, n + opts.max_extra_len);
}

ChainMap random_chain_map(Rng& rng, const NComplex& x, const NComplex& y) {
    std::vector<ChainMap> basis = hom_basis(x, y);
    ChainMap f = ChainMap::zero(x, y);
    for (const ChainMap& b : basis)
        f = f + b.scaled(random_entry(rng, x.domain()));
    return f;
}

Homotopy random_witness(Rng& rng, const NComplex& x, const NComplex& y) {
    Homotopy h = Homotopy::zero(x, y);
    for (int k : h.support()) {
        ExactMatrix w(x.domain(), y.dim_at(k - x.n() + 1), x.dim_at(k));
        for (std::size_t i = 0; i < w.rows(); ++i)
            for (std::size_t j = 0; j < w.cols(); ++j)
                w.set(i, j, random_entry(rng, x.domain()));
        h.set_witness(k, w);
    }
    return h;
}

NComplex random_contractible(Rng& rng, int n, const CoefficientDomain& dom) {
    NComplex x = NComplex::zero(n, dom);
    int pieces = rng.in(1, 3);
    for (int k = 0; k < pieces; ++k)
        x = direct_sum(x, disc(n, rng.in(-2, 2), n, static_cast<std::size_t>(rng.in(1, 2)), dom));
    return x;
}

NComplex random_exact_complex(Rng& rng, int n, const CoefficientDomain& dom, int depth) {
    // disc sums are exact; cones of maps between exact complexes stay exact
    NComplex x = random_contractible(rng, n, dom);
    for (int k = 0; k < depth; ++k) {
        NComplex y = random_contractible(rng, n, dom);
        if (rng.in(0, 1) == 0)
            x = cone(random_chain_map(rng, x, y)).complex;
        else
            x = cone(random_chain_map(rng, y, x)).complex;
    }
    return x;
}

} // namespace ncx
