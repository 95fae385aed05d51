#include "ncx/classes.hpp"

#include "ncx/triangle.hpp"

namespace ncx {

namespace {

bool base_holds_on_subobject(BaseClass base, const ExactMatrix& gens) {
    switch (base) {
    case BaseClass::All:
        return true;
    case BaseClass::Free: {
        if (gens.domain().kind() != DomainKind::Integers)
            throw DomainError("class_membership: base class \"free\" requires integer coefficients");
        for (const Int& d : smith_normal_form(gens).invariant_factors)
            if (d != 1)
                return false;
        return true;
    }
    }
    return false;
}

bool degreewise_holds(const NComplex& x, BaseClass base) {
    for (int i = x.lo(); i <= x.hi(); ++i)
        if (!base_holds_on_subobject(base, ExactMatrix::identity(x.domain(), x.dim_at(i))))
            return false;
    return true;
}

} // namespace

bool class_membership(const NComplex& x, const ClassSpec& spec) {
    switch (spec.variant) {
    case ClassVariant::Degreewise:
        return degreewise_holds(x, spec.base);
    case ClassVariant::ExactTilde: {
        if (!is_N_exact(x))
            return false;
        for (int i = x.lo(); i <= x.hi(); ++i)
            for (int r = 1; r < x.n(); ++r)
                if (!base_holds_on_subobject(spec.base, cycles(x, i, r)))
                    return false;
        return true;
    }
    case ClassVariant::Ex:
        return degreewise_holds(x, spec.base) && is_N_exact(x);
    }
    return false;
}

std::size_t ext_dw_dim(const NComplex& y, const NComplex& x) {
    if (!y.domain().is_field())
        throw DomainError("ext_dw_dim: field domain required");
    return hom_k(y, suspension(x)).dim_homotopy_classes;
}

bool prop31_criterion(const NComplex& x) {
    if (!x.domain().is_field())
        throw DomainError("prop31_criterion: field domain required");
    const int n = x.n();
    const CoefficientDomain& dom = x.domain();

    for (int i = x.lo() - n; i <= x.hi() + n; ++i) {
        for (int r = 1; r < n; ++r) {
            // full disc ending at i+N-r and its bottom-aligned amplitude-r
            // quotient ending at i
            NComplex big = disc(n, i + n - r, n, 1, dom);
            NComplex small = disc(n, i, r, 1, dom);
            ChainMap epi(big, small, {});
            for (int m = small.lo(); m <= small.hi(); ++m)
                epi.set_component(m, ExactMatrix::identity(dom, 1));

            std::vector<ChainMap> to_small = hom_basis(x, small);
            if (to_small.empty())
                continue;
            std::vector<ChainMap> to_big = hom_basis(x, big);
            // rank of postcomposition with the epi, in coordinates of the
            // target hom space (stacked component vectors)
            std::vector<ExactMatrix> images;
            images.reserve(to_big.size());
            for (const ChainMap& g : to_big) {
                ChainMap h = compose(epi, g);
                ExactMatrix v(dom, 0, 1);
                for (int m = small.lo(); m <= small.hi(); ++m)
                    v = v.vcat(vec(h.component_at(m)));
                images.push_back(v);
            }
            std::size_t vec_len = 0;
            for (int m = small.lo(); m <= small.hi(); ++m)
                vec_len += small.dim_at(m) * x.dim_at(m);
            ExactMatrix image_mat(dom, vec_len, images.size());
            for (std::size_t c = 0; c < images.size(); ++c)
                for (std::size_t rr = 0; rr < vec_len; ++rr)
                    image_mat.set(rr, c, images[c].at(rr, 0));
            if (rank(image_mat) != to_small.size())
                return false;
        }
    }
    return true;
}

SpotTestReport orthogonality_spot_test(const NComplex& x, const std::vector<NComplex>& tests) {
    if (!x.domain().is_field())
        throw DomainError("orthogonality_spot_test: field domain required");
    SpotTestReport report;
    for (std::size_t k = 0; k < tests.size(); ++k) {
        const NComplex& t = tests[k];
        if (!is_N_exact(t))
            throw Error("orthogonality_spot_test: test complex " + std::to_string(k) +
                        " fails its declared class (not N-exact)");
        SpotTestEntry e;
        e.index = k;
        e.dim_homotopy_classes = hom_k(x, t).dim_homotopy_classes;
        if (e.dim_homotopy_classes != 0)
            report.pass = false;
        report.entries.push_back(e);
    }
    return report;
}

DiscExtReport disc_ext_checks(std::size_t m_dim, const NComplex& y, int deg, int r) {
    if (!y.domain().is_field())
        throw DomainError("disc_ext_checks: field domain required");
    const int n = y.n();
    if (r < 1 || r >= n)
        throw AmplitudeError("disc_ext_checks: amplitude outside [1, N-1]");
    DiscExtReport rep;
    rep.from_full_disc = ext_dw_dim(disc(n, deg + n - 1, n, m_dim, y.domain()), y);
    rep.to_full_disc = ext_dw_dim(y, disc(n, deg, n, m_dim, y.domain()));
    rep.y_exact = is_N_exact(y);
    if (rep.y_exact) {
        rep.from_amplitude_disc = ext_dw_dim(disc(n, deg + r - 1, r, m_dim, y.domain()), y);
        rep.to_amplitude_disc = ext_dw_dim(y, disc(n, deg, r, m_dim, y.domain()));
    }
    return rep;
}

} // namespace ncx
