#include "ncx/homotopy.hpp"

#include <algorithm>
#include <map>

#include "ncx/linear_system.hpp"

namespace ncx {

namespace {

int witness_lo(const NComplex& x, const NComplex& y) {
    return std::max(x.lo(), y.lo() + x.n() - 1);
}
int witness_hi(const NComplex& x, const NComplex& y) {
    return std::min(x.hi(), y.hi() + x.n() - 1);
}

} // namespace

Homotopy::Homotopy(NComplex source, NComplex target, std::vector<std::pair<int, ExactMatrix>> witnesses)
    : src_(std::move(source)), tgt_(std::move(target)), lo_(0) {
    if (src_.n() != tgt_.n() || src_.domain() != tgt_.domain())
        throw ShapeError("Homotopy: N/domain mismatch");
    lo_ = witness_lo(src_, tgt_);
    int hi = witness_hi(src_, tgt_);
    for (int i = lo_; i <= hi; ++i)
        s_.emplace_back(src_.domain(), tgt_.dim_at(i - src_.n() + 1), src_.dim_at(i));
    for (auto& [deg, m] : witnesses)
        set_witness(deg, m);
}

Homotopy Homotopy::zero(const NComplex& source, const NComplex& target) {
    return Homotopy(source, target, {});
}

ExactMatrix Homotopy::witness_at(int i) const {
    int idx = i - lo_;
    if (idx >= 0 && idx < static_cast<int>(s_.size()))
        return s_[static_cast<std::size_t>(idx)];
    return ExactMatrix(src_.domain(), tgt_.dim_at(i - src_.n() + 1), src_.dim_at(i));
}

void Homotopy::set_witness(int i, const ExactMatrix& m) {
    std::size_t r = tgt_.dim_at(i - src_.n() + 1);
    std::size_t c = src_.dim_at(i);
    if (m.rows() != r || m.cols() != c)
        throw ShapeError("Homotopy: witness at degree " + std::to_string(i) + " has shape " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                         std::to_string(r) + "x" + std::to_string(c));
    int idx = i - lo_;
    if (idx >= 0 && idx < static_cast<int>(s_.size()))
        s_[static_cast<std::size_t>(idx)] = m;
    else if (!m.is_zero())
        throw ShapeError("Homotopy: nonzero witness outside the support window at degree " + std::to_string(i));
}

std::vector<int> Homotopy::support() const {
    std::vector<int> out;
    for (int i = lo_; i < lo_ + static_cast<int>(s_.size()); ++i)
        if (src_.dim_at(i) > 0 && tgt_.dim_at(i - src_.n() + 1) > 0)
            out.push_back(i);
    return out;
}

ChainMap Homotopy::realize() const {
    const int n = src_.n();
    ChainMap f = ChainMap::zero(src_, tgt_);
    int a = std::max(src_.lo(), tgt_.lo());
    int b = std::min(src_.hi(), tgt_.hi());
    for (int i = a; i <= b; ++i) {
        if (src_.dim_at(i) == 0 || tgt_.dim_at(i) == 0)
            continue;
        ExactMatrix acc(src_.domain(), tgt_.dim_at(i), src_.dim_at(i));
        for (int j = 0; j < n; ++j) {
            // d_Y^{(N-1-j)} s^{i+j} d_X^{(j)}
            ExactMatrix w = witness_at(i + j);
            if (w.rows() == 0 || w.cols() == 0)
                continue;
            acc = acc + composite(tgt_, i - (n - 1 - j), n - 1 - j) * w * composite(src_, i, j);
        }
        f.set_component(i, acc);
    }
    return f;
}

std::optional<Homotopy> null_homotopy(const ChainMap& f) {
    const NComplex& x = f.source();
    const NComplex& y = f.target();
    const int n = x.n();

    MapVarSystem sys(x.domain());
    std::map<int, int> var_of;
    for (int k = witness_lo(x, y); k <= witness_hi(x, y); ++k) {
        std::size_t r = y.dim_at(k - n + 1), c = x.dim_at(k);
        if (r > 0 && c > 0)
            var_of[k] = sys.add_var(r, c);
    }

    int a = std::max(x.lo(), y.lo());
    int b = std::min(x.hi(), y.hi());
    std::vector<std::pair<int, int>> eq_of; // (degree, eq id)
    for (int i = a; i <= b; ++i) {
        if (x.dim_at(i) == 0 || y.dim_at(i) == 0)
            continue;
        int eq = sys.add_equation(y.dim_at(i), x.dim_at(i));
        sys.add_rhs(eq, f.component_at(i));
        for (int j = 0; j < n; ++j) {
            auto it = var_of.find(i + j);
            if (it == var_of.end())
                continue;
            sys.add_term(eq, it->second, composite(y, i - (n - 1 - j), n - 1 - j), composite(x, i, j));
        }
    }

    std::optional<std::vector<ExactMatrix>> sol = sys.solve_any();
    if (!sol)
        return std::nullopt;
    Homotopy h = Homotopy::zero(x, y);
    for (const auto& [k, var] : var_of)
        h.set_witness(k, (*sol)[static_cast<std::size_t>(var)]);
    return h;
}

bool homotopic(const ChainMap& f, const ChainMap& g) {
    if (f.source() != g.source() || f.target() != g.target())
        throw ShapeError("homotopic: endpoint mismatch");
    return null_homotopy(f - g).has_value();
}

namespace {

// Commutation system for chain maps X -> Y; vars indexed by degree.
struct HomSystem {
    MapVarSystem sys;
    std::map<int, int> var_of;

    HomSystem(const NComplex& x, const NComplex& y) : sys(x.domain()) {
        int a = std::max(x.lo(), y.lo());
        int b = std::min(x.hi(), y.hi());
        for (int i = a; i <= b; ++i)
            if (x.dim_at(i) > 0 && y.dim_at(i) > 0)
                var_of[i] = sys.add_var(y.dim_at(i), x.dim_at(i));
        for (int i = y.lo() - 1; i <= x.hi(); ++i) {
            if (x.dim_at(i) == 0 || y.dim_at(i + 1) == 0)
                continue;
            int eq = sys.add_equation(y.dim_at(i + 1), x.dim_at(i));
            if (auto it = var_of.find(i); it != var_of.end())
                sys.add_term(eq, it->second, y.diff_at(i), ExactMatrix::identity(x.domain(), x.dim_at(i)));
            if (auto it = var_of.find(i + 1); it != var_of.end())
                sys.add_term(eq, it->second, -ExactMatrix::identity(x.domain(), y.dim_at(i + 1)), x.diff_at(i));
        }
    }
};

} // namespace

HomKSpace hom_k(const NComplex& x, const NComplex& y) {
    if (!x.domain().is_field())
        throw DomainError("hom_k: field domain required (integer hom-groups are not computed)");
    if (x.n() != y.n() || x.domain() != y.domain())
        throw ShapeError("hom_k: N/domain mismatch");

    HomSystem hs(x, y);
    HomKSpace out;
    out.dim_chain_maps = hs.sys.var_entries() - rank(hs.sys.op_matrix());

    // realization operator from witness families into degreewise maps,
    // indexed like the chain-map variables above
    const int n = x.n();
    MapVarSystem rsys(x.domain());
    std::map<int, int> wvar;
    for (int k = witness_lo(x, y); k <= witness_hi(x, y); ++k) {
        std::size_t r = y.dim_at(k - n + 1), c = x.dim_at(k);
        if (r > 0 && c > 0)
            wvar[k] = rsys.add_var(r, c);
    }
    for (const auto& [i, var] : hs.var_of) {
        static_cast<void>(var);
        int eq = rsys.add_equation(y.dim_at(i), x.dim_at(i));
        for (int j = 0; j < n; ++j) {
            auto it = wvar.find(i + j);
            if (it == wvar.end())
                continue;
            rsys.add_term(eq, it->second, composite(y, i - (n - 1 - j), n - 1 - j), composite(x, i, j));
        }
    }
    out.dim_null_homotopic = rank(rsys.op_matrix());
    out.dim_homotopy_classes = out.dim_chain_maps - out.dim_null_homotopic;
    return out;
}

std::vector<ChainMap> hom_basis(const NComplex& x, const NComplex& y) {
    if (!x.domain().is_field())
        throw DomainError("hom_basis: field domain required");
    HomSystem hs(x, y);
    std::vector<ChainMap> out;
    for (const std::vector<ExactMatrix>& assignment : hs.sys.solution_basis()) {
        ChainMap f = ChainMap::zero(x, y);
        for (const auto& [deg, var] : hs.var_of)
            f.set_component(deg, assignment[static_cast<std::size_t>(var)]);
        out.push_back(std::move(f));
    }
    return out;
}

bool is_contractible(const NComplex& x) {
    return null_homotopy(ChainMap::identity(x)).has_value();
}

std::optional<ChainMap> homotopy_inverse(const ChainMap& h) {
    const NComplex& x = h.source();
    const NComplex& y = h.target();
    const int n = x.n();
    const CoefficientDomain& dom = x.domain();

    MapVarSystem sys(dom);
    std::map<int, int> g_of, s_of, t_of; // g : Y -> X, s on X, t on Y
    int a = std::max(x.lo(), y.lo());
    int b = std::min(x.hi(), y.hi());
    for (int i = a; i <= b; ++i)
        if (x.dim_at(i) > 0 && y.dim_at(i) > 0)
            g_of[i] = sys.add_var(x.dim_at(i), y.dim_at(i));
    for (int k = witness_lo(x, x); k <= witness_hi(x, x); ++k)
        if (x.dim_at(k) > 0 && x.dim_at(k - n + 1) > 0)
            s_of[k] = sys.add_var(x.dim_at(k - n + 1), x.dim_at(k));
    for (int k = witness_lo(y, y); k <= witness_hi(y, y); ++k)
        if (y.dim_at(k) > 0 && y.dim_at(k - n + 1) > 0)
            t_of[k] = sys.add_var(y.dim_at(k - n + 1), y.dim_at(k));

    // g is a chain map
    for (int i = x.lo() - 1; i <= y.hi(); ++i) {
        if (y.dim_at(i) == 0 || x.dim_at(i + 1) == 0)
            continue;
        int eq = sys.add_equation(x.dim_at(i + 1), y.dim_at(i));
        if (auto it = g_of.find(i); it != g_of.end())
            sys.add_term(eq, it->second, x.diff_at(i), ExactMatrix::identity(dom, y.dim_at(i)));
        if (auto it = g_of.find(i + 1); it != g_of.end())
            sys.add_term(eq, it->second, -ExactMatrix::identity(dom, x.dim_at(i + 1)), y.diff_at(i));
    }
    // g h - 1_X is realized by s
    for (int i = x.lo(); i <= x.hi(); ++i) {
        if (x.dim_at(i) == 0)
            continue;
        int eq = sys.add_equation(x.dim_at(i), x.dim_at(i));
        sys.add_rhs(eq, ExactMatrix::identity(dom, x.dim_at(i)));
        if (auto it = g_of.find(i); it != g_of.end())
            sys.add_term(eq, it->second, ExactMatrix::identity(dom, x.dim_at(i)), h.component_at(i));
        for (int j = 0; j < n; ++j)
            if (auto it = s_of.find(i + j); it != s_of.end())
                sys.add_term(eq, it->second, -composite(x, i - (n - 1 - j), n - 1 - j), composite(x, i, j));
    }
    // h g - 1_Y is realized by t
    for (int i = y.lo(); i <= y.hi(); ++i) {
        if (y.dim_at(i) == 0)
            continue;
        int eq = sys.add_equation(y.dim_at(i), y.dim_at(i));
        sys.add_rhs(eq, ExactMatrix::identity(dom, y.dim_at(i)));
        if (auto it = g_of.find(i); it != g_of.end())
            sys.add_term(eq, it->second, h.component_at(i), ExactMatrix::identity(dom, y.dim_at(i)));
        for (int j = 0; j < n; ++j)
            if (auto it = t_of.find(i + j); it != t_of.end())
                sys.add_term(eq, it->second, -composite(y, i - (n - 1 - j), n - 1 - j), composite(y, i, j));
    }

    std::optional<std::vector<ExactMatrix>> sol = sys.solve_any();
    if (!sol)
        return std::nullopt;
    ChainMap g = ChainMap::zero(y, x);
    for (const auto& [deg, var] : g_of)
        g.set_component(deg, (*sol)[static_cast<std::size_t>(var)]);
    return g;
}

} // namespace ncx
