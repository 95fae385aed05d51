#include "ncx/ncomplex.hpp"

#include <algorithm>

namespace ncx {

NComplex::NComplex(int n, CoefficientDomain dom, int lo, std::vector<std::size_t> dims,
                   std::vector<ExactMatrix> diffs)
    : n_(n), dom_(std::move(dom)), lo_(lo), dims_(std::move(dims)), diffs_(std::move(diffs)) {
    if (n_ < 2)
        throw ShapeError("NComplex: N must be at least 2, got " + std::to_string(n_));
    if (!dims_.empty() && diffs_.size() + 1 != dims_.size())
        throw ShapeError("NComplex: expected " + std::to_string(dims_.size() - 1) + " differentials, got " +
                         std::to_string(diffs_.size()));
    for (std::size_t k = 0; k < diffs_.size(); ++k) {
        const ExactMatrix& d = diffs_[k];
        if (d.domain() != dom_)
            throw ShapeError("NComplex: differential at degree " + std::to_string(lo_ + static_cast<int>(k)) +
                             " has domain " + d.domain().name() + ", complex has " + dom_.name());
        if (d.rows() != dims_[k + 1] || d.cols() != dims_[k])
            throw ShapeError("NComplex: differential at degree " + std::to_string(lo_ + static_cast<int>(k)) +
                             " has shape " + std::to_string(d.rows()) + "x" + std::to_string(d.cols()) +
                             ", expected " + std::to_string(dims_[k + 1]) + "x" + std::to_string(dims_[k]));
    }
    // trim zero-dimensional boundary degrees so the support is tight
    while (!dims_.empty() && dims_.front() == 0) {
        dims_.erase(dims_.begin());
        if (!diffs_.empty())
            diffs_.erase(diffs_.begin());
        ++lo_;
    }
    while (!dims_.empty() && dims_.back() == 0) {
        dims_.pop_back();
        if (!diffs_.empty())
            diffs_.pop_back();
    }
    if (dims_.empty()) {
        lo_ = 0;
        diffs_.clear();
    }
}

NComplex NComplex::zero(int n, const CoefficientDomain& dom) {
    return NComplex(n, dom, 0, {}, {});
}

std::size_t NComplex::dim_at(int i) const {
    if (i < lo_ || i > hi())
        return 0;
    return dims_[static_cast<std::size_t>(i - lo_)];
}

ExactMatrix NComplex::diff_at(int i) const {
    if (i >= lo_ && i < hi())
        return diffs_[static_cast<std::size_t>(i - lo_)];
    return ExactMatrix(dom_, dim_at(i + 1), dim_at(i));
}

bool NComplex::operator==(const NComplex& rhs) const {
    return n_ == rhs.n_ && dom_ == rhs.dom_ && lo_ == rhs.lo_ && dims_ == rhs.dims_ && diffs_ == rhs.diffs_;
}

// ---------------------------------------------------------------------------

ChainMap::ChainMap(NComplex source, NComplex target, std::vector<std::pair<int, ExactMatrix>> components)
    : src_(std::move(source)), tgt_(std::move(target)), lo_(0) {
    if (src_.n() != tgt_.n())
        throw ShapeError("ChainMap: N mismatch");
    if (src_.domain() != tgt_.domain())
        throw ShapeError("ChainMap: domain mismatch");
    lo_ = std::max(src_.lo(), tgt_.lo());
    int hi = std::min(src_.hi(), tgt_.hi());
    if (hi >= lo_) {
        comps_.reserve(static_cast<std::size_t>(hi - lo_ + 1));
        for (int i = lo_; i <= hi; ++i)
            comps_.emplace_back(src_.domain(), tgt_.dim_at(i), src_.dim_at(i));
    }
    for (auto& [deg, m] : components)
        set_component(deg, m);
}

ChainMap ChainMap::zero(const NComplex& source, const NComplex& target) {
    return ChainMap(source, target, {});
}

ChainMap ChainMap::identity(const NComplex& x) {
    ChainMap f(x, x, {});
    for (int i = x.lo(); i <= x.hi(); ++i)
        f.set_component(i, ExactMatrix::identity(x.domain(), x.dim_at(i)));
    return f;
}

ExactMatrix ChainMap::component_at(int i) const {
    int idx = i - lo_;
    if (idx >= 0 && idx < static_cast<int>(comps_.size()))
        return comps_[static_cast<std::size_t>(idx)];
    return ExactMatrix(src_.domain(), tgt_.dim_at(i), src_.dim_at(i));
}

void ChainMap::set_component(int i, const ExactMatrix& m) {
    if (m.rows() != tgt_.dim_at(i) || m.cols() != src_.dim_at(i))
        throw ShapeError("ChainMap: component at degree " + std::to_string(i) + " has shape " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
                         std::to_string(tgt_.dim_at(i)) + "x" + std::to_string(src_.dim_at(i)));
    if (m.domain() != src_.domain())
        throw ShapeError("ChainMap: component domain mismatch at degree " + std::to_string(i));
    int idx = i - lo_;
    if (idx >= 0 && idx < static_cast<int>(comps_.size())) {
        comps_[static_cast<std::size_t>(idx)] = m;
    } else if (!m.is_zero()) {
        throw ShapeError("ChainMap: nonzero component outside the common support at degree " + std::to_string(i));
    }
}

bool ChainMap::commutes() const {
    int a = std::min(src_.lo(), tgt_.lo()) - 1;
    int b = std::max(src_.hi(), tgt_.hi());
    for (int i = a; i <= b; ++i) {
        if (src_.dim_at(i) == 0 || tgt_.dim_at(i + 1) == 0)
            continue;
        if (tgt_.diff_at(i) * component_at(i) != component_at(i + 1) * src_.diff_at(i))
            return false;
    }
    return true;
}

bool ChainMap::is_zero() const {
    for (const ExactMatrix& m : comps_)
        if (!m.is_zero())
            return false;
    return true;
}

ChainMap ChainMap::operator+(const ChainMap& rhs) const {
    if (src_ != rhs.src_ || tgt_ != rhs.tgt_)
        throw ShapeError("ChainMap sum: endpoint mismatch");
    ChainMap out(src_, tgt_, {});
    for (std::size_t k = 0; k < comps_.size(); ++k)
        out.comps_[k] = comps_[k] + rhs.comps_[k];
    return out;
}

ChainMap ChainMap::operator-(const ChainMap& rhs) const {
    if (src_ != rhs.src_ || tgt_ != rhs.tgt_)
        throw ShapeError("ChainMap difference: endpoint mismatch");
    ChainMap out(src_, tgt_, {});
    for (std::size_t k = 0; k < comps_.size(); ++k)
        out.comps_[k] = comps_[k] - rhs.comps_[k];
    return out;
}

ChainMap ChainMap::scaled(const Rat& c) const {
    ChainMap out(src_, tgt_, {});
    for (std::size_t k = 0; k < comps_.size(); ++k)
        out.comps_[k] = comps_[k].scaled(c);
    return out;
}

bool ChainMap::operator==(const ChainMap& rhs) const {
    if (src_ != rhs.src_ || tgt_ != rhs.tgt_)
        return false;
    int a = std::min(lo_, rhs.lo_);
    int b = std::max(lo_ + static_cast<int>(comps_.size()), rhs.lo_ + static_cast<int>(rhs.comps_.size()));
    for (int i = a; i < b; ++i)
        if (component_at(i) != rhs.component_at(i))
            return false;
    return true;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (g.source() != f.target())
        throw ShapeError("compose: endpoints do not match");
    ChainMap out(f.source(), g.target(), {});
    int a = std::max(f.source().lo(), g.target().lo());
    int b = std::min(f.source().hi(), g.target().hi());
    for (int i = a; i <= b; ++i)
        out.set_component(i, g.component_at(i) * f.component_at(i));
    return out;
}

// ---------------------------------------------------------------------------

std::optional<int> first_nilpotency_failure(const NComplex& x) {
    for (int i = x.lo(); i + x.n() <= x.hi(); ++i)
        if (!composite(x, i, x.n()).is_zero())
            return i;
    return std::nullopt;
}

bool validate(const NComplex& x) {
    return !first_nilpotency_failure(x).has_value();
}

ExactMatrix composite(const NComplex& x, int i, int r) {
    if (r < 0 || r > x.n())
        throw AmplitudeError("composite: amplitude " + std::to_string(r) + " outside [0, " + std::to_string(x.n()) +
                             "]");
    ExactMatrix m = ExactMatrix::identity(x.domain(), x.dim_at(i));
    for (int k = 0; k < r; ++k)
        m = x.diff_at(i + k) * m;
    return m;
}

ExactMatrix cycles(const NComplex& x, int i, int r) {
    if (r < 1 || r > x.n())
        throw AmplitudeError("cycles: amplitude " + std::to_string(r) + " outside [1, " + std::to_string(x.n()) + "]");
    return kernel_basis(composite(x, i, r));
}

ExactMatrix boundaries(const NComplex& x, int i, int r) {
    if (r < 1 || r > x.n())
        throw AmplitudeError("boundaries: amplitude " + std::to_string(r) + " outside [1, " + std::to_string(x.n()) +
                             "]");
    return composite(x, i - r, r);
}

SubquotientInvariants cokernel_presentation(const NComplex& x, int i, int r) {
    ExactMatrix ambient = ExactMatrix::identity(x.domain(), x.dim_at(i));
    return subquotient_invariants(ambient, boundaries(x, i, r));
}

AmplitudeHomology homology(const NComplex& x, int i, int r) {
    if (r < 1 || r >= x.n())
        throw AmplitudeError("homology: amplitude " + std::to_string(r) + " outside [1, " + std::to_string(x.n() - 1) +
                             "]");
    SubquotientInvariants q = subquotient_invariants(cycles(x, i, r), boundaries(x, i, x.n() - r));
    AmplitudeHomology h;
    h.degree = i;
    h.amplitude = r;
    h.free_rank = q.free_rank;
    h.torsion = std::move(q.torsion);
    return h;
}

std::optional<std::pair<int, int>> first_inexactness(const NComplex& x, ExactnessMode mode) {
    if (mode.single_r && (*mode.single_r < 1 || *mode.single_r >= x.n()))
        throw AmplitudeError("is_N_exact: amplitude " + std::to_string(*mode.single_r) + " outside [1, " +
                             std::to_string(x.n() - 1) + "]");
    for (int i = x.lo(); i <= x.hi(); ++i) {
        if (mode.single_r) {
            if (!homology(x, i, *mode.single_r).is_zero())
                return std::make_pair(i, *mode.single_r);
        } else {
            for (int r = 1; r < x.n(); ++r)
                if (!homology(x, i, r).is_zero())
                    return std::make_pair(i, r);
        }
    }
    return std::nullopt;
}

bool is_N_exact(const NComplex& x, ExactnessMode mode) {
    return !first_inexactness(x, mode).has_value();
}

NComplex disc(int n, int top, int amplitude, std::size_t m, const CoefficientDomain& dom) {
    if (amplitude < 1 || amplitude > n)
        throw AmplitudeError("disc: amplitude " + std::to_string(amplitude) + " outside [1, " + std::to_string(n) +
                             "]");
    std::vector<std::size_t> dims(static_cast<std::size_t>(amplitude), m);
    std::vector<ExactMatrix> diffs(static_cast<std::size_t>(amplitude - 1), ExactMatrix::identity(dom, m));
    return NComplex(n, dom, top - amplitude + 1, std::move(dims), std::move(diffs));
}

NComplex direct_sum(const NComplex& x, const NComplex& y) {
    if (x.n() != y.n() || x.domain() != y.domain())
        throw ShapeError("direct_sum: N/domain mismatch");
    if (x.is_zero_complex())
        return y;
    if (y.is_zero_complex())
        return x;
    int lo = std::min(x.lo(), y.lo());
    int hi = std::max(x.hi(), y.hi());
    std::vector<std::size_t> dims;
    std::vector<ExactMatrix> diffs;
    for (int i = lo; i <= hi; ++i)
        dims.push_back(x.dim_at(i) + y.dim_at(i));
    for (int i = lo; i < hi; ++i) {
        BlockBuilder b(x.domain(), {x.dim_at(i + 1), y.dim_at(i + 1)}, {x.dim_at(i), y.dim_at(i)});
        b.set(0, 0, x.diff_at(i));
        b.set(1, 1, y.diff_at(i));
        diffs.push_back(b.build());
    }
    return NComplex(x.n(), x.domain(), lo, std::move(dims), std::move(diffs));
}

ChainMap sum_injection(const NComplex& x, const NComplex& y, int which) {
    NComplex s = direct_sum(x, y);
    const NComplex& part = which == 0 ? x : y;
    ChainMap f(part, s, {});
    for (int i = part.lo(); i <= part.hi(); ++i) {
        BlockBuilder b(x.domain(), {x.dim_at(i), y.dim_at(i)}, {part.dim_at(i)});
        b.set(static_cast<std::size_t>(which), 0, ExactMatrix::identity(x.domain(), part.dim_at(i)));
        f.set_component(i, b.build());
    }
    return f;
}

ChainMap sum_projection(const NComplex& x, const NComplex& y, int which) {
    NComplex s = direct_sum(x, y);
    const NComplex& part = which == 0 ? x : y;
    ChainMap f(s, part, {});
    for (int i = part.lo(); i <= part.hi(); ++i) {
        BlockBuilder b(x.domain(), {part.dim_at(i)}, {x.dim_at(i), y.dim_at(i)});
        b.set(0, static_cast<std::size_t>(which), ExactMatrix::identity(x.domain(), part.dim_at(i)));
        f.set_component(i, b.build());
    }
    return f;
}

} // namespace ncx
