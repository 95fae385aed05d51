#include "ncx/matrix.hpp"

#include <sstream>

namespace ncx {

ExactMatrix::ExactMatrix(CoefficientDomain dom, std::size_t rows, std::size_t cols)
    : dom_(std::move(dom)), rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {}

ExactMatrix::ExactMatrix(CoefficientDomain dom, std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : dom_(std::move(dom)), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_)
        throw DimensionMismatch("ExactMatrix: entry count " + std::to_string(a_.size()) + " != " +
                                std::to_string(rows_) + "x" + std::to_string(cols_));
    for (Rat& x : a_)
        x = dom_.canon(x);
}

ExactMatrix ExactMatrix::identity(const CoefficientDomain& dom, std::size_t n) {
    ExactMatrix m(dom, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.a_[i * n + i] = 1;
    return m;
}

ExactMatrix ExactMatrix::from_rows(const CoefficientDomain& dom,
                                   std::initializer_list<std::initializer_list<long>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<Rat> a;
    a.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c)
            throw DimensionMismatch("from_rows: ragged rows");
        for (long v : row)
            a.emplace_back(v);
    }
    return ExactMatrix(dom, r, c, std::move(a));
}

bool ExactMatrix::is_zero() const {
    for (const Rat& x : a_)
        if (x != 0)
            return false;
    return true;
}

bool ExactMatrix::is_identity() const {
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(dom_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.a_[j * rows_ + i] = at(i, j);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
    if (dom_ != rhs.dom_)
        throw DomainError("matrix product: domains " + dom_.name() + " and " + rhs.dom_.name() + " differ");
    if (cols_ != rhs.rows_)
        throw DimensionMismatch("matrix product: " + std::to_string(cols_) + " != " + std::to_string(rhs.rows_));
    ExactMatrix out(dom_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                if (rhs.at(k, j) == 0)
                    continue;
                out.a_[i * out.cols_ + j] += x * rhs.at(k, j);
            }
        }
    for (Rat& x : out.a_)
        x = dom_.canon(x);
    return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& rhs) const {
    if (dom_ != rhs.dom_ || rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("matrix sum: shape/domain mismatch");
    ExactMatrix out(dom_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        out.a_[i] = dom_.canon(a_[i] + rhs.a_[i]);
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& rhs) const {
    if (dom_ != rhs.dom_ || rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw DimensionMismatch("matrix difference: shape/domain mismatch");
    ExactMatrix out(dom_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        out.a_[i] = dom_.canon(a_[i] - rhs.a_[i]);
    return out;
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix out(dom_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        out.a_[i] = dom_.canon(-a_[i]);
    return out;
}

ExactMatrix ExactMatrix::scaled(const Rat& c) const {
    ExactMatrix out(dom_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        out.a_[i] = dom_.canon(a_[i] * c);
    return out;
}

bool ExactMatrix::operator==(const ExactMatrix& rhs) const {
    return dom_ == rhs.dom_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
}

ExactMatrix ExactMatrix::col_slice(std::size_t c0, std::size_t c1) const {
    if (c0 > c1 || c1 > cols_)
        throw DimensionMismatch("col_slice: bad range");
    ExactMatrix out(dom_, rows_, c1 - c0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = c0; j < c1; ++j)
            out.a_[i * out.cols_ + (j - c0)] = at(i, j);
    return out;
}

ExactMatrix ExactMatrix::row_slice(std::size_t r0, std::size_t r1) const {
    if (r0 > r1 || r1 > rows_)
        throw DimensionMismatch("row_slice: bad range");
    ExactMatrix out(dom_, r1 - r0, cols_);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.a_[(i - r0) * cols_ + j] = at(i, j);
    return out;
}

ExactMatrix ExactMatrix::hcat(const ExactMatrix& rhs) const {
    if (dom_ != rhs.dom_ || rows_ != rhs.rows_)
        throw DimensionMismatch("hcat: shape/domain mismatch");
    ExactMatrix out(dom_, rows_, cols_ + rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j)
            out.a_[i * out.cols_ + j] = at(i, j);
        for (std::size_t j = 0; j < rhs.cols_; ++j)
            out.a_[i * out.cols_ + cols_ + j] = rhs.at(i, j);
    }
    return out;
}

ExactMatrix ExactMatrix::vcat(const ExactMatrix& rhs) const {
    if (dom_ != rhs.dom_ || cols_ != rhs.cols_)
        throw DimensionMismatch("vcat: shape/domain mismatch");
    ExactMatrix out(dom_, rows_ + rhs.rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        out.a_[i] = a_[i];
    for (std::size_t i = 0; i < rhs.a_.size(); ++i)
        out.a_[rows_ * cols_ + i] = rhs.a_[i];
    return out;
}

ExactMatrix ExactMatrix::with_domain(const CoefficientDomain& dom) const {
    ExactMatrix out(dom, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        out.a_[i] = dom.canon(a_[i]);
    return out;
}

std::string ExactMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? " [" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

ExactMatrix kron(const ExactMatrix& l, const ExactMatrix& r) {
    if (l.domain() != r.domain())
        throw DomainError("kron: domain mismatch");
    ExactMatrix out(l.domain(), l.rows() * r.rows(), l.cols() * r.cols());
    for (std::size_t i = 0; i < l.rows(); ++i)
        for (std::size_t j = 0; j < l.cols(); ++j) {
            const Rat& x = l.at(i, j);
            if (x == 0)
                continue;
            for (std::size_t p = 0; p < r.rows(); ++p)
                for (std::size_t q = 0; q < r.cols(); ++q)
                    out.set(i * r.rows() + p, j * r.cols() + q, x * r.at(p, q));
        }
    return out;
}

ExactMatrix vec(const ExactMatrix& m) {
    ExactMatrix v(m.domain(), m.rows() * m.cols(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            v.set(i * m.cols() + j, 0, m.at(i, j));
    return v;
}

ExactMatrix unvec(const ExactMatrix& v, std::size_t rows, std::size_t cols) {
    if (v.cols() != 1 || v.rows() != rows * cols)
        throw DimensionMismatch("unvec: shape mismatch");
    ExactMatrix m(v.domain(), rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.set(i, j, v.at(i * cols + j, 0));
    return m;
}

BlockBuilder::BlockBuilder(CoefficientDomain dom, std::vector<std::size_t> row_dims, std::vector<std::size_t> col_dims)
    : dom_(dom), row_dims_(std::move(row_dims)), col_dims_(std::move(col_dims)), m_(dom, 0, 0) {
    std::size_t r = 0, c = 0;
    row_off_.reserve(row_dims_.size());
    col_off_.reserve(col_dims_.size());
    for (std::size_t d : row_dims_) {
        row_off_.push_back(r);
        r += d;
    }
    for (std::size_t d : col_dims_) {
        col_off_.push_back(c);
        c += d;
    }
    m_ = ExactMatrix(dom_, r, c);
}

void BlockBuilder::set(std::size_t bi, std::size_t bj, const ExactMatrix& block) {
    if (bi >= row_dims_.size() || bj >= col_dims_.size())
        throw DimensionMismatch("BlockBuilder::set: block index out of range");
    if (block.rows() != row_dims_[bi] || block.cols() != col_dims_[bj])
        throw DimensionMismatch("BlockBuilder::set: block shape mismatch");
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j)
            m_.set(row_off_[bi] + i, col_off_[bj] + j, block.at(i, j));
}

ExactMatrix BlockBuilder::build() const {
    return m_;
}

} // namespace ncx
