#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "ncx/domain.hpp"
#include "ncx/error.hpp"

namespace ncx {

/// Dense matrix over a CoefficientDomain. Entries are stored row-major and
/// kept canonical for the domain. Zero-sized shapes (0xN, Nx0) are legal and
/// behave as expected under all operations.
class ExactMatrix {
public:
    ExactMatrix(CoefficientDomain dom, std::size_t rows, std::size_t cols);
    ExactMatrix(CoefficientDomain dom, std::size_t rows, std::size_t cols, std::vector<Rat> entries);

    static ExactMatrix identity(const CoefficientDomain& dom, std::size_t n);
    static ExactMatrix from_rows(const CoefficientDomain& dom,
                                 std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const CoefficientDomain& domain() const { return dom_; }

    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, const Rat& v) { a_[i * cols_ + j] = dom_.canon(v); }

    bool is_zero() const;
    bool is_identity() const;

    ExactMatrix transpose() const;
    ExactMatrix operator*(const ExactMatrix& rhs) const;
    ExactMatrix operator+(const ExactMatrix& rhs) const;
    ExactMatrix operator-(const ExactMatrix& rhs) const;
    ExactMatrix operator-() const;
    ExactMatrix scaled(const Rat& c) const;

    bool operator==(const ExactMatrix& rhs) const;
    bool operator!=(const ExactMatrix& rhs) const { return !(*this == rhs); }

    /// Columns [c0, c1).
    ExactMatrix col_slice(std::size_t c0, std::size_t c1) const;
    /// Rows [r0, r1).
    ExactMatrix row_slice(std::size_t r0, std::size_t r1) const;
    /// Side-by-side concatenation [*this | rhs].
    ExactMatrix hcat(const ExactMatrix& rhs) const;
    /// Vertical concatenation.
    ExactMatrix vcat(const ExactMatrix& rhs) const;

    /// Reinterpret the same entries over another domain (entries are
    /// re-canonicalized; used for integer matrices viewed over Q).
    ExactMatrix with_domain(const CoefficientDomain& dom) const;

    std::string to_string() const;

private:
    CoefficientDomain dom_;
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

/// Kronecker product. With row-major vectorization, vec(L * X * R) =
/// kron(L, R.transpose()) * vec(X); this is the workhorse for assembling
/// linear systems whose unknowns are matrices.
ExactMatrix kron(const ExactMatrix& l, const ExactMatrix& r);

/// Row-major vectorization as a column vector.
ExactMatrix vec(const ExactMatrix& m);

/// Inverse of vec: reshape a column vector into rows x cols, row-major.
ExactMatrix unvec(const ExactMatrix& v, std::size_t rows, std::size_t cols);

/// Assembles a matrix from a grid of blocks with prescribed block dimensions.
/// Unset blocks are zero.
class BlockBuilder {
public:
    BlockBuilder(CoefficientDomain dom, std::vector<std::size_t> row_dims, std::vector<std::size_t> col_dims);

    void set(std::size_t bi, std::size_t bj, const ExactMatrix& block);
    ExactMatrix build() const;

    std::size_t row_offset(std::size_t bi) const { return row_off_[bi]; }
    std::size_t col_offset(std::size_t bj) const { return col_off_[bj]; }

private:
    CoefficientDomain dom_;
    std::vector<std::size_t> row_dims_, col_dims_;
    std::vector<std::size_t> row_off_, col_off_;
    ExactMatrix m_;
};

} // namespace ncx
