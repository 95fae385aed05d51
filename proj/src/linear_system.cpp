#include "ncx/linear_system.hpp"

namespace ncx {

MapVarSystem::MapVarSystem(CoefficientDomain dom) : dom_(std::move(dom)) {}

int MapVarSystem::add_var(std::size_t rows, std::size_t cols) {
    vars_.push_back({rows, cols, var_cols_});
    var_cols_ += rows * cols;
    return static_cast<int>(vars_.size()) - 1;
}

int MapVarSystem::add_equation(std::size_t rows, std::size_t cols) {
    eqs_.push_back({rows, cols, eq_rows_});
    eq_rows_ += rows * cols;
    return static_cast<int>(eqs_.size()) - 1;
}

void MapVarSystem::add_term(int eq, int var, const ExactMatrix& l, const ExactMatrix& r) {
    const Shape& e = eqs_[static_cast<std::size_t>(eq)];
    const Shape& v = vars_[static_cast<std::size_t>(var)];
    if (l.rows() != e.rows || r.cols() != e.cols || l.cols() != v.rows || r.rows() != v.cols)
        throw DimensionMismatch("MapVarSystem::add_term: factor shapes do not match equation/variable blocks");
    if (e.rows * e.cols == 0 || v.rows * v.cols == 0)
        return; // nothing to contribute
    terms_.push_back({eq, var, l, r});
}

void MapVarSystem::add_rhs(int eq, const ExactMatrix& m) {
    const Shape& e = eqs_[static_cast<std::size_t>(eq)];
    if (m.rows() != e.rows || m.cols() != e.cols)
        throw DimensionMismatch("MapVarSystem::add_rhs: shape mismatch");
    if (e.rows * e.cols == 0)
        return;
    auto it = rhs_.find(eq);
    if (it == rhs_.end())
        rhs_.emplace(eq, m);
    else
        it->second = it->second + m;
}

ExactMatrix MapVarSystem::op_matrix() const {
    ExactMatrix op(dom_, eq_rows_, var_cols_);
    for (const Term& t : terms_) {
        const Shape& e = eqs_[static_cast<std::size_t>(t.eq)];
        const Shape& v = vars_[static_cast<std::size_t>(t.var)];
        // row-major vec: vec(L X R) = kron(L, R^T) vec(X)
        ExactMatrix k = kron(t.l, t.r.transpose());
        for (std::size_t i = 0; i < k.rows(); ++i)
            for (std::size_t j = 0; j < k.cols(); ++j) {
                if (k.at(i, j) == 0)
                    continue;
                std::size_t row = e.offset + i;
                std::size_t col = v.offset + j;
                op.set(row, col, op.at(row, col) + k.at(i, j));
            }
    }
    return op;
}

ExactMatrix MapVarSystem::rhs_vector() const {
    ExactMatrix b(dom_, eq_rows_, 1);
    for (const auto& [eq, m] : rhs_) {
        const Shape& e = eqs_[static_cast<std::size_t>(eq)];
        for (std::size_t i = 0; i < e.rows; ++i)
            for (std::size_t j = 0; j < e.cols; ++j)
                b.set(e.offset + i * e.cols + j, 0, m.at(i, j));
    }
    return b;
}

std::vector<ExactMatrix> MapVarSystem::unpack(const ExactMatrix& colvec) const {
    std::vector<ExactMatrix> out;
    out.reserve(vars_.size());
    for (const Shape& v : vars_) {
        ExactMatrix m(dom_, v.rows, v.cols);
        for (std::size_t i = 0; i < v.rows; ++i)
            for (std::size_t j = 0; j < v.cols; ++j)
                m.set(i, j, colvec.at(v.offset + i * v.cols + j, 0));
        out.push_back(std::move(m));
    }
    return out;
}

std::optional<std::vector<ExactMatrix>> MapVarSystem::solve_any() const {
    std::optional<ExactMatrix> x = solve(op_matrix(), rhs_vector());
    if (!x)
        return std::nullopt;
    return unpack(*x);
}

std::size_t MapVarSystem::solution_dim() const {
    return var_cols_ - rank(op_matrix());
}

std::vector<std::vector<ExactMatrix>> MapVarSystem::solution_basis() const {
    ExactMatrix k = kernel_basis(op_matrix());
    std::vector<std::vector<ExactMatrix>> out;
    out.reserve(k.cols());
    for (std::size_t c = 0; c < k.cols(); ++c)
        out.push_back(unpack(k.col_slice(c, c + 1)));
    return out;
}

} // namespace ncx
