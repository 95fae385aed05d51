#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ncx/linalg.hpp"
#include "ncx/matrix.hpp"

namespace ncx {

/// Linear systems whose unknowns are families of matrices and whose equations
/// are sums of two-sided products  sum_k  L_k * X_{v_k} * R_k  =  RHS.
/// Variables and equations are laid out in declaration order with row-major
/// entry order inside each block, so assembled systems (and therefore solver
/// outputs) are deterministic.
class MapVarSystem {
public:
    explicit MapVarSystem(CoefficientDomain dom);

    /// Declares an unknown rows x cols matrix; zero-sized shapes are allowed
    /// and contribute no columns.
    int add_var(std::size_t rows, std::size_t cols);

    /// Declares an equation block of the given shape with zero right side.
    int add_equation(std::size_t rows, std::size_t cols);

    /// Adds L * X_var * R to an equation; shapes must match the block.
    void add_term(int eq, int var, const ExactMatrix& l, const ExactMatrix& r);

    /// Adds M to the right side of an equation.
    void add_rhs(int eq, const ExactMatrix& m);

    std::size_t var_entries() const { return var_cols_; }
    std::size_t equation_entries() const { return eq_rows_; }

    /// The assembled operator (equation entries x variable entries).
    ExactMatrix op_matrix() const;
    ExactMatrix rhs_vector() const;

    /// One solution, or nullopt when inconsistent; result.at(v) is X_v.
    std::optional<std::vector<ExactMatrix>> solve_any() const;

    /// Dimension of the homogeneous solution space.
    std::size_t solution_dim() const;

    /// Basis of the homogeneous solution space, one variable assignment per
    /// basis vector.
    std::vector<std::vector<ExactMatrix>> solution_basis() const;

    /// Unpacks a variable-entry column vector into matrices.
    std::vector<ExactMatrix> unpack(const ExactMatrix& colvec) const;

private:
    struct Shape {
        std::size_t rows, cols, offset;
    };

    CoefficientDomain dom_;
    std::vector<Shape> vars_, eqs_;
    std::size_t var_cols_ = 0, eq_rows_ = 0;
    // (eq, var, L, R) contributions and per-equation right sides
    struct Term {
        int eq, var;
        ExactMatrix l, r;
    };
    std::vector<Term> terms_;
    std::map<int, ExactMatrix> rhs_;
};

} // namespace ncx
