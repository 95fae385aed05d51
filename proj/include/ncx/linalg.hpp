#pragma once

#include <optional>
#include <vector>

#include "ncx/matrix.hpp"

namespace ncx {

/// Exact rank. Over the integers this is the rank over Q.
std::size_t rank(const ExactMatrix& a);

/// Basis of {v : a v = 0} as matrix columns. Over a field the column count is
/// cols - rank. Over the integers the columns are a basis of the full kernel
/// subgroup (which is saturated), computed through the Smith normal form.
ExactMatrix kernel_basis(const ExactMatrix& a);

/// Some x with a x = b, or nullopt when the system is unsolvable. Over the
/// integers solvability is decided exactly (Smith normal form); the returned
/// solution is integral.
std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b);

/// Determinant of a square matrix (fraction-free over Z, exact everywhere).
Rat det(const ExactMatrix& a);

/// U a V = d with U, V unimodular and d diagonal with the divisibility chain
/// d1 | d2 | ... , entries nonnegative, trailing zeros last.
struct SmithForm {
    ExactMatrix u, d, v;
    std::vector<Int> invariant_factors; // nonzero diagonal entries, in order
};

/// Integer matrices only; throws DomainError otherwise.
SmithForm smith_normal_form(const ExactMatrix& a);

/// Structure invariants of span(gens_big) / span(gens_small).
struct SubquotientInvariants {
    std::size_t free_rank = 0;
    std::vector<Int> torsion; // invariant factors > 1
    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const SubquotientInvariants&) const = default;
};

/// The generator columns live in a common ambient free module; gens_small
/// must generate a subobject of span(gens_big) (throws NotASubobject
/// otherwise). Over a field the result is a dimension difference; over the
/// integers it is the invariant-factor decomposition of the quotient group.
SubquotientInvariants subquotient_invariants(const ExactMatrix& gens_big, const ExactMatrix& gens_small);

namespace detail {

/// Reduced row echelon form over a field; returns pivot columns.
struct Rref {
    ExactMatrix r;
    std::vector<std::size_t> pivots;
};
Rref rref(const ExactMatrix& a);

} // namespace detail

} // namespace ncx
