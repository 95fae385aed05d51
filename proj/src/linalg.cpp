#include "ncx/linalg.hpp"

#include <algorithm>
#include <cstdint>

namespace ncx {

namespace {

// ---------------------------------------------------------------------------
// Fast path: dense RREF over F_p with machine words, for p < 2^30. All suite
// fields (F_2, F_3, F_5) take this route; the generic exact path below covers
// Q and large p.
// ---------------------------------------------------------------------------

bool fp_fast_eligible(const CoefficientDomain& dom) {
    return dom.kind() == DomainKind::PrimeField && dom.modulus() < (1 << 30);
}

struct FpMat {
    std::uint64_t p;
    std::size_t rows, cols;
    std::vector<std::uint64_t> a;

    std::uint64_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

std::uint64_t fp_inv(std::uint64_t x, std::uint64_t p) {
    // extended Euclid on signed words; p < 2^30 so no overflow
    std::int64_t t = 0, newt = 1, r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(x);
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0)
        t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

FpMat to_fp(const ExactMatrix& m) {
    FpMat f;
    f.p = m.domain().modulus().get_ui();
    f.rows = m.rows();
    f.cols = m.cols();
    f.a.resize(f.rows * f.cols);
    for (std::size_t i = 0; i < f.rows; ++i)
        for (std::size_t j = 0; j < f.cols; ++j)
            f.at(i, j) = m.at(i, j).get_num().get_ui();
    return f;
}

ExactMatrix from_fp(const FpMat& f, const CoefficientDomain& dom) {
    ExactMatrix m(dom, f.rows, f.cols);
    for (std::size_t i = 0; i < f.rows; ++i)
        for (std::size_t j = 0; j < f.cols; ++j)
            if (f.at(i, j) != 0)
                m.set(i, j, Rat(static_cast<unsigned long>(f.at(i, j))));
    return m;
}

std::vector<std::size_t> rref_fp(FpMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t piv = row;
        while (piv < m.rows && m.at(piv, col) == 0)
            ++piv;
        if (piv == m.rows)
            continue;
        if (piv != row)
            for (std::size_t j = col; j < m.cols; ++j)
                std::swap(m.at(piv, j), m.at(row, j));
        std::uint64_t inv = fp_inv(m.at(row, col), m.p);
        for (std::size_t j = col; j < m.cols; ++j)
            m.at(row, j) = m.at(row, j) * inv % m.p;
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row)
                continue;
            std::uint64_t c = m.at(i, col);
            if (c == 0)
                continue;
            std::uint64_t cneg = m.p - c;
            for (std::size_t j = col; j < m.cols; ++j)
                m.at(i, j) = (m.at(i, j) + cneg * m.at(row, j)) % m.p;
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// ---------------------------------------------------------------------------
// Generic exact RREF (Q and large prime fields).
// ---------------------------------------------------------------------------

std::vector<std::size_t> rref_generic(ExactMatrix& m) {
    const CoefficientDomain& dom = m.domain();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m.at(piv, col) == 0)
            ++piv;
        if (piv == m.rows())
            continue;
        if (piv != row)
            for (std::size_t j = col; j < m.cols(); ++j) {
                Rat t = m.at(piv, j);
                m.set(piv, j, m.at(row, j));
                m.set(row, j, t);
            }
        Rat inv = *dom.inverse(m.at(row, col));
        for (std::size_t j = col; j < m.cols(); ++j)
            m.set(row, j, m.at(row, j) * inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row)
                continue;
            Rat c = m.at(i, col);
            if (c == 0)
                continue;
            for (std::size_t j = col; j < m.cols(); ++j)
                m.set(i, j, m.at(i, j) - c * m.at(row, j));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

ExactMatrix as_rationals(const ExactMatrix& a) {
    return a.with_domain(CoefficientDomain::rationals());
}

// Columns of v indexed by `which`.
ExactMatrix pick_cols(const ExactMatrix& v, const std::vector<std::size_t>& which) {
    ExactMatrix out(v.domain(), v.rows(), which.size());
    for (std::size_t k = 0; k < which.size(); ++k)
        for (std::size_t i = 0; i < v.rows(); ++i)
            out.set(i, k, v.at(i, which[k]));
    return out;
}

} // namespace

namespace detail {

Rref rref(const ExactMatrix& a) {
    if (!a.domain().is_field())
        throw DomainError("rref: field domain required");
    if (fp_fast_eligible(a.domain())) {
        FpMat f = to_fp(a);
        std::vector<std::size_t> piv = rref_fp(f);
        return Rref{from_fp(f, a.domain()), std::move(piv)};
    }
    ExactMatrix m = a;
    std::vector<std::size_t> piv = rref_generic(m);
    return Rref{std::move(m), std::move(piv)};
}

} // namespace detail

std::size_t rank(const ExactMatrix& a) {
    if (a.rows() == 0 || a.cols() == 0)
        return 0;
    if (a.domain().kind() == DomainKind::Integers)
        return rank(as_rationals(a));
    return detail::rref(a).pivots.size();
}

ExactMatrix kernel_basis(const ExactMatrix& a) {
    if (a.domain().kind() == DomainKind::Integers) {
        // columns of V matching zero diagonal entries form a basis of the
        // kernel lattice (A V = U^-1 D, V unimodular)
        SmithForm sf = smith_normal_form(a);
        std::vector<std::size_t> free_cols;
        std::size_t diag = std::min(a.rows(), a.cols());
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (j >= diag || sf.d.at(j, j) == 0)
                free_cols.push_back(j);
        return pick_cols(sf.v, free_cols);
    }
    detail::Rref rr = detail::rref(a);
    const std::vector<std::size_t>& piv = rr.pivots;
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : piv)
        is_pivot[c] = true;
    ExactMatrix basis(a.domain(), a.cols(), a.cols() - piv.size());
    std::size_t k = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
        if (is_pivot[c])
            continue;
        basis.set(c, k, Rat(1));
        for (std::size_t r = 0; r < piv.size(); ++r)
            basis.set(piv[r], k, -rr.r.at(r, c));
        ++k;
    }
    return basis;
}

std::optional<ExactMatrix> solve(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.domain() != b.domain())
        throw DomainError("solve: domain mismatch");
    if (a.rows() != b.rows())
        throw DimensionMismatch("solve: row counts differ");
    if (a.domain().kind() == DomainKind::Integers) {
        // U a V = d, so a x = b iff d (V^-1 x) = U b; solve diagonally.
        SmithForm sf = smith_normal_form(a);
        ExactMatrix c = sf.u * b;
        std::size_t diag = std::min(a.rows(), a.cols());
        ExactMatrix y(a.domain(), a.cols(), b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            const Rat* di = (i < diag && sf.d.at(i, i) != 0) ? &sf.d.at(i, i) : nullptr;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (di) {
                    Rat q = c.at(i, j) / *di;
                    if (q.get_den() != 1)
                        return std::nullopt; // not divisible
                    y.set(i, j, q);
                } else if (c.at(i, j) != 0) {
                    return std::nullopt;
                }
            }
        }
        return sf.v * y;
    }
    // field: eliminate on [a | b]
    ExactMatrix aug = a.hcat(b);
    detail::Rref rr = detail::rref(aug);
    for (std::size_t c : rr.pivots)
        if (c >= a.cols())
            return std::nullopt; // pivot in the rhs block: inconsistent
    ExactMatrix x(a.domain(), a.cols(), b.cols());
    for (std::size_t r = 0; r < rr.pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.set(rr.pivots[r], j, rr.r.at(r, a.cols() + j));
    return x;
}

Rat det(const ExactMatrix& a) {
    if (a.rows() != a.cols())
        throw DimensionMismatch("det: matrix not square");
    std::size_t n = a.rows();
    if (n == 0)
        return Rat(1);
    if (a.domain().kind() == DomainKind::Integers) {
        Rat d = det(as_rationals(a));
        return d; // integral since entries were integral
    }
    ExactMatrix m = a;
    const CoefficientDomain& dom = m.domain();
    Rat result(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m.at(piv, col) == 0)
            ++piv;
        if (piv == n)
            return Rat(0);
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j) {
                Rat t = m.at(piv, j);
                m.set(piv, j, m.at(col, j));
                m.set(col, j, t);
            }
            result = dom.canon(-result);
        }
        result = dom.canon(result * m.at(col, col));
        Rat inv = *dom.inverse(m.at(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            Rat c = m.at(i, col);
            if (c == 0)
                continue;
            Rat f = dom.canon(c * inv);
            for (std::size_t j = col; j < n; ++j)
                m.set(i, j, m.at(i, j) - f * m.at(col, j));
        }
    }
    return result;
}

namespace {

// ---------------------------------------------------------------------------
// Smith normal form. Pivot choice: smallest nonzero absolute value over the
// whole remaining block, which keeps entry growth tame at this scale.
// ---------------------------------------------------------------------------

struct SnfState {
    std::size_t rows, cols;
    std::vector<Int> r, u, v; // r: rows x cols, u: rows x rows, v: cols x cols

    Int& R(std::size_t i, std::size_t j) { return r[i * cols + j]; }
    Int& U(std::size_t i, std::size_t j) { return u[i * rows + j]; }
    Int& V(std::size_t i, std::size_t j) { return v[i * cols + j]; }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t k = 0; k < cols; ++k)
            std::swap(R(i, k), R(j, k));
        for (std::size_t k = 0; k < rows; ++k)
            std::swap(U(i, k), U(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (std::size_t k = 0; k < rows; ++k)
            std::swap(R(k, i), R(k, j));
        for (std::size_t k = 0; k < cols; ++k)
            std::swap(V(k, i), V(k, j));
    }
    // row i -= q * row j
    void row_sub(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0)
            return;
        for (std::size_t k = 0; k < cols; ++k)
            R(i, k) -= q * R(j, k);
        for (std::size_t k = 0; k < rows; ++k)
            U(i, k) -= q * U(j, k);
    }
    // col i -= q * col j
    void col_sub(std::size_t i, std::size_t j, const Int& q) {
        if (q == 0)
            return;
        for (std::size_t k = 0; k < rows; ++k)
            R(k, i) -= q * R(k, j);
        for (std::size_t k = 0; k < cols; ++k)
            V(k, i) -= q * V(k, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < cols; ++k)
            R(i, k) = -R(i, k);
        for (std::size_t k = 0; k < rows; ++k)
            U(i, k) = -U(i, k);
    }
};

// nearest-integer quotient, so remainders satisfy |r| <= |b|/2
Int round_div(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (2 * r > abs(b))
        q += 1;
    return q;
}

} // namespace

SmithForm smith_normal_form(const ExactMatrix& a) {
    if (a.domain().kind() != DomainKind::Integers)
        throw DomainError("smith_normal_form: integer domain required, got " + a.domain().name());

    SnfState s;
    s.rows = a.rows();
    s.cols = a.cols();
    s.r.assign(s.rows * s.cols, 0);
    s.u.assign(s.rows * s.rows, 0);
    s.v.assign(s.cols * s.cols, 0);
    for (std::size_t i = 0; i < s.rows; ++i)
        for (std::size_t j = 0; j < s.cols; ++j)
            s.R(i, j) = a.at(i, j).get_num();
    for (std::size_t i = 0; i < s.rows; ++i)
        s.U(i, i) = 1;
    for (std::size_t i = 0; i < s.cols; ++i)
        s.V(i, i) = 1;

    std::size_t t = 0;
    std::size_t diag = std::min(s.rows, s.cols);
    while (t < diag) {
        // smallest nonzero entry of the remaining block
        bool found = false;
        std::size_t pi = t, pj = t;
        Int best;
        for (std::size_t i = t; i < s.rows; ++i)
            for (std::size_t j = t; j < s.cols; ++j) {
                if (s.R(i, j) == 0)
                    continue;
                Int m = abs(s.R(i, j));
                if (!found || m < best) {
                    found = true;
                    best = m;
                    pi = i;
                    pj = j;
                }
            }
        if (!found)
            break;
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < s.rows; ++i) {
                if (s.R(i, t) == 0)
                    continue;
                Int q = round_div(s.R(i, t), s.R(t, t));
                s.row_sub(i, t, q);
                if (s.R(i, t) != 0) { // remainder became the smaller pivot
                    s.swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < s.cols; ++j) {
                if (s.R(t, j) == 0)
                    continue;
                Int q = round_div(s.R(t, j), s.R(t, t));
                s.col_sub(j, t, q);
                if (s.R(t, j) != 0) {
                    s.swap_cols(t, j);
                    clean = false;
                }
            }
            if (clean) {
                // pivot must divide the rest of the block for the chain
                for (std::size_t i = t + 1; i < s.rows && clean; ++i)
                    for (std::size_t j = t + 1; j < s.cols && clean; ++j)
                        if (s.R(i, j) % s.R(t, t) != 0) {
                            s.row_sub(t, i, Int(-1)); // pull the offending row in
                            clean = false;
                        }
            }
        }
        if (s.R(t, t) < 0)
            s.negate_row(t);
        ++t;
    }

    CoefficientDomain z = CoefficientDomain::integers();
    SmithForm out{ExactMatrix(z, s.rows, s.rows), ExactMatrix(z, s.rows, s.cols), ExactMatrix(z, s.cols, s.cols), {}};
    for (std::size_t i = 0; i < s.rows; ++i)
        for (std::size_t j = 0; j < s.rows; ++j)
            out.u.set(i, j, Rat(s.U(i, j)));
    for (std::size_t i = 0; i < s.rows; ++i)
        for (std::size_t j = 0; j < s.cols; ++j)
            out.d.set(i, j, Rat(s.R(i, j)));
    for (std::size_t i = 0; i < s.cols; ++i)
        for (std::size_t j = 0; j < s.cols; ++j)
            out.v.set(i, j, Rat(s.V(i, j)));
    for (std::size_t i = 0; i < diag; ++i)
        if (out.d.at(i, i) != 0)
            out.invariant_factors.push_back(out.d.at(i, i).get_num());
    return out;
}

SubquotientInvariants subquotient_invariants(const ExactMatrix& gens_big, const ExactMatrix& gens_small) {
    if (gens_big.domain() != gens_small.domain())
        throw DomainError("subquotient_invariants: domain mismatch");
    if (gens_big.rows() != gens_small.rows())
        throw DimensionMismatch("subquotient_invariants: ambient dimensions differ");

    const CoefficientDomain& dom = gens_big.domain();
    if (dom.is_field()) {
        if (!solve(gens_big, gens_small))
            throw NotASubobject("subquotient_invariants: gens_small is not contained in span(gens_big)");
        SubquotientInvariants out;
        out.free_rank = rank(gens_big) - rank(gens_small);
        return out;
    }

    // basis of the big lattice: nonzero columns of A V (= U^-1 D)
    SmithForm sf = smith_normal_form(gens_big);
    ExactMatrix av = gens_big * sf.v;
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j < av.cols(); ++j) {
        bool z = true;
        for (std::size_t i = 0; i < av.rows() && z; ++i)
            z = av.at(i, j) == 0;
        if (!z)
            nonzero.push_back(j);
    }
    ExactMatrix basis = pick_cols(av, nonzero);
    std::size_t big_rank = basis.cols();

    std::optional<ExactMatrix> coords = solve(basis, gens_small);
    if (!coords)
        throw NotASubobject("subquotient_invariants: gens_small is not contained in the subgroup generated by gens_big");

    SmithForm q = smith_normal_form(*coords);
    SubquotientInvariants out;
    out.free_rank = big_rank - q.invariant_factors.size();
    for (const Int& e : q.invariant_factors)
        if (e > 1)
            out.torsion.push_back(e);
    return out;
}

} // namespace ncx
