#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "ncx/error.hpp"

namespace ncx {

/// Arbitrary-precision integer.
using Int = mpz_class;
/// Arbitrary-precision rational, always in lowest terms with positive denominator.
using Rat = mpq_class;

enum class DomainKind { PrimeField, Rationals, Integers };

/// One of F_p (p prime), Q, or Z. All scalar arithmetic is exact; values are
/// kept in canonical form (residues in [0,p) over F_p, lowest terms over Q,
/// denominator 1 over Z).
class CoefficientDomain {
public:
    static CoefficientDomain prime_field(const Int& p);
    static CoefficientDomain rationals();
    static CoefficientDomain integers();

    DomainKind kind() const { return kind_; }
    bool is_field() const { return kind_ != DomainKind::Integers; }

    /// Prime modulus; only valid for prime fields.
    const Int& modulus() const;

    /// Canonical representative of x in this domain. Over F_p a rational a/b
    /// is interpreted as a * b^{-1} mod p; throws DomainError when b ≡ 0.
    /// Over Z throws DomainError for non-integral x.
    Rat canon(const Rat& x) const;

    /// Multiplicative inverse, or nullopt when x is not invertible.
    std::optional<Rat> inverse(const Rat& x) const;

    /// Short display name: "F5", "Q", "Z".
    std::string name() const;

    bool operator==(const CoefficientDomain& other) const {
        return kind_ == other.kind_ && p_ == other.p_;
    }
    bool operator!=(const CoefficientDomain& other) const { return !(*this == other); }

private:
    CoefficientDomain(DomainKind kind, Int p) : kind_(kind), p_(std::move(p)) {}

    DomainKind kind_;
    Int p_; // modulus for prime fields, 0 otherwise
};

} // namespace ncx
