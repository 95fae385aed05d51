#include "ncx/domain.hpp"

namespace ncx {

CoefficientDomain CoefficientDomain::prime_field(const Int& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
        throw DomainError("prime_field: modulus " + p.get_str() + " is not prime");
    return CoefficientDomain(DomainKind::PrimeField, p);
}

CoefficientDomain CoefficientDomain::rationals() {
    return CoefficientDomain(DomainKind::Rationals, 0);
}

CoefficientDomain CoefficientDomain::integers() {
    return CoefficientDomain(DomainKind::Integers, 0);
}

const Int& CoefficientDomain::modulus() const {
    if (kind_ != DomainKind::PrimeField)
        throw DomainError("modulus: domain " + name() + " has no modulus");
    return p_;
}

Rat CoefficientDomain::canon(const Rat& x) const {
    switch (kind_) {
    case DomainKind::Rationals:
        return x; // mpq_class keeps values canonical
    case DomainKind::Integers:
        if (x.get_den() != 1)
            throw DomainError("canon: " + x.get_str() + " is not an integer");
        return x;
    case DomainKind::PrimeField: {
        Int num = x.get_num() % p_;
        if (num < 0)
            num += p_;
        if (x.get_den() == 1)
            return Rat(num);
        Int den = x.get_den() % p_;
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p_.get_mpz_t()) == 0)
            throw DomainError("canon: denominator of " + x.get_str() + " vanishes mod " + p_.get_str());
        Int r = (num * inv) % p_;
        if (r < 0)
            r += p_;
        return Rat(r);
    }
    }
    throw DomainError("canon: bad domain kind");
}

std::optional<Rat> CoefficientDomain::inverse(const Rat& x) const {
    if (x == 0)
        return std::nullopt;
    switch (kind_) {
    case DomainKind::Rationals:
        return Rat(1) / x;
    case DomainKind::Integers:
        if (x == 1 || x == -1)
            return x;
        return std::nullopt;
    case DomainKind::PrimeField: {
        Rat c = canon(x);
        if (c == 0)
            return std::nullopt;
        Int inv;
        Int num = c.get_num();
        mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p_.get_mpz_t());
        return Rat(inv);
    }
    }
    return std::nullopt;
}

std::string CoefficientDomain::name() const {
    switch (kind_) {
    case DomainKind::PrimeField:
        return "F" + p_.get_str();
    case DomainKind::Rationals:
        return "Q";
    case DomainKind::Integers:
        return "Z";
    }
    return "?";
}

} // namespace ncx
