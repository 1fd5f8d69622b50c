#ifndef COVMF_CYCLOTOMIC_HPP
#define COVMF_CYCLOTOMIC_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "covmf/rational.hpp"

namespace covmf {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// Only the operations the cyclotomic machinery needs.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Rational& r) { return UniPoly({r}); }
    static UniPoly monomial(int degree, const Rational& coeff);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rational(0);
    }
    const Rational& leading() const { return c_.back(); }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(const Rational& r) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

    std::string str(const std::string& var = "z") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// The d-th cyclotomic polynomial, by Phi_d(z) = (z^d - 1) / prod_{e|d, e<d} Phi_e(z).
UniPoly cyclotomic_polynomial(int d);

int euler_phi(int d);

/// Element of Q(zeta_d) = Q[z]/Phi_d(z) in the power basis 1, z, ..., z^(phi(d)-1).
/// Orders 1 and 2 collapse to plain Q (zeta_1 = 1, zeta_2 = -1). Values are
/// immutable; arithmetic with mismatched orders is allowed only when one side
/// carries a plain rational value, which embeds into any order.
class CycloScalar {
  public:
    CycloScalar() : order_(1), c_(1) {}
    CycloScalar(int order, std::vector<Rational> coeffs);

    static CycloScalar zero(int order) { return from_rational(order, Rational(0)); }
    static CycloScalar one(int order) { return from_rational(order, Rational(1)); }
    static CycloScalar from_rational(int order, const Rational& r);
    /// The class of z, a primitive d-th root of unity.
    static CycloScalar zeta(int order);

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_one() const;
    /// True when the value lies in Q (order <= 2, or all higher coordinates vanish).
    bool is_rational() const;
    std::optional<Rational> as_rational() const;

    CycloScalar operator-() const;
    CycloScalar operator+(const CycloScalar& o) const;
    CycloScalar operator-(const CycloScalar& o) const;
    CycloScalar operator*(const CycloScalar& o) const;
    CycloScalar operator/(const CycloScalar& o) const { return *this * o.inverse(); }
    CycloScalar& operator+=(const CycloScalar& o) { return *this = *this + o; }
    CycloScalar& operator-=(const CycloScalar& o) { return *this = *this - o; }
    CycloScalar& operator*=(const CycloScalar& o) { return *this = *this * o; }

    /// Multiplicative inverse via the extended Euclidean algorithm against Phi_d.
    CycloScalar inverse() const;
    CycloScalar pow(unsigned long e) const;
    /// Re-express a rational-valued scalar in the given order (no-op when equal).
    CycloScalar promoted(int order) const;

    bool operator==(const CycloScalar& o) const;
    bool operator!=(const CycloScalar& o) const { return !(*this == o); }

    /// "c0 + c1*z + ..." with rational coefficients.
    std::string str() const;

  private:
    int order_;
    std::vector<Rational> c_; // length euler_phi(order_)
};

std::ostream& operator<<(std::ostream& os, const CycloScalar& s);

} // namespace covmf

#endif
