#ifndef COVMF_MULTIPOLY_HPP
#define COVMF_MULTIPOLY_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covmf/cyclotomic.hpp"

namespace covmf {

/// Ambient ring descriptor: projective coordinates x0..x(num_vars-1) over
/// Q(zeta_field_order), optionally extended by the fiber variable T. Each x_i
/// has weight 1; T carries weight t_weight so that entries of a matrix
/// factorization, shaped alpha*T + g with deg g = t_weight, are homogeneous.
struct Ring {
    int field_order = 1;
    int num_vars = 0;
    bool has_T = false;
    int t_weight = 1;

    int slots() const { return num_vars + (has_T ? 1 : 0); }
    Ring with_T(int weight) const { return Ring{field_order, num_vars, true, weight}; }
    Ring without_T() const { return Ring{field_order, num_vars, false, 1}; }
    bool operator==(const Ring&) const = default;
};

/// Exponent vector of the x variables only (basis bookkeeping for graded pieces).
struct Monomial {
    std::vector<int> exponents;

    int degree() const {
        int s = 0;
        for (int e : exponents) s += e;
        return s;
    }
    bool operator==(const Monomial&) const = default;
    std::string str() const;
};

/// All exponent vectors of the given total degree, graded-lex ordered
/// (x0-major, descending). Count is C(num_vars-1+degree, degree).
std::vector<Monomial> monomials_of_degree(int num_vars, int degree);

/// Strict ordering of exponent keys: higher weighted degree first, then T
/// exponent, then x0..xN lexicographically descending.
struct TermOrder {
    int num_vars = 0;
    bool has_T = false;
    int t_weight = 1;

    int weighted_degree(const std::vector<int>& e) const {
        int s = 0;
        for (int i = 0; i < num_vars; ++i) s += e[i];
        if (has_T) s += t_weight * e[num_vars];
        return s;
    }
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
        int da = weighted_degree(a), db = weighted_degree(b);
        if (da != db) return da > db;
        if (has_T && a[num_vars] != b[num_vars]) return a[num_vars] > b[num_vars];
        for (int i = 0; i < num_vars; ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

/// Sparse multivariate polynomial over a cyclotomic field. Exponent layout is
/// x0..xN then, when the ring has it, T in the last slot. Stored term maps
/// never contain zero coefficients, so equality of maps is equality of
/// polynomials in canonical form.
class MultiPoly {
  public:
    using TermMap = std::map<std::vector<int>, CycloScalar, TermOrder>;

    explicit MultiPoly(Ring ring);

    static MultiPoly zero(Ring ring) { return MultiPoly(ring); }
    static MultiPoly constant(Ring ring, const CycloScalar& c);
    static MultiPoly constant(Ring ring, const Rational& c);
    static MultiPoly variable(Ring ring, int index);
    static MultiPoly t_variable(Ring ring);
    static MultiPoly from_monomial(Ring ring, std::vector<int> exponents, const CycloScalar& c);
    static MultiPoly from_monomial(Ring ring, const Monomial& m, const CycloScalar& c);

    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly scaled(const CycloScalar& c) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    /// Weighted degree of the highest term; -1 for the zero polynomial.
    int weighted_degree() const;
    bool is_homogeneous() const;
    int t_degree() const;
    CycloScalar coeff(const std::vector<int>& exponents) const;
    CycloScalar evaluate(const std::vector<Rational>& xs, const std::optional<Rational>& t) const;

    /// Partial derivative with respect to x_index (T is never differentiated).
    MultiPoly partial_derivative(int index) const;
    /// Same polynomial viewed in the ring extended by T (with the given weight).
    MultiPoly lifted_with_T(int t_weight) const;
    /// Same polynomial with coefficients embedded in Q(zeta_order); requires
    /// rational coefficients when the orders genuinely differ.
    MultiPoly promoted_order(int field_order) const;

    std::string str() const;

  private:
    void add_term(const std::vector<int>& e, const CycloScalar& c);
    Ring ring_;
    TermMap terms_;
};

std::string format_poly(const MultiPoly& p);

/// Grammar: terms joined by '+'/'-'; a term is a '*'-separated product of an
/// optional coefficient ("p/q" or "(c0 + c1*z + ...)") and variables "x0".."xN",
/// "T", each with an optional "^k". Throws ParseError with position;
/// NonHomogeneous when homogeneity is required but violated.
MultiPoly parse_poly(Ring ring, std::string_view text, bool require_homogeneous = false);

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// C(n, k) as unsigned arithmetic at desk scale.
unsigned long long binomial(int n, int k);

} // namespace covmf

#endif
