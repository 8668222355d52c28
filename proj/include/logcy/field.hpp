#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace logcy {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Dense integer-coefficient polynomial in t, coefficient of t^i at c[i].
// Trailing zeros are always trimmed; the zero polynomial has empty c.
class Poly {
public:
    Poly() = default;
    explicit Poly(Int constant);
    explicit Poly(std::vector<Int> coeffs);
    static Poly t();  // the variable

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    int lowest_degree() const;                                      // order at t=0; -1 for zero
    const Int& coeff(int i) const;
    const std::vector<Int>& coeffs() const { return c_; }

    Int content() const;       // gcd of coefficients, >= 0
    Poly primitive() const;    // divide by content (zero stays zero)
    Int lowest_coeff() const;  // coefficient of the lowest-degree term, 0 for zero
    Int eval_origin() const { return is_zero() ? Int(0) : c_[0]; }

    Poly shifted_down(int k) const;  // divide by t^k, requires divisibility

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    // Exact division; throws if the remainder is nonzero.
    Poly div_exact(const Poly& d) const;

    std::string str() const;  // "30 + 6*t", "1 - t", "0"

private:
    void trim();
    std::vector<Int> c_;
};

Poly poly_gcd(const Poly& a, const Poly& b);  // primitive, positive lowest coefficient

struct Valuation {
    bool infinite = false;  // val(0)
    long long value = 0;

    static Valuation infinity() { return {true, 0}; }
    static Valuation of(long long v) { return {false, v}; }
    bool operator==(const Valuation& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
};

class FieldError : public std::runtime_error {
public:
    explicit FieldError(const std::string& m) : std::runtime_error(m) {}
};

// Element of Q(t), the computable subfield of C((t)) used throughout.
// Canonical form: num/den coprime in Z[t], joint coefficient content 1,
// lowest nonzero coefficient of den positive, zero stored as 0/1.
class LaurentScalar {
public:
    LaurentScalar() : num_(), den_(Int(1)) {}
    LaurentScalar(Poly num, Poly den);  // canonicalizes
    static LaurentScalar from_int(long long v) { return LaurentScalar(Poly(Int(v)), Poly(Int(1))); }
    static LaurentScalar from_rational(const Rational& r);
    static LaurentScalar t() { return LaurentScalar(Poly::t(), Poly(Int(1))); }
    static LaurentScalar one() { return from_int(1); }
    static LaurentScalar zero() { return LaurentScalar(); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend LaurentScalar operator+(const LaurentScalar& a, const LaurentScalar& b);
    friend LaurentScalar operator-(const LaurentScalar& a, const LaurentScalar& b);
    friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
    friend LaurentScalar operator/(const LaurentScalar& a, const LaurentScalar& b);
    LaurentScalar operator-() const;
    LaurentScalar inverse() const;
    LaurentScalar pow(long long k) const;
    bool operator==(const LaurentScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const LaurentScalar& o) const { return !(*this == o); }

    Valuation val() const;
    bool is_unit() const { return !is_zero() && val() == Valuation::of(0); }

    // Value at t = 0; requires val >= 0.
    Rational reduce_at_zero() const;

    // Fixed canonical print, see parse_scalar for the grammar it round-trips with.
    std::string str() const;

private:
    void canonicalize();
    Poly num_, den_;
};

// Parses the scalar grammar: integers, rationals a/b, the variable t,
// + - * / ^ with integer exponents, parentheses, unary minus.
// Throws FieldError with a character position on bad input.
LaurentScalar parse_scalar(const std::string& text);

}  // namespace logcy
