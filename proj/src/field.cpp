#include "logcy/field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace logcy {

Poly::Poly(Int constant) {
    if (constant != 0) c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::t() { return Poly(std::vector<Int>{Int(0), Int(1)}); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::lowest_degree() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

const Int& Poly::coeff(int i) const {
    static const Int zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

Int Poly::content() const {
    Int g(0);
    for (const Int& x : c_) g = boost::multiprecision::gcd(g, x);
    return g;
}

Poly Poly::primitive() const {
    Int g = content();
    if (g == 0 || g == 1) return *this;
    std::vector<Int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] / g;
    return Poly(std::move(r));
}

Int Poly::lowest_coeff() const {
    int d = lowest_degree();
    return d < 0 ? Int(0) : c_[d];
}

Poly Poly::shifted_down(int k) const {
    if (k == 0 || is_zero()) return *this;
    if (lowest_degree() < k) throw FieldError("polynomial not divisible by t^k");
    return Poly(std::vector<Int>(c_.begin() + k, c_.end()));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
    std::vector<Int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
}

Poly Poly::div_exact(const Poly& d) const {
    if (d.is_zero()) throw FieldError("division by zero polynomial");
    if (is_zero()) return Poly();
    std::vector<Int> rem = c_;
    int dd = d.degree();
    int nd = degree();
    if (nd < dd) throw FieldError("inexact polynomial division");
    std::vector<Int> q(nd - dd + 1, Int(0));
    const Int& lead = d.c_.back();
    for (int i = nd; i >= dd; --i) {
        Int cur = rem[i];
        if (cur == 0) continue;
        if (cur % lead != 0) throw FieldError("inexact polynomial division");
        Int f = cur / lead;
        q[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.c_[j];
    }
    for (const Int& x : rem)
        if (x != 0) throw FieldError("inexact polynomial division");
    return Poly(std::move(q));
}

namespace {

// Remainder of primitive pseudo-division, made primitive again.
Poly pseudo_rem_primitive(Poly a, const Poly& b) {
    int db = b.degree();
    const Int lead = b.coeffs().back();
    while (!a.is_zero() && a.degree() >= db) {
        int da = a.degree();
        Int la = a.coeffs().back();
        Int g = boost::multiprecision::gcd(la, lead);
        Int mul = lead / g;
        Int fac = la / g;
        std::vector<Int> r(a.coeffs());
        for (Int& x : r) x *= mul;
        for (int j = 0; j <= db; ++j) r[da - db + j] -= fac * b.coeffs()[j];
        a = Poly(std::move(r));
    }
    return a.primitive();
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a.primitive(), y = b.primitive();
    if (x.is_zero()) x = y;
    else if (!y.is_zero()) {
        if (x.degree() < y.degree()) std::swap(x, y);
        while (!y.is_zero()) {
            Poly r = pseudo_rem_primitive(x, y);
            x = y;
            y = r;
        }
    }
    if (x.is_zero()) return x;
    if (x.lowest_coeff() < 0) x = -x;
    return x;
}

LaurentScalar::LaurentScalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw FieldError("division by zero polynomial");
    canonicalize();
}

LaurentScalar LaurentScalar::from_rational(const Rational& r) {
    return LaurentScalar(Poly(Int(boost::multiprecision::numerator(r))),
                         Poly(Int(boost::multiprecision::denominator(r))));
}

void LaurentScalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = Poly(Int(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_one() && !g.is_zero()) {
        num_ = num_.div_exact(g);
        den_ = den_.div_exact(g);
    }
    Int cg = boost::multiprecision::gcd(num_.content(), den_.content());
    if (cg > 1) {
        num_ = Poly([&] {
            std::vector<Int> v(num_.coeffs());
            for (Int& x : v) x /= cg;
            return v;
        }());
        den_ = Poly([&] {
            std::vector<Int> v(den_.coeffs());
            for (Int& x : v) x /= cg;
            return v;
        }());
    }
    if (den_.lowest_coeff() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

LaurentScalar operator+(const LaurentScalar& a, const LaurentScalar& b) {
    return LaurentScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

LaurentScalar operator-(const LaurentScalar& a, const LaurentScalar& b) { return a + (-b); }

LaurentScalar LaurentScalar::operator-() const {
    LaurentScalar r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
    return LaurentScalar(a.num_ * b.num_, a.den_ * b.den_);
}

LaurentScalar operator/(const LaurentScalar& a, const LaurentScalar& b) {
    if (b.is_zero()) throw FieldError("division by zero");
    return LaurentScalar(a.num_ * b.den_, a.den_ * b.num_);
}

LaurentScalar LaurentScalar::inverse() const {
    if (is_zero()) throw FieldError("division by zero");
    return LaurentScalar(den_, num_);
}

LaurentScalar LaurentScalar::pow(long long k) const {
    if (k < 0) return inverse().pow(-k);
    LaurentScalar acc = one();
    LaurentScalar base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Valuation LaurentScalar::val() const {
    if (is_zero()) return Valuation::infinity();
    return Valuation::of(num_.lowest_degree() - den_.lowest_degree());
}

Rational LaurentScalar::reduce_at_zero() const {
    if (is_zero()) return Rational(0);
    Valuation v = val();
    if (v.value < 0) throw FieldError("reduction at t=0 needs nonnegative valuation");
    if (v.value > 0) return Rational(0);
    int a = num_.lowest_degree(), b = den_.lowest_degree();
    return Rational(num_.coeff(a), den_.coeff(b));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Int a = c_[i];
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (i == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::string LaurentScalar::str() const {
    if (is_zero()) return "0";
    long long v = val().value;
    if (v == 0) {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }
    int a = num_.lowest_degree(), b = den_.lowest_degree();
    Poly n = num_.shifted_down(a), d = den_.shifted_down(b);
    std::ostringstream os;
    os << "t^" << v;
    if (n.is_one() && d.is_one()) return os.str();
    os << " * (" << n.str() << ")";
    if (!d.is_one()) os << "/(" << d.str() << ")";
    return os.str();
}

namespace {

// Recursive-descent parser for the scalar grammar.
class ScalarParser {
public:
    explicit ScalarParser(const std::string& s) : s_(s) {}

    LaurentScalar run() {
        LaurentScalar v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw FieldError("parse error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    LaurentScalar expr() {
        LaurentScalar v = term();
        for (;;) {
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else return v;
        }
    }

    LaurentScalar term() {
        LaurentScalar v = factor();
        for (;;) {
            if (eat('*')) v = v * factor();
            else if (eat('/')) {
                LaurentScalar d = factor();
                if (d.is_zero()) fail("division by zero");
                v = v / d;
            } else return v;
        }
    }

    LaurentScalar factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        LaurentScalar v = atom();
        if (eat('^')) {
            long long e = exponent();
            if (v.is_zero() && e < 0) fail("zero raised to a negative power");
            v = v.pow(e);
        }
        return v;
    }

    long long exponent() {
        bool paren = eat('(');
        bool neg = eat('-');
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected integer exponent");
        long long e = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            e = e * 10 + (s_[pos_] - '0');
            if (e > 4096) fail("exponent too large");
            ++pos_;
        }
        if (paren && !eat(')')) fail("expected ')' after exponent");
        return neg ? -e : e;
    }

    LaurentScalar atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            LaurentScalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 't') {
            ++pos_;
            return LaurentScalar::t();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int n(0);
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                n = n * 10 + (s_[pos_] - '0');
                ++pos_;
            }
            return LaurentScalar(Poly(n), Poly(Int(1)));
        }
        fail("expected number, 't' or '('");
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

LaurentScalar parse_scalar(const std::string& text) { return ScalarParser(text).run(); }

}  // namespace logcy
