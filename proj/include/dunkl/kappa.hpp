#pragma once

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <sstream>
#include <utility>
#include <vector>

#include "dunkl/rational.hpp"

namespace dunkl {

/// Dense univariate polynomial over the rationals. Used both for
/// polynomials in the coupling parameter kappa and for the auxiliary
/// monic families in an abstract variable. The coefficient list never
/// carries a zero trailing entry; the zero polynomial is the empty list.
class ratpoly {
  public:
    ratpoly() = default;
    ratpoly(const rational& c0) {
        if (c0 != 0) c_.push_back(c0);
    }
    ratpoly(long c0) : ratpoly(rational(c0)) {}

    static ratpoly from_coeffs(std::vector<rational> c) {
        ratpoly p;
        p.c_ = std::move(c);
        p.trim();
        return p;
    }

    /// The variable itself (coefficient 1 in degree 1).
    static ratpoly indeterminate() {
        return from_coeffs({rational(0), rational(1)});
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<rational>& coeffs() const { return c_; }

    rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return rational(0);
        return c_[static_cast<std::size_t>(k)];
    }

    const rational& leading() const {
        assert(!c_.empty());
        return c_.back();
    }

    ratpoly& operator+=(const ratpoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), rational(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    ratpoly& operator-=(const ratpoly& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), rational(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }

    friend ratpoly operator+(ratpoly a, const ratpoly& b) { return a += b; }
    friend ratpoly operator-(ratpoly a, const ratpoly& b) { return a -= b; }

    friend ratpoly operator-(const ratpoly& a) {
        ratpoly r = a;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend ratpoly operator*(const ratpoly& a, const ratpoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<rational> out(a.c_.size() + b.c_.size() - 1, rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] += a.c_[i] * b.c_[j];
        }
        return from_coeffs(std::move(out));
    }

    friend ratpoly operator*(const ratpoly& a, const rational& s) {
        if (s == 0) return {};
        ratpoly r = a;
        for (auto& c : r.c_) c *= s;
        return r;
    }
    friend ratpoly operator*(const rational& s, const ratpoly& a) { return a * s; }

    friend bool operator==(const ratpoly& a, const ratpoly& b) {
        return a.c_ == b.c_;
    }

    /// Quotient and remainder of division by a nonzero polynomial.
    std::pair<ratpoly, ratpoly> divmod(const ratpoly& d) const {
        if (d.is_zero()) throw std::domain_error("ratpoly: division by zero");
        ratpoly rem = *this;
        if (rem.degree() < d.degree()) return {ratpoly{}, rem};
        std::vector<rational> q(static_cast<std::size_t>(rem.degree() - d.degree()) + 1,
                                rational(0));
        const rational& lc = d.leading();
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            int shift = rem.degree() - d.degree();
            rational f = rem.leading() / lc;
            q[static_cast<std::size_t>(shift)] = f;
            for (std::size_t k = 0; k < d.c_.size(); ++k)
                rem.c_[static_cast<std::size_t>(shift) + k] -= f * d.c_[k];
            rem.trim();
        }
        return {from_coeffs(std::move(q)), rem};
    }

    /// Division known to be exact; a nonzero remainder is an arithmetic bug.
    ratpoly exact_div(const ratpoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero())
            throw std::logic_error("ratpoly: inexact division");
        return q;
    }

    rational eval(const rational& x) const {
        rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<rational> c_;
};

namespace detail {

// Integer image of a rational polynomial: denominators cleared, content
// removed, leading coefficient positive.
inline std::vector<integer> primitive_int_coeffs(const ratpoly& p) {
    std::vector<integer> out;
    if (p.is_zero()) return out;
    integer l(1);
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        rational scaled = c * rational(l);
        assert(scaled.get_den() == 1);
        out.push_back(scaled.get_num());
    }
    integer g(0);
    for (const auto& c : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    for (auto& c : out) c /= g;
    if (out.back() < 0)
        for (auto& c : out) c = -c;
    return out;
}

inline void strip_content(std::vector<integer>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty()) return;
    integer g(0);
    for (const auto& x : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    for (auto& x : c) x /= g;
    if (c.back() < 0)
        for (auto& x : c) x = -x;
}

} // namespace detail

/// Gcd over Q[k], computed with a content-stripped integer remainder
/// sequence. The result is primitive with positive leading coefficient.
inline ratpoly poly_gcd(const ratpoly& a, const ratpoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    std::vector<integer> u = detail::primitive_int_coeffs(a);
    std::vector<integer> v = detail::primitive_int_coeffs(b);
    if (u.empty()) std::swap(u, v);
    while (!v.empty()) {
        if (u.size() < v.size()) std::swap(u, v);
        // pseudo-remainder of u by v; exact scaling is irrelevant because
        // content is stripped each round
        std::vector<integer> r = u;
        const integer& lv = v.back();
        while (r.size() >= v.size()) {
            integer lr = r.back();
            std::size_t shift = r.size() - v.size();
            for (std::size_t k = 0; k < r.size(); ++k) r[k] *= lv;
            for (std::size_t k = 0; k < v.size(); ++k) r[shift + k] -= lr * v[k];
            while (!r.empty() && r.back() == 0) r.pop_back();
            if (r.empty()) break;
        }
        detail::strip_content(r);
        u = std::move(v);
        v = std::move(r);
    }
    std::vector<rational> q;
    q.reserve(u.size());
    for (const auto& c : u) q.emplace_back(c);
    return ratpoly::from_coeffs(std::move(q));
}

/// Monic least common multiple over Q[k].
inline ratpoly poly_lcm(const ratpoly& a, const ratpoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    ratpoly g = poly_gcd(a, b);
    ratpoly l = a * b.exact_div(g);
    if (l.leading() != 1) l = l * (1 / l.leading());
    return l;
}

/// Element of the field Q(kappa): a normalized quotient of rational
/// polynomials. Invariants: denominator nonzero and monic, numerator and
/// denominator coprime. Values are immutable after construction.
class kappa_scalar {
  public:
    kappa_scalar() : num_(), den_(1) {}
    kappa_scalar(const rational& c) : num_(c), den_(1) {}
    kappa_scalar(long c) : num_(c), den_(1) {}
    explicit kappa_scalar(ratpoly num) : num_(std::move(num)), den_(1) {}
    kappa_scalar(ratpoly num, ratpoly den)
        : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    /// The parameter kappa as a field element.
    static kappa_scalar kappa() {
        return kappa_scalar(ratpoly::indeterminate());
    }

    const ratpoly& num() const { return num_; }
    const ratpoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    rational constant_value() const {
        if (!is_constant())
            throw std::domain_error("kappa_scalar: not a constant");
        return num_.coeff(0);
    }

    friend kappa_scalar operator+(const kappa_scalar& a, const kappa_scalar& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_.is_one() && b.den_.is_one())
            return raw(a.num_ + b.num_, ratpoly(1));
        if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }

    friend kappa_scalar operator-(const kappa_scalar& a, const kappa_scalar& b) {
        return a + (-b);
    }

    friend kappa_scalar operator-(const kappa_scalar& a) {
        kappa_scalar r = a;
        r.num_ = -r.num_;
        return r;
    }

    friend kappa_scalar operator*(const kappa_scalar& a, const kappa_scalar& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.den_.is_one() && b.den_.is_one())
            return raw(a.num_ * b.num_, ratpoly(1));
        // cross-cancel before multiplying to keep degrees down
        ratpoly g1 = poly_gcd(a.num_, b.den_);
        ratpoly g2 = poly_gcd(b.num_, a.den_);
        ratpoly n = a.num_.is_zero() ? ratpoly{} : a.num_.exact_div(g1) * b.num_.exact_div(g2);
        ratpoly d = a.den_.exact_div(g2) * b.den_.exact_div(g1);
        rational lc = d.leading();
        if (lc != 1) {
            rational inv = 1 / lc;
            n = n * inv;
            d = d * inv;
        }
        return raw(std::move(n), std::move(d));
    }

    friend kappa_scalar operator/(const kappa_scalar& a, const kappa_scalar& b) {
        if (b.is_zero())
            throw std::domain_error("kappa_scalar: division by zero");
        return a * b.reciprocal();
    }

    kappa_scalar reciprocal() const {
        if (is_zero())
            throw std::domain_error("kappa_scalar: reciprocal of zero");
        return {den_, num_};
    }

    kappa_scalar& operator+=(const kappa_scalar& o) { return *this = *this + o; }
    kappa_scalar& operator-=(const kappa_scalar& o) { return *this = *this - o; }
    kappa_scalar& operator*=(const kappa_scalar& o) { return *this = *this * o; }
    kappa_scalar& operator/=(const kappa_scalar& o) { return *this = *this / o; }

    kappa_scalar pow(unsigned e) const {
        kappa_scalar r(1);
        kappa_scalar base = *this;
        while (e) {
            if (e & 1u) r *= base;
            base *= base;
            e >>= 1u;
        }
        return r;
    }

    friend bool operator==(const kappa_scalar& a, const kappa_scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Exact evaluation at a rational parameter value. A vanishing
    /// denominator is a pole and reported as such.
    rational specialize(const rational& value) const {
        rational d = den_.eval(value);
        if (d == 0)
            throw std::domain_error("kappa_scalar: pole at kappa = " +
                                    dunkl::to_string(value));
        return num_.eval(value) / d;
    }

  private:
    // bypasses normalization; caller guarantees the invariants
    static kappa_scalar raw(ratpoly n, ratpoly d) {
        kappa_scalar r;
        r.num_ = std::move(n);
        r.den_ = std::move(d);
        return r;
    }

    void normalize() {
        if (den_.is_zero())
            throw std::domain_error("kappa_scalar: zero denominator");
        if (num_.is_zero()) {
            den_ = ratpoly(1);
            return;
        }
        if (!den_.is_constant()) {
            ratpoly g = poly_gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = num_.exact_div(g);
                den_ = den_.exact_div(g);
            }
        }
        rational lc = den_.leading();
        if (lc != 1) {
            rational inv = 1 / lc;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    ratpoly num_;
    ratpoly den_;
};

/// Rising factorial (a)_n = a (a+1) ... (a+n-1); empty product for n = 0.
inline kappa_scalar pochhammer(const kappa_scalar& a, unsigned n) {
    kappa_scalar r(1);
    kappa_scalar t = a;
    for (unsigned k = 0; k < n; ++k) {
        r *= t;
        t += kappa_scalar(1);
    }
    return r;
}

/// Evaluate a univariate rational polynomial at a kappa_scalar argument.
inline kappa_scalar eval_at(const ratpoly& p, const kappa_scalar& x) {
    kappa_scalar acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * x + kappa_scalar(*it);
    return acc;
}

/// Element of Q(kappa)[i], i^2 = -1. Needed for evaluation at the
/// distinguished complex point.
class gaussian_kappa {
  public:
    gaussian_kappa() = default;
    gaussian_kappa(const kappa_scalar& re) : re_(re) {}
    gaussian_kappa(kappa_scalar re, kappa_scalar im)
        : re_(std::move(re)), im_(std::move(im)) {}
    gaussian_kappa(long c) : re_(c) {}
    gaussian_kappa(const rational& c) : re_(c) {}

    static gaussian_kappa i() { return {kappa_scalar(0), kappa_scalar(1)}; }

    const kappa_scalar& re() const { return re_; }
    const kappa_scalar& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    gaussian_kappa conj() const { return {re_, -im_}; }

    friend gaussian_kappa operator+(const gaussian_kappa& a, const gaussian_kappa& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend gaussian_kappa operator-(const gaussian_kappa& a, const gaussian_kappa& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend gaussian_kappa operator-(const gaussian_kappa& a) {
        return {-a.re_, -a.im_};
    }
    friend gaussian_kappa operator*(const gaussian_kappa& a, const gaussian_kappa& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend gaussian_kappa operator/(const gaussian_kappa& a, const gaussian_kappa& b) {
        if (b.is_zero())
            throw std::domain_error("gaussian_kappa: division by zero");
        kappa_scalar n = b.re_ * b.re_ + b.im_ * b.im_;
        gaussian_kappa p = a * b.conj();
        return {p.re_ / n, p.im_ / n};
    }
    gaussian_kappa& operator+=(const gaussian_kappa& o) { return *this = *this + o; }
    gaussian_kappa& operator-=(const gaussian_kappa& o) { return *this = *this - o; }
    gaussian_kappa& operator*=(const gaussian_kappa& o) { return *this = *this * o; }

    gaussian_kappa pow(unsigned e) const {
        gaussian_kappa r(1);
        gaussian_kappa base = *this;
        while (e) {
            if (e & 1u) r = r * base;
            base = base * base;
            e >>= 1u;
        }
        return r;
    }

    friend bool operator==(const gaussian_kappa& a, const gaussian_kappa& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

  private:
    kappa_scalar re_;
    kappa_scalar im_;
};

// ---------------------------------------------------------------------------
// String forms. These round-trip bit-exactly: "a/b" for rationals,
// "c0 + c1*k + c2*k^2" (dense) for polynomials, "num | den" for field
// elements.

inline std::string to_string(const ratpoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= p.degree(); ++k) {
        if (k > 0) out += " + ";
        out += to_string(p.coeff(k));
        if (k == 1) out += "*k";
        else if (k > 1) out += "*k^" + std::to_string(k);
    }
    return out;
}

inline ratpoly parse_ratpoly(const std::string& text) {
    std::vector<rational> coeffs;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(" + ", pos);
        std::string term = text.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? text.size() : next + 3;

        std::size_t star = term.find('*');
        std::string coeff_part = term.substr(0, star);
        int power = 0;
        if (star != std::string::npos) {
            std::string var = term.substr(star + 1);
            if (var == "k") power = 1;
            else if (var.rfind("k^", 0) == 0) power = std::atoi(var.c_str() + 2);
            else throw std::invalid_argument("ratpoly: bad term '" + term + "'");
            if (power < 1)
                throw std::invalid_argument("ratpoly: bad power in '" + term + "'");
        }
        while (static_cast<int>(coeffs.size()) <= power) coeffs.emplace_back(0);
        coeffs[static_cast<std::size_t>(power)] = parse_rational(coeff_part);
    }
    return ratpoly::from_coeffs(std::move(coeffs));
}

inline std::string to_string(const kappa_scalar& s) {
    return to_string(s.num()) + " | " + to_string(s.den());
}

inline kappa_scalar parse_kappa_scalar(const std::string& text) {
    std::size_t bar = text.find(" | ");
    if (bar == std::string::npos)
        throw std::invalid_argument("kappa_scalar: missing '|' in '" + text + "'");
    return {parse_ratpoly(text.substr(0, bar)), parse_ratpoly(text.substr(bar + 3))};
}

} // namespace dunkl
