#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "dunkl/kappa.hpp"

namespace dunkl {

/// Exponent vector; its length is the ambient number of variables.
using monomial = std::vector<std::uint32_t>;

inline std::uint32_t total_degree(const monomial& m) {
    return std::accumulate(m.begin(), m.end(), std::uint32_t{0});
}

/// Graded lexicographic order (degree first, then lex with the first
/// variable largest). Fixed once so that serialized term lists are
/// deterministic.
struct grlex_less {
    bool operator()(const monomial& a, const monomial& b) const {
        std::uint32_t da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k] != b[k]) return a[k] < b[k];
        return false;
    }
};

/// The two variable systems a polynomial can live in. X is the ordinary
/// coordinate representation; P is the image under the symbolic calculus.
/// Arithmetic never mixes the two.
enum class rep_kind : std::uint8_t { X, P };

inline const char* rep_name(rep_kind r) { return r == rep_kind::X ? "X" : "P"; }

/// Sparse multivariate polynomial over an exact scalar field (Q(kappa) or
/// its Gaussian extension). Zero coefficients are never stored. Values are
/// immutable in spirit: all operations are pure and return new polynomials.
template <class S>
class multi_poly {
  public:
    using term_map = std::map<monomial, S, grlex_less>;

    multi_poly() : rep_(rep_kind::X), nvars_(0) {}
    multi_poly(rep_kind rep, int nvars) : rep_(rep), nvars_(nvars) {
        if (nvars < 0) throw std::invalid_argument("multi_poly: negative nvars");
    }

    static multi_poly constant(rep_kind rep, int nvars, const S& c) {
        multi_poly f(rep, nvars);
        f.add_term(monomial(static_cast<std::size_t>(nvars), 0), c);
        return f;
    }

    static multi_poly term(rep_kind rep, const monomial& m, const S& c) {
        multi_poly f(rep, static_cast<int>(m.size()));
        f.add_term(m, c);
        return f;
    }

    /// x_i (or p_i) to the given power.
    static multi_poly variable_power(rep_kind rep, int nvars, int i,
                                     std::uint32_t e = 1) {
        if (i < 0 || i >= nvars)
            throw std::invalid_argument("multi_poly: variable index out of range");
        monomial m(static_cast<std::size_t>(nvars), 0);
        m[static_cast<std::size_t>(i)] = e;
        return term(rep, m, S(1));
    }

    rep_kind rep() const { return rep_; }
    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const term_map& terms() const { return terms_; }

    /// Largest total degree; -1 for the zero polynomial.
    int total_deg() const {
        return terms_.empty() ? -1
                              : static_cast<int>(total_degree(terms_.rbegin()->first));
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        std::uint32_t d = total_degree(terms_.begin()->first);
        for (const auto& [m, c] : terms_)
            if (total_degree(m) != d) return false;
        return true;
    }

    S coeff(const monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? S() : it->second;
    }

    S constant_term() const {
        return coeff(monomial(static_cast<std::size_t>(nvars_), 0));
    }

    void add_term(const monomial& m, const S& c) {
        if (m.size() != static_cast<std::size_t>(nvars_))
            throw std::invalid_argument("multi_poly: monomial length mismatch");
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    multi_poly& operator+=(const multi_poly& o) {
        require_compatible(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    multi_poly& operator-=(const multi_poly& o) {
        require_compatible(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend multi_poly operator+(multi_poly a, const multi_poly& b) { return a += b; }
    friend multi_poly operator-(multi_poly a, const multi_poly& b) { return a -= b; }

    friend multi_poly operator-(const multi_poly& a) {
        multi_poly r(a.rep_, a.nvars_);
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend multi_poly operator*(const multi_poly& a, const multi_poly& b) {
        a.require_compatible(b);
        multi_poly r(a.rep_, a.nvars_);
        monomial m(static_cast<std::size_t>(a.nvars_));
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    friend multi_poly operator*(const multi_poly& a, const S& s) {
        multi_poly r(a.rep_, a.nvars_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : a.terms_) r.add_term(m, c * s);
        return r;
    }
    friend multi_poly operator*(const S& s, const multi_poly& a) { return a * s; }

    friend bool operator==(const multi_poly& a, const multi_poly& b) {
        return a.rep_ == b.rep_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    void require_compatible(const multi_poly& o) const {
        if (rep_ != o.rep_)
            throw std::invalid_argument("multi_poly: representation mismatch (" +
                                        std::string(rep_name(rep_)) + " vs " +
                                        rep_name(o.rep_) + ")");
        if (nvars_ != o.nvars_)
            throw std::invalid_argument("multi_poly: nvars mismatch");
    }

  private:
    rep_kind rep_;
    int nvars_;
    term_map terms_;
};

/// f with variables i and j interchanged. An involution and a ring map.
template <class S>
multi_poly<S> transpose_vars(const multi_poly<S>& f, int i, int j) {
    if (i < 0 || j < 0 || i >= f.nvars() || j >= f.nvars() || i == j)
        throw std::invalid_argument("transpose_vars: bad variable pair");
    multi_poly<S> r(f.rep(), f.nvars());
    for (const auto& [m, c] : f.terms()) {
        monomial t = m;
        std::swap(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)]);
        r.add_term(t, c);
    }
    return r;
}

/// (f - f with i,j swapped) / (x_i - x_j), computed term by term. The
/// quotient of x_i^a x_j^b - x_i^b x_j^a by (x_i - x_j) is a signed
/// complete homogeneous block, so no polynomial division is involved and
/// the result is exact by construction.
template <class S>
multi_poly<S> divided_difference(const multi_poly<S>& f, int i, int j) {
    if (f.rep() != rep_kind::X)
        throw std::invalid_argument("divided_difference: expects X representation");
    if (i < 0 || j < 0 || i >= f.nvars() || j >= f.nvars() || i == j)
        throw std::invalid_argument("divided_difference: bad variable pair");
    auto ui = static_cast<std::size_t>(i);
    auto uj = static_cast<std::size_t>(j);
    multi_poly<S> r(f.rep(), f.nvars());
    monomial t(static_cast<std::size_t>(f.nvars()));
    for (const auto& [m, c] : f.terms()) {
        std::uint32_t a = m[ui], b = m[uj];
        if (a == b) continue;
        t = m;
        if (a > b) {
            for (std::uint32_t k = 0; k < a - b; ++k) {
                t[ui] = a - 1 - k;
                t[uj] = b + k;
                r.add_term(t, c);
            }
        } else {
            for (std::uint32_t k = 0; k < b - a; ++k) {
                t[ui] = a + k;
                t[uj] = b - 1 - k;
                r.add_term(t, -c);
            }
        }
    }
    return r;
}

/// Partial derivative with respect to variable i.
template <class S>
multi_poly<S> derivative(const multi_poly<S>& f, int i) {
    if (i < 0 || i >= f.nvars())
        throw std::invalid_argument("derivative: variable index out of range");
    auto ui = static_cast<std::size_t>(i);
    multi_poly<S> r(f.rep(), f.nvars());
    for (const auto& [m, c] : f.terms()) {
        if (m[ui] == 0) continue;
        monomial t = m;
        t[ui] -= 1;
        r.add_term(t, c * S(static_cast<long>(m[ui])));
    }
    return r;
}

/// Exact evaluation at a point whose entries live in a (possibly larger)
/// scalar ring constructible from S.
template <class PS, class S>
PS evaluate(const multi_poly<S>& f, const std::vector<PS>& point) {
    if (f.rep() != rep_kind::X)
        throw std::invalid_argument("evaluate: expects X representation");
    if (point.size() != static_cast<std::size_t>(f.nvars()))
        throw std::invalid_argument("evaluate: point length mismatch");
    // memoized variable powers
    std::vector<std::vector<PS>> pow(point.size());
    for (std::size_t k = 0; k < point.size(); ++k) pow[k].push_back(PS(1));
    auto power = [&](std::size_t k, std::uint32_t e) -> const PS& {
        auto& col = pow[k];
        while (col.size() <= e) col.push_back(col.back() * point[k]);
        return col[e];
    };
    PS acc;
    for (const auto& [m, c] : f.terms()) {
        PS t = PS(c);
        for (std::size_t k = 0; k < point.size(); ++k)
            if (m[k] > 0) t = t * power(k, m[k]);
        acc += t;
    }
    return acc;
}

/// Widen a polynomial in few variables to a larger ambient space by
/// padding exponents with zeros.
template <class S>
multi_poly<S> embed(const multi_poly<S>& f, int nvars) {
    if (nvars < f.nvars())
        throw std::invalid_argument("embed: cannot shrink variable count");
    if (nvars == f.nvars()) return f;
    multi_poly<S> r(f.rep(), nvars);
    for (const auto& [m, c] : f.terms()) {
        monomial t = m;
        t.resize(static_cast<std::size_t>(nvars), 0);
        r.add_term(t, c);
    }
    return r;
}

} // namespace dunkl
