#pragma once

#include "dunkl/planar.hpp"

namespace dunkl {
namespace oracles {

/// Verification scaffolding. These routines re-derive coefficient tables
/// from generating functions by truncated series expansion, independently
/// of the closed-form implementations they are checked against.

/// Chebyshev expansion coefficients: T_k and U_k written in powers of s.
/// T_k(s) = sum_j (-k)_{2j} / (j! (1-k)_j) 2^{k-1-2j} s^{k-2j}   (k >= 1)
/// U_k(s) = sum_j (-k)_{2j} / (j! (-k)_j)  2^{k-2j}   s^{k-2j}   (k >= 1)
inline rational cheb_t_coeff(int k, int j) {
    if (k == 0) return j == 0 ? rational(1) : rational(0);
    rational num = pochhammer(rational(-k), 2 * static_cast<unsigned>(j));
    rational den = rational(factorial(static_cast<unsigned long>(j))) *
                   pochhammer(rational(1 - k), static_cast<unsigned>(j));
    return pow2(k - 1 - 2 * j) * num / den;
}

inline rational cheb_u_coeff(int k, int j) {
    if (k == 0) return j == 0 ? rational(1) : rational(0);
    rational num = pochhammer(rational(-k), 2 * static_cast<unsigned>(j));
    rational den = rational(factorial(static_cast<unsigned long>(j))) *
                   pochhammer(rational(-k), static_cast<unsigned>(j));
    return pow2(k - 2 * j) * num / den;
}

struct planar_table {
    // (n, s-power) -> polynomial in the first two P-variables
    std::map<std::pair<int, int>, kpoly> entries;

    kpoly at(int n, int j) const {
        auto it = entries.find({n, j});
        return it == entries.end() ? kpoly(rep_kind::P, 2) : it->second;
    }
};

/// Expand the symmetric (which = 1) or antisymmetric (which = 2)
/// generating function through t-order n_max. The double geometric series
/// in (zt p_1, t p_2 / z) is folded into Chebyshev polynomials of
/// s = (z + 1/z)/2, whose s-power expansions produce the table.
inline planar_table u_series_table(int which, int n_max) {
    if (which != 1 && which != 2)
        throw std::invalid_argument("u_series_table: which must be 1 or 2");
    planar_table tab;
    for (int n = 0; n <= n_max; ++n) {
        for (int m = 0; m <= n / 2; ++m) {
            kpoly pair(rep_kind::P, 2);
            auto hi = static_cast<std::uint32_t>(n - m);
            auto lo = static_cast<std::uint32_t>(m);
            if (which == 1) {
                // epsilon_{n,m} halves the diagonal term
                pair.add_term(monomial{hi, lo}, kappa_scalar(1));
                if (hi != lo) pair.add_term(monomial{lo, hi}, kappa_scalar(1));
            } else {
                if (hi == lo) continue;
                pair.add_term(monomial{hi, lo}, kappa_scalar(1));
                pair.add_term(monomial{lo, hi}, kappa_scalar(-1));
            }
            const int k = which == 1 ? n - 2 * m : n - 1 - 2 * m;
            if (k < 0) continue;
            for (int j = 0; 2 * j <= k; ++j) {
                rational c = which == 1 ? cheb_t_coeff(k, j) : cheb_u_coeff(k, j);
                if (c == 0) continue;
                auto key = std::make_pair(n, k - 2 * j);
                auto [it, fresh] = tab.entries.try_emplace(key, kpoly(rep_kind::P, 2));
                it->second += pair * kappa_scalar(c);
            }
        }
    }
    return tab;
}

struct scalar_table {
    std::map<std::pair<int, int>, kappa_scalar> entries;

    kappa_scalar at(int n, int j) const {
        auto it = entries.find({n, j});
        return it == entries.end() ? kappa_scalar() : it->second;
    }
};

/// Truncated expansion of
///   (1 - 2st + 2t^2)^(2-beta) / (1 - 4st + 8s^2 t^2 - 8st^3 + 4t^4)^(alpha+1)
/// in powers of t and s. Route: pull out (1 - 2st + 2t^2)^(-2alpha-beta-2l)
/// factors against powers of 4(1-s^2)t^2, expanding each factor with the
/// binomial variant of the Gegenbauer generating function. The returned
/// entry (n, j) is the coefficient of t^n s^(n-2j).
inline scalar_table g_series_table(const kappa_scalar& alpha,
                                   const kappa_scalar& beta, int n_max) {
    // bivariate polynomials in (s, t) with field coefficients
    using biv = multi_poly<kappa_scalar>;
    auto trunc_mul = [&](const biv& a, const biv& b) {
        biv r(rep_kind::X, 2);
        monomial m(2);
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms()) {
                m[0] = ma[0] + mb[0];
                m[1] = ma[1] + mb[1];
                if (m[1] > static_cast<std::uint32_t>(n_max)) continue;
                r.add_term(m, ca * cb);
            }
        return r;
    };

    biv total(rep_kind::X, 2);
    for (int l = 0; 2 * l <= n_max; ++l) {
        const kappa_scalar lambda =
            kappa_scalar(2) * alpha + beta + kappa_scalar(2 * l);
        // (1 - 2st + 2t^2)^(-lambda) truncated:
        // sum_{k,m} (lambda)_k / k! (lambda+k)_m / m! (2s t)^k (-2 t^2)^m
        biv core(rep_kind::X, 2);
        for (int k = 0; k <= n_max - 2 * l; ++k) {
            kappa_scalar pk = pochhammer(lambda, static_cast<unsigned>(k)) *
                              kappa_scalar(rational(1) /
                                           rational(factorial(static_cast<unsigned long>(k))));
            for (int m = 0; k + 2 * m <= n_max - 2 * l; ++m) {
                kappa_scalar pm =
                    pochhammer(lambda + kappa_scalar(k), static_cast<unsigned>(m)) *
                    kappa_scalar(rational(1) /
                                 rational(factorial(static_cast<unsigned long>(m))));
                rational scale = pow2(k + m);
                if (m % 2 != 0) scale = -scale;
                core.add_term(monomial{static_cast<std::uint32_t>(k),
                                       static_cast<std::uint32_t>(k + 2 * m)},
                              pk * pm * kappa_scalar(scale));
            }
        }
        // (alpha+1)_l / l! * (2t)^(2l) * (1-s^2)^l
        biv front(rep_kind::X, 2);
        kappa_scalar fl = pochhammer(alpha + kappa_scalar(1), static_cast<unsigned>(l)) *
                          kappa_scalar(pow2(2 * l) /
                                       rational(factorial(static_cast<unsigned long>(l))));
        for (int u = 0; u <= l; ++u) {
            rational b = rational(binomial(static_cast<unsigned long>(l),
                                           static_cast<unsigned long>(u)));
            if (u % 2 != 0) b = -b;
            front.add_term(monomial{static_cast<std::uint32_t>(2 * u),
                                    static_cast<std::uint32_t>(2 * l)},
                           fl * kappa_scalar(b));
        }
        total += trunc_mul(front, core);
    }

    scalar_table tab;
    for (const auto& [m, c] : total.terms()) {
        const int spow = static_cast<int>(m[0]);
        const int n = static_cast<int>(m[1]);
        if (n > n_max) continue;
        const int diff = n - spow;
        if (diff < 0 || diff % 2 != 0) continue; // cannot arise
        tab.entries.emplace(std::make_pair(n, diff / 2), c);
    }
    return tab;
}

} // namespace oracles
} // namespace dunkl
