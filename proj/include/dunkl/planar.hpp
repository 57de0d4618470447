#pragma once

#include "dunkl/dunkl_ops.hpp"

namespace dunkl {

/// The two monic auxiliary families defined by three-term recurrences.
enum class g_family : std::uint8_t { odd, even };

/// n-th member of the chosen family, in an abstract variable v.
/// odd:  g_{n+1} = (v + 3n + 1) g_n - n (2n - 1) g_{n-1}
/// even: g_{n+1} = (v + 3n + 2) g_n - n (2n + 1) g_{n-1}
inline ratpoly g_poly(g_family kind, int n) {
    if (n < 0) throw std::invalid_argument("g_poly: negative index");
    struct table {
        std::mutex mu;
        std::vector<ratpoly> odd{ratpoly(1)};
        std::vector<ratpoly> even{ratpoly(1)};
    };
    static table tab;
    std::lock_guard<std::mutex> lock(tab.mu);
    auto& col = kind == g_family::odd ? tab.odd : tab.even;
    const long off = kind == g_family::odd ? 1 : 2;
    const long slope = kind == g_family::odd ? -1 : 1;
    const ratpoly v = ratpoly::indeterminate();
    while (static_cast<int>(col.size()) <= n) {
        long m = static_cast<long>(col.size()) - 1; // recurrence index
        const ratpoly& gm = col.back();
        ratpoly prev = col.size() >= 2 ? col[col.size() - 2] : ratpoly{};
        ratpoly next = (v + ratpoly(3 * m + off)) * gm -
                       ratpoly(rational(m * (2 * m + slope))) * prev;
        col.push_back(std::move(next));
    }
    return col[static_cast<std::size_t>(n)];
}

/// Symmetry type under the (1,2) transposition.
enum class symmetry_type : std::uint8_t { symmetric, antisymmetric };

inline char symmetry_char(symmetry_type s) {
    return s == symmetry_type::symmetric ? '+' : '-';
}

/// Planar polynomial: a polynomial in the first two P-variables with a
/// definite (1,2) symmetry, stored as an expansion over the symmetric
/// (phi) or antisymmetric (psi) planar basis at its degree. The map key
/// is the s-power index of the basis element; entries violating the
/// parity constraint never appear.
struct planar_poly {
    int degree = 0;
    symmetry_type sym = symmetry_type::symmetric;
    std::map<int, kappa_scalar> coeffs;

    bool is_zero() const { return coeffs.empty(); }

    friend bool operator==(const planar_poly& a, const planar_poly& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.degree == b.degree && a.sym == b.sym && a.coeffs == b.coeffs;
    }
};

inline planar_poly planar_zero(int degree, symmetry_type sym) {
    return planar_poly{degree, sym, {}};
}

inline planar_poly scale(const planar_poly& f, const kappa_scalar& s) {
    planar_poly r{f.degree, f.sym, {}};
    if (s.is_zero()) return r;
    for (const auto& [j, c] : f.coeffs) r.coeffs.emplace(j, c * s);
    return r;
}

inline planar_poly operator+(const planar_poly& a, const planar_poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree != b.degree || a.sym != b.sym)
        throw std::invalid_argument("planar_poly: degree or symmetry mismatch");
    planar_poly r = a;
    for (const auto& [j, c] : b.coeffs) {
        auto [it, fresh] = r.coeffs.emplace(j, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) r.coeffs.erase(it);
        }
    }
    return r;
}

inline planar_poly operator-(const planar_poly& a, const planar_poly& b) {
    return a + scale(b, kappa_scalar(-1));
}

namespace detail {

inline bool phi_index_ok(int n, int j) {
    return n >= 0 && j >= 0 && j <= n && (n - j) % 2 == 0;
}
inline bool psi_index_ok(int n, int j) {
    return n >= 1 && j >= 0 && j <= n - 1 && (n - 1 - j) % 2 == 0;
}

// p_1^a p_2^b as a 2-variable P-monomial
inline void add_pair_term(kpoly& out, std::uint32_t a, std::uint32_t b,
                          const rational& c) {
    out.add_term(monomial{a, b}, kappa_scalar(c));
}

} // namespace detail

/// Symmetric planar basis element phi_{n,j}, j the s-power, as an explicit
/// polynomial in the first two P-variables. Zero for out-of-parity or
/// out-of-range indices so boundary cases of the recurrences need no
/// special handling.
inline kpoly phi_poly(int n, int j) {
    kpoly out(rep_kind::P, 2);
    if (!detail::phi_index_ok(n, j)) return out;
    const int jj = (n - j) / 2; // number of steps below the top power
    const rational lead = pow2(n - 1 - 2 * jj);
    for (int i = 0; i <= jj; ++i) {
        rational num = pochhammer(rational(n + 1 - 2 * jj), 2 * static_cast<unsigned>(i));
        rational den = rational(factorial(static_cast<unsigned long>(i))) *
                       pochhammer(rational(1 - n + 2 * jj - 2 * i),
                                  static_cast<unsigned>(i));
        rational c = lead * num / den;
        auto hi = static_cast<std::uint32_t>(n - jj + i);
        auto lo = static_cast<std::uint32_t>(jj - i);
        detail::add_pair_term(out, hi, lo, c);
        detail::add_pair_term(out, lo, hi, c);
    }
    return out;
}

/// Antisymmetric planar basis element psi_{n,j}.
inline kpoly psi_poly(int n, int j) {
    kpoly out(rep_kind::P, 2);
    if (!detail::psi_index_ok(n, j)) return out;
    const int jj = (n - 1 - j) / 2;
    const rational lead = pow2(n - 1 - 2 * jj);
    for (int i = 0; i <= jj; ++i) {
        rational c = lead *
                     pochhammer(rational(n - 2 * jj), static_cast<unsigned>(i)) /
                     rational(factorial(static_cast<unsigned long>(i)));
        if (i % 2 != 0) c = -c;
        auto hi = static_cast<std::uint32_t>(n - jj + i);
        auto lo = static_cast<std::uint32_t>(jj - i);
        detail::add_pair_term(out, hi, lo, c);
        detail::add_pair_term(out, lo, hi, -c);
    }
    return out;
}

inline kpoly planar_basis_poly(symmetry_type sym, int n, int j) {
    return sym == symmetry_type::symmetric ? phi_poly(n, j) : psi_poly(n, j);
}

/// Expansion realized as a polynomial in two P-variables.
inline kpoly to_p_rep(const planar_poly& f) {
    kpoly out(rep_kind::P, 2);
    for (const auto& [j, c] : f.coeffs)
        out += planar_basis_poly(f.sym, f.degree, j) * c;
    return out;
}

/// Expansion realized in the ambient variable count of a context.
inline kpoly to_p_rep(const dunkl_context& ctx, const planar_poly& f) {
    return embed(to_p_rep(f), ctx.nvars());
}

/// Coordinate-representation image under the inverse calculus.
inline kpoly to_x_rep(const dunkl_context& ctx, const planar_poly& f) {
    return psi_inverse(ctx, to_p_rep(ctx, f));
}

/// The planar harmonic polynomial of the requested degree and symmetry.
/// Coefficients come from the auxiliary families evaluated at a shifted
/// multiple of kappa, divided by Pochhammer symbols; at a specialized
/// parameter a vanishing Pochhammer factor is reported as a pole.
inline planar_poly harmonic(const dunkl_context& ctx, int n, symmetry_type sym) {
    if (n < 0 || (sym == symmetry_type::antisymmetric && n < 1))
        throw std::invalid_argument("harmonic: index out of range");
    const kappa_scalar nk = kappa_scalar(ctx.nvars()) * ctx.kappa();
    const kappa_scalar nk1 = nk - ctx.kappa(); // (N-1) kappa
    const int m = n / 2;

    planar_poly h{n, sym, {}};
    auto push = [&](int spower, g_family fam, const kappa_scalar& at, int j,
                    const kappa_scalar& poch_base, int poch_off) {
        kappa_scalar gv = eval_at(g_poly(fam, j), at);
        kappa_scalar den = pochhammer(poch_base + kappa_scalar(poch_off),
                                      static_cast<unsigned>(j));
        if (den.is_zero())
            throw std::domain_error("harmonic: Pochhammer pole at specialized kappa");
        kappa_scalar c = kappa_scalar(pow2(-j)) * gv / den;
        if (!c.is_zero()) h.coeffs.emplace(spower, c);
    };

    if (sym == symmetry_type::antisymmetric) {
        if (n % 2 == 1) {
            const kappa_scalar at = nk1 + kappa_scalar(m);
            for (int j = 0; j <= m; ++j)
                push(2 * j, g_family::odd, at, j, nk, m + 2);
        } else {
            const kappa_scalar at = nk1 + kappa_scalar(m);
            for (int j = 0; j <= m - 1; ++j)
                push(2 * j + 1, g_family::even, at, j, nk, m + 2);
        }
    } else {
        if (n % 2 == 1) {
            const kappa_scalar at = nk1 + kappa_scalar(m + 1);
            for (int j = 0; j <= m; ++j)
                push(2 * j + 1, g_family::even, at, j, nk, m + 2);
        } else {
            const kappa_scalar at = nk1 + kappa_scalar(m);
            for (int j = 0; j <= m; ++j)
                push(2 * j, g_family::odd, at, j, nk, m + 1);
        }
    }
    return h;
}

/// The two first-order operators that act inside the planar family.
/// `sum` preserves the symmetry type, `diff` flips it.
enum class pair_op : std::uint8_t { sum, diff };

/// Action of T_1 + T_2 or T_1 - T_2 on a basis expansion, using the
/// four closed recurrences on the planar basis. No polynomial arithmetic
/// is involved; out-of-range target indices contribute nothing.
inline planar_poly apply_sum_diff(const dunkl_context& ctx, const planar_poly& f,
                                  pair_op op) {
    const kappa_scalar two_nk =
        kappa_scalar(2 * ctx.nvars()) * ctx.kappa();
    const kappa_scalar two_nk_mm =
        two_nk - kappa_scalar(2) * ctx.kappa(); // 2(N-1) kappa
    const int n = f.degree;

    symmetry_type out_sym = f.sym;
    if (op == pair_op::diff)
        out_sym = f.sym == symmetry_type::symmetric ? symmetry_type::antisymmetric
                                                    : symmetry_type::symmetric;
    planar_poly out{n - 1 < 0 ? 0 : n - 1, out_sym, {}};
    if (n == 0 || f.is_zero()) return out;

    auto ok = [&](int j) {
        return out_sym == symmetry_type::symmetric ? detail::phi_index_ok(n - 1, j)
                                                   : detail::psi_index_ok(n - 1, j);
    };
    auto add = [&](int j, const kappa_scalar& c) {
        if (!ok(j) || c.is_zero()) return;
        auto [it, fresh] = out.coeffs.emplace(j, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) out.coeffs.erase(it);
        }
    };

    for (const auto& [j, c] : f.coeffs) {
        const kappa_scalar nj = kappa_scalar(n + j);
        if (op == pair_op::sum) {
            if (f.sym == symmetry_type::symmetric) {
                add(j + 1, -kappa_scalar(j + 1) * c);
                add(j - 1, (two_nk + nj) * c);
            } else {
                add(j + 1, -kappa_scalar(j + 1) * c);
                add(j - 1, (two_nk + nj + kappa_scalar(1)) * c);
            }
        } else {
            if (f.sym == symmetry_type::symmetric) {
                add(j, -(two_nk_mm + nj + kappa_scalar(1)) * c);
                add(j - 2, (two_nk + nj) * c);
            } else {
                add(j, (two_nk + nj + kappa_scalar(1)) * c);
            }
        }
    }
    return out;
}

/// Least common denominator of the stored coefficients, as a polynomial
/// scalar. Scaling by it makes every coefficient polynomial in kappa,
/// which keeps downstream operator arithmetic free of gcd normalization.
inline kappa_scalar common_denominator(const planar_poly& f) {
    ratpoly l(1);
    for (const auto& [j, c] : f.coeffs) l = poly_lcm(l, c.den());
    return kappa_scalar(l);
}

} // namespace dunkl
