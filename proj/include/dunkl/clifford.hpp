#pragma once

#include <bit>

#include "dunkl/planar.hpp"

namespace dunkl {

/// Basis blade of the Clifford algebra with negative signature: bit b set
/// means the generator attached to variable b (0-based) is present. The
/// scalar blade is 0.
using blade = std::uint32_t;

inline int blade_grade(blade a) { return std::popcount(a); }

/// Product of two basis blades under e_i e_j = -e_j e_i (i != j) and
/// e_i^2 = -1. Returns the sign and the resulting blade (symmetric
/// difference of the index sets). The sign counts the transpositions
/// needed to interleave the factors, plus one flip per squared generator.
inline std::pair<int, blade> blade_product(blade a, blade b) {
    int sign = 1;
    // for each generator of b, count the generators of a above it that it
    // must move past
    blade rest = b;
    while (rest) {
        blade low = rest & (~rest + 1); // lowest set bit
        blade above = a & ~((low << 1) - 1);
        if (std::popcount(above) % 2 != 0) sign = -sign;
        if (a & low) sign = -sign; // e^2 = -1
        a ^= low;
        rest ^= low;
    }
    return {sign, a};
}

/// Polynomial with Clifford-algebra coefficients: a finite map from basis
/// blades to coordinate-representation polynomials. Zero components are
/// never stored.
struct clifford_poly {
    int nvars = 0;
    std::map<blade, kpoly> comps;

    explicit clifford_poly(int nv = 0) : nvars(nv) {}

    static clifford_poly scalar(const kpoly& f) {
        clifford_poly r(f.nvars());
        if (!f.is_zero()) r.comps.emplace(blade{0}, f);
        return r;
    }

    bool is_zero() const { return comps.empty(); }

    void add_component(blade b, const kpoly& f) {
        if (f.is_zero()) return;
        auto [it, fresh] = comps.emplace(b, f);
        if (!fresh) {
            it->second += f;
            if (it->second.is_zero()) comps.erase(it);
        }
    }

    friend clifford_poly operator+(const clifford_poly& a, const clifford_poly& b) {
        if (a.nvars != b.nvars)
            throw std::invalid_argument("clifford_poly: nvars mismatch");
        clifford_poly r = a;
        for (const auto& [bl, f] : b.comps) r.add_component(bl, f);
        return r;
    }
    friend clifford_poly operator-(const clifford_poly& a, const clifford_poly& b) {
        return a + (b * kappa_scalar(-1));
    }
    friend clifford_poly operator*(const clifford_poly& a, const kappa_scalar& s) {
        clifford_poly r(a.nvars);
        if (s.is_zero()) return r;
        for (const auto& [bl, f] : a.comps) r.comps.emplace(bl, f * s);
        return r;
    }
    friend bool operator==(const clifford_poly& a, const clifford_poly& b) {
        return a.nvars == b.nvars && a.comps == b.comps;
    }
};

/// Left multiplication by a single generator.
inline clifford_poly left_mul_generator(int i, const clifford_poly& f) {
    clifford_poly r(f.nvars);
    const blade e = blade{1} << i;
    for (const auto& [bl, g] : f.comps) {
        auto [sign, out] = blade_product(e, bl);
        r.add_component(out, sign < 0 ? -g : g);
    }
    return r;
}

/// The Dirac-type operator: componentwise Dunkl application followed by
/// left multiplication with the matching generator. Its square is the
/// negated Laplacian.
inline clifford_poly dirac(const dunkl_context& ctx, const clifford_poly& f) {
    clifford_poly r(f.nvars);
    for (int i = 0; i < ctx.nvars(); ++i) {
        clifford_poly ti(f.nvars);
        for (const auto& [bl, g] : f.comps)
            ti.add_component(bl, apply_dunkl_x(ctx, i, g));
        r = r + left_mul_generator(i, ti);
    }
    return r;
}

inline clifford_poly apply_laplacian(const dunkl_context& ctx, const clifford_poly& f) {
    clifford_poly r(f.nvars);
    for (const auto& [bl, g] : f.comps) r.add_component(bl, apply_laplacian(ctx, g));
    return r;
}

/// Planar monogenic polynomial of degree n: the symmetric harmonic on the
/// scalar blade plus a multiple of the antisymmetric one on e_1 e_2. The
/// even-degree multiple carries a parameter-dependent factor whose
/// denominator can vanish at a specialized parameter.
inline clifford_poly monogenic(const dunkl_context& ctx, int n) {
    if (n < 1) throw std::invalid_argument("monogenic: degree must be positive");
    const blade e12 = 0b11;
    clifford_poly r(ctx.nvars());
    r.add_component(0, to_x_rep(ctx, harmonic(ctx, n, symmetry_type::symmetric)));
    kpoly hm = to_x_rep(ctx, harmonic(ctx, n, symmetry_type::antisymmetric));
    if (n % 2 == 0) {
        const int m = n / 2;
        kappa_scalar num =
            kappa_scalar(ctx.nvars() - 1) * ctx.kappa() + kappa_scalar(m);
        kappa_scalar den = kappa_scalar(2) *
                           (kappa_scalar(ctx.nvars()) * ctx.kappa() + kappa_scalar(m + 1));
        if (den.is_zero())
            throw std::domain_error("monogenic: pole at specialized kappa");
        hm = hm * (num / den);
    }
    r.add_component(e12, hm);
    return r;
}

} // namespace dunkl
