#pragma once

#include <functional>
#include <random>
#include <sstream>

#include "dunkl/clifford.hpp"
#include "dunkl/inner_products.hpp"
#include "dunkl/oracles.hpp"

namespace dunkl {

/// Least common denominator over all coefficients; scaling by it clears
/// every denominator, which zero tests and norm oracles exploit.
inline kappa_scalar common_denominator(const kpoly& f) {
    ratpoly l(1);
    for (const auto& [m, c] : f.terms())
        if (!c.den().is_one()) l = poly_lcm(l, c.den());
    return kappa_scalar(l);
}

namespace verify {

struct check_result {
    std::string name;
    bool pass = false;
    std::string detail;
};

inline check_result make_check(std::string name, bool pass, std::string detail = "") {
    return {std::move(name), pass, std::move(detail)};
}

// ---------------------------------------------------------------------------
// single-identity checkers

/// Laplacian annihilates the realized polynomial. Denominators are
/// cleared first so the operator arithmetic stays polynomial in kappa.
inline bool check_harmonicity(const dunkl_context& ctx, const planar_poly& h) {
    planar_poly scaled = scale(h, common_denominator(h));
    return apply_laplacian(ctx, to_x_rep(ctx, scaled)).is_zero();
}

/// Every operator beyond the first two annihilates the realized
/// polynomial.
inline bool check_annihilation(const dunkl_context& ctx, const planar_poly& h) {
    planar_poly scaled = scale(h, common_denominator(h));
    kpoly x = to_x_rep(ctx, scaled);
    for (int j = 2; j < ctx.nvars(); ++j)
        if (!apply_dunkl_x(ctx, j, x).is_zero()) return false;
    return true;
}

/// Basis-rule action agrees with genuine operator application through the
/// inverse calculus.
inline bool check_basis_rule(const dunkl_context& ctx, const planar_poly& f,
                             pair_op op) {
    planar_poly by_rule = apply_sum_diff(ctx, f, op);
    kpoly x = to_x_rep(ctx, f);
    kpoly t1 = apply_dunkl_x(ctx, 0, x);
    kpoly t2 = apply_dunkl_x(ctx, 1, x);
    kpoly by_op = op == pair_op::sum ? t1 + t2 : t1 - t2;
    return by_op == to_x_rep(ctx, by_rule);
}

/// Three-term relation among consecutive stored coefficients of an
/// antisymmetric harmonic, the relation its construction solves.
inline bool check_coefficient_recurrence(const dunkl_context& ctx,
                                         const planar_poly& h) {
    const int n = h.degree;
    const kappa_scalar nk = kappa_scalar(ctx.nvars()) * ctx.kappa();
    const kappa_scalar k = ctx.kappa();
    auto coeff = [&](int sp) {
        auto it = h.coeffs.find(sp);
        return it == h.coeffs.end() ? kappa_scalar() : it->second;
    };
    for (int j = 1; 2 * j <= n - 1; ++j) {
        kappa_scalar t1 = kappa_scalar(8) * (nk + kappa_scalar(n - j + 1)) *
                          (nk + kappa_scalar(n - j)) * coeff(n + 1 - 2 * j);
        kappa_scalar t2 = kappa_scalar(4) * (nk - k + kappa_scalar(2 * n - 1 - 3 * j)) *
                          (nk + kappa_scalar(n - j)) * coeff(n - 1 - 2 * j);
        kappa_scalar t3 = kappa_scalar((n - 2 * j - 2) * (n - 2 * j - 1)) *
                          coeff(n - 3 - 2 * j);
        if (!(t1 - t2 + t3).is_zero()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// random inputs for property checks

inline kpoly random_x_poly(std::mt19937& rng, int nvars, int max_degree,
                           int max_terms) {
    std::uniform_int_distribution<int> ddeg(0, max_degree);
    std::uniform_int_distribution<int> dvar(0, nvars - 1);
    std::uniform_int_distribution<int> dnum(-9, 9);
    std::uniform_int_distribution<int> dden(1, 4);
    std::uniform_int_distribution<int> dterms(1, max_terms);
    kpoly f(rep_kind::X, nvars);
    const int terms = dterms(rng);
    for (int t = 0; t < terms; ++t) {
        monomial m(static_cast<std::size_t>(nvars), 0);
        const int deg = ddeg(rng);
        for (int d = 0; d < deg; ++d) m[static_cast<std::size_t>(dvar(rng))] += 1;
        int num = dnum(rng);
        if (num == 0) num = 1;
        f.add_term(m, kappa_scalar(make_rational(num, dden(rng))));
    }
    return f;
}

inline clifford_poly random_clifford_poly(std::mt19937& rng, int nvars,
                                          int max_degree, int max_terms) {
    std::uniform_int_distribution<blade> dblade(0, (blade{1} << nvars) - 1);
    std::uniform_int_distribution<int> dcomp(1, 3);
    clifford_poly f(nvars);
    const int comps = dcomp(rng);
    for (int c = 0; c < comps; ++c)
        f.add_component(dblade(rng), random_x_poly(rng, nvars, max_degree, max_terms));
    return f;
}

// ---------------------------------------------------------------------------
// suites

inline std::vector<check_result> suite_g_values() {
    std::vector<check_result> out;
    auto expect = [&](g_family fam, int n, std::vector<rational> coeffs) {
        std::string name = std::string("g-values ") +
                           (fam == g_family::odd ? "odd" : "even") + " n=" +
                           std::to_string(n);
        out.push_back(make_check(name, g_poly(fam, n) ==
                                           ratpoly::from_coeffs(std::move(coeffs))));
    };
    expect(g_family::odd, 0, {rational(1)});
    expect(g_family::odd, 1, {rational(1), rational(1)});
    expect(g_family::odd, 2, {rational(3), rational(5), rational(1)});
    expect(g_family::odd, 3, {rational(15), rational(32), rational(12), rational(1)});
    expect(g_family::even, 0, {rational(1)});
    expect(g_family::even, 1, {rational(2), rational(1)});
    expect(g_family::even, 2, {rational(7), rational(7), rational(1)});
    expect(g_family::even, 3, {rational(36), rational(53), rational(15), rational(1)});
    return out;
}

inline std::vector<check_result> suite_harmonicity(const dunkl_context& ctx,
                                                   int nmax) {
    std::vector<check_result> out;
    for (int n = 0; n <= nmax; ++n) {
        for (symmetry_type sym :
             {symmetry_type::symmetric, symmetry_type::antisymmetric}) {
            if (sym == symmetry_type::antisymmetric && n < 1) continue;
            std::string name = "harmonicity N=" + std::to_string(ctx.nvars()) +
                               " n=" + std::to_string(n) + " sign=" +
                               symmetry_char(sym);
            try {
                out.push_back(
                    make_check(name, check_harmonicity(ctx, harmonic(ctx, n, sym))));
            } catch (const std::domain_error& e) {
                out.push_back(make_check(name, true, std::string("skipped: ") + e.what()));
            }
        }
    }
    return out;
}

inline std::vector<check_result> suite_annihilation(const dunkl_context& ctx,
                                                    int nmax) {
    std::vector<check_result> out;
    for (int n = 0; n <= nmax; ++n) {
        for (symmetry_type sym :
             {symmetry_type::symmetric, symmetry_type::antisymmetric}) {
            if (sym == symmetry_type::antisymmetric && n < 1) continue;
            std::string name = "annihilation N=" + std::to_string(ctx.nvars()) +
                               " n=" + std::to_string(n) + " sign=" +
                               symmetry_char(sym);
            try {
                out.push_back(
                    make_check(name, check_annihilation(ctx, harmonic(ctx, n, sym))));
            } catch (const std::domain_error& e) {
                out.push_back(make_check(name, true, std::string("skipped: ") + e.what()));
            }
        }
    }
    return out;
}

/// The four first-order recurrences, every basis element up to nmax,
/// checked against genuine operator application.
inline std::vector<check_result> suite_recurrences(const dunkl_context& ctx,
                                                   int nmax) {
    std::vector<check_result> out;
    for (int n = 0; n <= nmax; ++n) {
        bool ok_sum_phi = true, ok_diff_phi = true;
        bool ok_sum_psi = true, ok_diff_psi = true;
        for (int j = 0; j <= n; ++j) {
            if (detail::phi_index_ok(n, j)) {
                planar_poly f{n, symmetry_type::symmetric, {{j, kappa_scalar(1)}}};
                ok_sum_phi = ok_sum_phi && check_basis_rule(ctx, f, pair_op::sum);
                ok_diff_phi = ok_diff_phi && check_basis_rule(ctx, f, pair_op::diff);
            }
            if (detail::psi_index_ok(n, j)) {
                planar_poly f{n, symmetry_type::antisymmetric, {{j, kappa_scalar(1)}}};
                ok_sum_psi = ok_sum_psi && check_basis_rule(ctx, f, pair_op::sum);
                ok_diff_psi = ok_diff_psi && check_basis_rule(ctx, f, pair_op::diff);
            }
        }
        std::string base = "recurrences N=" + std::to_string(ctx.nvars()) +
                           " n=" + std::to_string(n);
        out.push_back(make_check(base + " sum/phi", ok_sum_phi));
        out.push_back(make_check(base + " diff/phi", ok_diff_phi));
        out.push_back(make_check(base + " sum/psi", ok_sum_psi));
        out.push_back(make_check(base + " diff/psi", ok_diff_psi));
    }
    // coefficient recurrence carried by the antisymmetric harmonics
    for (int n = 2; n <= nmax + 1; ++n)
        out.push_back(make_check(
            "recurrences h-coeff n=" + std::to_string(n),
            check_coefficient_recurrence(
                ctx, harmonic(ctx, n, symmetry_type::antisymmetric))));
    return out;
}

/// The eight first-order actions on the harmonics.
inline std::vector<check_result> suite_tth_action(const dunkl_context& ctx,
                                                  int mmax) {
    std::vector<check_result> out;
    const kappa_scalar nk = kappa_scalar(ctx.nvars()) * ctx.kappa();
    const kappa_scalar nk1 = nk - ctx.kappa();
    auto H = [&](int n, symmetry_type s) {
        if (s == symmetry_type::antisymmetric && n == 0)
            return planar_zero(0, symmetry_type::antisymmetric);
        return harmonic(ctx, n, s);
    };
    const auto S = symmetry_type::symmetric;
    const auto A = symmetry_type::antisymmetric;
    for (int m = 0; m <= mmax; ++m) {
        const kappa_scalar two_m1 = kappa_scalar(2) * (nk + kappa_scalar(m + 1));
        const kappa_scalar mm = nk1 + kappa_scalar(m);
        std::string tag = " m=" + std::to_string(m);
        out.push_back(make_check(
            "tth-action (T1-T2)h-odd" + tag,
            apply_sum_diff(ctx, H(2 * m + 1, A), pair_op::diff) ==
                scale(H(2 * m, S), two_m1)));
        out.push_back(make_check(
            "tth-action (T1+T2)h-odd" + tag,
            apply_sum_diff(ctx, H(2 * m + 1, A), pair_op::sum) ==
                scale(H(2 * m, A), mm)));
        out.push_back(make_check(
            "tth-action (T1-T2)h+odd" + tag,
            apply_sum_diff(ctx, H(2 * m + 1, S), pair_op::diff) ==
                scale(H(2 * m, A), -mm)));
        out.push_back(make_check(
            "tth-action (T1+T2)h+odd" + tag,
            apply_sum_diff(ctx, H(2 * m + 1, S), pair_op::sum) ==
                scale(H(2 * m, S), two_m1)));
        if (m >= 1) {
            out.push_back(make_check(
                "tth-action (T1-T2)h-even" + tag,
                apply_sum_diff(ctx, H(2 * m, A), pair_op::diff) ==
                    scale(H(2 * m - 1, S), two_m1)));
            out.push_back(make_check(
                "tth-action (T1+T2)h-even" + tag,
                apply_sum_diff(ctx, H(2 * m, A), pair_op::sum) ==
                    scale(H(2 * m - 1, A), two_m1)));
            out.push_back(make_check(
                "tth-action (T1-T2)h+even" + tag,
                apply_sum_diff(ctx, H(2 * m, S), pair_op::diff) ==
                    scale(H(2 * m - 1, A), -mm)));
            out.push_back(make_check(
                "tth-action (T1+T2)h+even" + tag,
                apply_sum_diff(ctx, H(2 * m, S), pair_op::sum) ==
                    scale(H(2 * m - 1, S), mm)));
        }
    }
    return out;
}

/// Power chains collapsing the harmonics to Pochhammer constants.
inline std::vector<check_result> suite_powers(const dunkl_context& ctx, int mmax) {
    std::vector<check_result> out;
    const kappa_scalar nk = kappa_scalar(ctx.nvars()) * ctx.kappa();
    const kappa_scalar nk1 = nk - ctx.kappa();
    auto constant_of = [&](const planar_poly& f) {
        auto it = f.coeffs.find(0);
        return it == f.coeffs.end() ? kappa_scalar() : it->second;
    };
    for (int m = 0; m <= mmax; ++m) {
        std::string tag = " m=" + std::to_string(m);
        kappa_scalar pm = pochhammer(nk1 + kappa_scalar(1), static_cast<unsigned>(m));
        kappa_scalar qm = pochhammer(nk + kappa_scalar(1), static_cast<unsigned>(m));
        kappa_scalar qm1 = pochhammer(nk + kappa_scalar(1), static_cast<unsigned>(m) + 1);

        planar_poly hp_even = harmonic(ctx, 2 * m, symmetry_type::symmetric);
        out.push_back(make_check(
            "powers (T1+T2)^2m h+even" + tag,
            constant_of(apply_sum_power(ctx, hp_even, 2 * m)) ==
                kappa_scalar(pow2(m)) * pm * qm));

        planar_poly hp_odd = harmonic(ctx, 2 * m + 1, symmetry_type::symmetric);
        out.push_back(make_check(
            "powers (T1+T2)^(2m+1) h+odd" + tag,
            constant_of(apply_sum_power(ctx, hp_odd, 2 * m + 1)) ==
                kappa_scalar(pow2(m + 1)) * pm * qm1));

        planar_poly hm_odd = harmonic(ctx, 2 * m + 1, symmetry_type::antisymmetric);
        out.push_back(make_check(
            "powers (T1+T2)^2m (T1-T2) h-odd" + tag,
            constant_of(apply_sum_power(
                ctx, apply_sum_diff(ctx, hm_odd, pair_op::diff), 2 * m)) ==
                kappa_scalar(pow2(m + 1)) * pm * qm1));

        if (m >= 1) {
            kappa_scalar pm1 =
                pochhammer(nk1 + kappa_scalar(1), static_cast<unsigned>(m) - 1);
            planar_poly hm_even = harmonic(ctx, 2 * m, symmetry_type::antisymmetric);
            out.push_back(make_check(
                "powers (T1+T2)^(2m-1) (T1-T2) h-even" + tag,
                constant_of(apply_sum_power(
                    ctx, apply_sum_diff(ctx, hm_even, pair_op::diff), 2 * m - 1)) ==
                    kappa_scalar(pow2(m + 1)) * pm1 * qm1));
        }
    }
    return out;
}

/// Special-point values against the closed-form S constants.
inline std::vector<check_result> suite_val1pI(const dunkl_context& ctx, int nmax) {
    std::vector<check_result> out;
    const kappa_scalar k = ctx.kappa();
    for (int n = 0; n <= nmax; ++n) {
        bool ok_phi = true, ok_psi = true;
        for (int j = 0; 2 * j <= n; ++j) {
            planar_poly phi{n, symmetry_type::symmetric,
                            {{n - 2 * j, kappa_scalar(1)}}};
            gaussian_kappa lhs = special_point_eval(ctx, phi);
            gaussian_kappa rhs(s_constant(n, j, k, kappa_scalar(1)));
            ok_phi = ok_phi && lhs == rhs;

            planar_poly psi{n + 1, symmetry_type::antisymmetric,
                            {{n - 2 * j, kappa_scalar(1)}}};
            gaussian_kappa lhs2 = special_point_eval(ctx, psi);
            gaussian_kappa rhs2(kappa_scalar(0),
                                kappa_scalar(2) * s_constant(n, j, k, kappa_scalar(2)));
            ok_psi = ok_psi && lhs2 == rhs2;
        }
        out.push_back(make_check("val1pI phi n=" + std::to_string(n), ok_phi));
        out.push_back(make_check("val1pI psi n=" + std::to_string(n + 1), ok_psi));
    }
    return out;
}

/// Series expansion of the master generating function against the
/// closed-form double sum.
inline std::vector<check_result> suite_genfunS(int nmax, unsigned seed,
                                               int random_pairs) {
    std::vector<check_result> out;
    auto compare = [&](const kappa_scalar& alpha, const kappa_scalar& beta,
                       const std::string& label) {
        oracles::scalar_table tab = oracles::g_series_table(alpha, beta, nmax);
        bool ok = true;
        for (int n = 0; n <= nmax && ok; ++n)
            for (int j = 0; 2 * j <= n && ok; ++j)
                ok = tab.at(n, j) == s_constant(n, j, alpha, beta);
        out.push_back(make_check("genfunS " + label, ok));
    };
    compare(kappa_scalar::kappa(), kappa_scalar(1), "alpha=kappa beta=1");
    compare(kappa_scalar::kappa(), kappa_scalar(2), "alpha=kappa beta=2");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dnum(-6, 6), dden(1, 4);
    for (int t = 0; t < random_pairs; ++t) {
        rational a = make_rational(dnum(rng), dden(rng));
        rational b = make_rational(dnum(rng), dden(rng));
        compare(kappa_scalar(a), kappa_scalar(b),
                "alpha=" + dunkl::to_string(a) + " beta=" + dunkl::to_string(b));
    }
    return out;
}

/// Closed-form norms against the direct operator-substitution pairing,
/// with the shortcut route and cross-symmetry orthogonality thrown in.
inline std::vector<check_result> suite_norms(const dunkl_context& ctx, int nmax) {
    std::vector<check_result> out;
    for (int n = 0; n <= nmax; ++n) {
        for (symmetry_type sym :
             {symmetry_type::symmetric, symmetry_type::antisymmetric}) {
            if (sym == symmetry_type::antisymmetric && n < 1) continue;
            std::string name = "norms N=" + std::to_string(ctx.nvars()) +
                               " n=" + std::to_string(n) + " sign=" +
                               symmetry_char(sym);
            planar_poly h = harmonic(ctx, n, sym);
            kappa_scalar d = common_denominator(h);
            kpoly scaled = to_x_rep(ctx, scale(h, d));
            kappa_scalar direct = kappa_inner(ctx, scaled, scaled) / (d * d);
            kappa_scalar closed = closed_norm(ctx, n, sym);
            out.push_back(make_check(name + " closed==direct", closed == direct));
            out.push_back(make_check(name + " shortcut==direct",
                                     symmetry_reduction_eval(ctx, h) == direct));
        }
        if (n >= 1) {
            planar_poly hp = harmonic(ctx, n, symmetry_type::symmetric);
            planar_poly hm = harmonic(ctx, n, symmetry_type::antisymmetric);
            kappa_scalar cross =
                kappa_inner(ctx, to_x_rep(ctx, hp), to_x_rep(ctx, hm));
            out.push_back(make_check(
                "norms cross n=" + std::to_string(n) + " <h+,h->", cross.is_zero()));
        }
    }
    return out;
}

inline std::vector<check_result> suite_monogenics(const dunkl_context& ctx, int nmax,
                                                  int random_count, unsigned seed) {
    std::vector<check_result> out;
    for (int n = 1; n <= nmax; ++n) {
        clifford_poly f = monogenic(ctx, n);
        // clear denominators; the operator is linear so the zero test is
        // unaffected
        ratpoly l(1);
        for (const auto& [bl, g] : f.comps) l = poly_lcm(l, common_denominator(g).num());
        out.push_back(make_check("monogenics D-annihilation n=" + std::to_string(n),
                                 dirac(ctx, f * kappa_scalar(l)).is_zero()));
    }
    std::mt19937 rng(seed);
    bool ok = true;
    for (int t = 0; t < random_count; ++t) {
        clifford_poly f = random_clifford_poly(rng, ctx.nvars(), 5, 4);
        clifford_poly lhs = dirac(ctx, dirac(ctx, f));
        clifford_poly rhs = apply_laplacian(ctx, f) * kappa_scalar(-1);
        ok = ok && lhs == rhs;
    }
    out.push_back(make_check("monogenics D^2 == -laplacian N=" +
                                 std::to_string(ctx.nvars()) + " x" +
                                 std::to_string(random_count),
                             ok));
    return out;
}

/// Generating-function tables against the closed-form basis polynomials.
inline std::vector<check_result> suite_useries(int nmax) {
    std::vector<check_result> out;
    oracles::planar_table t1 = oracles::u_series_table(1, nmax);
    oracles::planar_table t2 = oracles::u_series_table(2, nmax);
    for (int n = 0; n <= nmax; ++n) {
        bool ok1 = true, ok2 = true;
        for (int j = 0; j <= n; ++j) {
            ok1 = ok1 && t1.at(n, j) == phi_poly(n, j);
            ok2 = ok2 && t2.at(n, j) == psi_poly(n, j);
        }
        out.push_back(make_check("useries u1 n=" + std::to_string(n), ok1));
        out.push_back(make_check("useries u2 n=" + std::to_string(n), ok2));
    }
    return out;
}

/// Commutativity and transposition equivariance on random inputs.
inline std::vector<check_result> suite_commute(const dunkl_context& ctx, int count,
                                               int max_degree, unsigned seed) {
    std::vector<check_result> out;
    std::mt19937 rng(seed);
    bool ok_comm = true, ok_equi = true;
    for (int t = 0; t < count; ++t) {
        kpoly f = random_x_poly(rng, ctx.nvars(), max_degree, 5);
        for (int i = 0; i < ctx.nvars() && ok_comm; ++i)
            for (int j = i + 1; j < ctx.nvars() && ok_comm; ++j) {
                ok_comm = apply_dunkl_x(ctx, i, apply_dunkl_x(ctx, j, f)) ==
                          apply_dunkl_x(ctx, j, apply_dunkl_x(ctx, i, f));
            }
        for (int i = 0; i < ctx.nvars() && ok_equi; ++i)
            for (int j = 0; j < ctx.nvars() && ok_equi; ++j) {
                if (i == j) continue;
                ok_equi = apply_dunkl_x(ctx, i, transpose_vars(f, i, j)) ==
                          transpose_vars(apply_dunkl_x(ctx, j, f), i, j);
            }
    }
    out.push_back(make_check("commute TiTj==TjTi N=" + std::to_string(ctx.nvars()) +
                                 " x" + std::to_string(count),
                             ok_comm));
    out.push_back(make_check("commute equivariance N=" + std::to_string(ctx.nvars()),
                             ok_equi));
    return out;
}

/// The P-representation operator against its two independent derivations,
/// plus the calculus round trip.
inline std::vector<check_result> suite_dunkl_p(const dunkl_context& ctx,
                                               int max_degree, unsigned seed) {
    std::vector<check_result> out;
    bool ok_formula = true, ok_transport = true, ok_annihilate = true;
    for (int d = 0; d <= max_degree; ++d) {
        for (const monomial& alpha : detail::monomials_of_degree(ctx.nvars(), d)) {
            kpoly g = kpoly::term(rep_kind::P, alpha, kappa_scalar(1));
            for (int i = 0; i < ctx.nvars(); ++i) {
                kpoly via_sub = apply_dunkl_p(ctx, i, g);
                ok_formula =
                    ok_formula && via_sub == dunkl_on_p_monomial(ctx, i, alpha);
                ok_transport = ok_transport &&
                               psi_inverse(ctx, via_sub) ==
                                   apply_dunkl_x(ctx, i, psi_inverse(ctx, g));
            }
        }
    }
    // basis annihilation: T_j kills the series attached to other variables
    for (int n = 0; n <= std::min(max_degree, ctx.degree_cap()); ++n)
        for (int i = 0; i < ctx.nvars() && ok_annihilate; ++i)
            for (int j = 0; j < ctx.nvars() && ok_annihilate; ++j) {
                if (i == j) continue;
                ok_annihilate = apply_dunkl_x(ctx, j, p_basis_poly(ctx, n, i)).is_zero();
            }
    out.push_back(make_check("dunkl-p explicit==substitution deg<=" +
                                 std::to_string(max_degree),
                             ok_formula));
    out.push_back(make_check("dunkl-p transport through calculus", ok_transport));
    out.push_back(make_check("dunkl-p basis annihilation", ok_annihilate));

    std::mt19937 rng(seed);
    bool ok_round = true;
    for (int t = 0; t < 10 && ok_round; ++t) {
        kpoly f = random_x_poly(rng, ctx.nvars(), std::min(max_degree, 4), 4);
        kpoly g = psi_forward(ctx, f);
        ok_round = psi_inverse(ctx, g) == f;
    }
    out.push_back(make_check("dunkl-p calculus round trip", ok_round));
    return out;
}

// ---------------------------------------------------------------------------
// registry

struct options {
    int nvars = 3;
    int max_degree = 6;
    std::optional<rational> kappa;
    unsigned seed = 7031;
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "g-values",  "harmonicity", "annihilation", "recurrences", "tth-action",
        "powers",    "val1pI",      "genfunS",      "norms",       "monogenics",
        "useries",   "commute",     "dunkl-p"};
    return names;
}

inline std::vector<check_result> run_suite(const std::string& name,
                                           const options& opt) {
    const int nmax = opt.max_degree;
    auto ctx_cap = [&](int extra) {
        return dunkl_context(opt.nvars, nmax + extra, opt.kappa);
    };
    if (name == "g-values") return suite_g_values();
    if (name == "harmonicity") return suite_harmonicity(ctx_cap(0), nmax);
    if (name == "annihilation") return suite_annihilation(ctx_cap(0), nmax);
    if (name == "recurrences") return suite_recurrences(ctx_cap(1), std::min(nmax, 7));
    if (name == "tth-action") return suite_tth_action(ctx_cap(1), std::min(nmax / 2, 3));
    if (name == "powers") return suite_powers(ctx_cap(1), std::min(nmax / 2, 3));
    if (name == "val1pI") return suite_val1pI(ctx_cap(1), std::min(nmax, 6));
    if (name == "genfunS") return suite_genfunS(std::max(nmax, 8), opt.seed, 5);
    if (name == "norms") return suite_norms(ctx_cap(0), std::min(nmax, 6));
    if (name == "monogenics")
        return suite_monogenics(ctx_cap(0), std::min(nmax, 6), 10, opt.seed);
    if (name == "useries") return suite_useries(std::max(nmax, 8));
    if (name == "commute") return suite_commute(ctx_cap(0), 20, 5, opt.seed);
    if (name == "dunkl-p") return suite_dunkl_p(ctx_cap(0), std::min(nmax, 5), opt.seed);
    throw std::invalid_argument("unknown verification suite '" + name + "'");
}

inline std::vector<check_result> run_all(const options& opt) {
    std::vector<check_result> out;
    for (const auto& name : suite_names()) {
        auto part = run_suite(name, opt);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

} // namespace verify
} // namespace dunkl
