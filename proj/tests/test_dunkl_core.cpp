#include <gtest/gtest.h>

#include <random>

#include "dunkl/verify.hpp"

using namespace dunkl;

namespace {

std::mt19937 rng(20240813);

const kappa_scalar K = kappa_scalar::kappa();

kpoly var(int nvars, int i) { return kpoly::variable_power(rep_kind::X, nvars, i); }

kpoly pvar(int nvars, int i, std::uint32_t e = 1) {
    return kpoly::variable_power(rep_kind::P, nvars, i, e);
}

kpoly random_p_poly(int nvars, int max_degree, int max_terms) {
    kpoly f = verify::random_x_poly(rng, nvars, max_degree, max_terms);
    kpoly g(rep_kind::P, nvars);
    for (const auto& [m, c] : f.terms()) g.add_term(m, c);
    return g;
}

} // namespace

TEST(dunkl_x, basic_actions) {
    dunkl_context ctx(3, 6);
    // T_1 x_1 = 1 + 2 kappa for three variables
    EXPECT_EQ(apply_dunkl_x(ctx, 0, var(3, 0)),
              kpoly::constant(rep_kind::X, 3, kappa_scalar(1) + kappa_scalar(2) * K));
    EXPECT_TRUE(apply_dunkl_x(ctx, 0, kpoly::constant(rep_kind::X, 3, kappa_scalar(5)))
                    .is_zero());
    EXPECT_EQ(apply_dunkl_x(ctx, 0, var(3, 0) + var(3, 1) + var(3, 2)),
              kpoly::constant(rep_kind::X, 3, kappa_scalar(1)));
}

TEST(dunkl_x, degree_drop_on_homogeneous_input) {
    dunkl_context ctx(3, 6);
    for (int t = 0; t < 20; ++t) {
        kpoly f = verify::random_x_poly(rng, 3, 0, 1); // single monomial
        monomial m(3, 0);
        m[0] = 2; m[1] = 1; m[2] = 1;
        f = kpoly::term(rep_kind::X, m, kappa_scalar(make_rational(t + 1, 2)));
        kpoly out = apply_dunkl_x(ctx, 0, f);
        EXPECT_TRUE(out.is_homogeneous());
        EXPECT_EQ(out.total_deg(), f.total_deg() - 1);
    }
}

TEST(laplacian, basic_actions) {
    dunkl_context ctx(3, 6);
    EXPECT_TRUE(apply_laplacian(ctx, var(3, 0) - var(3, 1)).is_zero());
    EXPECT_TRUE(
        apply_laplacian(ctx, kpoly::constant(rep_kind::X, 3, kappa_scalar(3))).is_zero());
    // classical specialization at kappa = 0
    dunkl_context flat(2, 4, rational(0));
    EXPECT_EQ(apply_laplacian(flat, var(2, 0) * var(2, 0)),
              kpoly::constant(rep_kind::X, 2, kappa_scalar(2)));
}

TEST(p_basis, generating_function_coefficients) {
    dunkl_context ctx(2, 6);
    EXPECT_EQ(p_basis_poly(ctx, 0, 0),
              kpoly::constant(rep_kind::X, 2, kappa_scalar(1)));
    // p_1(x_1; x) = (1+kappa) x_1 + kappa x_2 for two variables
    EXPECT_EQ(p_basis_poly(ctx, 1, 0),
              var(2, 0) * (kappa_scalar(1) + K) + var(2, 1) * K);
    // annihilation by the operators of the other variables
    dunkl_context ctx3(3, 6);
    EXPECT_TRUE(apply_dunkl_x(ctx3, 1, p_basis_poly(ctx3, 3, 0)).is_zero());
    EXPECT_TRUE(apply_dunkl_x(ctx3, 2, p_basis_poly(ctx3, 3, 0)).is_zero());
    EXPECT_THROW(p_basis_poly(ctx3, 7, 0), std::invalid_argument);
}

TEST(p_basis, homogeneous_with_polynomial_coefficients) {
    dunkl_context ctx(4, 5);
    for (int i = 0; i < 4; ++i)
        for (int n = 0; n <= 5; ++n) {
            const kpoly& p = p_basis_poly(ctx, n, i);
            EXPECT_TRUE(p.is_homogeneous());
            EXPECT_EQ(p.total_deg(), n);
            for (const auto& [m, c] : p.terms()) EXPECT_TRUE(c.is_polynomial());
        }
}

TEST(psi_calculus, inverse_on_monomials) {
    dunkl_context ctx(2, 6);
    EXPECT_EQ(psi_inverse(ctx, pvar(2, 0)), p_basis_poly(ctx, 1, 0));
    // multiplicativity of the monomial image
    EXPECT_EQ(psi_inverse(ctx, pvar(2, 0) * pvar(2, 1)),
              p_basis_poly(ctx, 1, 0) * p_basis_poly(ctx, 1, 1));
    EXPECT_THROW(psi_inverse(ctx, var(2, 0)), std::invalid_argument);
}

TEST(psi_calculus, forward_inverse_round_trip) {
    for (int N : {2, 3}) {
        dunkl_context ctx(N, 6);
        for (int t = 0; t < 8; ++t) {
            kpoly g = random_p_poly(N, 5, 4);
            EXPECT_EQ(psi_forward(ctx, psi_inverse(ctx, g)), g);
            kpoly f = verify::random_x_poly(rng, N, 5, 4);
            EXPECT_EQ(psi_inverse(ctx, psi_forward(ctx, f)), f);
        }
    }
}

TEST(psi_calculus, singular_specialization_reported) {
    // at kappa = -1/2 with two variables the degree-1 block degenerates
    dunkl_context ctx(2, 4, make_rational(-1, 2));
    EXPECT_TRUE(ctx.parameter_warning().has_value());
    EXPECT_THROW(psi_forward(ctx, var(2, 0)), std::domain_error);
}

TEST(dunkl_p, leading_term_and_annihilation) {
    dunkl_context ctx(3, 6);
    for (std::uint32_t a = 1; a <= 4; ++a) {
        kpoly out = apply_dunkl_p(ctx, 0, pvar(3, 0, a));
        EXPECT_EQ(out, pvar(3, 0, a - 1) * (kappa_scalar(static_cast<long>(a)) +
                                            kappa_scalar(3) * K));
    }
    EXPECT_TRUE(apply_dunkl_p(ctx, 0, pvar(3, 1, 3)).is_zero());
}

TEST(dunkl_p, agrees_with_transport_on_example) {
    dunkl_context ctx(3, 6);
    kpoly g = pvar(3, 0, 2) * pvar(3, 1); // p_1^2 p_2
    kpoly lhs = psi_inverse(ctx, apply_dunkl_p(ctx, 0, g));
    kpoly rhs = apply_dunkl_x(ctx, 0, psi_inverse(ctx, g));
    EXPECT_EQ(lhs, rhs);
    // and the literal forward direction
    EXPECT_EQ(psi_forward(ctx, rhs), apply_dunkl_p(ctx, 0, g));
}

TEST(dunkl_p, explicit_expansion_matches_substitution) {
    dunkl_context ctx2(2, 6);
    // alpha = (1,0): the action is the constant 2 kappa + 1
    EXPECT_EQ(dunkl_on_p_monomial(ctx2, 0, monomial{1, 0}),
              kpoly::constant(rep_kind::P, 2, kappa_scalar(2) * K + kappa_scalar(1)));
    EXPECT_TRUE(dunkl_on_p_monomial(ctx2, 0, monomial{0, 3}).is_zero());
    for (int N : {2, 3, 4}) {
        dunkl_context ctx(N, 6);
        for (int d = 0; d <= 5; ++d)
            for (const monomial& alpha : detail::monomials_of_degree(N, d))
                for (int i = 0; i < N; ++i)
                    EXPECT_EQ(dunkl_on_p_monomial(ctx, i, alpha),
                              apply_dunkl_p(ctx, i, kpoly::term(rep_kind::P, alpha,
                                                                kappa_scalar(1))));
    }
}

TEST(operator_properties, commutativity_and_equivariance) {
    for (int N : {2, 3, 4}) {
        dunkl_context ctx(N, 6);
        auto res = verify::suite_commute(ctx, 10, 5, 77);
        for (const auto& r : res) EXPECT_TRUE(r.pass) << r.name;
    }
}

TEST(context, validation_and_modes) {
    EXPECT_THROW(dunkl_context(1, 4), std::invalid_argument);
    EXPECT_THROW(dunkl_context(3, -1), std::invalid_argument);
    dunkl_context sym(3, 4);
    EXPECT_TRUE(sym.symbolic());
    EXPECT_EQ(sym.kappa(), kappa_scalar::kappa());
    dunkl_context spec(3, 4, make_rational(1, 2));
    EXPECT_FALSE(spec.symbolic());
    EXPECT_FALSE(spec.parameter_warning().has_value());
    EXPECT_EQ(spec.kappa(), kappa_scalar(make_rational(1, 2)));
}
