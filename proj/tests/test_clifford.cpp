#include <gtest/gtest.h>

#include <random>

#include "dunkl/serialize.hpp"
#include "dunkl/verify.hpp"

using namespace dunkl;

namespace {

std::mt19937 rng(20240815);

const kappa_scalar K = kappa_scalar::kappa();

kpoly var(int nvars, int i) { return kpoly::variable_power(rep_kind::X, nvars, i); }

} // namespace

TEST(blades, squares_and_anticommutation) {
    // e_i^2 = -1
    for (int i = 0; i < 5; ++i) {
        auto [s, b] = blade_product(blade{1} << i, blade{1} << i);
        EXPECT_EQ(s, -1);
        EXPECT_EQ(b, blade{0});
    }
    // e_i e_j = -e_j e_i, exhaustively through five generators
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            if (i == j) continue;
            auto [s1, b1] = blade_product(blade{1} << i, blade{1} << j);
            auto [s2, b2] = blade_product(blade{1} << j, blade{1} << i);
            EXPECT_EQ(b1, b2);
            EXPECT_EQ(s1, -s2);
        }
    // associativity over all blade triples on four generators
    for (blade a = 0; a < 16; ++a)
        for (blade b = 0; b < 16; ++b)
            for (blade c = 0; c < 16; ++c) {
                auto [s1, ab] = blade_product(a, b);
                auto [s2, ab_c] = blade_product(ab, c);
                auto [s3, bc] = blade_product(b, c);
                auto [s4, a_bc] = blade_product(a, bc);
                EXPECT_EQ(ab_c, a_bc);
                EXPECT_EQ(s1 * s2, s3 * s4);
            }
}

TEST(blades, worked_product) {
    // (e_1 e_2) e_2 = -e_1
    auto [s, b] = blade_product(0b11, 0b10);
    EXPECT_EQ(s, -1);
    EXPECT_EQ(b, blade{0b01});
    EXPECT_EQ(blade_grade(0b1011), 3);
}

TEST(dirac_operator, constants_and_classical_specialization) {
    dunkl_context ctx(3, 5);
    clifford_poly c = clifford_poly::scalar(
        kpoly::constant(rep_kind::X, 3, kappa_scalar(4)));
    EXPECT_TRUE(dirac(ctx, c).is_zero());

    // at kappa = 0, D(x_1 e_1) = e_1 (d/dx_1 x_1) e_1 = -1
    dunkl_context flat(3, 4, rational(0));
    clifford_poly f(3);
    f.add_component(0b01, var(3, 0));
    clifford_poly want(3);
    want.add_component(0, kpoly::constant(rep_kind::X, 3, kappa_scalar(-1)));
    EXPECT_EQ(dirac(flat, f), want);
}

TEST(dirac_operator, square_is_negated_laplacian) {
    for (int N : {2, 3, 4}) {
        dunkl_context ctx(N, 6);
        for (int t = 0; t < 8; ++t) {
            clifford_poly f = verify::random_clifford_poly(rng, N, 5, 4);
            EXPECT_EQ(dirac(ctx, dirac(ctx, f)),
                      apply_laplacian(ctx, f) * kappa_scalar(-1));
        }
    }
}

TEST(monogenic_family, structure_and_annihilation) {
    dunkl_context ctx(3, 5);
    clifford_poly m1 = monogenic(ctx, 1);
    EXPECT_EQ(m1.comps.at(0),
              to_x_rep(ctx, harmonic(ctx, 1, symmetry_type::symmetric)));
    EXPECT_EQ(m1.comps.at(0b11),
              to_x_rep(ctx, harmonic(ctx, 1, symmetry_type::antisymmetric)));
    EXPECT_TRUE(dirac(ctx, m1).is_zero());

    // even case carries the factor (N kappa - kappa + m) / (2 (N kappa + m + 1))
    clifford_poly m2 = monogenic(ctx, 2);
    kappa_scalar factor = (kappa_scalar(2) * K + kappa_scalar(1)) /
                          (kappa_scalar(2) * (kappa_scalar(3) * K + kappa_scalar(2)));
    EXPECT_EQ(m2.comps.at(0b11),
              to_x_rep(ctx, harmonic(ctx, 2, symmetry_type::antisymmetric)) * factor);
    EXPECT_TRUE(dirac(ctx, m2).is_zero());

    for (int n = 3; n <= 4; ++n) EXPECT_TRUE(dirac(ctx, monogenic(ctx, n)).is_zero());
    EXPECT_THROW(monogenic(ctx, 0), std::invalid_argument);
}

TEST(monogenic_family, sum_operator_maps_odd_to_even) {
    // (T1 + T2)(h+odd + e12 h-odd) = 2(Nk+m+1) h+even + e12 (Nk-k+m) h-even
    dunkl_context ctx(3, 6);
    for (int m = 1; m <= 2; ++m) {
        clifford_poly f = monogenic(ctx, 2 * m + 1);
        clifford_poly mapped(3);
        for (const auto& [bl, g] : f.comps) {
            mapped.add_component(bl, apply_dunkl_x(ctx, 0, g) + apply_dunkl_x(ctx, 1, g));
        }
        kappa_scalar nk = kappa_scalar(3) * K;
        clifford_poly want(3);
        want.add_component(0, to_x_rep(ctx, harmonic(ctx, 2 * m, symmetry_type::symmetric)) *
                                  (kappa_scalar(2) * (nk + kappa_scalar(m + 1))));
        want.add_component(
            0b11, to_x_rep(ctx, harmonic(ctx, 2 * m, symmetry_type::antisymmetric)) *
                      (nk - K + kappa_scalar(m)));
        EXPECT_EQ(mapped, want);
    }
}

TEST(clifford_json, round_trip) {
    for (int t = 0; t < 20; ++t) {
        clifford_poly f = verify::random_clifford_poly(rng, 3, 4, 3);
        json j = to_json(f);
        EXPECT_EQ(clifford_from_json(j), f);
    }
    clifford_poly f(2);
    f.add_component(0b11, var(2, 0));
    json j = to_json(f);
    EXPECT_EQ(j["blades"][0]["indices"], json::array({1, 2}));
}
