#include <gtest/gtest.h>

#include <random>

#include "dunkl/serialize.hpp"
#include "dunkl/verify.hpp"

using namespace dunkl;

namespace {

std::mt19937 rng(20240812);

kpoly var(int nvars, int i) {
    return kpoly::variable_power(rep_kind::X, nvars, i);
}

} // namespace

TEST(poly_arith, products_and_identity) {
    kpoly x1 = var(2, 0), x2 = var(2, 1);
    EXPECT_EQ((x1 + x2) * (x1 - x2), x1 * x1 - x2 * x2);
    kpoly f = x1 * x1 + x2 * kappa_scalar(3);
    EXPECT_EQ(f + kpoly(rep_kind::X, 2), f);
    kpoly g = (x1 + x2 * kappa_scalar::kappa()) * x1;
    EXPECT_EQ(g, x1 * x1 + x1 * x2 * kappa_scalar::kappa());
}

TEST(poly_arith, rep_and_nvars_mismatch_rejected) {
    kpoly fx(rep_kind::X, 2), fp(rep_kind::P, 2), f3(rep_kind::X, 3);
    EXPECT_THROW(fx + fp, std::invalid_argument);
    EXPECT_THROW(fx * f3, std::invalid_argument);
}

TEST(poly_arith, no_zero_coefficients_survive) {
    for (int t = 0; t < 100; ++t) {
        kpoly f = verify::random_x_poly(rng, 3, 5, 6);
        kpoly g = verify::random_x_poly(rng, 3, 5, 6);
        for (const kpoly& h : {f + g, f - g, f * g, f - f, f * g - g * f}) {
            for (const auto& [m, c] : h.terms()) EXPECT_FALSE(c.is_zero());
        }
        EXPECT_TRUE((f - f).is_zero());
    }
}

TEST(transpose_op, examples_and_involution) {
    kpoly f = var(2, 0) * var(2, 0) * var(2, 1); // x1^2 x2
    EXPECT_EQ(transpose_vars(f, 0, 1), var(2, 0) * var(2, 1) * var(2, 1));
    kpoly s = var(2, 0) + var(2, 1);
    EXPECT_EQ(transpose_vars(s, 0, 1), s);
    for (int t = 0; t < 50; ++t) {
        kpoly g = verify::random_x_poly(rng, 3, 6, 6);
        EXPECT_EQ(transpose_vars(transpose_vars(g, 0, 2), 0, 2), g);
        // ring homomorphism
        kpoly h = verify::random_x_poly(rng, 3, 4, 4);
        EXPECT_EQ(transpose_vars(g * h, 1, 2),
                  transpose_vars(g, 1, 2) * transpose_vars(h, 1, 2));
    }
    EXPECT_THROW(transpose_vars(f, 0, 0), std::invalid_argument);
    EXPECT_THROW(transpose_vars(f, 0, 5), std::invalid_argument);
}

TEST(divided_difference_op, examples) {
    kpoly x1 = var(2, 0), x2 = var(2, 1);
    EXPECT_EQ(divided_difference(x1 * x1, 0, 1), x1 + x2);
    EXPECT_TRUE(divided_difference(x1 * x2 + x1 + x2, 0, 1).is_zero());
    EXPECT_EQ(divided_difference(x1 * x1 * x1, 0, 1),
              x1 * x1 + x1 * x2 + x2 * x2);
    kpoly p(rep_kind::P, 2);
    EXPECT_THROW(divided_difference(p, 0, 1), std::invalid_argument);
}

TEST(divided_difference_op, product_recovers_antisymmetrization) {
    for (int t = 0; t < 60; ++t) {
        kpoly f = verify::random_x_poly(rng, 3, 6, 6);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                kpoly lhs = (var(3, i) - var(3, j)) * divided_difference(f, i, j);
                EXPECT_EQ(lhs, f - transpose_vars(f, i, j));
            }
    }
}

TEST(evaluate_op, special_point_values) {
    std::vector<gaussian_kappa> pt = special_point(3);
    kpoly x1 = var(3, 0), x2 = var(3, 1);
    EXPECT_EQ(evaluate(x1 - x2, pt),
              gaussian_kappa(kappa_scalar(0), kappa_scalar(2)));
    EXPECT_EQ(evaluate(x1 * x2, pt), gaussian_kappa(2));
    EXPECT_EQ(evaluate(kpoly::constant(rep_kind::X, 3, kappa_scalar(1)), pt),
              gaussian_kappa(1));
    std::vector<gaussian_kappa> short_pt(2);
    EXPECT_THROW(evaluate(x1, short_pt), std::invalid_argument);
}

TEST(poly_structure, degree_and_homogeneity) {
    kpoly x1 = var(2, 0), x2 = var(2, 1);
    EXPECT_EQ((x1 * x1 + x1 * x2).total_deg(), 2);
    EXPECT_TRUE((x1 * x1 + x1 * x2).is_homogeneous());
    EXPECT_FALSE((x1 * x1 + x2).is_homogeneous());
    EXPECT_EQ(kpoly(rep_kind::X, 2).total_deg(), -1);
}

TEST(poly_json, round_trip_and_term_order) {
    for (int t = 0; t < 40; ++t) {
        kpoly f = verify::random_x_poly(rng, 3, 6, 8);
        json j = to_json(f);
        EXPECT_EQ(kpoly_from_json(j), f);
    }
    // graded-lex order, leading term first
    kpoly f = var(2, 0) + var(2, 0) * var(2, 1) + var(2, 1) * var(2, 1) +
              kpoly::constant(rep_kind::X, 2, kappa_scalar(1));
    json j = to_json(f);
    EXPECT_EQ(j["rep"], "X");
    EXPECT_EQ(j["nvars"], 2);
    std::vector<monomial> exps;
    for (const auto& term : j["terms"]) exps.push_back(term["exp"].get<monomial>());
    std::vector<monomial> want = {{1, 1}, {0, 2}, {1, 0}, {0, 0}};
    EXPECT_EQ(exps, want);
    // byte determinism of the serialized form
    EXPECT_EQ(to_json(f).dump(), j.dump());
}
