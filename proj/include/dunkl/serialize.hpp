#pragma once

#include <json.hpp>

#include "dunkl/clifford.hpp"
#include "dunkl/inner_products.hpp"

namespace dunkl {

using json = nlohmann::ordered_json;

/// Term list sorted by the graded-lex order, leading term first.
/// Coefficients are the pipe-separated scalar strings, so the round trip
/// is bit-exact.
inline json to_json(const kpoly& f) {
    json terms = json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        json t;
        t["exp"] = it->first;
        t["coeff"] = to_string(it->second);
        terms.push_back(std::move(t));
    }
    json out;
    out["rep"] = rep_name(f.rep());
    out["nvars"] = f.nvars();
    out["terms"] = std::move(terms);
    return out;
}

inline kpoly kpoly_from_json(const json& j) {
    const std::string rep = j.at("rep").get<std::string>();
    if (rep != "X" && rep != "P")
        throw std::invalid_argument("kpoly_from_json: bad rep tag '" + rep + "'");
    kpoly f(rep == "X" ? rep_kind::X : rep_kind::P, j.at("nvars").get<int>());
    for (const auto& t : j.at("terms")) {
        monomial m = t.at("exp").get<monomial>();
        f.add_term(m, parse_kappa_scalar(t.at("coeff").get<std::string>()));
    }
    return f;
}

/// Blade components with 1-based generator indices.
inline json to_json(const clifford_poly& f) {
    json blades = json::array();
    for (const auto& [bl, g] : f.comps) {
        json indices = json::array();
        for (int k = 0; k < 32; ++k)
            if (bl & (blade{1} << k)) indices.push_back(k + 1);
        json entry;
        entry["indices"] = std::move(indices);
        entry["poly"] = to_json(g);
        blades.push_back(std::move(entry));
    }
    json out;
    out["blades"] = std::move(blades);
    return out;
}

inline clifford_poly clifford_from_json(const json& j) {
    clifford_poly f;
    bool first = true;
    for (const auto& entry : j.at("blades")) {
        blade bl = 0;
        for (int idx : entry.at("indices")) bl |= blade{1} << (idx - 1);
        kpoly g = kpoly_from_json(entry.at("poly"));
        if (first) {
            f = clifford_poly(g.nvars());
            first = false;
        }
        f.add_component(bl, g);
    }
    return f;
}

/// One exported harmonic: basis expansion plus the realized P-form. In a
/// specialized context the coefficients are emitted as plain rationals; a
/// Pochhammer pole turns the entry into an error record, leaving the rest
/// of the run untouched.
inline json harmonic_entry_json(const dunkl_context& ctx, int n, symmetry_type sym) {
    json out;
    out["n"] = n;
    out["sign"] = std::string(1, symmetry_char(sym));
    try {
        planar_poly h = harmonic(ctx, n, sym);
        json basis = json::array();
        for (const auto& [j, c] : h.coeffs) {
            json e;
            e["j"] = j;
            e["coeff"] = ctx.symbolic()
                             ? to_string(c)
                             : dunkl::to_string(c.specialize(*ctx.kappa_value()));
            basis.push_back(std::move(e));
        }
        out["basis"] = std::move(basis);
        out["p_rep"] = to_json(to_p_rep(ctx, h));
    } catch (const std::domain_error& e) {
        out["error"] = e.what();
    }
    return out;
}

struct constants_row {
    int nvars = 0;
    int n = 0;
    char sign = '+';
    std::string kappa_norm;
    std::string sphere_factor;
    std::string sphere_norm;
    std::string error;
};

/// One structure-constant table row; the sphere value is the origin norm
/// divided by the degree factor, never a quadrature.
inline constants_row make_constants_row(const dunkl_context& ctx, int n,
                                        symmetry_type sym) {
    constants_row row;
    row.nvars = ctx.nvars();
    row.n = n;
    row.sign = symmetry_char(sym);
    try {
        kappa_scalar norm = closed_norm(ctx, n, sym);
        kappa_scalar factor = sphere_norm_factor(ctx, n);
        kappa_scalar sphere = norm / factor;
        if (ctx.symbolic()) {
            row.kappa_norm = to_string(norm);
            row.sphere_factor = to_string(factor);
            row.sphere_norm = to_string(sphere);
        } else {
            const rational kv = *ctx.kappa_value();
            row.kappa_norm = dunkl::to_string(norm.specialize(kv));
            row.sphere_factor = dunkl::to_string(factor.specialize(kv));
            row.sphere_norm = dunkl::to_string(sphere.specialize(kv));
        }
    } catch (const std::domain_error& e) {
        row.error = e.what();
    }
    return row;
}

inline json to_json(const constants_row& row) {
    json out;
    out["N"] = row.nvars;
    out["n"] = row.n;
    out["sign"] = std::string(1, row.sign);
    if (!row.error.empty()) {
        out["error"] = row.error;
        return out;
    }
    out["kappa_norm"] = row.kappa_norm;
    out["sphere_factor"] = row.sphere_factor;
    out["sphere_norm"] = row.sphere_norm;
    return out;
}

} // namespace dunkl
