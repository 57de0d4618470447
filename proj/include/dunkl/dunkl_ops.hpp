#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "dunkl/multipoly.hpp"

namespace dunkl {

using kpoly = multi_poly<kappa_scalar>;

namespace detail {

inline std::vector<monomial> monomials_of_degree(int nvars, int deg) {
    std::vector<monomial> out;
    monomial cur(static_cast<std::size_t>(nvars), 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == nvars - 1) {
            cur[static_cast<std::size_t>(pos)] = static_cast<std::uint32_t>(rem);
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[static_cast<std::size_t>(pos)] = static_cast<std::uint32_t>(e);
            self(self, pos + 1, rem - e);
        }
        cur[static_cast<std::size_t>(pos)] = 0;
    };
    rec(rec, 0, deg);
    return out;
}

} // namespace detail

/// Ambient data for the type-A operator calculus: number of variables,
/// coupling parameter (symbolic by default, or a fixed rational), and a
/// degree cap bounding the precomputed basis tables.
///
/// Contexts are immutable after construction; the generating-function
/// table is built eagerly and the product cache is guarded by a mutex, so
/// concurrent readers are safe.
class dunkl_context {
  public:
    explicit dunkl_context(int nvars, int degree_cap = 12,
                           std::optional<rational> kappa_value = std::nullopt)
        : nvars_(nvars), degree_cap_(degree_cap), kappa_value_(kappa_value) {
        if (nvars < 2)
            throw std::invalid_argument("dunkl_context: need at least 2 variables");
        if (degree_cap < 0)
            throw std::invalid_argument("dunkl_context: negative degree cap");
        kappa_ = kappa_value_ ? kappa_scalar(*kappa_value_) : kappa_scalar::kappa();
        if (kappa_value_ && *kappa_value_ * nvars <= -1)
            warning_ = "kappa = " + dunkl::to_string(*kappa_value_) +
                       " violates kappa > -1/" + std::to_string(nvars);
        build_tables();
    }

    int nvars() const { return nvars_; }
    int degree_cap() const { return degree_cap_; }
    bool symbolic() const { return !kappa_value_.has_value(); }
    std::optional<rational> kappa_value() const { return kappa_value_; }

    /// The coupling parameter as a field element (the indeterminate in
    /// symbolic mode, a constant otherwise).
    const kappa_scalar& kappa() const { return kappa_; }

    std::optional<std::string> parameter_warning() const { return warning_; }

    /// Basis polynomial of degree n attached to variable i (0-based):
    /// the r^n coefficient of (1 - r x_i)^{-1} prod_j (1 - r x_j)^{-kappa}.
    const kpoly& p_basis(int i, int n) const {
        if (i < 0 || i >= nvars_)
            throw std::invalid_argument("p_basis: variable index out of range");
        if (n < 0 || n > degree_cap_)
            throw std::invalid_argument("p_basis: degree outside cap");
        return p_tab_[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)];
    }

    /// Image of a P-monomial under the inverse calculus: the product of
    /// the attached basis polynomials. Cached per exponent vector.
    kpoly p_monomial_image(const monomial& alpha) const {
        if (alpha.size() != static_cast<std::size_t>(nvars_))
            throw std::invalid_argument("p_monomial_image: monomial length mismatch");
        {
            std::lock_guard<std::mutex> lock(cache_->mu);
            auto it = cache_->images.find(alpha);
            if (it != cache_->images.end()) return it->second;
        }
        kpoly result = kpoly::constant(rep_kind::X, nvars_, kappa_scalar(1));
        bool nontrivial = false;
        for (int i = 0; i < nvars_; ++i) {
            std::uint32_t e = alpha[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            result = nontrivial ? result * p_basis(i, static_cast<int>(e))
                                : p_basis(i, static_cast<int>(e));
            nontrivial = true;
        }
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto [it, ignore] = cache_->images.emplace(alpha, std::move(result));
        return it->second;
    }

    struct basis_block {
        std::vector<monomial> basis; // graded-lex within the degree
        std::map<monomial, std::size_t, grlex_less> index;
        std::vector<std::vector<kappa_scalar>> inverse;
    };

    /// Inverse of the degree-block change of basis between the product
    /// basis and the monomials, computed once per degree and cached.
    /// Throws if the block is singular, which only happens at a
    /// non-generic specialized parameter value.
    const basis_block& basis_change_inverse(int deg) const {
        {
            std::lock_guard<std::mutex> lock(cache_->mu);
            auto it = cache_->blocks.find(deg);
            if (it != cache_->blocks.end()) return it->second;
        }
        basis_block blk;
        blk.basis = detail::monomials_of_degree(nvars_, deg);
        const std::size_t n = blk.basis.size();
        for (std::size_t k = 0; k < n; ++k) blk.index.emplace(blk.basis[k], k);

        // augmented [M | I]; column c of M holds the coefficients of the
        // image of the c-th product-basis element
        std::vector<std::vector<kappa_scalar>> mat(n,
                                                   std::vector<kappa_scalar>(2 * n));
        for (std::size_t c = 0; c < n; ++c) {
            kpoly img = p_monomial_image(blk.basis[c]);
            for (const auto& [m, v] : img.terms()) mat[blk.index.at(m)][c] = v;
        }
        for (std::size_t k = 0; k < n; ++k) mat[k][n + k] = kappa_scalar(1);

        std::vector<std::size_t> perm(n);
        for (std::size_t k = 0; k < n; ++k) perm[k] = k;
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (piv < n && mat[perm[piv]][col].is_zero()) ++piv;
            if (piv == n)
                throw std::domain_error(
                    "basis_change_inverse: block singular at this parameter value");
            std::swap(perm[col], perm[piv]);
            const std::size_t r0 = perm[col];
            kappa_scalar inv = mat[r0][col].reciprocal();
            for (std::size_t c = col; c < 2 * n; ++c) mat[r0][c] *= inv;
            for (std::size_t r = 0; r < n; ++r) {
                const std::size_t rr = perm[r];
                if (rr == r0 || mat[rr][col].is_zero()) continue;
                kappa_scalar factor = mat[rr][col];
                for (std::size_t c = col; c < 2 * n; ++c)
                    mat[rr][c] -= factor * mat[r0][c];
            }
        }
        blk.inverse.assign(n, std::vector<kappa_scalar>(n));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                blk.inverse[r][c] = mat[perm[r]][n + c];

        std::lock_guard<std::mutex> lock(cache_->mu);
        auto [it, ignore] = cache_->blocks.emplace(deg, std::move(blk));
        return it->second;
    }

  private:
    void build_tables() {
        // power sums P_k = sum_j x_j^k
        std::vector<kpoly> psum;
        psum.reserve(static_cast<std::size_t>(degree_cap_) + 1);
        for (int k = 0; k <= degree_cap_; ++k) {
            kpoly s(rep_kind::X, nvars_);
            for (int j = 0; j < nvars_; ++j) {
                monomial m(static_cast<std::size_t>(nvars_), 0);
                m[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(k);
                s.add_term(m, kappa_scalar(1));
            }
            psum.push_back(std::move(s));
        }

        // a_n from the logarithmic derivative of prod (1 - r x_j)^{-kappa}:
        // n a_n = kappa * sum_{k=1..n} P_k a_{n-k}
        std::vector<kpoly> a;
        a.reserve(static_cast<std::size_t>(degree_cap_) + 1);
        a.push_back(kpoly::constant(rep_kind::X, nvars_, kappa_scalar(1)));
        for (int n = 1; n <= degree_cap_; ++n) {
            kpoly acc(rep_kind::X, nvars_);
            for (int k = 1; k <= n; ++k)
                acc += psum[static_cast<std::size_t>(k)] * a[static_cast<std::size_t>(n - k)];
            a.push_back(acc * (kappa_ * kappa_scalar(make_rational(1, n))));
        }

        // multiply in the geometric factor (1 - r x_i)^{-1}
        p_tab_.assign(static_cast<std::size_t>(nvars_), {});
        for (int i = 0; i < nvars_; ++i) {
            auto& col = p_tab_[static_cast<std::size_t>(i)];
            col.reserve(static_cast<std::size_t>(degree_cap_) + 1);
            for (int n = 0; n <= degree_cap_; ++n) {
                kpoly pn(rep_kind::X, nvars_);
                for (int m = 0; m <= n; ++m) {
                    for (const auto& [mono, c] : a[static_cast<std::size_t>(n - m)].terms()) {
                        monomial t = mono;
                        t[static_cast<std::size_t>(i)] += static_cast<std::uint32_t>(m);
                        pn.add_term(t, c);
                    }
                }
                col.push_back(std::move(pn));
            }
        }
    }

    // mutex-guarded memo; held indirectly so contexts stay movable
    struct memo {
        std::mutex mu;
        std::map<monomial, kpoly, grlex_less> images;
        std::map<int, basis_block> blocks;
    };

    int nvars_;
    int degree_cap_;
    std::optional<rational> kappa_value_;
    kappa_scalar kappa_;
    std::optional<std::string> warning_;
    std::vector<std::vector<kpoly>> p_tab_;
    std::unique_ptr<memo> cache_ = std::make_unique<memo>();
};

/// The i-th type-A Dunkl operator in the coordinate representation:
/// T_i f = d f / d x_i + kappa * sum_{j != i} (f - f^(i,j)) / (x_i - x_j).
inline kpoly apply_dunkl_x(const dunkl_context& ctx, int i, const kpoly& f) {
    if (f.rep() != rep_kind::X)
        throw std::invalid_argument("apply_dunkl_x: expects X representation");
    if (f.nvars() != ctx.nvars())
        throw std::invalid_argument("apply_dunkl_x: nvars mismatch");
    kpoly out = derivative(f, i);
    kpoly diffs(rep_kind::X, ctx.nvars());
    for (int j = 0; j < ctx.nvars(); ++j) {
        if (j == i) continue;
        diffs += divided_difference(f, i, j);
    }
    out += diffs * ctx.kappa();
    return out;
}

/// The Dunkl Laplacian, the sum of the squared operators.
inline kpoly apply_laplacian(const dunkl_context& ctx, const kpoly& f) {
    kpoly out(rep_kind::X, ctx.nvars());
    for (int i = 0; i < ctx.nvars(); ++i)
        out += apply_dunkl_x(ctx, i, apply_dunkl_x(ctx, i, f));
    return out;
}

/// Degree-n basis polynomial attached to variable i, from the context
/// table (homogeneous, coefficients polynomial in kappa).
inline const kpoly& p_basis_poly(const dunkl_context& ctx, int n, int i) {
    return ctx.p_basis(i, n);
}

/// Inverse symbolic calculus: substitutes the actual basis polynomials
/// for the P-variables and expands. Linear; maps P to X.
inline kpoly psi_inverse(const dunkl_context& ctx, const kpoly& g) {
    if (g.rep() != rep_kind::P)
        throw std::invalid_argument("psi_inverse: expects P representation");
    if (g.nvars() != ctx.nvars())
        throw std::invalid_argument("psi_inverse: nvars mismatch");
    kpoly out(rep_kind::X, ctx.nvars());
    for (const auto& [alpha, c] : g.terms())
        out += ctx.p_monomial_image(alpha) * c;
    return out;
}

/// Forward symbolic calculus: expresses an ordinary polynomial in the
/// product basis, degree block by degree block, through the cached
/// inverse of the exact change-of-basis matrix. Throws if a block is
/// singular, which can only happen at a non-generic specialized
/// parameter value.
inline kpoly psi_forward(const dunkl_context& ctx, const kpoly& f) {
    if (f.rep() != rep_kind::X)
        throw std::invalid_argument("psi_forward: expects X representation");
    if (f.nvars() != ctx.nvars())
        throw std::invalid_argument("psi_forward: nvars mismatch");

    // split into homogeneous parts
    std::map<std::uint32_t, kpoly> parts;
    for (const auto& [m, c] : f.terms()) {
        auto [it, fresh] =
            parts.try_emplace(total_degree(m), kpoly(rep_kind::X, ctx.nvars()));
        it->second.add_term(m, c);
    }

    kpoly out(rep_kind::P, ctx.nvars());
    for (const auto& [deg, part] : parts) {
        const auto& blk = ctx.basis_change_inverse(static_cast<int>(deg));
        const std::size_t n = blk.basis.size();
        std::vector<kappa_scalar> rhs(n);
        for (const auto& [m, v] : part.terms()) rhs[blk.index.at(m)] = v;
        for (std::size_t k = 0; k < n; ++k) {
            kappa_scalar acc;
            for (std::size_t c = 0; c < n; ++c) {
                if (rhs[c].is_zero() || blk.inverse[k][c].is_zero()) continue;
                acc += blk.inverse[k][c] * rhs[c];
            }
            out.add_term(blk.basis[k], acc);
        }
    }
    return out;
}

/// The operator T_i transported to the P-variables: derivative term,
/// parameter term, and for every other variable an exchange block whose
/// difference quotients reduce to signed homogeneous sums, applied term
/// by term.
inline kpoly apply_dunkl_p(const dunkl_context& ctx, int i, const kpoly& g) {
    if (g.rep() != rep_kind::P)
        throw std::invalid_argument("apply_dunkl_p: expects P representation");
    if (g.nvars() != ctx.nvars())
        throw std::invalid_argument("apply_dunkl_p: nvars mismatch");
    if (i < 0 || i >= ctx.nvars())
        throw std::invalid_argument("apply_dunkl_p: variable index out of range");
    const auto ui = static_cast<std::size_t>(i);
    const kappa_scalar nk = ctx.kappa() * kappa_scalar(ctx.nvars());

    kpoly out(rep_kind::P, ctx.nvars());
    monomial t(static_cast<std::size_t>(ctx.nvars()));
    for (const auto& [m, c] : g.terms()) {
        const std::uint32_t a = m[ui];
        if (a == 0) continue; // annihilated: derivative and both quotients vanish
        // (d/dp_i + N kappa (1 - (p_i -> 0)) / p_i) p^m = (a + N kappa) p^(m - e_i)
        t = m;
        t[ui] = a - 1;
        out.add_term(t, c * (kappa_scalar(static_cast<long>(a)) + nk));
        // exchange blocks: (p_i^a - p_j^a)(p_i^b - p_j^b)/(p_i - p_j) per j
        for (int j = 0; j < ctx.nvars(); ++j) {
            if (j == i) continue;
            const auto uj = static_cast<std::size_t>(j);
            const std::uint32_t b = m[uj];
            if (b == 0) continue;
            for (std::uint32_t k = 0; k < b; ++k) {
                t = m;
                t[ui] = a + b - 1 - k;
                t[uj] = k;
                out.add_term(t, c * ctx.kappa());
                t[ui] = b - 1 - k;
                t[uj] = a + k;
                out.add_term(t, -(c * ctx.kappa()));
            }
        }
    }
    return out;
}

/// T_i on a single product-basis element, straight from the explicit
/// expansion: a leading term plus a double sum of exchanged pairs. Output
/// in the P representation. Independent route used to cross-check
/// apply_dunkl_p.
inline kpoly dunkl_on_p_monomial(const dunkl_context& ctx, int i, const monomial& alpha) {
    if (alpha.size() != static_cast<std::size_t>(ctx.nvars()))
        throw std::invalid_argument("dunkl_on_p_monomial: monomial length mismatch");
    if (i < 0 || i >= ctx.nvars())
        throw std::invalid_argument("dunkl_on_p_monomial: variable index out of range");
    const auto ui = static_cast<std::size_t>(i);
    kpoly out(rep_kind::P, ctx.nvars());
    const std::uint32_t ai = alpha[ui];
    if (ai == 0) return out;

    monomial t = alpha;
    t[ui] = ai - 1;
    out.add_term(t, kappa_scalar(ctx.nvars()) * ctx.kappa() +
                        kappa_scalar(static_cast<long>(ai)));
    for (int j = 0; j < ctx.nvars(); ++j) {
        if (j == i) continue;
        const auto uj = static_cast<std::size_t>(j);
        const std::uint32_t aj = alpha[uj];
        for (std::uint32_t m = 0; m < aj; ++m) {
            t = alpha;
            t[ui] = ai + aj - 1 - m;
            t[uj] = m;
            out.add_term(t, ctx.kappa());
            t[ui] = m;
            t[uj] = ai + aj - 1 - m;
            out.add_term(t, -ctx.kappa());
        }
    }
    return out;
}

} // namespace dunkl
