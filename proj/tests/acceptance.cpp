// Acceptance harness. Each criterion is an exact algebraic identity (zero
// tolerance); one line is printed per criterion and the exit status is
// nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "dunkl/verify.hpp"

using namespace dunkl;

namespace {

struct criterion {
    std::string label;
    std::function<bool(std::string&)> run;
};

bool all_pass(const std::vector<verify::check_result>& results, std::string& why) {
    for (const auto& r : results)
        if (!r.pass) {
            why = r.name;
            return false;
        }
    return true;
}

// 1. golden values of the two auxiliary families
bool crit_g_values(std::string& why) {
    return all_pass(verify::suite_g_values(), why);
}

// 2. Laplacian annihilates every harmonic, n <= 8, N in {2,3,4,5}
bool crit_harmonicity(std::string& why) {
    for (int N : {2, 3, 4, 5}) {
        dunkl_context ctx(N, 8);
        if (!all_pass(verify::suite_harmonicity(ctx, 8), why)) return false;
    }
    return true;
}

// 3. operators beyond the first two annihilate every harmonic
bool crit_annihilation(std::string& why) {
    for (int N : {2, 3, 4, 5}) {
        dunkl_context ctx(N, 8);
        if (!all_pass(verify::suite_annihilation(ctx, 8), why)) return false;
    }
    return true;
}

// 4. the four first-order recurrences on all basis elements, n <= 7,
//    basis rules against full operator application
bool crit_recurrences(std::string& why) {
    for (int N : {2, 3}) {
        dunkl_context ctx(N, 8);
        if (!all_pass(verify::suite_recurrences(ctx, 7), why)) return false;
    }
    return true;
}

// 5. the eight first-order actions on harmonics, m <= 3, N in {2,3,4}
bool crit_tth_action(std::string& why) {
    for (int N : {2, 3, 4}) {
        dunkl_context ctx(N, 8);
        if (!all_pass(verify::suite_tth_action(ctx, 3), why)) return false;
    }
    return true;
}

// 6. power chains collapse to the Pochhammer closed forms, m <= 3
bool crit_powers(std::string& why) {
    for (int N : {2, 3, 4}) {
        dunkl_context ctx(N, 8);
        if (!all_pass(verify::suite_powers(ctx, 3), why)) return false;
    }
    return true;
}

// 7. special-point values against the S constants, n <= 6, over Q(kappa)[i]
bool crit_val1pI(std::string& why) {
    dunkl_context ctx(3, 8);
    return all_pass(verify::suite_val1pI(ctx, 6), why);
}

// 8. series expansion of the master generating function against the
//    closed double sum, n <= 8, five random rational parameter pairs plus
//    symbolic alpha with beta in {1, 2}
bool crit_genfunS(std::string& why) {
    return all_pass(verify::suite_genfunS(8, 424242, 5), why);
}

// 9. closed-form norms against the direct operator-substitution pairing,
//    n <= 6, N in {2,3,4}, including cross-symmetry orthogonality
bool crit_norms(std::string& why) {
    for (int N : {2, 3, 4}) {
        dunkl_context ctx(N, 6);
        if (!all_pass(verify::suite_norms(ctx, 6), why)) return false;
    }
    return true;
}

// 10. Dirac square and monogenic annihilation; 50 random inputs spread
//     over N in {2,3,4}, monogenics to degree 6 symbolically
bool crit_monogenics(std::string& why) {
    int seed = 1;
    for (int N : {2, 3, 4}) {
        dunkl_context ctx(N, 7);
        int nmax = N == 4 ? 0 : 6; // D-annihilation checked at N in {2,3}
        if (!all_pass(verify::suite_monogenics(ctx, nmax, 17, 1000 + seed++), why))
            return false;
    }
    return true;
}

// 11. oracle equivalences: generating-function tables match closed-form
//     basis elements to n <= 8; the transported operator matches both its
//     explicit expansion and conjugation by the calculus to degree 5
bool crit_oracles(std::string& why) {
    if (!all_pass(verify::suite_useries(8), why)) return false;
    for (int N : {2, 3}) {
        dunkl_context ctx(N, 6);
        if (!all_pass(verify::suite_dunkl_p(ctx, 5, 31337), why)) return false;
        // literal conjugation through the forward calculus
        for (int d = 0; d <= 5; ++d)
            for (const monomial& alpha : dunkl::detail::monomials_of_degree(N, d))
                for (int i = 0; i < N; ++i) {
                    kpoly g = kpoly::term(rep_kind::P, alpha, kappa_scalar(1));
                    kpoly lhs = psi_forward(
                        ctx, apply_dunkl_x(ctx, i, psi_inverse(ctx, g)));
                    if (!(lhs == apply_dunkl_p(ctx, i, g))) {
                        why = "forward conjugation N=" + std::to_string(N);
                        return false;
                    }
                }
    }
    return true;
}

// 12. commutativity on 100 random polynomials, degree <= 5, N <= 4
bool crit_commute(std::string& why) {
    int seed = 9;
    for (int N : {2, 3, 4}) {
        dunkl_context ctx(N, 6);
        int count = N == 2 ? 34 : 33;
        if (!all_pass(verify::suite_commute(ctx, count, 5, 2000 + seed++), why))
            return false;
    }
    return true;
}

} // namespace

int main() {
    std::vector<criterion> criteria = {
        {"criterion 01 auxiliary-family golden values", crit_g_values},
        {"criterion 02 harmonicity n<=8 N in {2,3,4,5}", crit_harmonicity},
        {"criterion 03 planar annihilation n<=8 N in {2,3,4,5}", crit_annihilation},
        {"criterion 04 operator recurrences n<=7 dual route", crit_recurrences},
        {"criterion 05 first-order actions m<=3 N in {2,3,4}", crit_tth_action},
        {"criterion 06 closed-form power chains m<=3", crit_powers},
        {"criterion 07 special-point values n<=6 over Q(kappa)[i]", crit_val1pI},
        {"criterion 08 generating-function series n<=8", crit_genfunS},
        {"criterion 09 structure constants n<=6 N in {2,3,4}", crit_norms},
        {"criterion 10 Dirac square and monogenics n<=6", crit_monogenics},
        {"criterion 11 oracle equivalences", crit_oracles},
        {"criterion 12 commutativity 100 random inputs N<=4", crit_commute},
    };

    int failures = 0;
    for (auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = c.run(why);
        } catch (const std::exception& e) {
            why = e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        std::printf("[%s] %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL",
                    c.label.c_str(), secs, ok ? "" : " at ",
                    ok ? "" : why.c_str());
        if (!ok) ++failures;
    }
    if (failures) {
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
