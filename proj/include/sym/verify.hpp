#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sym/partition.hpp"
#include "sym/symfunc.hpp"

namespace sym::verify {

struct VerifyReport {
    std::string name;
    std::string range;
    bool passed = false;
    std::optional<std::string> counterexample; // present whenever passed is false
    double elapsed_ms = 0;
};

// {"name":..,"range":..,"passed":..,"counterexample":..,"elapsed_ms":..}
// The counterexample key is omitted when absent.
nlohmann::json to_json(const VerifyReport& r);
std::string to_json_line(const VerifyReport& r);

// The dominance-filtered monomial sum below (n-1, n-1, 1) against the
// alternating hook-augmented Schur sum, plus the chain of intermediate
// identities (Petrie function, h - hp form, Bernstein operator, hook sum).
// Requires n > 1.
VerifyReport check_liu_polo(int n);

// G(3, d) against the degree-d part of Gessel's e-quadratic series, d <= d_max.
VerifyReport check_gessel(int d_max);

// Products of G(k, lambda_i) over lambda |- n form a basis over Q for every
// n <= n_max; for k = 2 the transition matrix is unimodular. Requires k >= 2.
VerifyReport check_genset(int k, int n_max);

// Every Schur coefficient of G(k, m) p_2 lies in {-1, 0, 1} for k + m <= bound,
// through the generic multiply-and-convert pipeline. Also confirms the p_3
// non-example G(3, 4) p_3 has coefficient -2 on s_(2,2,2,1).
VerifyReport scan_alexandersson(int bound);
// Same scan through the closed Petrie formula and the Murnaghan-Nakayama
// rule; fast enough for the full bound of 30.
VerifyReport scan_alexandersson_fast(int bound);

// f p_r for f in the S basis, by adding border strips of size r.
SymFunc schur_times_power_sum(const SymFunc& f, int r);

struct Petriefied {
    SymFunc image; // V_k(s_lambda) in the S basis
    bool in_range = false; // all coefficients in {-1, 0, 1}
};
Petriefied petriefication(int k, const Partition& lambda);
// passed == in_range; offending coefficients go to the counterexample.
VerifyReport petriefication_report(int k, const Partition& lambda);
// Rows and columns stay in range for k <= 4, m <= 6, and the three known
// counterexamples V_3(s_444), V_4(s_44), V_4(s_51111) leave it.
VerifyReport check_petriefication_defaults();

// Property scans over fixed ranges.
VerifyReport scan_pet_agreement(int k_max, int lambda_max, int mu_max);
VerifyReport scan_explicit_formula(int k_max, int size_max);
VerifyReport scan_petrie_agreement(int k_max, int m_max);
VerifyReport scan_pieri(int k_max, int m_max, int mu_max);
VerifyReport scan_hall_hp_ep(int n_max);
VerifyReport scan_hall_power_petrie(int k_max, int m_max);
VerifyReport scan_hall_power_frobenius(int k_max, int m_max, int j_max);
VerifyReport scan_coproduct_petrie(int k_max, int m_max);
VerifyReport scan_frobenius_adjoint(int n_max, int degree_max);
VerifyReport scan_v_power_sums(int k_max, int n_max);
VerifyReport scan_p_via_petrie(int k_max, int n_max);
VerifyReport scan_bernstein(int m_max, int n_max, int lambda_max);

// Every scan above at its default range.
std::vector<VerifyReport> run_invariants_all();

} // namespace sym::verify
