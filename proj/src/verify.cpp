#include "sym/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sym/hopf.hpp"
#include "sym/int_matrix.hpp"
#include "sym/parallel.hpp"
#include "sym/petrie.hpp"

namespace sym::verify {

nlohmann::json to_json(const VerifyReport& r)
{
    nlohmann::json j = {{"name", r.name}, {"range", r.range}, {"passed", r.passed}};
    if (r.counterexample)
        j["counterexample"] = *r.counterexample;
    j["elapsed_ms"] = static_cast<long long>(r.elapsed_ms + 0.5);
    return j;
}

std::string to_json_line(const VerifyReport& r)
{
    return to_json(r).dump();
}

namespace {

using Clock = std::chrono::steady_clock;
using Failure = std::optional<std::string>;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Runs `check` over [0, count) in parallel and folds the first failure into a report.
VerifyReport run_scan(std::string name, std::string range, std::size_t count,
                      const std::function<Failure(std::size_t)>& check)
{
    const auto start = Clock::now();
    VerifyReport r{std::move(name), std::move(range), true, std::nullopt, 0};
    const auto failed = find_first_failure(count, [&](std::size_t i) { return !check(i); });
    if (failed) {
        r.passed = false;
        r.counterexample = check(*failed).value_or("failure did not reproduce");
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

std::string show(const SymFunc& f)
{
    return to_pretty(f);
}

std::string show(const Partition& p)
{
    return "(" + to_string(p) + ")";
}

std::vector<Partition> partitions_up_to(int n_max)
{
    std::vector<Partition> out;
    for (int n = 0; n <= n_max; ++n)
        for (auto& p : partitions_of(n))
            out.push_back(std::move(p));
    return out;
}

bool unit_coefficients(const SymFunc& f)
{
    return std::all_of(f.terms().begin(), f.terms().end(), [](const auto& kv) {
        return kv.second == 1 || kv.second == -1;
    });
}

Partition prepend(int m, const Partition& lambda)
{
    std::vector<int> parts;
    if (m > 0)
        parts.push_back(m);
    parts.insert(parts.end(), lambda.begin(), lambda.end());
    return Partition::from_canonical(std::move(parts));
}

Partition hook_tail(int head, int second, int ones)
{
    std::vector<int> parts;
    if (head > 0)
        parts.push_back(head);
    if (second > 0)
        parts.push_back(second);
    parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
    return Partition::from_raw(parts);
}

int iverson_divides(int k, int n)
{
    return n % k == 0 ? 1 : 0;
}

} // namespace

// ---------------------------------------------------------------------------

VerifyReport check_liu_polo(int n)
{
    if (n <= 1)
        throw std::invalid_argument("check_liu_polo requires n > 1");
    const auto start = Clock::now();
    VerifyReport r{"liu_polo", "n=" + std::to_string(n), true, std::nullopt, 0};
    std::vector<std::string> failures;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok)
            failures.push_back(what);
    };

    const Partition top{n - 1, n - 1, 1};
    SymFunc lhs(Basis::M);
    bool lemma_ok = true;
    for (const auto& lambda : partitions_of(2 * n - 1)) {
        const bool below = dominates(top, lambda);
        if (below)
            lhs.add_term(lambda, 1);
        lemma_ok = lemma_ok && (below == (lambda.first() < n));
    }
    expect(lemma_ok, "dominance below (n-1,n-1,1) is not the same as all parts < n");

    SymFunc rhs(Basis::S);
    SymFunc hooks(Basis::S);
    for (int i = 0; i <= n - 2; ++i) {
        const Coefficient sign = i % 2 == 0 ? 1 : -1;
        rhs.add_term(hook_tail(n - 1, n - 1 - i, i + 1), sign);
        hooks.add_term(hook_tail(n - 1 - i, 0, i + 1), sign);
    }
    expect(equivalent(lhs, rhs), "monomial sum " + show(lhs) + " differs from Schur sum " + show(rhs));
    expect(lhs == petrie_g(n, 2 * n - 1), "monomial sum differs from G(n,2n-1)");

    const SymFunc h_minus_hp =
        complete(2 * n - 1) - multiply(complete(n - 1), to_basis(power_sum(n), Basis::H));
    expect(equivalent(lhs, h_minus_hp), "monomial sum differs from h_{2n-1} - h_{n-1} p_n");

    const SymFunc hn_minus_pn = complete(n) - to_basis(power_sum(n), Basis::H);
    expect(equivalent(hn_minus_pn, hooks), "h_n - p_n differs from the alternating hook sum");

    const SymFunc b = bernstein(n - 1, hn_minus_pn);
    expect(equivalent(b, h_minus_hp), "B_{n-1}(h_n - p_n) differs from h_{2n-1} - h_{n-1} p_n");
    expect(equivalent(b, rhs), "B_{n-1}(h_n - p_n) differs from the Schur sum");

    if (!failures.empty()) {
        r.passed = false;
        std::string msg;
        for (const auto& f : failures)
            msg += (msg.empty() ? "" : "; ") + f;
        r.counterexample = msg;
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

VerifyReport check_gessel(int d_max)
{
    auto c = [](int m, int n) -> int {
        const int diff = m - n;
        const int sign = floor_mod(diff, 2) == 0 ? 1 : -1;
        return sign * (floor_mod(diff, 3) == 0 ? 2 : -1);
    };
    return run_scan("gessel", "d=0.." + std::to_string(d_max), static_cast<std::size_t>(d_max + 1),
                    [&](std::size_t i) -> Failure {
                        const int d = static_cast<int>(i);
                        SymFunc series(Basis::E);
                        if (d % 2 == 0)
                            series.add_term(Partition{d / 2, d / 2}, 1);
                        for (int m = 0; 2 * m < d; ++m)
                            series.add_term(Partition{m, d - m}, c(m, d - m));
                        const SymFunc g = petrie_g(3, d);
                        if (equivalent(series, g))
                            return std::nullopt;
                        return "degree " + std::to_string(d) + ": series " + show(series) + " vs G(3,d) "
                            + show(g);
                    });
}

VerifyReport check_genset(int k, int n_max)
{
    if (k < 2)
        throw std::invalid_argument("check_genset requires k >= 2");
    std::vector<SymFunc> g;
    for (int m = 0; m <= n_max; ++m)
        g.push_back(petrie_g(k, m));
    return run_scan(
        "genset", "k=" + std::to_string(k) + ",n=1.." + std::to_string(n_max),
        static_cast<std::size_t>(std::max(n_max, 0)), [&](std::size_t i) -> Failure {
            const int n = static_cast<int>(i) + 1;
            const auto parts = partitions_of(n);
            IntMatrix a(parts.size());
            for (std::size_t row = 0; row < parts.size(); ++row) {
                SymFunc product = SymFunc::constant(1, Basis::M);
                for (int part : parts[row])
                    product = multiply(product, g[static_cast<std::size_t>(part)]);
                for (std::size_t col = 0; col < parts.size(); ++col) {
                    const Coefficient v = product.coeff(parts[col]);
                    if (!is_integral(v))
                        return "non-integral product of Petrie functions in degree " + std::to_string(n);
                    a(row, col) = v.get_num();
                }
            }
            const Integer det = det_int(a);
            if (sgn(det) == 0)
                return "singular transition matrix in degree " + std::to_string(n);
            if (k == 2 && abs(det) != 1)
                return "degree " + std::to_string(n) + ": determinant " + det.get_str() + " is not a unit";
            return std::nullopt;
        });
}

namespace {

std::vector<std::pair<int, int>> km_pairs(int bound)
{
    std::vector<std::pair<int, int>> cases;
    for (int k = 1; k <= bound; ++k)
        for (int m = 0; k + m <= bound; ++m)
            cases.emplace_back(k, m);
    return cases;
}

Failure out_of_range(int k, int m, const SymFunc& f)
{
    for (const auto& [lambda, c] : f.terms())
        if (c != 1 && c != -1)
            return "G(" + std::to_string(k) + "," + std::to_string(m) + ") p_2 has coefficient " + to_string(c)
                + " on s" + show(lambda);
    return std::nullopt;
}

Failure p3_non_example()
{
    const SymFunc g34 = to_basis(petrie_g(3, 4), Basis::H);
    const SymFunc f = to_basis(multiply(g34, power_sum(3)), Basis::S);
    if (f.coeff(Partition{2, 2, 2, 1}) != -2)
        return "G(3,4) p_3 lacks the coefficient -2 on s(2,2,2,1): " + show(f);
    return std::nullopt;
}

} // namespace

VerifyReport scan_alexandersson(int bound)
{
    const auto cases = km_pairs(bound);
    VerifyReport r = run_scan("alexandersson", "k+m<=" + std::to_string(bound), cases.size(),
                              [&](std::size_t i) -> Failure {
                                  const auto [k, m] = cases[i];
                                  const SymFunc g = to_basis(petrie_g(k, m), Basis::H);
                                  return out_of_range(k, m, to_basis(multiply(g, power_sum(2)), Basis::S));
                              });
    if (r.passed) {
        if (auto f = p3_non_example()) {
            r.passed = false;
            r.counterexample = f;
        }
    }
    return r;
}

SymFunc schur_times_power_sum(const SymFunc& f, int r)
{
    if (f.basis() != Basis::S)
        throw std::invalid_argument("schur_times_power_sum expects the S basis");
    if (r < 1)
        throw std::invalid_argument("power sum index must be positive");
    SymFunc out(Basis::S);
    for (const auto& [lambda, c] : f.terms()) {
        const int q = static_cast<int>(lambda.length()) + r;
        const auto beta = beta_numbers(lambda, q);
        const std::set<long> occupied(beta.begin(), beta.end());
        for (int i = 0; i < q; ++i) {
            const long moved = beta[static_cast<std::size_t>(i)] + r;
            if (occupied.contains(moved))
                continue;
            // Betas strictly between the old and new position are jumped over.
            int height = 0;
            for (long b : beta)
                if (b > beta[static_cast<std::size_t>(i)] && b < moved)
                    ++height;
            std::vector<long> next(beta);
            next[static_cast<std::size_t>(i)] = moved;
            std::sort(next.begin(), next.end(), std::greater<>());
            std::vector<int> parts;
            for (int j = 0; j < q; ++j)
                parts.push_back(static_cast<int>(next[static_cast<std::size_t>(j)] + j + 1));
            out.add_term(Partition::from_raw(parts), height % 2 == 0 ? c : Coefficient(-c));
        }
    }
    return out;
}

VerifyReport scan_alexandersson_fast(int bound)
{
    const auto cases = km_pairs(bound);
    VerifyReport r = run_scan("alexandersson_fast", "k+m<=" + std::to_string(bound), cases.size(),
                              [&](std::size_t i) -> Failure {
                                  const auto [k, m] = cases[i];
                                  SymFunc g(Basis::S);
                                  for (const auto& lambda : partitions_of(m))
                                      g.add_term(lambda, pet_explicit(k, lambda).value);
                                  return out_of_range(k, m, schur_times_power_sum(g, 2));
                              });
    if (r.passed) {
        if (auto f = p3_non_example()) {
            r.passed = false;
            r.counterexample = f;
        }
    }
    return r;
}

Petriefied petriefication(int k, const Partition& lambda)
{
    Petriefied out;
    out.image = to_basis(v_map(k, schur(lambda)), Basis::S);
    out.in_range = std::all_of(out.image.terms().begin(), out.image.terms().end(),
                               [](const auto& kv) { return kv.second == 1 || kv.second == -1; });
    return out;
}

VerifyReport petriefication_report(int k, const Partition& lambda)
{
    const auto start = Clock::now();
    const Petriefied p = petriefication(k, lambda);
    VerifyReport r{"petriefication", "k=" + std::to_string(k) + ",lambda=" + to_string(lambda), p.in_range,
                   std::nullopt, 0};
    if (!p.in_range) {
        std::string msg;
        for (const auto& [mu, c] : p.image.terms())
            if (c != 1 && c != -1)
                msg += (msg.empty() ? "" : ", ") + std::string("s[") + to_string(mu) + "]: " + to_string(c);
        r.counterexample = "V_" + std::to_string(k) + "(s[" + to_string(lambda) + "]) has " + msg;
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

VerifyReport check_petriefication_defaults()
{
    struct Case {
        int k;
        Partition lambda;
        bool expected;
    };
    std::vector<Case> cases;
    for (int k = 1; k <= 4; ++k)
        for (int m = 0; m <= 6; ++m) {
            cases.push_back({k, m == 0 ? Partition{} : Partition{m}, true});
            cases.push_back({k, column(m), true});
        }
    cases.push_back({3, Partition{4, 4, 4}, false});
    cases.push_back({4, Partition{4, 4}, false});
    cases.push_back({4, Partition{5, 1, 1, 1, 1}, false});
    return run_scan("petriefication", "rows and columns k<=4,m<=6; V_3(s444), V_4(s44), V_4(s51111)",
                    cases.size(), [&](std::size_t i) -> Failure {
                        const auto& c = cases[i];
                        const bool in_range = petriefication(c.k, c.lambda).in_range;
                        if (in_range == c.expected)
                            return std::nullopt;
                        return "V_" + std::to_string(c.k) + "(s" + show(c.lambda) + ") in range: "
                            + (in_range ? "true" : "false");
                    });
}

// ---------------------------------------------------------------------------
// Property scans

VerifyReport scan_pet_agreement(int k_max, int lambda_max, int mu_max)
{
    struct Case {
        int k;
        Partition lambda, mu;
    };
    std::vector<Case> cases;
    const auto lambdas = partitions_up_to(lambda_max);
    const auto mus = partitions_up_to(mu_max);
    for (int k = 1; k <= k_max; ++k)
        for (const auto& lambda : lambdas)
            for (const auto& mu : mus)
                cases.push_back({k, lambda, mu});
    const std::string range = "k<=" + std::to_string(k_max) + ",|lambda|<=" + std::to_string(lambda_max)
        + ",|mu|<=" + std::to_string(mu_max);
    return run_scan("pet_three_way", range, cases.size(), [&](std::size_t i) -> Failure {
        const auto& [k, lambda, mu] = cases[i];
        const std::string where =
            "k=" + std::to_string(k) + ", lambda=" + show(lambda) + ", mu=" + show(mu) + ": ";
        const std::size_t len = std::max(lambda.length(), mu.length());
        if (!is_petrie_matrix(petrie_matrix(k, lambda, mu, len)))
            return where + "matrix is not a Petrie matrix";
        const long det = pet_det(k, lambda, mu);
        if (det < -1 || det > 1)
            return where + "determinant " + std::to_string(det) + " outside {-1,0,1}";
        const long alpha = pet_alpha(k, lambda, mu);
        if (alpha != det)
            return where + "det " + std::to_string(det) + " vs alpha " + std::to_string(alpha);
        if (mu.empty()) {
            const long expl = pet_explicit(k, lambda).value;
            if (expl != det)
                return where + "det " + std::to_string(det) + " vs explicit " + std::to_string(expl);
        }
        return std::nullopt;
    });
}

VerifyReport scan_explicit_formula(int k_max, int size_max)
{
    std::vector<std::pair<int, Partition>> cases;
    for (int k = 1; k <= k_max; ++k)
        for (const auto& lambda : partitions_up_to(size_max))
            cases.emplace_back(k, lambda);
    return run_scan("pet_explicit",
                    "k<=" + std::to_string(k_max) + ",|lambda|<=" + std::to_string(size_max), cases.size(),
                    [&](std::size_t i) -> Failure {
                        const auto& [k, lambda] = cases[i];
                        const std::string where = "k=" + std::to_string(k) + ", lambda=" + show(lambda) + ": ";
                        const long det = pet_det(k, lambda, Partition{});
                        const long expl = pet_explicit(k, lambda).value;
                        if (det != expl)
                            return where + "det " + std::to_string(det) + " vs explicit " + std::to_string(expl);
                        if (lambda.first() < k && pet_nonzero_criterion(k, lambda) != (det != 0))
                            return where + "nonvanishing criterion disagrees with det " + std::to_string(det);
                        return std::nullopt;
                    });
}

VerifyReport scan_petrie_agreement(int k_max, int m_max)
{
    std::vector<std::pair<int, int>> cases;
    for (int k = 1; k <= k_max; ++k)
        for (int m = 0; m <= m_max; ++m)
            cases.emplace_back(k, m);
    return run_scan("petrie_four_way", "k<=" + std::to_string(k_max) + ",m<=" + std::to_string(m_max),
                    cases.size(), [&](std::size_t i) -> Failure {
                        const auto [k, m] = cases[i];
                        const std::string where = "G(" + std::to_string(k) + "," + std::to_string(m) + "): ";
                        const SymFunc g = petrie_g(k, m);
                        if (petrie_via_frobenius(k, m) != g)
                            return where + "Frobenius formula gives " + show(petrie_via_frobenius(k, m));
                        const SymFunc schur_side = to_basis(pieri_expand(k, m, Partition{}), Basis::M);
                        if (schur_side != g)
                            return where + "Schur expansion gives " + show(schur_side);
                        const SymFunc v = to_basis(v_map(k, complete(m)), Basis::M);
                        if (v != g)
                            return where + "V_k(h_m) gives " + show(v);
                        return std::nullopt;
                    });
}

VerifyReport scan_pieri(int k_max, int m_max, int mu_max)
{
    struct Case {
        int k, m;
        Partition mu;
    };
    std::vector<Case> cases;
    for (int k = 1; k <= k_max; ++k)
        for (int m = 0; m <= m_max; ++m)
            for (const auto& mu : partitions_up_to(mu_max))
                cases.push_back({k, m, mu});
    return run_scan("pieri",
                    "k<=" + std::to_string(k_max) + ",m<=" + std::to_string(m_max) + ",|mu|<="
                        + std::to_string(mu_max),
                    cases.size(), [&](std::size_t i) -> Failure {
                        const auto& [k, m, mu] = cases[i];
                        const std::string where = "k=" + std::to_string(k) + ", m=" + std::to_string(m)
                            + ", mu=" + show(mu) + ": ";
                        const SymFunc expansion = pieri_expand(k, m, mu);
                        if (!unit_coefficients(expansion))
                            return where + "coefficient outside {-1,0,1} in " + show(expansion);
                        const SymFunc oracle = multiply_oracle(petrie_g(k, m), schur(mu));
                        if (to_basis(expansion, Basis::M) != oracle)
                            return where + "Pieri expansion " + show(expansion) + " vs oracle " + show(oracle);
                        return std::nullopt;
                    });
}

VerifyReport scan_hall_hp_ep(int n_max)
{
    return run_scan("hall_h_e_p", "1<=n<=" + std::to_string(n_max), static_cast<std::size_t>(n_max),
                    [&](std::size_t i) -> Failure {
                        const int n = static_cast<int>(i) + 1;
                        if (hall(complete(n), power_sum(n)) != 1)
                            return "(h_n, p_n) != 1 for n=" + std::to_string(n);
                        const Coefficient expected = n % 2 == 1 ? 1 : -1;
                        if (hall(elementary(n), power_sum(n)) != expected)
                            return "(e_n, p_n) != (-1)^(n-1) for n=" + std::to_string(n);
                        return std::nullopt;
                    });
}

VerifyReport scan_hall_power_petrie(int k_max, int m_max)
{
    std::vector<std::pair<int, int>> cases;
    for (int k = 1; k <= k_max; ++k)
        for (int m = 1; m <= m_max; ++m)
            cases.emplace_back(k, m);
    return run_scan("hall_p_petrie", "k<=" + std::to_string(k_max) + ",1<=m<=" + std::to_string(m_max),
                    cases.size(), [&](std::size_t i) -> Failure {
                        const auto [k, m] = cases[i];
                        const Coefficient got = hall(power_sum(m), petrie_g(k, m));
                        const Coefficient expected = 1 - iverson_divides(k, m) * k;
                        if (got == expected)
                            return std::nullopt;
                        return "(p_m, G(k,m)) = " + to_string(got) + " for k=" + std::to_string(k)
                            + ", m=" + std::to_string(m);
                    });
}

VerifyReport scan_hall_power_frobenius(int k_max, int m_max, int j_max)
{
    struct Case {
        int k, m, j;
    };
    std::vector<Case> cases;
    for (int k = 1; k <= k_max; ++k)
        for (int m = 1; m <= m_max; ++m)
            for (int j = 0; j <= j_max; ++j)
                cases.push_back({k, m, j});
    return run_scan("hall_p_frobenius_e",
                    "k<=" + std::to_string(k_max) + ",1<=m<=" + std::to_string(m_max) + ",j<="
                        + std::to_string(j_max),
                    cases.size(), [&](std::size_t i) -> Failure {
                        const auto [k, m, j] = cases[i];
                        const Coefficient got = hall(power_sum(m), frobenius(k, elementary(j)));
                        const Coefficient sign = floor_mod(j - 1, 2) == 0 ? 1 : -1;
                        const Coefficient expected = m == k * j ? Coefficient(sign * k) : Coefficient(0);
                        if (got == expected)
                            return std::nullopt;
                        return "(p_m, f_k(e_j)) = " + to_string(got) + " for k=" + std::to_string(k)
                            + ", m=" + std::to_string(m) + ", j=" + std::to_string(j);
                    });
}

VerifyReport scan_coproduct_petrie(int k_max, int m_max)
{
    std::vector<std::pair<int, int>> cases;
    for (int k = 1; k <= k_max; ++k)
        for (int m = 0; m <= m_max; ++m)
            cases.emplace_back(k, m);
    return run_scan("coproduct_petrie", "k<=" + std::to_string(k_max) + ",m<=" + std::to_string(m_max),
                    cases.size(), [&](std::size_t i) -> Failure {
                        const auto [k, m] = cases[i];
                        TensorFunc expected;
                        for (int a = 0; a <= m; ++a)
                            expected += tensor(petrie_g(k, a), petrie_g(k, m - a));
                        if (coproduct(petrie_g(k, m)) == expected)
                            return std::nullopt;
                        return "Delta(G(" + std::to_string(k) + "," + std::to_string(m)
                            + ")) differs from sum G(k,i) (x) G(k,m-i)";
                    });
}

VerifyReport scan_frobenius_adjoint(int n_max, int degree_max)
{
    struct Case {
        int n;
        Basis ab, bb;
        Partition a, b;
    };
    std::vector<Case> cases;
    const std::pair<Basis, Basis> basis_pairs[] = {{Basis::S, Basis::S}, {Basis::H, Basis::M}, {Basis::P, Basis::E}};
    for (int n = 1; n <= n_max; ++n)
        for (const auto& [ab, bb] : basis_pairs)
            for (int d = 0; n * d <= degree_max; ++d)
                for (const auto& a : partitions_of(n * d))
                    for (const auto& b : partitions_of(d))
                        cases.push_back({n, ab, bb, a, b});
    return run_scan("frobenius_verschiebung_adjoint",
                    "n<=" + std::to_string(n_max) + ",degree<=" + std::to_string(degree_max), cases.size(),
                    [&](std::size_t i) -> Failure {
                        const auto& c = cases[i];
                        const SymFunc a = gen(c.ab, c.a);
                        const SymFunc b = gen(c.bb, c.b);
                        const Coefficient lhs = hall(a, frobenius(c.n, b));
                        const Coefficient rhs = hall(verschiebung(c.n, a), b);
                        if (lhs == rhs)
                            return std::nullopt;
                        return "n=" + std::to_string(c.n) + ", a=" + std::string(1, basis_letter(c.ab)) + show(c.a)
                            + ", b=" + std::string(1, basis_letter(c.bb)) + show(c.b) + ": " + to_string(lhs)
                            + " vs " + to_string(rhs);
                    });
}

VerifyReport scan_v_power_sums(int k_max, int n_max)
{
    std::vector<std::pair<int, int>> cases;
    for (int k = 1; k <= k_max; ++k)
        for (int n = 1; n <= n_max; ++n)
            cases.emplace_back(k, n);
    return run_scan("v_power_sums", "k<=" + std::to_string(k_max) + ",1<=n<=" + std::to_string(n_max),
                    cases.size(), [&](std::size_t i) -> Failure {
                        const auto [k, n] = cases[i];
                        const SymFunc got = v_map(k, power_sum(n));
                        const SymFunc expected = scale(1 - iverson_divides(k, n) * k, power_sum(n));
                        if (got == expected)
                            return std::nullopt;
                        return "V_" + std::to_string(k) + "(p_" + std::to_string(n) + ") = " + show(got);
                    });
}

VerifyReport scan_p_via_petrie(int k_max, int n_max)
{
    std::vector<std::pair<int, int>> cases;
    for (int k = 1; k <= k_max; ++k)
        for (int n = 1; n <= n_max; ++n)
            cases.emplace_back(k, n);
    return run_scan("p_via_petrie", "k<=" + std::to_string(k_max) + ",1<=n<=" + std::to_string(n_max),
                    cases.size(), [&](std::size_t i) -> Failure {
                        const auto [k, n] = cases[i];
                        // p_n = sum c_lambda h_lambda; substitute h_i -> G(k, i).
                        const SymFunc pn = to_basis(power_sum(n), Basis::H);
                        SymFunc image(Basis::M);
                        for (const auto& [lambda, c] : pn.terms()) {
                            SymFunc term = SymFunc::constant(c, Basis::M);
                            for (int part : lambda)
                                term = multiply(term, petrie_g(k, part));
                            image += term;
                        }
                        const SymFunc expected = scale(1 - iverson_divides(k, n) * k, power_sum(n));
                        if (equivalent(image, expected))
                            return std::nullopt;
                        return "k=" + std::to_string(k) + ", n=" + std::to_string(n) + ": " + show(image);
                    });
}

VerifyReport scan_bernstein(int m_max, int n_max, int lambda_max)
{
    struct Case {
        int kind; // 0: h_n, 1: p_n, 2: s_lambda
        int m, n;
        Partition lambda;
    };
    std::vector<Case> cases;
    for (int m = 0; m <= m_max; ++m)
        for (int n = 0; n <= n_max; ++n) {
            cases.push_back({0, m, n, {}});
            if (n >= 1)
                cases.push_back({1, m, n, {}});
        }
    for (const auto& lambda : partitions_up_to(lambda_max))
        for (int m = lambda.first(); m <= std::max(lambda.first(), m_max); ++m)
            cases.push_back({2, m, 0, lambda});
    return run_scan("bernstein",
                    "m<=" + std::to_string(m_max) + ",n<=" + std::to_string(n_max) + ",|lambda|<="
                        + std::to_string(lambda_max),
                    cases.size(), [&](std::size_t i) -> Failure {
                        const auto& c = cases[i];
                        const std::string where = "m=" + std::to_string(c.m) + ": ";
                        switch (c.kind) {
                        case 0: {
                            const SymFunc got = bernstein(c.m, complete(c.n));
                            const SymFunc want = multiply(complete(c.m), complete(c.n))
                                - multiply(complete(c.m + 1), complete(c.n - 1));
                            if (!equivalent(got, want))
                                return where + "B_m(h_" + std::to_string(c.n) + ") = " + show(got);
                            break;
                        }
                        case 1: {
                            const SymFunc pn = to_basis(power_sum(c.n), Basis::H);
                            const SymFunc got = bernstein(c.m, pn);
                            const SymFunc want = multiply(complete(c.m), pn) - complete(c.m + c.n);
                            if (!equivalent(got, want))
                                return where + "B_m(p_" + std::to_string(c.n) + ") = " + show(got);
                            break;
                        }
                        default: {
                            const SymFunc got = bernstein(c.m, schur(c.lambda));
                            if (got != schur(prepend(c.m, c.lambda)))
                                return where + "B_m(s" + show(c.lambda) + ") = " + show(got);
                            break;
                        }
                        }
                        return std::nullopt;
                    });
}

std::vector<VerifyReport> run_invariants_all()
{
    std::vector<VerifyReport> out;
    out.push_back(scan_pet_agreement(5, 8, 6));
    out.push_back(scan_explicit_formula(6, 10));
    out.push_back(scan_petrie_agreement(5, 8));
    out.push_back(scan_pieri(4, 6, 4));
    out.push_back(scan_hall_hp_ep(10));
    out.push_back(scan_hall_power_petrie(5, 10));
    out.push_back(scan_hall_power_frobenius(4, 8, 3));
    out.push_back(scan_coproduct_petrie(4, 8));
    out.push_back(scan_frobenius_adjoint(3, 8));
    out.push_back(scan_v_power_sums(4, 8));
    out.push_back(scan_p_via_petrie(4, 8));
    out.push_back(scan_bernstein(6, 6, 6));
    return out;
}

} // namespace sym::verify
