// Brute-force multiplication oracle. Nothing here touches the transition
// tables, Jacobi-Trudi or key concatenation: operands are expanded as
// polynomials in d variables straight from the definitions of the bases.
//
// A symmetric polynomial is stored by orbit representative: the coefficient
// of x^a equals the coefficient of x^sort(a), so only exponent vectors that
// are partitions (with at most d parts) are kept.

#include <functional>
#include <map>

#include "sym/symfunc.hpp"

namespace sym {

namespace {

using OrbitPoly = std::map<Partition, Coefficient, GradedRevLex>;

void accumulate(OrbitPoly& p, const Partition& key, const Coefficient& c)
{
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = p.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            p.erase(it);
    }
}

std::vector<Partition> exponents_of_degree(int n, int nvars)
{
    std::vector<Partition> out;
    for (auto& p : partitions_of(n))
        if (static_cast<int>(p.length()) <= nvars)
            out.push_back(std::move(p));
    return out;
}

// Coefficient of x^nu in F * G is the sum over a + b = nu of F_a G_b.
OrbitPoly poly_product(const OrbitPoly& f, const OrbitPoly& g, int nvars)
{
    std::map<int, OrbitPoly> f_by_degree, g_by_degree;
    for (const auto& [a, c] : f)
        f_by_degree[a.size()].emplace(a, c);
    for (const auto& [b, c] : g)
        g_by_degree[b.size()].emplace(b, c);

    OrbitPoly out;
    std::vector<int> a_vec, b_vec;
    for (const auto& [s, fs] : f_by_degree)
        for (const auto& [t, gt] : g_by_degree)
            for (const Partition& nu : exponents_of_degree(s + t, nvars)) {
                const auto& target = nu.parts();
                Coefficient total = 0;
                a_vec.assign(target.size(), 0);
                b_vec.assign(target.size(), 0);
                std::function<void(std::size_t, int)> walk = [&](std::size_t pos, int left) {
                    if (pos == target.size()) {
                        if (left != 0)
                            return;
                        const auto fa = fs.find(Partition::from_raw(a_vec));
                        if (fa == fs.end())
                            return;
                        const auto gb = gt.find(Partition::from_raw(b_vec));
                        if (gb == gt.end())
                            return;
                        total += fa->second * gb->second;
                        return;
                    }
                    for (int take = 0; take <= std::min(target[pos], left); ++take) {
                        a_vec[pos] = take;
                        b_vec[pos] = target[pos] - take;
                        walk(pos + 1, left - take);
                    }
                };
                walk(0, s);
                accumulate(out, nu, total);
            }
    return out;
}

// Number of semistandard tableaux of shape lambda and content nu: peel off
// the largest letter as a horizontal strip of size nu_last.
Integer kostka_by_tableaux(const Partition& lambda, const Partition& nu)
{
    if (nu.empty())
        return lambda.empty() ? 1 : 0;
    const int strip = nu.parts().back();
    const Partition rest = Partition::from_canonical(
        std::vector<int>(nu.parts().begin(), nu.parts().end() - 1));
    if (static_cast<int>(lambda.length()) > static_cast<int>(nu.length()))
        return 0;
    Integer total = 0;
    // Choose rho with lambda/rho a horizontal strip of size `strip`:
    // lambda_{i+1} <= rho_i <= lambda_i.
    std::vector<int> rho(lambda.parts());
    std::function<void(std::size_t, int)> walk = [&](std::size_t i, int left) {
        if (i == rho.size()) {
            if (left == 0)
                total += kostka_by_tableaux(Partition::from_raw(rho), rest);
            return;
        }
        const int hi = lambda.part(i + 1);
        const int lo = lambda.part(i + 2);
        for (int r = hi; r >= lo && hi - r <= left; --r) {
            rho[i] = r;
            walk(i + 1, left - (hi - r));
        }
        rho[i] = hi;
    };
    walk(0, strip);
    return total;
}

OrbitPoly expand_generator(Basis basis, int n, int nvars)
{
    OrbitPoly p;
    switch (basis) {
    case Basis::H:
        for (const auto& nu : exponents_of_degree(n, nvars))
            p.emplace(nu, 1);
        break;
    case Basis::E:
        if (n <= nvars)
            p.emplace(column(n), 1);
        break;
    case Basis::P:
        if (n == 0 || nvars >= 1)
            p.emplace(n == 0 ? Partition{} : Partition{n}, 1);
        break;
    default:
        break;
    }
    return p;
}

OrbitPoly expand(const SymFunc& f, int nvars)
{
    OrbitPoly out;
    for (const auto& [lambda, c] : f.terms()) {
        OrbitPoly term;
        switch (f.basis()) {
        case Basis::M:
            if (static_cast<int>(lambda.length()) <= nvars)
                term.emplace(lambda, 1);
            break;
        case Basis::S:
            for (const auto& nu : exponents_of_degree(lambda.size(), nvars)) {
                const Integer k = kostka_by_tableaux(lambda, nu);
                if (sgn(k) != 0)
                    term.emplace(nu, Coefficient(k));
            }
            break;
        default:
            term.emplace(Partition{}, 1);
            for (int part : lambda)
                term = poly_product(term, expand_generator(f.basis(), part, nvars), nvars);
            break;
        }
        for (const auto& [nu, v] : term)
            accumulate(out, nu, c * v);
    }
    return out;
}

} // namespace

SymFunc multiply_oracle(const SymFunc& f, const SymFunc& g)
{
    const int nvars = f.degree() + g.degree();
    const OrbitPoly product = poly_product(expand(f, nvars), expand(g, nvars), nvars);
    SymFunc out(Basis::M);
    for (const auto& [nu, c] : product)
        out.add_term(nu, c);
    return out;
}

} // namespace sym
