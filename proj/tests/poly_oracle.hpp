#pragma once

// Brute-force polynomials in a fixed number of variables, used as a reference
// for the library's change-of-basis tables. Shares no code with the library
// beyond Partition and Coefficient.

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "sym/coefficient.hpp"
#include "sym/partition.hpp"
#include "sym/symfunc.hpp"

namespace oracle {

using Exponent = std::vector<int>;

struct Poly {
    int nvars = 0;
    std::map<Exponent, sym::Coefficient> terms;

    explicit Poly(int n) : nvars(n) {}

    static Poly one(int n)
    {
        Poly p(n);
        p.terms[Exponent(static_cast<std::size_t>(n), 0)] = 1;
        return p;
    }

    void add(const Exponent& e, const sym::Coefficient& c)
    {
        auto& slot = terms[e];
        slot += c;
        if (slot == 0)
            terms.erase(e);
    }

    Poly& operator+=(const Poly& o)
    {
        for (const auto& [e, c] : o.terms)
            add(e, c);
        return *this;
    }

    Poly scaled(const sym::Coefficient& s) const
    {
        Poly out(nvars);
        if (s != 0)
            for (const auto& [e, c] : terms)
                out.terms[e] = c * s;
        return out;
    }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        Poly out(a.nvars);
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                Exponent e(ea);
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] += eb[i];
                out.add(e, ca * cb);
            }
        return out;
    }
};

// Calls f on every exponent vector of length n with entries summing to d,
// each entry at most cap.
inline void for_each_exponent(int n, int d, int cap, const std::function<void(const Exponent&)>& f)
{
    Exponent e(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == n - 1) {
            if (left <= cap) {
                e[static_cast<std::size_t>(i)] = left;
                f(e);
            }
            return;
        }
        for (int x = 0; x <= std::min(left, cap); ++x) {
            e[static_cast<std::size_t>(i)] = x;
            rec(i + 1, left - x);
        }
    };
    if (n == 0) {
        if (d == 0)
            f(e);
        return;
    }
    rec(0, d);
}

inline Poly h(int n, int d)
{
    Poly p(n);
    if (d < 0)
        return p;
    for_each_exponent(n, d, d, [&](const Exponent& e) { p.terms[e] = 1; });
    return p;
}

inline Poly e(int n, int d)
{
    Poly p(n);
    if (d < 0)
        return p;
    for_each_exponent(n, d, 1, [&](const Exponent& x) { p.terms[x] = 1; });
    return p;
}

inline Poly pw(int n, int d)
{
    if (d == 0)
        return Poly::one(n);
    Poly p(n);
    for (int i = 0; i < n; ++i) {
        Exponent x(static_cast<std::size_t>(n), 0);
        x[static_cast<std::size_t>(i)] = d;
        p.terms[x] = 1;
    }
    return p;
}

// Sum of monomials of degree d with every exponent below k.
inline Poly bounded_exponents(int n, int k, int d)
{
    Poly p(n);
    for_each_exponent(n, d, k - 1, [&](const Exponent& x) { p.terms[x] = 1; });
    return p;
}

inline Poly monomial(int n, const sym::Partition& lambda)
{
    Poly p(n);
    if (static_cast<int>(lambda.length()) > n)
        return p;
    Exponent x(lambda.parts());
    x.resize(static_cast<std::size_t>(n), 0);
    std::sort(x.begin(), x.end());
    do {
        p.terms[x] = 1;
    } while (std::next_permutation(x.begin(), x.end()));
    return p;
}

// Laplace expansion along the first row.
inline Poly det(const std::vector<std::vector<Poly>>& m, int n)
{
    const std::size_t size = m.size();
    if (size == 0)
        return Poly::one(n);
    Poly out(n);
    for (std::size_t j = 0; j < size; ++j) {
        std::vector<std::vector<Poly>> minor;
        for (std::size_t i = 1; i < size; ++i) {
            std::vector<Poly> row;
            for (std::size_t c = 0; c < size; ++c)
                if (c != j)
                    row.push_back(m[i][c]);
            minor.push_back(row);
        }
        Poly term = m[0][j] * det(minor, n);
        out += term.scaled(j % 2 == 0 ? 1 : -1);
    }
    return out;
}

// s_{lambda/mu} = det(h_{lambda_i - mu_j - i + j}).
inline Poly skew_schur(int n, const sym::Partition& lambda, const sym::Partition& mu)
{
    const std::size_t len = std::max(lambda.length(), mu.length());
    std::vector<std::vector<Poly>> m;
    for (std::size_t i = 1; i <= len; ++i) {
        std::vector<Poly> row;
        for (std::size_t j = 1; j <= len; ++j)
            row.push_back(h(n, lambda.part(i) - mu.part(j) - static_cast<int>(i) + static_cast<int>(j)));
        m.push_back(row);
    }
    return det(m, n);
}

inline Poly generator(sym::Basis b, const sym::Partition& lambda, int n)
{
    switch (b) {
    case sym::Basis::M: return monomial(n, lambda);
    case sym::Basis::S: return skew_schur(n, lambda, sym::Partition{});
    default: break;
    }
    Poly p = Poly::one(n);
    for (int part : lambda)
        p = p * (b == sym::Basis::H ? h(n, part) : b == sym::Basis::E ? e(n, part) : pw(n, part));
    return p;
}

inline Poly expand(const sym::SymFunc& f, int n)
{
    Poly out(n);
    for (const auto& [lambda, c] : f.terms())
        out += generator(f.basis(), lambda, n).scaled(c);
    return out;
}

// Reads off monomial coefficients at weakly decreasing exponent vectors.
// Faithful for degrees up to n.
inline sym::SymFunc to_monomial(const Poly& p)
{
    sym::SymFunc out(sym::Basis::M);
    for (const auto& [x, c] : p.terms)
        if (std::is_sorted(x.begin(), x.end(), std::greater<>()))
            out.add_term(sym::Partition::from_raw(x), c);
    return out;
}

} // namespace oracle
