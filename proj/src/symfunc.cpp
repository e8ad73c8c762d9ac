#include "sym/symfunc.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "transition.hpp"

namespace sym {

char basis_letter(Basis b) noexcept
{
    switch (b) {
    case Basis::M: return 'm';
    case Basis::H: return 'h';
    case Basis::E: return 'e';
    case Basis::P: return 'p';
    case Basis::S: return 's';
    }
    return '?';
}

Basis parse_basis(std::string_view text)
{
    if (text.size() == 1) {
        switch (text[0]) {
        case 'm': case 'M': return Basis::M;
        case 'h': case 'H': return Basis::H;
        case 'e': case 'E': return Basis::E;
        case 'p': case 'P': return Basis::P;
        case 's': case 'S': return Basis::S;
        default: break;
        }
    }
    throw std::invalid_argument("unknown basis '" + std::string(text) + "'");
}

SymFunc::SymFunc(Basis basis, Terms terms) : basis_(basis), terms_(std::move(terms))
{
    std::erase_if(terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
}

SymFunc SymFunc::constant(Coefficient c, Basis basis)
{
    SymFunc f(basis);
    f.add_term(Partition{}, c);
    return f;
}

int SymFunc::degree() const noexcept
{
    return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

Coefficient SymFunc::coeff(const Partition& lambda) const
{
    const auto it = terms_.find(lambda);
    return it == terms_.end() ? Coefficient(0) : it->second;
}

bool SymFunc::is_integral() const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& kv) { return sym::is_integral(kv.second); });
}

void SymFunc::add_term(const Partition& lambda, const Coefficient& c)
{
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

SymFunc& SymFunc::operator+=(const SymFunc& other)
{
    if (other.basis_ != basis_)
        throw std::invalid_argument("adding symmetric functions in different bases");
    for (const auto& [lambda, c] : other.terms_)
        add_term(lambda, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other)
{
    if (other.basis_ != basis_)
        throw std::invalid_argument("subtracting symmetric functions in different bases");
    for (const auto& [lambda, c] : other.terms_)
        add_term(lambda, -c);
    return *this;
}

SymFunc& SymFunc::operator*=(const Coefficient& c)
{
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& kv : terms_)
        kv.second *= c;
    return *this;
}

SymFunc gen(Basis basis, const Partition& lambda)
{
    SymFunc f(basis);
    f.add_term(lambda, 1);
    return f;
}

SymFunc complete(int n)
{
    if (n < 0)
        return SymFunc(Basis::H);
    return gen(Basis::H, n == 0 ? Partition{} : Partition{n});
}

SymFunc elementary(int n)
{
    if (n < 0)
        return SymFunc(Basis::E);
    return gen(Basis::E, n == 0 ? Partition{} : Partition{n});
}

SymFunc power_sum(int n)
{
    if (n < 0)
        return SymFunc(Basis::P);
    return gen(Basis::P, n == 0 ? Partition{} : Partition{n});
}

SymFunc schur(const Partition& lambda)
{
    return gen(Basis::S, lambda);
}

SymFunc monomial(const Partition& lambda)
{
    return gen(Basis::M, lambda);
}

SymFunc add(const SymFunc& f, const SymFunc& g)
{
    SymFunc out = f;
    out += g;
    return out;
}

SymFunc scale(const Coefficient& c, const SymFunc& f)
{
    SymFunc out = f;
    out *= c;
    return out;
}

SymFunc operator+(const SymFunc& f, const SymFunc& g)
{
    return add(f, g);
}

SymFunc operator-(const SymFunc& f, const SymFunc& g)
{
    SymFunc out = f;
    out -= g;
    return out;
}

SymFunc operator-(const SymFunc& f)
{
    return scale(-1, f);
}

SymFunc operator*(const Coefficient& c, const SymFunc& f)
{
    return scale(c, f);
}

SymFunc operator*(const SymFunc& f, const SymFunc& g)
{
    return multiply(f, g);
}

// ---------------------------------------------------------------------------
// Change of basis

namespace {

using detail::DegreeTable;

template <class T>
std::vector<Coefficient> apply_table(const std::vector<Coefficient>& v, const detail::Dense<T>& table)
{
    const std::size_t n = v.size();
    std::vector<Coefficient> w(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(v[i]) == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(table(i, j)) != 0)
                w[j] += v[i] * table(i, j);
    }
    return w;
}

std::vector<Coefficient> to_h(const DegreeTable& t, Basis from, const std::vector<Coefficient>& v)
{
    switch (from) {
    case Basis::H: return v;
    case Basis::M: return apply_table(apply_table(v, t.m_to_s), t.s_to_h);
    case Basis::S: return apply_table(v, t.s_to_h);
    case Basis::E: return apply_table(v, t.e_to_h);
    case Basis::P: return apply_table(v, t.p_to_h);
    }
    throw std::logic_error("unreachable basis");
}

std::vector<Coefficient> from_h(const DegreeTable& t, Basis to, const std::vector<Coefficient>& v)
{
    switch (to) {
    case Basis::H: return v;
    case Basis::M: return apply_table(v, t.h_to_m);
    case Basis::S: return apply_table(v, t.h_to_s);
    case Basis::E: return apply_table(v, t.e_to_h);
    case Basis::P: return apply_table(v, t.h_to_p);
    }
    throw std::logic_error("unreachable basis");
}

std::vector<Coefficient> convert(const DegreeTable& t, Basis from, Basis to,
                                 const std::vector<Coefficient>& v)
{
    if (from == Basis::S && to == Basis::M)
        return apply_table(v, t.s_to_m);
    if (from == Basis::M && to == Basis::S)
        return apply_table(v, t.m_to_s);
    return from_h(t, to, to_h(t, from, v));
}

} // namespace

SymFunc to_basis(const SymFunc& f, Basis target)
{
    if (f.basis() == target)
        return f;
    const bool integral_route = f.basis() != Basis::P && target != Basis::P && f.is_integral();
    SymFunc out(target);
    auto it = f.terms().begin();
    while (it != f.terms().end()) {
        const int n = it->first.size();
        const DegreeTable& t = detail::degree_table(n);
        std::vector<Coefficient> v(t.parts.size());
        for (; it != f.terms().end() && it->first.size() == n; ++it)
            v[t.at(it->first)] = it->second;
        const auto w = convert(t, f.basis(), target, v);
        for (std::size_t j = 0; j < w.size(); ++j)
            out.add_term(t.parts[j], w[j]);
    }
    if (integral_route && !out.is_integral())
        throw std::logic_error("integral input produced a non-integral expansion");
    return out;
}

bool equivalent(const SymFunc& f, const SymFunc& g)
{
    return to_basis(f, Basis::H) == to_basis(g, Basis::H);
}

SymFunc multiply(const SymFunc& f, const SymFunc& g)
{
    const Basis b = f.basis();
    if (b == g.basis() && (b == Basis::H || b == Basis::E || b == Basis::P))
        return detail::concat_product(f, g);
    const SymFunc product = detail::concat_product(to_basis(f, Basis::H), to_basis(g, Basis::H));
    return to_basis(product, b);
}

Coefficient hall(const SymFunc& f, const SymFunc& g)
{
    const SymFunc fh = to_basis(f, Basis::H);
    const SymFunc gm = to_basis(g, Basis::M);
    Coefficient total = 0;
    for (const auto& [lambda, c] : fh.terms()) {
        const auto it = gm.terms().find(lambda);
        if (it != gm.terms().end())
            total += c * it->second;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Determinants and Jacobi-Trudi

SymFunc determinant(const std::vector<std::vector<SymFunc>>& matrix)
{
    const std::size_t n = matrix.size();
    if (n > 63)
        throw std::invalid_argument("determinant: matrix too large");
    std::vector<std::vector<SymFunc>> a(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix[i].size() != n)
            throw std::invalid_argument("determinant: matrix is not square");
        for (const auto& entry : matrix[i])
            a[i].push_back(to_basis(entry, Basis::H));
    }
    // minor(mask) = det of the last popcount(mask) rows restricted to mask.
    std::unordered_map<std::uint64_t, SymFunc> memo;
    std::function<SymFunc(std::uint64_t)> minor = [&](std::uint64_t mask) -> SymFunc {
        if (mask == 0)
            return SymFunc::constant(1);
        if (auto it = memo.find(mask); it != memo.end())
            return it->second;
        const std::size_t row = n - static_cast<std::size_t>(__builtin_popcountll(mask));
        SymFunc out(Basis::H);
        int position = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask >> j & 1u))
                continue;
            if (!a[row][j].is_zero()) {
                SymFunc sub = minor(mask & ~(std::uint64_t{1} << j));
                if (!sub.is_zero()) {
                    SymFunc term = detail::concat_product(a[row][j], sub);
                    if (position % 2 == 0)
                        out += term;
                    else
                        out -= term;
                }
            }
            ++position;
        }
        memo.emplace(mask, out);
        return out;
    };
    const std::uint64_t full = n == 0 ? 0 : (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    return minor(full);
}

SymFunc skew_schur(const Partition& lambda, const Partition& mu)
{
    const std::size_t len = std::max(lambda.length(), mu.length());
    std::vector<std::vector<SymFunc>> m(len, std::vector<SymFunc>(len));
    for (std::size_t i = 1; i <= len; ++i)
        for (std::size_t j = 1; j <= len; ++j) {
            const long idx = static_cast<long>(lambda.part(i)) - mu.part(j) - static_cast<long>(i)
                + static_cast<long>(j);
            m[i - 1][j - 1] = complete(static_cast<int>(idx));
        }
    return determinant(m);
}

SymFunc jacobi_trudi_e(const Partition& lambda)
{
    const std::size_t len = lambda.length();
    std::vector<std::vector<SymFunc>> m(len, std::vector<SymFunc>(len));
    for (std::size_t i = 1; i <= len; ++i)
        for (std::size_t j = 1; j <= len; ++j) {
            const long idx = static_cast<long>(lambda.part(i)) - static_cast<long>(i) + static_cast<long>(j);
            m[i - 1][j - 1] = idx < 0 ? SymFunc(Basis::H) : detail::elementary_in_h(static_cast<int>(idx));
        }
    return determinant(m);
}

// ---------------------------------------------------------------------------
// Skewing, alpha_k, grading

namespace {

// kappa minus mu as multisets, if mu is a sub-multiset of kappa.
std::optional<Partition> multiset_difference(const Partition& kappa, const Partition& mu)
{
    std::vector<int> rest;
    rest.reserve(kappa.length());
    auto m = mu.begin();
    for (int part : kappa) {
        if (m != mu.end() && *m == part) {
            ++m;
            continue;
        }
        if (m != mu.end() && *m > part)
            return std::nullopt;
        rest.push_back(part);
    }
    if (m != mu.end())
        return std::nullopt;
    return Partition::from_canonical(std::move(rest));
}

} // namespace

SymFunc skew_apply(const SymFunc& f, const SymFunc& g)
{
    // (f^perp g, h_nu) = (g, f h_nu): with f = sum c_mu h_mu and g = sum d_kappa m_kappa
    // the m_nu coefficient is sum over mu of c_mu d_{mu cup nu}.
    const SymFunc fh = to_basis(f, Basis::H);
    const SymFunc gm = to_basis(g, Basis::M);
    SymFunc out(Basis::M);
    for (const auto& [mu, c] : fh.terms())
        for (const auto& [kappa, d] : gm.terms())
            if (auto nu = multiset_difference(kappa, mu))
                out.add_term(*nu, c * d);
    return to_basis(out, g.basis());
}

Coefficient alpha_eval(int k, const SymFunc& f)
{
    const SymFunc fh = to_basis(f, Basis::H);
    Coefficient total = 0;
    for (const auto& [lambda, c] : fh.terms())
        if (lambda.first() < k)
            total += c;
    return total;
}

SymFunc degree_component(const SymFunc& f, int d)
{
    SymFunc out(f.basis());
    for (const auto& [lambda, c] : f.terms())
        if (lambda.size() == d)
            out.add_term(lambda, c);
    return out;
}

std::string to_pretty(const SymFunc& f)
{
    if (f.is_zero())
        return "0";
    std::string out;
    for (const auto& [lambda, c] : f.terms()) {
        if (!out.empty())
            out += ", ";
        if (lambda.empty())
            out += to_string(c);
        else
            out += std::string(1, basis_letter(f.basis())) + "[" + to_string(lambda) + "]: " + to_string(c);
    }
    return out;
}

} // namespace sym
