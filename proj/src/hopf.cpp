#include "sym/hopf.hpp"

#include <stdexcept>
#include <string>

#include "transition.hpp"

namespace sym {

void TensorFunc::add_term(const Partition& left, const Partition& right, const Coefficient& c)
{
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(Key{left, right}, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

TensorFunc& TensorFunc::operator+=(const TensorFunc& other)
{
    for (const auto& [key, c] : other.terms_)
        add_term(key.first, key.second, c);
    return *this;
}

TensorFunc& TensorFunc::operator-=(const TensorFunc& other)
{
    for (const auto& [key, c] : other.terms_)
        add_term(key.first, key.second, -c);
    return *this;
}

TensorFunc tensor(const SymFunc& a, const SymFunc& b)
{
    const SymFunc ah = to_basis(a, Basis::H);
    const SymFunc bh = to_basis(b, Basis::H);
    TensorFunc out;
    for (const auto& [l, cl] : ah.terms())
        for (const auto& [r, cr] : bh.terms())
            out.add_term(l, r, cl * cr);
    return out;
}

TensorFunc operator*(const TensorFunc& x, const TensorFunc& y)
{
    TensorFunc out;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms())
            out.add_term(concat_sort(kx.first, ky.first), concat_sort(kx.second, ky.second), cx * cy);
    return out;
}

TensorFunc operator+(const TensorFunc& x, const TensorFunc& y)
{
    TensorFunc out = x;
    out += y;
    return out;
}

SymFunc multiply_components(const TensorFunc& t)
{
    SymFunc out(Basis::H);
    for (const auto& [key, c] : t.terms())
        out.add_term(concat_sort(key.first, key.second), c);
    return out;
}

namespace {

void require_positive(int k, const char* what)
{
    if (k < 1)
        throw std::invalid_argument(std::string(what) + ": index must be positive");
}

Partition single(int n)
{
    return n == 0 ? Partition{} : Partition{n};
}

TensorFunc coproduct_of_complete(int n)
{
    TensorFunc out;
    for (int i = 0; i <= n; ++i)
        out.add_term(single(i), single(n - i), 1);
    return out;
}

} // namespace

TensorFunc coproduct(const SymFunc& f)
{
    const SymFunc fh = to_basis(f, Basis::H);
    TensorFunc out;
    for (const auto& [lambda, c] : fh.terms()) {
        TensorFunc term;
        term.add_term(Partition{}, Partition{}, c);
        for (int part : lambda)
            term = term * coproduct_of_complete(part);
        out += term;
    }
    return out;
}

SymFunc antipode(const SymFunc& f)
{
    const SymFunc fh = to_basis(f, Basis::H);
    SymFunc out(Basis::H);
    for (const auto& [lambda, c] : fh.terms()) {
        SymFunc term = SymFunc::constant(lambda.size() % 2 == 0 ? c : Coefficient(-c));
        for (int part : lambda)
            term = detail::concat_product(term, detail::elementary_in_h(part));
        out += term;
    }
    return to_basis(out, f.basis());
}

SymFunc frobenius(int k, const SymFunc& f)
{
    require_positive(k, "frobenius");
    // m_lambda -> m_{k lambda}; power sums scale the same way, so P needs no conversion.
    const Basis via = f.basis() == Basis::P ? Basis::P : Basis::M;
    const SymFunc fv = to_basis(f, via);
    SymFunc out(via);
    for (const auto& [lambda, c] : fv.terms())
        out.add_term(scale_parts(lambda, k), c);
    return to_basis(out, f.basis());
}

SymFunc verschiebung(int k, const SymFunc& f)
{
    require_positive(k, "verschiebung");
    const SymFunc fh = to_basis(f, Basis::H);
    SymFunc out(Basis::H);
    for (const auto& [lambda, c] : fh.terms()) {
        std::vector<int> parts;
        bool divisible = true;
        for (int part : lambda) {
            if (part % k != 0) {
                divisible = false;
                break;
            }
            parts.push_back(part / k);
        }
        if (divisible)
            out.add_term(Partition::from_canonical(std::move(parts)), c);
    }
    return to_basis(out, f.basis());
}

SymFunc u_map(int k, const SymFunc& f)
{
    return frobenius(k, antipode(verschiebung(k, f)));
}

SymFunc convolve_with_identity(const LinearMap& u, const SymFunc& f)
{
    const TensorFunc delta = coproduct(f);
    std::map<Partition, SymFunc, GradedRevLex> image;
    SymFunc out(Basis::H);
    for (const auto& [key, c] : delta.terms()) {
        auto it = image.find(key.second);
        if (it == image.end())
            it = image.emplace(key.second, to_basis(u(gen(Basis::H, key.second)), Basis::H)).first;
        if (it->second.is_zero())
            continue;
        out += scale(c, detail::concat_product(gen(Basis::H, key.first), it->second));
    }
    return to_basis(out, f.basis());
}

SymFunc v_map(int k, const SymFunc& f)
{
    require_positive(k, "v_map");
    return convolve_with_identity([k](const SymFunc& x) { return u_map(k, x); }, f);
}

SymFunc bernstein(int m, const SymFunc& f)
{
    SymFunc out(Basis::H);
    for (int i = 0; i <= f.degree(); ++i) {
        if (m + i < 0)
            continue;
        const SymFunc skewed = skew_apply(elementary(i), f);
        if (skewed.is_zero())
            continue;
        SymFunc term = multiply(complete(m + i), skewed);
        if (i % 2 == 0)
            out += term;
        else
            out -= term;
    }
    return to_basis(out, f.basis());
}

} // namespace sym
