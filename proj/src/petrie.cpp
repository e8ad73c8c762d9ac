#include "sym/petrie.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "sym/hopf.hpp"

namespace sym {

namespace {

void require_positive_k(int k)
{
    if (k < 1)
        throw std::invalid_argument("k must be a positive integer, got " + std::to_string(k));
}

long to_long(const Integer& z)
{
    if (!z.fits_slong_p())
        throw std::overflow_error("integer does not fit in a long");
    return z.get_si();
}

} // namespace

SymFunc petrie_g(int k, int m)
{
    require_positive_k(k);
    if (m < 0)
        throw std::invalid_argument("degree m must be nonnegative");
    SymFunc out(Basis::M);
    for (const auto& lambda : partitions_of(m, k - 1))
        out.add_term(lambda, 1);
    return out;
}

SymFunc petrie_modified(int k, int kp, int m)
{
    require_positive_k(k);
    if (kp < 1 || kp > k)
        throw std::invalid_argument("petrie_modified requires 1 <= kp <= k");
    if (m < 0)
        throw std::invalid_argument("degree m must be nonnegative");
    SymFunc out(Basis::M);
    for (const auto& lambda : partitions_of(m, k - 1))
        if (lambda.empty() || lambda.parts().back() >= kp)
            out.add_term(lambda, 1);
    return out;
}

IntMatrix petrie_matrix(int k, const Partition& lambda, const Partition& mu, std::size_t len)
{
    require_positive_k(k);
    IntMatrix a(len);
    for (std::size_t i = 1; i <= len; ++i)
        for (std::size_t j = 1; j <= len; ++j) {
            const long d = static_cast<long>(lambda.part(i)) - mu.part(j) - static_cast<long>(i)
                + static_cast<long>(j);
            a(i - 1, j - 1) = (0 <= d && d < k) ? 1 : 0;
        }
    return a;
}

long pet_det(int k, const Partition& lambda, const Partition& mu, std::size_t len)
{
    if (len < std::max(lambda.length(), mu.length()))
        throw std::invalid_argument("pet_det: matrix size below the partition lengths");
    return to_long(det_int(petrie_matrix(k, lambda, mu, len)));
}

long pet_det(int k, const Partition& lambda, const Partition& mu)
{
    return pet_det(k, lambda, mu, std::max(lambda.length(), mu.length()));
}

const char* to_string(PetVanishing v) noexcept
{
    switch (v) {
    case PetVanishing::MuKNonzero: return "MU_K_NONZERO";
    case PetVanishing::GammaCollision: return "GAMMA_COLLISION";
    case PetVanishing::None: return "NONE";
    }
    return "?";
}

PetExplicit pet_explicit(int k, const Partition& lambda)
{
    require_positive_k(k);
    PetExplicit out;
    const Partition mu = transpose(lambda);
    if (mu.part(static_cast<std::size_t>(k)) != 0) {
        out.data.vanishing = PetVanishing::MuKNonzero;
        return out;
    }
    auto& d = out.data;
    long exponent = 0;
    for (int i = 1; i < k; ++i) {
        const long beta = static_cast<long>(mu.part(static_cast<std::size_t>(i))) - i;
        const long gamma = 1 + floor_mod(beta - 1, k);
        d.beta.push_back(beta);
        d.gamma.push_back(gamma);
        exponent += beta + gamma;
    }
    const std::set<long> distinct(d.gamma.begin(), d.gamma.end());
    if (distinct.size() != d.gamma.size()) {
        d.vanishing = PetVanishing::GammaCollision;
        return out;
    }
    for (std::size_t i = 0; i < d.gamma.size(); ++i)
        for (std::size_t j = i + 1; j < d.gamma.size(); ++j)
            if (d.gamma[i] < d.gamma[j])
                ++d.g;
    exponent += d.g;
    out.value = floor_mod(exponent, 2) == 0 ? 1 : -1;
    return out;
}

long pet_alpha(int k, const Partition& lambda, const Partition& mu)
{
    require_positive_k(k);
    const Coefficient v = alpha_eval(k, skew_schur(lambda, mu));
    if (!is_integral(v))
        throw std::logic_error("alpha_k of a skew Schur function is not an integer");
    return to_long(v.get_num());
}

bool pet_nonzero_criterion(int k, const Partition& lambda)
{
    require_positive_k(k);
    if (lambda.first() >= k)
        throw std::invalid_argument("pet_nonzero_criterion requires lambda_1 < k");
    // B = {lambda_i - i : i >= 1} holds every integer <= -l(lambda) - 1, so
    // only W = (-l(lambda) - 1, k - 1) needs inspecting.
    const long len = static_cast<long>(lambda.length());
    std::set<long> beta_set;
    for (long i = 1; i <= len; ++i)
        beta_set.insert(lambda.part(static_cast<std::size_t>(i)) - i);
    std::vector<int> missing(static_cast<std::size_t>(k), 0);
    for (long x = -len; x < k - 1; ++x)
        if (!beta_set.contains(x))
            ++missing[static_cast<std::size_t>(floor_mod(x, k))];
    return std::all_of(missing.begin(), missing.end(), [](int c) { return c <= 1; });
}

SymFunc pieri_expand(int k, int m, const Partition& mu)
{
    require_positive_k(k);
    if (m < 0)
        throw std::invalid_argument("degree m must be nonnegative");
    SymFunc out(Basis::S);
    for (const auto& lambda : partitions_of(m + mu.size())) {
        const long c = pet_det(k, lambda, mu);
        if (c != 0)
            out.add_term(lambda, c);
    }
    return out;
}

SymFunc petrie_via_frobenius(int k, int m)
{
    require_positive_k(k);
    if (m < 0)
        throw std::invalid_argument("degree m must be nonnegative");
    SymFunc out(Basis::H);
    for (int i = 0; k * i <= m; ++i) {
        SymFunc term = multiply(complete(m - k * i), frobenius(k, elementary(i)));
        if (i % 2 == 0)
            out += term;
        else
            out -= term;
    }
    return to_basis(out, Basis::M);
}

} // namespace sym
