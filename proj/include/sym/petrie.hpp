#pragma once

#include <cstddef>
#include <vector>

#include "sym/int_matrix.hpp"
#include "sym/partition.hpp"
#include "sym/symfunc.hpp"

namespace sym {

// G(k, m): the sum of all degree-m monomials with every exponent < k,
// i.e. the sum of m_lambda over lambda |- m with lambda_1 <= k - 1. M basis.
SymFunc petrie_g(int k, int m);

// Sum of m_lambda over lambda |- m with every part in [kp, k - 1]. Requires
// 1 <= kp <= k. The lower bound applies to parts (nonzero exponents) only.
SymFunc petrie_modified(int k, int kp, int m);

// The len x len matrix ([0 <= lambda_i - mu_j - i + j < k]).
IntMatrix petrie_matrix(int k, const Partition& lambda, const Partition& mu, std::size_t len);

// k-Petrie number as a determinant, with len = max(l(lambda), l(mu)) unless given.
long pet_det(int k, const Partition& lambda, const Partition& mu);
long pet_det(int k, const Partition& lambda, const Partition& mu, std::size_t len);

enum class PetVanishing { MuKNonzero, GammaCollision, None };

const char* to_string(PetVanishing v) noexcept;

// Intermediate data of the closed formula for pet_k(lambda, empty).
struct PetrieExplicitData {
    std::vector<long> beta;  // mu_i - i for i < k, mu = lambda^t
    std::vector<long> gamma; // 1 + (beta_i - 1) % k
    long g = 0;              // pairs i < j with gamma_i < gamma_j
    PetVanishing vanishing = PetVanishing::None;
};

struct PetExplicit {
    long value = 0;
    PetrieExplicitData data;
};

// pet_k(lambda, empty) from the transpose of lambda, without a determinant.
PetExplicit pet_explicit(int k, const Partition& lambda);

// alpha_k applied to the skew Schur function s_{lambda/mu}.
long pet_alpha(int k, const Partition& lambda, const Partition& mu);

// Nonvanishing test for pet_k(lambda, empty) through the beta-set of lambda:
// every residue class mod k misses at most one integer < k - 1 from
// {lambda_i - i}. Requires lambda_1 < k; throws std::invalid_argument otherwise.
bool pet_nonzero_criterion(int k, const Partition& lambda);

// G(k, m) s_mu as sum over lambda |- m + |mu| of pet_k(lambda, mu) s_lambda. S basis.
SymFunc pieri_expand(int k, int m, const Partition& mu);

// sum_i (-1)^i h_{m - k i} f_k(e_i), returned in the M basis.
SymFunc petrie_via_frobenius(int k, int m);

} // namespace sym
