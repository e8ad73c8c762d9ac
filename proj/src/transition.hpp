#pragma once

// Per-degree change-of-basis tables. Internal to the library.

#include <unordered_map>
#include <vector>

#include "sym/coefficient.hpp"
#include "sym/partition.hpp"
#include "sym/symfunc.hpp"

namespace sym::detail {

template <class T>
class Dense {
public:
    Dense() = default;
    explicit Dense(std::size_t n) : n_(n), a_(n * n) {}

    std::size_t dim() const noexcept { return n_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

private:
    std::size_t n_ = 0;
    std::vector<T> a_;
};

using IntDense = Dense<Integer>;
using RatDense = Dense<Coefficient>;

// Row i of a table holds the expansion of the i-th source basis element in
// the target basis; rows and columns follow `parts` (reverse lexicographic,
// so dominance-larger partitions come first).
struct DegreeTable {
    int n = 0;
    std::vector<Partition> parts;
    std::unordered_map<Partition, std::size_t, PartitionHash> index;

    IntDense h_to_m;
    IntDense s_to_h; // Jacobi-Trudi, lower unitriangular
    IntDense h_to_s;
    IntDense s_to_m; // Kostka, upper unitriangular
    IntDense m_to_s;
    IntDense e_to_h; // also h_to_e, since omega swaps h_lambda and e_lambda
    IntDense p_to_h;
    RatDense h_to_p;

    std::size_t at(const Partition& p) const { return index.at(p); }
};

inline constexpr int kMaxTableDegree = 26;

// Thread-safe, built once per degree on first use.
const DegreeTable& degree_table(int n);

// Expansions of single generators, cached.
const SymFunc& elementary_in_h(int n); // e_n in H
const SymFunc& power_sum_in_h(int n);  // p_n in H
const SymFunc& complete_in_p(int n);   // h_n in P

// Product in a multiplicative basis (H, E or P): keys concatenate.
SymFunc concat_product(const SymFunc& f, const SymFunc& g);

} // namespace sym::detail
