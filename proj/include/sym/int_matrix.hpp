#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "sym/coefficient.hpp"

namespace sym {

// Dense square matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), a_(n * n) {}
    // Rows must all have the same length as the number of rows.
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t dim() const noexcept { return n_; }
    Integer& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Integer> a_;
};

// Exact determinant by fraction-free (Bareiss) elimination.
Integer det_int(const IntMatrix& m);

// All entries in {0,1} and the 1s of every column form one contiguous run.
bool is_petrie_matrix(const IntMatrix& m);

std::string to_string(const IntMatrix& m);

} // namespace sym
