#include "sym/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace sym {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : n_(rows.size()), a_(rows.size() * rows.size())
{
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != n_)
            throw std::invalid_argument("IntMatrix: rows must form a square matrix");
        std::size_t j = 0;
        for (long v : row)
            (*this)(i, j++) = v;
        ++i;
    }
}

Integer det_int(const IntMatrix& m)
{
    const std::size_t n = m.dim();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && sgn(a(swap_row, k)) == 0)
                ++swap_row;
            if (swap_row == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = std::move(v);
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    Integer d = a(n - 1, n - 1);
    return sign > 0 ? d : Integer(-d);
}

bool is_petrie_matrix(const IntMatrix& m)
{
    const std::size_t n = m.dim();
    for (std::size_t j = 0; j < n; ++j) {
        int runs = 0;
        bool inside = false;
        for (std::size_t i = 0; i < n; ++i) {
            const Integer& v = m(i, j);
            if (v != 0 && v != 1)
                return false;
            const bool one = v == 1;
            if (one && !inside)
                ++runs;
            inside = one;
        }
        if (runs > 1)
            return false;
    }
    return true;
}

std::string to_string(const IntMatrix& m)
{
    std::string out = "[";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        out += i ? ",[" : "[";
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j)
                out += ',';
            out += m(i, j).get_str();
        }
        out += ']';
    }
    return out + "]";
}

} // namespace sym
