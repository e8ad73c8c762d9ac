#pragma once

#include <functional>
#include <map>
#include <utility>

#include "sym/symfunc.hpp"

namespace sym {

// Element of Lambda (x) Lambda in the h_lambda (x) h_mu basis.
class TensorFunc {
public:
    using Key = std::pair<Partition, Partition>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const noexcept
        {
            GradedRevLex less;
            if (less(a.first, b.first))
                return true;
            if (less(b.first, a.first))
                return false;
            return less(a.second, b.second);
        }
    };
    using Terms = std::map<Key, Coefficient, KeyLess>;

    TensorFunc() = default;

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Partition& left, const Partition& right, const Coefficient& c);
    TensorFunc& operator+=(const TensorFunc& other);
    TensorFunc& operator-=(const TensorFunc& other);

    friend bool operator==(const TensorFunc&, const TensorFunc&) = default;

private:
    Terms terms_;
};

// a (x) b, both sides rewritten in H.
TensorFunc tensor(const SymFunc& a, const SymFunc& b);
// Componentwise product in Lambda (x) Lambda.
TensorFunc operator*(const TensorFunc& x, const TensorFunc& y);
TensorFunc operator+(const TensorFunc& x, const TensorFunc& y);
// The multiplication map a (x) b -> ab, in H.
SymFunc multiply_components(const TensorFunc& t);

// Delta, with Delta(h_n) = sum_{i} h_i (x) h_{n-i}, extended multiplicatively.
TensorFunc coproduct(const SymFunc& f);

// Antipode S(h_n) = (-1)^n e_n, extended multiplicatively. Basis of f kept.
SymFunc antipode(const SymFunc& f);

// Frobenius f_k: x_i -> x_i^k, so m_lambda -> m_{k lambda}. Basis of f kept.
SymFunc frobenius(int k, const SymFunc& f);

// Verschiebung v_k: h_n -> h_{n/k} if k | n, else 0. Basis of f kept.
SymFunc verschiebung(int k, const SymFunc& f);

// U_k = f_k o S o v_k.
SymFunc u_map(int k, const SymFunc& f);

using LinearMap = std::function<SymFunc(const SymFunc&)>;

// (id * u)(f) = sum over Delta(f) = sum a (x) b of a u(b). Basis of f kept.
SymFunc convolve_with_identity(const LinearMap& u, const SymFunc& f);

// V_k = id * U_k; sends h_m to G(k, m).
SymFunc v_map(int k, const SymFunc& f);

// Bernstein creation operator sum_i (-1)^i h_{m+i} e_i^perp f. Basis of f kept.
SymFunc bernstein(int m, const SymFunc& f);

} // namespace sym
