#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sym/coefficient.hpp"
#include "sym/partition.hpp"

namespace sym {

// Monomial, complete homogeneous, elementary, power-sum and Schur bases.
enum class Basis { M, H, E, P, S };

inline constexpr Basis kAllBases[] = {Basis::M, Basis::H, Basis::E, Basis::P, Basis::S};

char basis_letter(Basis b) noexcept;
// "m", "h", "e", "p", "s" (either case). Throws std::invalid_argument.
Basis parse_basis(std::string_view text);

// A bounded-degree symmetric function as a sparse combination of basis
// elements. For the multiplicative bases H, E and P the key lambda stands for
// the product over its parts. Zero coefficients are never stored.
class SymFunc {
public:
    using Terms = std::map<Partition, Coefficient, GradedRevLex>;

    explicit SymFunc(Basis basis = Basis::H) : basis_(basis) {}
    SymFunc(Basis basis, Terms terms);

    static SymFunc constant(Coefficient c, Basis basis = Basis::H);

    Basis basis() const noexcept { return basis_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    // Largest |lambda| over stored keys; 0 for the zero function.
    int degree() const noexcept;
    Coefficient coeff(const Partition& lambda) const;
    bool is_integral() const;

    void add_term(const Partition& lambda, const Coefficient& c);

    SymFunc& operator+=(const SymFunc& other);
    SymFunc& operator-=(const SymFunc& other);
    SymFunc& operator*=(const Coefficient& c);

    // Structural equality: same basis and same terms.
    friend bool operator==(const SymFunc&, const SymFunc&) = default;

private:
    Basis basis_;
    Terms terms_;
};

SymFunc gen(Basis basis, const Partition& lambda);
// Shorthands; zero for negative n, 1 for n == 0.
SymFunc complete(int n);
SymFunc elementary(int n);
SymFunc power_sum(int n);
SymFunc schur(const Partition& lambda);
SymFunc monomial(const Partition& lambda);

// Throws std::invalid_argument when bases differ.
SymFunc add(const SymFunc& f, const SymFunc& g);
SymFunc scale(const Coefficient& c, const SymFunc& f);

SymFunc operator+(const SymFunc& f, const SymFunc& g);
SymFunc operator-(const SymFunc& f, const SymFunc& g);
SymFunc operator-(const SymFunc& f);
SymFunc operator*(const Coefficient& c, const SymFunc& f);
SymFunc operator*(const SymFunc& f, const SymFunc& g);

SymFunc to_basis(const SymFunc& f, Basis target);
// Same element of the ring, independent of basis.
bool equivalent(const SymFunc& f, const SymFunc& g);

// Ring product, returned in the basis of f.
SymFunc multiply(const SymFunc& f, const SymFunc& g);
// Brute-force product: both operands are expanded as explicit polynomials in
// d = deg f + deg g variables straight from the basis definitions (Schur
// functions through semistandard tableaux), multiplied, and re-collected.
// Returned in the M basis.
SymFunc multiply_oracle(const SymFunc& f, const SymFunc& g);

// Hall inner product: (h_lambda, m_mu) = delta.
Coefficient hall(const SymFunc& f, const SymFunc& g);

// det(h_{lambda_i - mu_j - i + j}), returned in the H basis.
SymFunc skew_schur(const Partition& lambda, const Partition& mu);
// det(e_{lambda_i - i + j}) = s_{lambda^t}, returned in the H basis.
SymFunc jacobi_trudi_e(const Partition& lambda);
// Determinant of a square matrix with symmetric-function entries, by
// cofactor expansion memoized on column subsets. Result in the H basis.
SymFunc determinant(const std::vector<std::vector<SymFunc>>& matrix);

// f^perp(g), the adjoint of multiplication by f. Returned in the basis of g.
SymFunc skew_apply(const SymFunc& f, const SymFunc& g);

// The algebra map sending h_i to [i < k].
Coefficient alpha_eval(int k, const SymFunc& f);

SymFunc degree_component(const SymFunc& f, int d);

// "s[2,1]: 1, s[1,1,1]: -2"; a constant renders as its value, zero as "0".
std::string to_pretty(const SymFunc& f);

} // namespace sym
