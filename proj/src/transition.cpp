#include "transition.hpp"

#include <array>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace sym::detail {

SymFunc concat_product(const SymFunc& f, const SymFunc& g)
{
    SymFunc out(f.basis());
    for (const auto& [a, ca] : f.terms())
        for (const auto& [b, cb] : g.terms())
            out.add_term(concat_sort(a, b), ca * cb);
    return out;
}

namespace {

// A generator sequence x_0, x_1, ... filled on demand by a recurrence that
// only looks at earlier entries. Deque storage keeps references stable.
class SequenceCache {
public:
    using Step = std::function<SymFunc(int, const std::deque<SymFunc>&)>;
    explicit SequenceCache(Step step) : step_(std::move(step)) {}

    const SymFunc& get(int n)
    {
        std::lock_guard lock(mutex_);
        while (static_cast<int>(values_.size()) <= n)
            values_.push_back(step_(static_cast<int>(values_.size()), values_));
        return values_[static_cast<std::size_t>(n)];
    }

private:
    Step step_;
    std::mutex mutex_;
    std::deque<SymFunc> values_;
};

SymFunc h_gen(int n)
{
    return gen(Basis::H, n > 0 ? Partition{n} : Partition{});
}

} // namespace

const SymFunc& elementary_in_h(int n)
{
    // e_n = sum_{i=1}^{n} (-1)^{i-1} h_i e_{n-i}
    static SequenceCache cache([](int n, const std::deque<SymFunc>& e) {
        if (n == 0)
            return SymFunc::constant(1);
        SymFunc out(Basis::H);
        for (int i = 1; i <= n; ++i) {
            SymFunc term = concat_product(h_gen(i), e[static_cast<std::size_t>(n - i)]);
            if (i % 2 == 1)
                out += term;
            else
                out -= term;
        }
        return out;
    });
    if (n < 0)
        throw std::out_of_range("elementary_in_h: negative degree");
    return cache.get(n);
}

const SymFunc& power_sum_in_h(int n)
{
    // n h_n = sum_{i=1}^{n} p_i h_{n-i}
    static SequenceCache cache([](int n, const std::deque<SymFunc>& p) {
        if (n == 0)
            return SymFunc::constant(1);
        SymFunc out = scale(n, h_gen(n));
        for (int i = 1; i < n; ++i)
            out -= concat_product(h_gen(n - i), p[static_cast<std::size_t>(i)]);
        return out;
    });
    if (n < 0)
        throw std::out_of_range("power_sum_in_h: negative degree");
    return cache.get(n);
}

const SymFunc& complete_in_p(int n)
{
    static SequenceCache cache([](int n, const std::deque<SymFunc>& h) {
        if (n == 0)
            return SymFunc::constant(1, Basis::P);
        SymFunc out(Basis::P);
        for (int i = 1; i <= n; ++i)
            out += concat_product(gen(Basis::P, Partition{i}), h[static_cast<std::size_t>(n - i)]);
        out *= Coefficient(1, n);
        return out;
    });
    if (n < 0)
        throw std::out_of_range("complete_in_p: negative degree");
    return cache.get(n);
}

namespace {

template <class T>
void fill_row(Dense<T>& table, const DegreeTable& t, std::size_t row, const SymFunc& f)
{
    for (const auto& [lambda, c] : f.terms()) {
        if (lambda.size() != t.n)
            throw std::logic_error("transition row has wrong degree");
        if constexpr (std::is_same_v<T, Integer>) {
            if (!is_integral(c))
                throw std::logic_error("non-integral entry in integral transition table");
            table(row, t.at(lambda)) = c.get_num();
        } else {
            table(row, t.at(lambda)) = c;
        }
    }
}

// Coefficients of x^nu in F * h_r for every nu |- n, where F is the row of
// h-to-m coefficients of a degree (n - r) element.
void multiply_row_by_complete(const DegreeTable& lower, const IntDense& lower_h_to_m,
                              std::size_t lower_row, int r, DegreeTable& t, std::size_t row)
{
    std::vector<int> rest;
    for (std::size_t j = 0; j < t.parts.size(); ++j) {
        const auto& nu = t.parts[j].parts();
        Integer total = 0;
        rest.assign(nu.begin(), nu.end());
        // Choose b <= nu with |b| = r; accumulate F[sort(nu - b)].
        std::function<void(std::size_t, int)> walk = [&](std::size_t pos, int left) {
            if (left == 0) {
                const Partition a = Partition::from_raw(rest);
                total += lower_h_to_m(lower_row, lower.at(a));
                return;
            }
            if (pos == nu.size())
                return;
            const int cap = std::min(nu[pos], left);
            for (int take = 0; take <= cap; ++take) {
                rest[pos] = nu[pos] - take;
                walk(pos + 1, left - take);
            }
            rest[pos] = nu[pos];
        };
        walk(0, r);
        t.h_to_m(row, j) = total;
    }
}

void check_unitriangular(const IntDense& m, bool lower, const char* what)
{
    for (std::size_t i = 0; i < m.dim(); ++i) {
        if (m(i, i) != 1)
            throw std::logic_error(std::string(what) + ": diagonal entry is not 1");
        for (std::size_t j = 0; j < m.dim(); ++j)
            if ((lower ? j > i : j < i) && m(i, j) != 0)
                throw std::logic_error(std::string(what) + ": not triangular");
    }
}

IntDense invert_lower_unitriangular(const IntDense& a)
{
    const std::size_t n = a.dim();
    IntDense x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x(i, i) = 1;
        for (std::size_t j = i; j-- > 0;) {
            Integer s = 0;
            for (std::size_t k = j; k < i; ++k)
                if (sgn(a(i, k)) != 0 && sgn(x(k, j)) != 0)
                    s += a(i, k) * x(k, j);
            x(i, j) = -s;
        }
    }
    return x;
}

IntDense transpose(const IntDense& a)
{
    IntDense t(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            t(j, i) = a(i, j);
    return t;
}

std::unique_ptr<DegreeTable> build_table(int n)
{
    auto t = std::make_unique<DegreeTable>();
    t->n = n;
    t->parts = partitions_of(n);
    const std::size_t count = t->parts.size();
    for (std::size_t i = 0; i < count; ++i)
        t->index.emplace(t->parts[i], i);

    // h -> m: peel off the smallest part and multiply by h_r.
    t->h_to_m = IntDense(count);
    for (std::size_t i = 0; i < count; ++i) {
        const Partition& lambda = t->parts[i];
        if (lambda.empty()) {
            t->h_to_m(i, i) = 1;
            continue;
        }
        std::vector<int> head(lambda.parts().begin(), lambda.parts().end() - 1);
        const int r = lambda.parts().back();
        const DegreeTable& lower = degree_table(n - r);
        multiply_row_by_complete(lower, lower.h_to_m, lower.at(Partition::from_canonical(head)), r, *t, i);
    }

    // s -> h by Jacobi-Trudi.
    t->s_to_h = IntDense(count);
    for (std::size_t i = 0; i < count; ++i)
        fill_row(t->s_to_h, *t, i, skew_schur(t->parts[i], Partition{}));
    check_unitriangular(t->s_to_h, true, "Jacobi-Trudi table");
    t->h_to_s = invert_lower_unitriangular(t->s_to_h);

    // s -> m as (s -> h)(h -> m); Kostka numbers.
    t->s_to_m = IntDense(count);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t k = 0; k <= i; ++k) {
            const Integer& a = t->s_to_h(i, k);
            if (sgn(a) == 0)
                continue;
            for (std::size_t j = 0; j < count; ++j)
                if (sgn(t->h_to_m(k, j)) != 0)
                    t->s_to_m(i, j) += a * t->h_to_m(k, j);
        }
    check_unitriangular(t->s_to_m, false, "Kostka table");
    // Inverse of an upper unitriangular matrix via its lower transpose.
    t->m_to_s = transpose(invert_lower_unitriangular(transpose(t->s_to_m)));

    t->e_to_h = IntDense(count);
    t->p_to_h = IntDense(count);
    t->h_to_p = RatDense(count);
    for (std::size_t i = 0; i < count; ++i) {
        SymFunc e = SymFunc::constant(1);
        SymFunc p = SymFunc::constant(1);
        SymFunc h = SymFunc::constant(1, Basis::P);
        for (int part : t->parts[i]) {
            e = concat_product(e, elementary_in_h(part));
            p = concat_product(p, power_sum_in_h(part));
            h = concat_product(h, complete_in_p(part));
        }
        fill_row(t->e_to_h, *t, i, e);
        fill_row(t->p_to_h, *t, i, p);
        fill_row(t->h_to_p, *t, i, h);
    }
    return t;
}

struct TableSlots {
    std::array<std::once_flag, kMaxTableDegree + 1> once;
    std::array<std::unique_ptr<DegreeTable>, kMaxTableDegree + 1> tables;
};

TableSlots& slots()
{
    static TableSlots s;
    return s;
}

} // namespace

const DegreeTable& degree_table(int n)
{
    if (n < 0 || n > kMaxTableDegree)
        throw std::out_of_range("no transition table for degree " + std::to_string(n));
    auto& s = slots();
    const auto idx = static_cast<std::size_t>(n);
    std::call_once(s.once[idx], [&] { s.tables[idx] = build_table(n); });
    return *s.tables[idx];
}

} // namespace sym::detail
