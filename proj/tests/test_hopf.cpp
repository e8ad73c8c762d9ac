#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <tuple>
#include <vector>

#include "sym/hopf.hpp"
#include "sym/petrie.hpp"

using namespace sym;

namespace {

std::vector<Partition> all_up_to(int n_max)
{
    std::vector<Partition> out;
    for (int n = 0; n <= n_max; ++n)
        for (auto& p : partitions_of(n))
            out.push_back(p);
    return out;
}

SymFunc h_of(const SymFunc& f)
{
    return to_basis(f, Basis::H);
}

using Triple = std::map<std::tuple<Partition, Partition, Partition>, Coefficient>;

void add(Triple& t, const Partition& a, const Partition& b, const Partition& c, const Coefficient& x)
{
    auto& slot = t[{a, b, c}];
    slot += x;
    if (slot == 0)
        t.erase({a, b, c});
}

} // namespace

TEST_CASE("coproduct")
{
    TensorFunc d2;
    d2.add_term(Partition{}, Partition{2}, 1);
    d2.add_term(Partition{1}, Partition{1}, 1);
    d2.add_term(Partition{2}, Partition{}, 1);
    CHECK(coproduct(complete(2)) == d2);
    CHECK(coproduct(SymFunc::constant(1)) == tensor(SymFunc::constant(1), SymFunc::constant(1)));
    CHECK(coproduct(SymFunc(Basis::S)).is_zero());

    TensorFunc e3;
    for (int i = 0; i <= 3; ++i)
        e3 += tensor(elementary(i), elementary(3 - i));
    CHECK(coproduct(elementary(3)) == e3);

    // Power sums are primitive.
    for (int n = 1; n <= 6; ++n)
        REQUIRE(coproduct(power_sum(n))
                == tensor(power_sum(n), SymFunc::constant(1)) + tensor(SymFunc::constant(1), power_sum(n)));

    SUBCASE("coassociative")
    {
        for (const auto& lambda : all_up_to(6)) {
            Triple left, right;
            const TensorFunc d = coproduct(gen(Basis::H, lambda));
            for (const auto& [key, c] : d.terms()) {
                const auto& [a, b] = key;
                const TensorFunc da = coproduct(gen(Basis::H, a));
                for (const auto& [k2, c2] : da.terms())
                    add(left, k2.first, k2.second, b, c * c2);
                const TensorFunc db = coproduct(gen(Basis::H, b));
                for (const auto& [k2, c2] : db.terms())
                    add(right, a, k2.first, k2.second, c * c2);
            }
            REQUIRE(left == right);
        }
    }

    SUBCASE("algebra morphism")
    {
        const auto ps = all_up_to(8);
        for (const auto& a : ps)
            for (const auto& b : ps) {
                if (a.size() + b.size() > 8)
                    continue;
                const SymFunc f = gen(Basis::H, a);
                const SymFunc g = gen(Basis::H, b);
                REQUIRE(coproduct(multiply(f, g)) == coproduct(f) * coproduct(g));
            }
    }

    SUBCASE("Petrie functions")
    {
        for (int k = 1; k <= 4; ++k)
            for (int m = 0; m <= 8; ++m) {
                TensorFunc expected;
                for (int i = 0; i <= m; ++i)
                    expected += tensor(petrie_g(k, i), petrie_g(k, m - i));
                REQUIRE(coproduct(petrie_g(k, m)) == expected);
            }
    }

    CHECK(multiply_components(coproduct(complete(2))) == scale(2, complete(2)) + gen(Basis::H, Partition{1, 1}));
}

TEST_CASE("antipode")
{
    CHECK(equivalent(antipode(complete(2)), elementary(2)));
    CHECK(equivalent(antipode(complete(3)), -elementary(3)));
    CHECK(equivalent(antipode(power_sum(3)), -power_sum(3)));
    CHECK(equivalent(antipode(SymFunc::constant(1)), SymFunc::constant(1)));
    CHECK(antipode(schur(Partition{2, 1})).basis() == Basis::S);
    // S(s_lambda) = (-1)^|lambda| s_{lambda^t}
    for (const auto& lambda : all_up_to(7)) {
        const SymFunc expected = lambda.size() % 2 == 0 ? schur(transpose(lambda)) : -schur(transpose(lambda));
        REQUIRE(antipode(schur(lambda)) == expected);
    }
    for (const auto& lambda : all_up_to(6))
        REQUIRE(antipode(antipode(gen(Basis::E, lambda))) == gen(Basis::E, lambda));
}

TEST_CASE("Frobenius and Verschiebung")
{
    CHECK(equivalent(frobenius(2, power_sum(3)), power_sum(6)));
    CHECK(frobenius(3, SymFunc::constant(1)) == SymFunc::constant(1));
    CHECK(equivalent(frobenius(2, elementary(2)), monomial(Partition{2, 2})));
    CHECK(frobenius(1, schur(Partition{2, 1})) == schur(Partition{2, 1}));

    CHECK(verschiebung(2, complete(4)) == complete(2));
    CHECK(verschiebung(2, complete(3)).is_zero());
    CHECK(equivalent(verschiebung(2, power_sum(4)), scale(2, power_sum(2))));
    CHECK(verschiebung(3, SymFunc::constant(1)) == SymFunc::constant(1));
    CHECK(verschiebung(2, gen(Basis::H, Partition{4, 2})) == gen(Basis::H, Partition{2, 1}));
    CHECK(verschiebung(2, gen(Basis::H, Partition{4, 1})).is_zero());

    CHECK(frobenius(7, power_sum(5)) == power_sum(35));
    for (int k = 1; k <= 4; ++k)
        for (int m = 1; k * m <= 12; ++m) {
            REQUIRE(frobenius(k, power_sum(m)) == power_sum(k * m));
            REQUIRE(equivalent(frobenius(k, to_basis(power_sum(m), Basis::H)), power_sum(k * m)));
            const SymFunc v = verschiebung(k, power_sum(m));
            if (m % k == 0)
                REQUIRE(equivalent(v, scale(k, power_sum(m / k))));
            else
                REQUIRE(v.is_zero());
        }

    SUBCASE("adjoint pair")
    {
        for (int n = 1; n <= 3; ++n)
            for (int d = 0; n * d <= 8; ++d)
                for (const auto& a : partitions_of(n * d))
                    for (const auto& b : partitions_of(d))
                        for (Basis ba : {Basis::S, Basis::H, Basis::P})
                            for (Basis bb : {Basis::S, Basis::M, Basis::E}) {
                                const SymFunc x = gen(ba, a);
                                const SymFunc y = gen(bb, b);
                                REQUIRE(hall(x, frobenius(n, y)) == hall(verschiebung(n, x), y));
                            }
    }

    SUBCASE("algebra endomorphisms")
    {
        const auto ps = all_up_to(4);
        for (int k = 1; k <= 3; ++k)
            for (const auto& a : ps)
                for (const auto& b : ps) {
                    if (k * (a.size() + b.size()) > 12)
                        continue;
                    const SymFunc f = schur(a);
                    const SymFunc g = gen(Basis::E, b);
                    REQUIRE(equivalent(frobenius(k, multiply(f, g)), multiply(frobenius(k, f), frobenius(k, g))));
                    REQUIRE(equivalent(verschiebung(k, multiply(f, g)),
                                       multiply(verschiebung(k, f), verschiebung(k, g))));
                }
    }
}

TEST_CASE("U_k")
{
    CHECK(equivalent(u_map(2, complete(2)), -power_sum(2)));
    CHECK(u_map(2, complete(3)).is_zero());
    CHECK(equivalent(u_map(2, power_sum(4)), scale(-2, power_sum(4))));
    for (int k = 1; k <= 4; ++k)
        for (int i = 0; k * i <= 8; ++i) {
            const SymFunc expected = frobenius(k, elementary(i));
            REQUIRE(equivalent(u_map(k, complete(k * i)), i % 2 == 0 ? expected : -expected));
        }
}

TEST_CASE("convolution")
{
    const LinearMap id = [](const SymFunc& f) { return f; };
    const LinearMap s = [](const SymFunc& f) { return antipode(f); };
    CHECK(convolve_with_identity(s, complete(2)).is_zero());
    CHECK(convolve_with_identity(id, complete(1)) == scale(2, complete(1)));
    for (const auto& lambda : all_up_to(6))
        if (!lambda.empty())
            REQUIRE(convolve_with_identity(s, gen(Basis::H, lambda)).is_zero());
    CHECK(convolve_with_identity(s, SymFunc::constant(1)) == SymFunc::constant(1));
    const LinearMap u3 = [](const SymFunc& f) { return u_map(3, f); };
    CHECK(equivalent(convolve_with_identity(u3, complete(4)), petrie_g(3, 4)));
}

TEST_CASE("V_k")
{
    CHECK(to_basis(v_map(3, complete(4)), Basis::M) == petrie_g(3, 4));
    CHECK(equivalent(v_map(2, power_sum(4)), -power_sum(4)));
    CHECK(equivalent(v_map(3, power_sum(4)), power_sum(4)));

    for (int k = 1; k <= 5; ++k)
        for (int m = 0; m <= 8; ++m)
            REQUIRE(to_basis(v_map(k, complete(m)), Basis::M) == petrie_g(k, m));

    SUBCASE("algebra morphism")
    {
        const auto ps = all_up_to(8);
        for (int k = 1; k <= 4; ++k)
            for (const auto& a : ps)
                for (const auto& b : ps) {
                    if (a.size() + b.size() > 8 || a.size() == 0 || b.size() == 0)
                        continue;
                    const SymFunc f = gen(Basis::H, a);
                    const SymFunc g = gen(Basis::H, b);
                    REQUIRE(v_map(k, multiply(f, g)) == multiply(v_map(k, f), v_map(k, g)));
                }
    }

    SUBCASE("commutes with the antipode")
    {
        for (int k = 1; k <= 4; ++k)
            for (const auto& lambda : all_up_to(6)) {
                const SymFunc f = gen(Basis::H, lambda);
                REQUIRE(antipode(v_map(k, f)) == v_map(k, antipode(f)));
            }
    }

    SUBCASE("p_n through the h-expansion")
    {
        for (int k = 1; k <= 4; ++k)
            for (int n = 1; n <= 8; ++n) {
                const SymFunc pn = h_of(power_sum(n));
                SymFunc image(Basis::M);
                for (const auto& [lambda, c] : pn.terms()) {
                    SymFunc term = SymFunc::constant(c, Basis::M);
                    for (int part : lambda)
                        term = multiply(term, petrie_g(k, part));
                    image += term;
                }
                const Coefficient factor = n % k == 0 ? 1 - k : 1;
                REQUIRE(equivalent(image, scale(factor, power_sum(n))));
            }
    }
}

TEST_CASE("Bernstein operators")
{
    CHECK(equivalent(bernstein(2, complete(3)),
                     multiply(complete(2), complete(3)) - multiply(complete(3), complete(2))));
    CHECK(bernstein(3, complete(4)).is_zero());
    CHECK(equivalent(bernstein(2, h_of(power_sum(3))),
                     multiply(complete(2), h_of(power_sum(3))) - complete(5)));
    CHECK(equivalent(bernstein(0, SymFunc::constant(1)), SymFunc::constant(1)));

    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n) {
            REQUIRE(equivalent(bernstein(m, complete(n)),
                               multiply(complete(m), complete(n)) - multiply(complete(m + 1), complete(n - 1))));
            if (n >= 1)
                REQUIRE(equivalent(bernstein(m, h_of(power_sum(n))),
                                   multiply(complete(m), h_of(power_sum(n))) - complete(m + n)));
        }

    for (const auto& lambda : all_up_to(6))
        for (int m = lambda.first(); m <= 7; ++m) {
            std::vector<int> parts{m};
            parts.insert(parts.end(), lambda.begin(), lambda.end());
            REQUIRE(bernstein(m, schur(lambda)) == schur(Partition::from_raw(parts)));
        }

    // Below the first row the defining sum still evaluates; B_0(s_1) = h_0 h_1 - h_1 = 0.
    CHECK(bernstein(0, schur(Partition{1})).is_zero());
}
