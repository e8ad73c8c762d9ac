#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "sym/partition.hpp"

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

// Independent count of partitions of n with parts <= k.
long count_partitions(int n, int k)
{
    if (n == 0)
        return 1;
    if (n < 0 || k == 0)
        return 0;
    return count_partitions(n - k, k) + count_partitions(n, k - 1);
}

} // namespace

TEST_CASE("canonicalization")
{
    CHECK(make_partition({3, 2, 1, 0, 0}) == Partition{3, 2, 1});
    CHECK(make_partition({}).empty());
    CHECK(make_partition({1, 3, 2}) == Partition{3, 2, 1});
    CHECK((Partition{3, 2, 1, 0} == Partition{3, 2, 1}));
    CHECK_THROWS_AS(make_partition({2, -1}), std::invalid_argument);
}

TEST_CASE("size and accessors")
{
    CHECK(size(Partition{3, 2, 1}) == 6);
    CHECK(size(Partition{}) == 0);
    CHECK(size(Partition{2, 1, 1, 1, 1}) == 6);
    const Partition p{4, 2};
    CHECK(p.part(1) == 4);
    CHECK(p.part(2) == 2);
    CHECK(p.part(3) == 0);
    CHECK(p.part(100) == 0);
    CHECK(p.length() == 2);
}

TEST_CASE("transpose")
{
    CHECK(transpose(Partition{}).empty());
    CHECK(transpose(Partition{3, 2}) == Partition{2, 2, 1});
    CHECK(transpose(Partition{4}) == Partition{1, 1, 1, 1});
    CHECK(column(4) == Partition{1, 1, 1, 1});
    for (const auto& lambda : all_up_to(12))
        REQUIRE(transpose(transpose(lambda)) == lambda);
}

TEST_CASE("containment")
{
    CHECK(contains(Partition{4, 2, 1}, Partition{3, 2}));
    CHECK_FALSE(contains(Partition{4, 2}, Partition{3, 2, 1}));
    CHECK(contains(Partition{2, 2}, Partition{2, 2}));
    CHECK(contains(Partition{1}, Partition{}));
}

TEST_CASE("dominance")
{
    CHECK(dominates(Partition{2, 2, 1}, Partition{2, 1, 1, 1}));
    CHECK_FALSE(dominates(Partition{2, 1, 1, 1}, Partition{2, 2, 1}));
    CHECK(dominates(Partition{3, 1}, Partition{3, 1}));
    CHECK_THROWS_AS(dominates(Partition{3}, Partition{2}), std::invalid_argument);

    SUBCASE("below (n-1,n-1,1) means all parts < n")
    {
        for (int n = 2; n <= 6; ++n)
            for (const auto& mu : partitions_of(2 * n - 1))
                REQUIRE(dominates(Partition{n - 1, n - 1, 1}, mu) == (mu.first() < n));
    }

    SUBCASE("partial order on Par_n")
    {
        for (int n = 0; n <= 8; ++n) {
            const auto ps = partitions_of(n);
            for (const auto& a : ps) {
                REQUIRE(dominates(a, a));
                for (const auto& b : ps) {
                    if (a != b && dominates(a, b))
                        REQUIRE_FALSE(dominates(b, a));
                    if (!dominates(a, b))
                        continue;
                    for (const auto& c : ps)
                        if (dominates(b, c))
                            REQUIRE(dominates(a, c));
                }
            }
        }
    }

    SUBCASE("enumeration order is a linear extension of reverse dominance")
    {
        for (int n = 0; n <= 8; ++n) {
            const auto ps = partitions_of(n);
            for (std::size_t i = 0; i < ps.size(); ++i)
                for (std::size_t j = i + 1; j < ps.size(); ++j)
                    REQUIRE_FALSE(dominates(ps[j], ps[i]));
        }
    }
}

TEST_CASE("enumeration")
{
    const std::vector<Partition> bounded{{2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}};
    CHECK(partitions_of(5, 2) == bounded);
    const auto zero = partitions_of(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(4).front() == Partition{4});
    CHECK(partitions_of(4).back() == Partition{1, 1, 1, 1});
    CHECK(partitions_of(-1).empty());

    for (int n = 0; n <= 12; ++n) {
        const auto all = partitions_of(n);
        REQUIRE(static_cast<long>(all.size()) == count_partitions(n, n));
        REQUIRE(std::set<Partition>(all.begin(), all.end()).size() == all.size());
        for (int k = 1; k <= n + 1; ++k) {
            long filtered = 0;
            for (const auto& p : all)
                filtered += p.first() < k ? 1 : 0;
            REQUIRE(static_cast<long>(partitions_of(n, k - 1).size()) == filtered);
        }
    }
}

TEST_CASE("concat_sort")
{
    CHECK(concat_sort(Partition{5, 3, 2}, Partition{6, 4, 3, 1, 1}) == Partition{6, 5, 4, 3, 3, 2, 1, 1});
    CHECK(concat_sort(Partition{3, 1}, Partition{}) == Partition{3, 1});
    CHECK(concat_sort(Partition{2, 1}, Partition{2, 1}) == Partition{2, 2, 1, 1});
}

TEST_CASE("beta numbers")
{
    CHECK(beta_numbers(Partition{3, 2, 1}, 4) == std::vector<long>{2, 0, -2, -4});
    CHECK(beta_numbers(Partition{}, 3) == std::vector<long>{-1, -2, -3});
    CHECK(beta_numbers(Partition{3, 1, 1}, 3) == std::vector<long>{2, -1, -2});

    SUBCASE("complementation with the transpose")
    {
        for (const auto& lambda : all_up_to(10)) {
            const Partition t = transpose(lambda);
            for (int p = lambda.first(); p <= lambda.first() + 2; ++p)
                for (int q = t.first(); q <= t.first() + 2; ++q) {
                    std::multiset<long> all;
                    for (long b : beta_numbers(lambda, q))
                        all.insert(b);
                    for (long b : beta_numbers(t, p))
                        all.insert(-1 - b);
                    std::multiset<long> expected;
                    for (long x = -q; x <= p - 1; ++x)
                        expected.insert(x);
                    REQUIRE(all == expected);
                }
        }
    }
}

TEST_CASE("floor division")
{
    CHECK(floor_div(7, 3) == 2);
    CHECK(floor_mod(7, 3) == 1);
    CHECK(floor_div(-7, 3) == -3);
    CHECK(floor_mod(-7, 3) == 2);
    CHECK(floor_mod(-6, 3) == 0);
    for (long n = -20; n <= 20; ++n)
        for (long k = 1; k <= 5; ++k) {
            REQUIRE(floor_div(n, k) * k + floor_mod(n, k) == n);
            REQUIRE(floor_mod(n, k) >= 0);
            REQUIRE(floor_mod(n, k) < k);
        }
}

TEST_CASE("text form")
{
    CHECK(to_string(Partition{3, 2, 1}) == "3,2,1");
    CHECK(to_string(Partition{}).empty());
    CHECK(parse_partition("3,2,1") == Partition{3, 2, 1});
    CHECK(parse_partition("[3,2,1]") == Partition{3, 2, 1});
    CHECK(parse_partition("").empty());
    CHECK(parse_partition("[]").empty());
    CHECK(parse_partition("1,3,2") == Partition{3, 2, 1});
    CHECK_THROWS_AS(parse_partition("3,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,-1"), std::invalid_argument);
}
