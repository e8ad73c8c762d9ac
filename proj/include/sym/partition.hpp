#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sym {

// An integer partition, stored without trailing zeros. Parts are weakly
// decreasing and strictly positive; part(i) returns 0 past the end.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);

    // Sorts and strips zeros. Throws std::invalid_argument on negative entries.
    static Partition from_raw(std::span<const int> raw);
    // Trusts the caller: parts must already be canonical.
    static Partition from_canonical(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept;

    // 1-based accessor lambda_i, zero past the stored length.
    int part(std::size_t i) const noexcept
    {
        return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
    }
    int first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
};

Partition make_partition(std::span<const int> raw);
inline Partition make_partition(std::initializer_list<int> raw)
{
    return make_partition(std::span<const int>(raw.begin(), raw.size()));
}

int size(const Partition& lambda) noexcept;
Partition transpose(const Partition& lambda);
bool contains(const Partition& lambda, const Partition& mu) noexcept;
// Requires size(lambda) == size(mu); throws std::invalid_argument otherwise.
bool dominates(const Partition& lambda, const Partition& mu);
Partition concat_sort(const Partition& lambda, const Partition& mu);
// (lambda_1 - 1, ..., lambda_q - q)
std::vector<long> beta_numbers(const Partition& lambda, int q);
// Every part multiplied by k.
Partition scale_parts(const Partition& lambda, int k);
// (1^n)
Partition column(int n);

// All partitions of n, optionally bounded by max_part, in reverse
// lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n, std::optional<int> max_part = std::nullopt);

// Quotient and remainder with remainder in {0, ..., k-1}; k > 0.
constexpr long floor_div(long n, long k) noexcept
{
    long q = n / k;
    if (n % k != 0 && n < 0)
        --q;
    return q;
}
constexpr long floor_mod(long n, long k) noexcept { return n - floor_div(n, k) * k; }

// Terms order: by size, then reverse lexicographic within a size.
struct GradedRevLex {
    bool operator()(const Partition& a, const Partition& b) const noexcept
    {
        const int sa = a.size(), sb = b.size();
        if (sa != sb)
            return sa < sb;
        return b.parts() < a.parts();
    }
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (int x : p)
            h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

// "3,2,1"; the empty partition renders as "".
std::string to_string(const Partition& lambda);
// Accepts "3,2,1", "[3,2,1]", "" and "[]"; whitespace is ignored.
Partition parse_partition(std::string_view text);

} // namespace sym
