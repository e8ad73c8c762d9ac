#include "sym/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace sym {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(from_raw(std::span<const int>(parts.begin(), parts.size())))
{
}

Partition Partition::from_raw(std::span<const int> raw)
{
    std::vector<int> parts;
    parts.reserve(raw.size());
    for (int x : raw) {
        if (x < 0)
            throw std::invalid_argument("partition entries must be nonnegative");
        if (x > 0)
            parts.push_back(x);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return from_canonical(std::move(parts));
}

Partition Partition::from_canonical(std::vector<int> parts)
{
    Partition p;
    p.parts_ = std::move(parts);
    return p;
}

int Partition::size() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition make_partition(std::span<const int> raw)
{
    return Partition::from_raw(raw);
}

int size(const Partition& lambda) noexcept
{
    return lambda.size();
}

Partition transpose(const Partition& lambda)
{
    std::vector<int> t(static_cast<std::size_t>(lambda.first()), 0);
    for (int part : lambda)
        for (int i = 0; i < part; ++i)
            ++t[static_cast<std::size_t>(i)];
    return Partition::from_canonical(std::move(t));
}

bool contains(const Partition& lambda, const Partition& mu) noexcept
{
    if (mu.length() > lambda.length())
        return false;
    for (std::size_t i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > lambda.part(i))
            return false;
    return true;
}

bool dominates(const Partition& lambda, const Partition& mu)
{
    if (lambda.size() != mu.size())
        throw std::invalid_argument("dominance compares partitions of the same size");
    const std::size_t len = std::max(lambda.length(), mu.length());
    int a = 0, b = 0;
    for (std::size_t i = 1; i <= len; ++i) {
        a += lambda.part(i);
        b += mu.part(i);
        if (a < b)
            return false;
    }
    return true;
}

Partition concat_sort(const Partition& lambda, const Partition& mu)
{
    std::vector<int> out;
    out.reserve(lambda.length() + mu.length());
    std::merge(lambda.begin(), lambda.end(), mu.begin(), mu.end(), std::back_inserter(out),
               std::greater<>());
    return Partition::from_canonical(std::move(out));
}

std::vector<long> beta_numbers(const Partition& lambda, int q)
{
    std::vector<long> beta;
    beta.reserve(static_cast<std::size_t>(std::max(q, 0)));
    for (int i = 1; i <= q; ++i)
        beta.push_back(static_cast<long>(lambda.part(static_cast<std::size_t>(i))) - i);
    return beta;
}

Partition scale_parts(const Partition& lambda, int k)
{
    std::vector<int> parts(lambda.parts());
    if (k <= 0)
        return {};
    for (int& x : parts)
        x *= k;
    return Partition::from_canonical(std::move(parts));
}

Partition column(int n)
{
    return Partition::from_canonical(std::vector<int>(static_cast<std::size_t>(std::max(n, 0)), 1));
}

namespace {

void enumerate(int remaining, int bound, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.push_back(Partition::from_canonical(prefix));
        return;
    }
    for (int first = std::min(remaining, bound); first >= 1; --first) {
        prefix.push_back(first);
        enumerate(remaining - first, first, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n, std::optional<int> max_part)
{
    std::vector<Partition> out;
    if (n < 0)
        return out;
    const int bound = max_part ? std::max(*max_part, 0) : n;
    std::vector<int> prefix;
    enumerate(n, bound, prefix, out);
    return out;
}

std::string to_string(const Partition& lambda)
{
    std::string s;
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(lambda.parts()[i]);
    }
    return s;
}

Partition parse_partition(std::string_view text)
{
    std::string cleaned;
    for (char c : text)
        if (c != ' ' && c != '\t')
            cleaned += c;
    std::string_view body = cleaned;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']')
            throw std::invalid_argument("unbalanced brackets in partition '" + std::string(text) + "'");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> raw;
    while (!body.empty()) {
        const auto comma = body.find(',');
        const std::string_view token = body.substr(0, comma);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
            throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
        raw.push_back(value);
        if (comma == std::string_view::npos)
            break;
        body.remove_prefix(comma + 1);
        if (body.empty())
            throw std::invalid_argument("trailing comma in partition '" + std::string(text) + "'");
    }
    return Partition::from_raw(raw);
}

} // namespace sym
