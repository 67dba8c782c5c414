#include "symf/partition.hpp"

#include "symf/errors.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

namespace symf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw UsageError("partition parts must be positive: " + to_string());
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw UsageError("partition parts must be weakly decreasing: " + to_string());
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::normalized(std::vector<int> parts)
{
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& text)
{
    std::vector<int> parts;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip();
    if (i >= text.size() || text[i] != '[')
        throw UsageError("partition must start with '[': " + text);
    ++i;
    skip();
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        while (true) {
            skip();
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            if (start == i)
                throw UsageError("expected a part in partition: " + text);
            parts.push_back(std::stoi(text.substr(start, i - start)));
            skip();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ']') {
                ++i;
                break;
            }
            throw UsageError("expected ',' or ']' in partition: " + text);
        }
    }
    skip();
    if (i != text.size())
        throw UsageError("trailing characters after partition: " + text);
    return Partition(std::move(parts));
}

Partition Partition::rectangle(int m, int n)
{
    if (m <= 0 || n <= 0)
        return {};
    return Partition(std::vector<int>(static_cast<std::size_t>(n), m));
}

int Partition::multiplicity(int i) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

Partition Partition::join(const Partition& other) const
{
    std::vector<int> merged;
    merged.reserve(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
               std::back_inserter(merged), std::greater<>());
    Partition p;
    p.parts_ = std::move(merged);
    p.weight_ = weight_ + other.weight_;
    return p;
}

Partition Partition::scaled(int factor) const
{
    Partition p;
    p.parts_ = parts_;
    for (int& x : p.parts_)
        x *= factor;
    p.weight_ = weight_ * factor;
    return p;
}

std::string Partition::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

std::strong_ordering Partition::operator<=>(const Partition& other) const
{
    if (weight_ != other.weight_)
        return weight_ <=> other.weight_;
    // reversed: larger parts first
    return std::lexicographical_compare_three_way(other.parts_.begin(), other.parts_.end(),
                                                  parts_.begin(), parts_.end());
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept
{
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int x : p.parts())
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        generate(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n)
{
    if (n < 0)
        throw UsageError("partitions_of: negative argument");
    std::vector<Partition> out;
    std::vector<int> prefix;
    generate(n, n, prefix, out);
    return out;
}

Integer partition_count(int n)
{
    if (n < 0)
        return 0;
    std::vector<Integer> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1;
    for (int i = 1; i <= n; ++i) {
        Integer total = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > i)
                break;
            int sign = (k % 2 == 1) ? 1 : -1;
            total += sign * p[static_cast<std::size_t>(i - g1)];
            if (g2 <= i)
                total += sign * p[static_cast<std::size_t>(i - g2)];
        }
        p[static_cast<std::size_t>(i)] = total;
    }
    return p[static_cast<std::size_t>(n)];
}

Integer z_of(const Partition& lambda)
{
    Integer z = 1;
    const auto& parts = lambda.parts();
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        auto mult = static_cast<unsigned>(j - i);
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(parts[i]), mult);
        z *= power * factorial(mult);
        i = j;
    }
    return z;
}

Partition conjugate(const Partition& lambda)
{
    if (lambda.empty())
        return {};
    std::vector<int> cols(static_cast<std::size_t>(lambda[0]), 0);
    for (int part : lambda)
        for (int c = 0; c < part; ++c)
            ++cols[static_cast<std::size_t>(c)];
    return Partition(std::move(cols));
}

bool has_even_columns(const Partition& lambda)
{
    auto c = conjugate(lambda);
    return std::all_of(c.begin(), c.end(), [](int x) { return x % 2 == 0; });
}

} // namespace symf
