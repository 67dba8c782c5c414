#pragma once

#include "symf/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace symf {

/// Weakly decreasing sequence of positive integers; an immutable value used as
/// the key of every sparse map in the library.
class Partition {
public:
    Partition() = default;
    /// Throws UsageError unless `parts` is weakly decreasing and strictly positive.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts into decreasing order and drops zero parts; negative parts still throw.
    static Partition normalized(std::vector<int> parts);
    /// Parses "[3,1]" or "[]".
    static Partition parse(const std::string& text);
    /// (m,m,...,m) with n parts.
    static Partition rectangle(int m, int n);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    /// Number of parts equal to `i`.
    int multiplicity(int i) const;

    /// Union of parts (the partition of p_λ·p_μ).
    Partition join(const Partition& other) const;
    /// Every part multiplied by `factor` (the partition of p_λ[p_factor]).
    Partition scaled(int factor) const;

    std::string to_string() const;

    bool operator==(const Partition&) const = default;
    /// Canonical order: weight ascending, then reverse lexicographic, so [4] < [3,1] < [2,2].
    std::strong_ordering operator<=>(const Partition& other) const;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// All partitions of n in canonical (reverse lexicographic) order.
std::vector<Partition> partitions_of(int n);

/// Number of partitions of n, by the Euler recurrence over generalized pentagonal numbers.
Integer partition_count(int n);

/// z_λ = ∏ i^{m_i} m_i!, the centralizer order of a permutation of cycle type λ.
Integer z_of(const Partition& lambda);

Partition conjugate(const Partition& lambda);

/// True iff every column of the Young diagram has even length.
bool has_even_columns(const Partition& lambda);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

} // namespace symf
