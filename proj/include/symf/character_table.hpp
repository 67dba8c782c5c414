#pragma once

#include "symf/partition.hpp"

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace symf {

/// Largest degree for which character_table() will build a table.
inline constexpr int max_table_degree = 20;

/// Irreducible characters χ^λ_μ of the symmetric group S_r. Rows (λ) and columns
/// (μ, cycle types) are both indexed by partitions_of(r) in canonical order.
class CharacterTable {
public:
    /// Murnaghan–Nakayama border-strip recursion. Throws ResourceError above max_table_degree.
    static CharacterTable compute(int r);

    int degree() const noexcept { return degree_; }
    const std::vector<Partition>& partitions() const noexcept { return partitions_; }
    std::size_t size() const noexcept { return partitions_.size(); }
    std::size_t index_of(const Partition& p) const;

    std::int64_t at(std::size_t row, std::size_t col) const { return values_[row * size() + col]; }
    std::int64_t value(const Partition& lambda, const Partition& mu) const
    {
        return at(index_of(lambda), index_of(mu));
    }

    /// Header row of cycle types, then one row per λ.
    std::string to_text() const;

    /// Versioned JSON document, one entry per (λ, μ).
    std::string to_json() const;
    /// Returns nullopt for malformed documents, version mismatch, or wrong degree.
    static std::optional<CharacterTable> from_json(const std::string& text, int expected_degree);

    bool operator==(const CharacterTable& other) const
    {
        return degree_ == other.degree_ && values_ == other.values_;
    }

private:
    explicit CharacterTable(int r);

    int degree_ = 0;
    std::vector<Partition> partitions_;
    std::unordered_map<Partition, std::size_t, PartitionHash> index_;
    std::vector<std::int64_t> values_;
};

inline constexpr int table_cache_version = 1;

/// Process-wide memoized table, read from or persisted to the disk cache when one is configured.
std::shared_ptr<const CharacterTable> character_table(int r);

/// Enables (or with nullopt disables) the on-disk table cache.
void set_table_cache_directory(std::optional<std::filesystem::path> dir);
std::optional<std::filesystem::path> table_cache_directory();

/// $SYMF_CACHE_DIR, else $XDG_CACHE_HOME/symf, else $HOME/.cache/symf.
std::filesystem::path default_table_cache_directory();

std::filesystem::path table_cache_file(const std::filesystem::path& dir, int r);

/// Degrees above this skip the full table in character_value().
inline constexpr int direct_character_threshold = 14;

/// A single χ^λ_μ: a table lookup at small degree, otherwise a memoized
/// Murnaghan–Nakayama evaluation with no degree cap.
Integer character_value(const Partition& lambda, const Partition& mu);

/// Drops the in-memory tables; the disk cache is untouched.
void clear_table_memory_cache();

} // namespace symf
