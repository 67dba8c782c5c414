#include "symf/character_table.hpp"

#include "symf/diagnostics.hpp"
#include "symf/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

namespace symf {

namespace {

// Character values by border-strip removal on beta-sets, memoized on (λ, remaining cycle type).
template <class Value>
class MurnaghanNakayama {
public:
    Value chi(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t from)
    {
        if (from == mu.size())
            return lambda.empty() ? Value(1) : Value(0);
        std::string key = encode(lambda, mu, from);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        const int strip = mu[from];
        const int len = static_cast<int>(lambda.size());
        std::vector<int> beta(lambda.size());
        for (int i = 0; i < len; ++i)
            beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);

        Value total = 0;
        for (int i = 0; i < len; ++i) {
            int from_pos = beta[static_cast<std::size_t>(i)];
            int to_pos = from_pos - strip;
            if (to_pos < 0)
                continue;
            if (std::find(beta.begin(), beta.end(), to_pos) != beta.end())
                continue;
            int between = 0;
            for (int b : beta)
                if (b > to_pos && b < from_pos)
                    ++between;
            std::vector<int> moved = beta;
            moved[static_cast<std::size_t>(i)] = to_pos;
            std::sort(moved.begin(), moved.end(), std::greater<>());
            std::vector<int> smaller;
            for (int j = 0; j < len; ++j) {
                int part = moved[static_cast<std::size_t>(j)] - (len - 1 - j);
                if (part > 0)
                    smaller.push_back(part);
            }
            Value sub = chi(smaller, mu, from + 1);
            if (between % 2 == 0)
                total += sub;
            else
                total -= sub;
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    static void put(std::string& key, int x)
    {
        key.push_back(static_cast<char>(x & 0xff));
        key.push_back(static_cast<char>((x >> 8) & 0xff));
    }

    static std::string encode(const std::vector<int>& lambda, const std::vector<int>& mu, std::size_t from)
    {
        std::string key;
        key.reserve(2 * (lambda.size() + mu.size() - from + 1));
        for (int x : lambda)
            put(key, x);
        put(key, 0);
        for (std::size_t i = from; i < mu.size(); ++i)
            put(key, mu[i]);
        return key;
    }

    std::unordered_map<std::string, Value> memo_;
};

} // namespace

CharacterTable::CharacterTable(int r) : degree_(r), partitions_(partitions_of(r))
{
    for (std::size_t i = 0; i < partitions_.size(); ++i)
        index_.emplace(partitions_[i], i);
    values_.assign(partitions_.size() * partitions_.size(), 0);
}

CharacterTable CharacterTable::compute(int r)
{
    if (r < 0)
        throw UsageError("character table degree must be nonnegative");
    if (r > max_table_degree)
        throw ResourceError("character table degree " + std::to_string(r) + " exceeds cap "
                            + std::to_string(max_table_degree));
    CharacterTable table(r);
    MurnaghanNakayama<std::int64_t> mn;
    const std::size_t n = table.size();
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t col = 0; col < n; ++col)
            table.values_[row * n + col]
                = mn.chi(table.partitions_[row].parts(), table.partitions_[col].parts(), 0);
    return table;
}

std::size_t CharacterTable::index_of(const Partition& p) const
{
    auto it = index_.find(p);
    if (it == index_.end())
        throw DegreeError("partition " + p.to_string() + " is not of degree " + std::to_string(degree_));
    return it->second;
}

std::string CharacterTable::to_text() const
{
    std::string out = "lambda\\mu";
    for (const auto& mu : partitions_)
        out += " " + mu.to_string();
    out += "\n";
    for (std::size_t row = 0; row < size(); ++row) {
        out += partitions_[row].to_string();
        for (std::size_t col = 0; col < size(); ++col)
            out += " " + std::to_string(at(row, col));
        out += "\n";
    }
    return out;
}

std::string CharacterTable::to_json() const
{
    nlohmann::ordered_json doc;
    doc["version"] = table_cache_version;
    doc["r"] = degree_;
    auto entries = nlohmann::ordered_json::array();
    for (std::size_t row = 0; row < size(); ++row)
        for (std::size_t col = 0; col < size(); ++col) {
            nlohmann::ordered_json e;
            e["lambda"] = partitions_[row].parts();
            e["mu"] = partitions_[col].parts();
            e["value"] = at(row, col);
            entries.push_back(std::move(e));
        }
    doc["entries"] = std::move(entries);
    return doc.dump();
}

std::optional<CharacterTable> CharacterTable::from_json(const std::string& text, int expected_degree)
{
    try {
        auto doc = nlohmann::json::parse(text);
        if (doc.at("version").get<int>() != table_cache_version)
            return std::nullopt;
        if (doc.at("r").get<int>() != expected_degree || expected_degree < 0
            || expected_degree > max_table_degree)
            return std::nullopt;
        CharacterTable table(expected_degree);
        const auto& entries = doc.at("entries");
        if (!entries.is_array() || entries.size() != table.values_.size())
            return std::nullopt;
        std::vector<bool> seen(table.values_.size(), false);
        for (const auto& e : entries) {
            Partition lambda(e.at("lambda").get<std::vector<int>>());
            Partition mu(e.at("mu").get<std::vector<int>>());
            auto li = table.index_.find(lambda);
            auto mi = table.index_.find(mu);
            if (li == table.index_.end() || mi == table.index_.end())
                return std::nullopt;
            std::size_t slot = li->second * table.size() + mi->second;
            if (seen[slot])
                return std::nullopt;
            seen[slot] = true;
            table.values_[slot] = e.at("value").get<std::int64_t>();
        }
        return table;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

// ---------------------------------------------------------------------------

namespace {

struct TableStore {
    std::mutex mutex;
    std::map<int, std::shared_ptr<const CharacterTable>> tables;
    std::optional<std::filesystem::path> cache_dir;
};

TableStore& store()
{
    static TableStore s;
    return s;
}

std::optional<CharacterTable> load_cached(const std::filesystem::path& dir, int r)
{
    std::ifstream in(table_cache_file(dir, r), std::ios::binary);
    if (!in)
        return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    auto table = CharacterTable::from_json(buf.str(), r);
    if (!table)
        warn("ignoring unreadable character table cache " + table_cache_file(dir, r).string());
    return table;
}

void save_cached(const std::filesystem::path& dir, const CharacterTable& table)
{
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    auto target = table_cache_file(dir, table.degree());
    std::random_device rd;
    auto tmp = dir / (target.filename().string() + ".tmp" + std::to_string(rd()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            warn("character table cache directory " + dir.string() + " is not writable");
            return;
        }
        out << table.to_json();
        if (!out) {
            warn("failed writing " + tmp.string());
            fs::remove(tmp, ec);
            return;
        }
    }
    fs::rename(tmp, target, ec);
    if (ec) {
        warn("failed to install cache file " + target.string() + ": " + ec.message());
        fs::remove(tmp, ec);
    }
}

} // namespace

std::shared_ptr<const CharacterTable> character_table(int r)
{
    auto& s = store();
    std::optional<std::filesystem::path> dir;
    {
        std::lock_guard lock(s.mutex);
        if (auto it = s.tables.find(r); it != s.tables.end())
            return it->second;
        dir = s.cache_dir;
    }
    // Built outside the lock; a concurrent duplicate build yields an identical table.
    std::optional<CharacterTable> table;
    if (dir && r >= 0 && r <= max_table_degree)
        table = load_cached(*dir, r);
    if (!table) {
        table = CharacterTable::compute(r);
        if (dir)
            save_cached(*dir, *table);
    }
    auto shared = std::make_shared<const CharacterTable>(std::move(*table));
    std::lock_guard lock(s.mutex);
    auto [it, inserted] = s.tables.emplace(r, shared);
    return it->second;
}

void set_table_cache_directory(std::optional<std::filesystem::path> dir)
{
    std::lock_guard lock(store().mutex);
    store().cache_dir = std::move(dir);
}

std::optional<std::filesystem::path> table_cache_directory()
{
    std::lock_guard lock(store().mutex);
    return store().cache_dir;
}

std::filesystem::path default_table_cache_directory()
{
    if (const char* env = std::getenv("SYMF_CACHE_DIR"); env && *env)
        return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "symf";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "symf";
    return std::filesystem::temp_directory_path() / "symf-cache";
}

std::filesystem::path table_cache_file(const std::filesystem::path& dir, int r)
{
    return dir / ("chartable-v" + std::to_string(table_cache_version) + "-r" + std::to_string(r) + ".json");
}

Integer character_value(const Partition& lambda, const Partition& mu)
{
    if (lambda.weight() != mu.weight())
        throw DegreeError("character value needs partitions of equal weight");
    if (lambda.weight() <= direct_character_threshold) {
        auto table = character_table(lambda.weight());
        return Integer(static_cast<long>(table->value(lambda, mu)));
    }
    static std::mutex mutex;
    static MurnaghanNakayama<Integer> mn;
    std::lock_guard lock(mutex);
    return mn.chi(lambda.parts(), mu.parts(), 0);
}

void clear_table_memory_cache()
{
    std::lock_guard lock(store().mutex);
    store().tables.clear();
}

} // namespace symf
