#include "support.hpp"

#include "symf/character_table.hpp"
#include "symf/errors.hpp"
#include "symf/oracles.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace symf;
namespace fs = std::filesystem;

namespace {

class TempDir {
public:
    TempDir()
    {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("symf-test-" + std::to_string(rd()) + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~TempDir()
    {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

// Points the process-wide cache at `dir` and empties the memory cache; undone on scope exit.
class CacheScope {
public:
    explicit CacheScope(std::optional<fs::path> dir) : previous_(table_cache_directory())
    {
        set_table_cache_directory(std::move(dir));
        clear_table_memory_cache();
    }
    ~CacheScope()
    {
        set_table_cache_directory(previous_);
        clear_table_memory_cache();
    }

private:
    std::optional<fs::path> previous_;
};

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const fs::path& p, const std::string& text)
{
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out << text;
}

} // namespace

TEST_CASE("small tables by hand")
{
    auto t1 = CharacterTable::compute(1);
    CHECK(t1.value({1}, {1}) == 1);

    auto t3 = CharacterTable::compute(3);
    CHECK(t3.value({2, 1}, {1, 1, 1}) == 2);
    CHECK(t3.value({2, 1}, {2, 1}) == 0);
    CHECK(t3.value({2, 1}, {3}) == -1);
    CHECK(t3.value({1, 1, 1}, {1, 1, 1}) == 1);
    CHECK(t3.value({1, 1, 1}, {2, 1}) == -1);
    CHECK(t3.value({1, 1, 1}, {3}) == 1);

    auto t0 = CharacterTable::compute(0);
    CHECK(t0.size() == 1);
    CHECK(t0.at(0, 0) == 1);
}

TEST_CASE("orthogonality and hook lengths up to degree 10")
{
    for (int r = 1; r <= 10; ++r) {
        auto t = CharacterTable::compute(r);
        const auto& ps = t.partitions();
        std::vector<Integer> z;
        for (const auto& mu : ps)
            z.push_back(z_of(mu));
        for (std::size_t a = 0; a < ps.size(); ++a) {
            CHECK(t.value(ps[a], Partition::rectangle(1, r)) == oracles::syt(ps[a]));
            for (std::size_t b = a; b < ps.size(); ++b) {
                Rational row = 0;
                for (std::size_t c = 0; c < ps.size(); ++c)
                    row += Rational(Integer(static_cast<long>(t.at(a, c) * t.at(b, c)))) / Rational(z[c]);
                CHECK(row == (a == b ? 1 : 0));
            }
        }
        // Column orthogonality: Σ_λ χ^λ_μ χ^λ_ν = δ z_μ.
        for (std::size_t c = 0; c < ps.size(); ++c)
            for (std::size_t d = 0; d < ps.size(); ++d) {
                Integer col = 0;
                for (std::size_t a = 0; a < ps.size(); ++a)
                    col += Integer(static_cast<long>(t.at(a, c) * t.at(a, d)));
                CHECK(col == (c == d ? z[c] : Integer(0)));
            }
    }
}

TEST_CASE("resource cap")
{
    CHECK_THROWS_AS(CharacterTable::compute(max_table_degree + 1), ResourceError);
    CHECK_THROWS_AS(character_table(max_table_degree + 1), ResourceError);
}

TEST_CASE("character_value agrees with the table and extends past the threshold")
{
    auto t = CharacterTable::compute(8);
    for (const auto& l : t.partitions())
        for (const auto& mu : t.partitions())
            CHECK(character_value(l, mu) == t.value(l, mu));
    CHECK_THROWS_AS(character_value({2}, {1}), DegreeError);

    // Degree 18: first column is f^λ and the sign row is (-1)^{|μ|-ℓ(μ)}.
    Partition big{6, 5, 4, 3};
    CHECK(character_value(big, Partition::rectangle(1, 18)) == oracles::syt(big));
    Partition column = Partition::rectangle(1, 18);
    Partition mu{5, 4, 4, 3, 2};
    CHECK(character_value(column, mu) == ((18 - mu.length()) % 2 == 0 ? 1 : -1));
    CHECK(character_value({18}, mu) == 1);
}

TEST_CASE("text and JSON forms")
{
    auto t = CharacterTable::compute(3);
    std::string text = t.to_text();
    CHECK(text.find("[3]") != std::string::npos);
    CHECK(text.find("[2,1]") != std::string::npos);
    auto back = CharacterTable::from_json(t.to_json(), 3);
    REQUIRE(back.has_value());
    CHECK(*back == t);
    CHECK_FALSE(CharacterTable::from_json(t.to_json(), 4).has_value());
    CHECK_FALSE(CharacterTable::from_json("{", 3).has_value());
    CHECK_FALSE(CharacterTable::from_json("{\"version\":1,\"r\":3,\"entries\":[]}", 3).has_value());
}

TEST_CASE("disk cache: cold build writes, warm load reads")
{
    TempDir dir;
    CacheScope scope(dir.path());
    auto file = table_cache_file(dir.path(), 7);
    CHECK(file.filename() == "chartable-v1-r7.json");

    auto cold = character_table(7);
    REQUIRE(fs::exists(file));
    clear_table_memory_cache();
    auto warm = character_table(7);
    CHECK(*warm == *cold);
    CHECK(*warm == CharacterTable::compute(7));
    for (const auto& entry : fs::directory_iterator(dir.path()))
        CHECK(entry.path().extension() == ".json");
}

TEST_CASE("disk cache: corrupt file is regenerated")
{
    TempDir dir;
    CacheScope scope(dir.path());
    auto file = table_cache_file(dir.path(), 6);
    spit(file, "{\"version\": 1, \"r\": 6, \"entries\": [ truncated");

    test::WarningCapture warnings;
    auto t = character_table(6);
    CHECK(*t == CharacterTable::compute(6));
    CHECK(warnings.messages.size() == 1);
    auto reread = CharacterTable::from_json(slurp(file), 6);
    REQUIRE(reread.has_value());
    CHECK(*reread == *t);
}

TEST_CASE("disk cache: files from another format version are ignored")
{
    TempDir dir;
    CacheScope scope(dir.path());
    auto good = CharacterTable::compute(5).to_json();
    auto pos = good.find("\"version\":1");
    REQUIRE(pos != std::string::npos);
    std::string old = good;
    old.replace(pos, 11, "\"version\":0");
    spit(table_cache_file(dir.path(), 5), old);

    test::WarningCapture warnings;
    auto t = character_table(5);
    CHECK(*t == CharacterTable::compute(5));
    CHECK(slurp(table_cache_file(dir.path(), 5)) == good);
}

TEST_CASE("disk cache: unwritable directory warns and still computes")
{
    TempDir dir;
    auto blocker = dir.path() / "file";
    spit(blocker, "x");
    CacheScope scope(blocker / "sub");
    test::WarningCapture warnings;
    auto t = character_table(4);
    CHECK(*t == CharacterTable::compute(4));
    CHECK_FALSE(warnings.messages.empty());
}

TEST_CASE("default cache directory honours SYMF_CACHE_DIR")
{
    const char* old = std::getenv("SYMF_CACHE_DIR");
    std::string saved = old ? old : "";
    setenv("SYMF_CACHE_DIR", "/tmp/symf-env-check", 1);
    CHECK(default_table_cache_directory() == fs::path("/tmp/symf-env-check"));
    if (old)
        setenv("SYMF_CACHE_DIR", saved.c_str(), 1);
    else
        unsetenv("SYMF_CACHE_DIR");
}
