#include "support.hpp"

#include "symf/errors.hpp"
#include "symf/expr.hpp"
#include "symf/json_io.hpp"

#include <doctest.h>

using namespace symf;
using symf::test::fn;
using symf::test::in_s;

namespace {

const char* corpus[] = {
    "h3[h2]",
    "s[2,1]*e2",
    "scalar(h2[h2], h2*h2)",
    "-h2 + 3/4*p[2,1] - (e2 - m[1,1])",
    "h2[h2][p1]",
    "h2[h2[p1]]",
    "kron(s[2,1], s[2,1])",
    "dim(s[3,3])",
    "ones(p[2,1] + 2)",
    "coeff(h2[h2], m[2,2])",
    "(h1 + h2)*(h1 - e2)",
    "2*3*h1",
    "h1 - (h1 - h1)",
    "-(-h1)",
    "s[]",
    "h12",
    "  s [ 3 , 1 ]\n + e1  ",
};

} // namespace

TEST_CASE("parser builds the expected trees")
{
    auto e = parse_expr("h3[h2]").expr;
    REQUIRE(e.kind == Expr::Kind::plethysm);
    CHECK(e.children[0].basis == Basis::h);
    CHECK(e.children[0].partition == Partition{3});
    CHECK(e.children[1].partition == Partition{2});

    auto chain = parse_expr("p1[p2][p3]").expr;
    REQUIRE(chain.kind == Expr::Kind::plethysm);
    CHECK(chain.children[0].kind == Expr::Kind::plethysm);

    CHECK(parse_expr("s[2,1]*e2").expr.kind == Expr::Kind::mul);
    CHECK(parse_expr("h12").expr.partition == Partition{12});
    CHECK(parse_expr("1 + 2*h1").expr.kind == Expr::Kind::add);
}

TEST_CASE("round trip through the printer")
{
    for (const char* text : corpus) {
        CAPTURE(text);
        auto first = parse_expr(text).expr;
        auto printed = to_string(first);
        auto second = parse_expr(printed).expr;
        CHECK(first == second);
        CHECK(to_string(second) == printed);
        CHECK(evaluate(first) == evaluate(second));
    }
}

TEST_CASE("evaluation")
{
    CHECK(fn("scalar(h2[h2], h2*h2)") == fn("2"));
    CHECK(fn("dim(s[3,3])") == fn("5"));
    CHECK(fn("ones(p[2,1] + 2)") == fn("3"));
    CHECK(fn("coeff(h2[h2], m[2,2])") == fn("2"));
    CHECK(fn("coeff(h2, m[1,1])") == fn("1"));
    CHECK(fn("coeff(p2, m2)") == fn("1"));
    CHECK(fn("coeff(h2[h2], s[2,2])") == fn("1"));
    CHECK(in_s("kron(s[1,1], s[1,1])").to_string() == "s[2]");
    CHECK(in_s("kron(p[2,1], p[2,1])") == fn("2*p[2,1]"));
    CHECK(in_s("s1*s1").to_string() == "s[2] + s[1,1]");
    CHECK(fn("p2 + p2") == fn("2*p2"));
    CHECK(fn("h[2,1]") == fn("h2*h1"));
}

TEST_CASE("evaluation is basis independent")
{
    for (const char* text : corpus) {
        SymFn f = fn(text);
        for (Basis b : {Basis::p, Basis::h, Basis::e, Basis::m, Basis::s})
            CHECK(to_basis(f, b) == f);
    }
}

TEST_CASE("out-of-order partitions are sorted with a warning")
{
    auto parsed = parse_expr("s[1,2]");
    CHECK(parsed.expr.partition == Partition{2, 1});
    CHECK(parsed.warnings.size() == 1);

    test::WarningCapture warnings;
    CHECK(evaluate("h[1,3] + e2") == fn("h[3,1] + e2"));
    CHECK(warnings.messages.size() == 1);
}

TEST_CASE("syntax errors carry positions")
{
    auto error_at = [](const char* text, int line, int col) {
        CAPTURE(text);
        try {
            parse_expr(text);
            FAIL("no error");
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
            CHECK(e.column() == col);
            CHECK(std::string(e.what()).find("expected") != std::string::npos);
        }
    };
    error_at("h2 +", 1, 5);
    error_at("q3", 1, 1);
    error_at("h2 + \n  x", 2, 3);
    error_at("s[2,", 1, 5);
    error_at("h2)", 1, 3);
    error_at("scalar(h1)", 1, 1);
    error_at("coeff(h2, 2)", 1, 1);
    CHECK_THROWS_AS(parse_expr("1/0"), ParseError);
    CHECK_THROWS_AS(parse_expr("s[2,0]"), ParseError);
    CHECK_THROWS_AS(parse_expr("h"), ParseError);
    CHECK_THROWS_AS(parse_expr(""), ParseError);
}

TEST_CASE("evaluation errors")
{
    CHECK_THROWS_AS(fn("dim(h1 + h2)"), DegreeError);
}

TEST_CASE("JSON serialization")
{
    SymFn f = in_s("4/3*s[2,1] - s[3]");
    CHECK(to_json(f) == R"({"basis":"s","terms":[{"partition":[3],"coeff":"-1"},{"partition":[2,1],"coeff":"4/3"}]})");
    for (const char* text : corpus) {
        SymFn g = fn(text);
        for (Basis b : {Basis::p, Basis::s, Basis::m}) {
            SymFn gb = to_basis(g, b);
            SymFn back = symfn_from_json(to_json(gb));
            CHECK(back.basis() == b);
            CHECK(back.terms() == gb.terms());
        }
    }
    CHECK(to_json(SymFn(Basis::h)) == R"({"basis":"h","terms":[]})");
    CHECK_THROWS_AS(symfn_from_json("{}"), UsageError);
    CHECK_THROWS_AS(symfn_from_json(R"({"basis":"q","terms":[]})"), UsageError);
    CHECK_THROWS_AS(symfn_from_json(R"({"basis":"s","terms":[{"partition":[1,2],"coeff":"1"}]})"), UsageError);
    CHECK_THROWS_AS(symfn_from_json("not json"), UsageError);
}
