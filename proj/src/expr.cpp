#include "symf/expr.hpp"

#include "symf/diagnostics.hpp"
#include "symf/errors.hpp"
#include "symf/plethysm.hpp"

#include <cctype>
#include <optional>

namespace symf {

bool Expr::operator==(const Expr& other) const
{
    return kind == other.kind && number == other.number && basis == other.basis && partition == other.partition
        && function == other.function && children == other.children;
}

namespace {

struct FunctionInfo {
    std::string_view name;
    int arity;
};

constexpr FunctionInfo functions[] = {
    {"scalar", 2}, {"kron", 2}, {"dim", 1}, {"ones", 1}, {"coeff", 2},
};

std::optional<int> arity_of(std::string_view name)
{
    for (const auto& f : functions)
        if (f.name == name)
            return f.arity;
    return std::nullopt;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ParsedExpr run()
    {
        ParsedExpr out;
        out.expr = expr();
        skip_space();
        if (!at_end())
            fail("unexpected '" + std::string(1, peek()) + "'", "'+', '-', '*', '[' or end of input");
        out.warnings = std::move(warnings_);
        return out;
    }

private:
    Expr expr()
    {
        skip_space();
        Expr lhs;
        if (peek() == '-') {
            advance();
            Expr neg;
            neg.kind = Expr::Kind::negate;
            neg.children.push_back(term());
            lhs = std::move(neg);
        } else {
            lhs = term();
        }
        while (true) {
            skip_space();
            char c = peek();
            if (c != '+' && c != '-')
                return lhs;
            advance();
            Expr node;
            node.kind = c == '+' ? Expr::Kind::add : Expr::Kind::sub;
            node.children.push_back(std::move(lhs));
            node.children.push_back(term());
            lhs = std::move(node);
        }
    }

    Expr term()
    {
        Expr lhs = factor();
        while (true) {
            skip_space();
            if (peek() != '*')
                return lhs;
            advance();
            Expr node;
            node.kind = Expr::Kind::mul;
            node.children.push_back(std::move(lhs));
            node.children.push_back(factor());
            lhs = std::move(node);
        }
    }

    Expr factor()
    {
        Expr lhs = atom();
        while (true) {
            skip_space();
            if (peek() != '[')
                return lhs;
            advance();
            Expr node;
            node.kind = Expr::Kind::plethysm;
            node.children.push_back(std::move(lhs));
            node.children.push_back(expr());
            skip_space();
            expect(']');
            lhs = std::move(node);
        }
    }

    Expr atom()
    {
        skip_space();
        char c = peek();
        if (at_end())
            fail("unexpected end of input", "a basis element, number, '(' or function call");
        if (std::isdigit(static_cast<unsigned char>(c)))
            return number();
        if (c == '(') {
            advance();
            Expr inner = expr();
            skip_space();
            expect(')');
            return inner;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            auto [line, col] = location();
            std::size_t start = pos_;
            while (!at_end() && std::isalpha(static_cast<unsigned char>(peek())))
                advance();
            std::string name(text_.substr(start, pos_ - start));
            if (name.size() == 1 && std::string_view("phems").find(name[0]) != std::string_view::npos) {
                Expr e;
                e.kind = Expr::Kind::atom;
                e.basis = parse_basis(name);
                e.partition = partition_literal();
                return e;
            }
            auto arity = arity_of(name);
            if (!arity)
                throw ParseError(at(line, col) + "unknown identifier '" + name
                                     + "'; expected one of p, h, e, m, s, scalar, kron, dim, ones, coeff",
                                 line, col);
            return call(name, *arity, line, col);
        }
        fail("unexpected '" + std::string(1, c) + "'", "a basis element, number, '(' or function call");
    }

    Expr call(const std::string& name, int arity, int line, int col)
    {
        skip_space();
        expect('(');
        Expr e;
        e.kind = Expr::Kind::call;
        e.function = name;
        e.children.push_back(expr());
        skip_space();
        while (peek() == ',') {
            advance();
            e.children.push_back(expr());
            skip_space();
        }
        expect(')');
        if (static_cast<int>(e.children.size()) != arity)
            throw ParseError(at(line, col) + name + " got " + std::to_string(e.children.size())
                                 + " arguments; expected " + std::to_string(arity),
                             line, col);
        if (name == "coeff" && e.children[1].kind != Expr::Kind::atom)
            throw ParseError(at(line, col) + "bad second argument of coeff; expected a basis element such as m[2,2]",
                             line, col);
        return e;
    }

    Expr number()
    {
        Expr e;
        e.kind = Expr::Kind::number;
        std::string num = digits();
        std::string den = "1";
        if (peek() == '/') {
            advance();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("malformed fraction", "digits after '/'");
            auto [line, col] = location();
            den = digits();
            if (Integer(den) == 0)
                throw ParseError(at(line, col) + "zero denominator", line, col);
        }
        e.number = ratio(Integer(num), Integer(den));
        return e;
    }

    Partition partition_literal()
    {
        skip_space();
        auto [line, col] = location();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            int part = std::stoi(digits());
            if (part == 0)
                throw ParseError(at(line, col) + "malformed partition: parts must be positive", line, col);
            return Partition{part};
        }
        if (peek() != '[')
            fail("expected a partition after basis letter", "digits or '['");
        advance();
        std::vector<int> parts;
        skip_space();
        if (peek() == ']') {
            advance();
            return {};
        }
        while (true) {
            skip_space();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                fail("malformed partition", "a positive integer");
            auto [pl, pc] = location();
            int part = std::stoi(digits());
            if (part == 0)
                throw ParseError(at(pl, pc) + "malformed partition: parts must be positive", pl, pc);
            parts.push_back(part);
            skip_space();
            if (peek() == ',') {
                advance();
                continue;
            }
            expect(']');
            break;
        }
        if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
            auto sorted = Partition::normalized(parts);
            warnings_.push_back(at(line, col) + "partition not weakly decreasing; using " + sorted.to_string());
            return sorted;
        }
        return Partition(std::move(parts));
    }

    std::string digits()
    {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            advance();
        if (pos_ - start > 9) {
            auto [line, col] = location();
            throw ParseError(at(line, col) + "number too long", line, col);
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    void expect(char c)
    {
        if (peek() != c) {
            if (at_end())
                fail("unexpected end of input", "'" + std::string(1, c) + "'");
            fail("unexpected '" + std::string(1, peek()) + "'", "'" + std::string(1, c) + "'");
        }
        advance();
    }

    [[noreturn]] void fail(const std::string& what, const std::string& expected)
    {
        auto [line, col] = location();
        throw ParseError(at(line, col) + what + "; expected " + expected, line, col);
    }

    static std::string at(int line, int col)
    {
        return std::to_string(line) + ":" + std::to_string(col) + ": ";
    }

    std::pair<int, int> location() const
    {
        int line = 1;
        int col = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        return {line, col};
    }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            advance();
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void advance() { ++pos_; }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::vector<std::string> warnings_;
};

int precedence(const Expr& e)
{
    switch (e.kind) {
    case Expr::Kind::add:
    case Expr::Kind::sub:
    case Expr::Kind::negate: return 1;
    case Expr::Kind::mul: return 2;
    case Expr::Kind::plethysm: return 3;
    default: return 4;
    }
}

std::string print(const Expr& e, int context)
{
    std::string s;
    switch (e.kind) {
    case Expr::Kind::number: s = to_string(e.number); break;
    case Expr::Kind::atom:
        s = std::string(1, basis_letter(e.basis));
        s += e.partition.length() == 1 ? std::to_string(e.partition[0]) : e.partition.to_string();
        break;
    case Expr::Kind::add: s = print(e.children[0], 1) + " + " + print(e.children[1], 2); break;
    case Expr::Kind::sub: s = print(e.children[0], 1) + " - " + print(e.children[1], 2); break;
    case Expr::Kind::negate: s = "-" + print(e.children[0], 2); break;
    case Expr::Kind::mul: s = print(e.children[0], 2) + "*" + print(e.children[1], 3); break;
    case Expr::Kind::plethysm: s = print(e.children[0], 3) + "[" + print(e.children[1], 0) + "]"; break;
    case Expr::Kind::call:
        s = e.function + "(";
        for (std::size_t i = 0; i < e.children.size(); ++i)
            s += (i ? ", " : "") + print(e.children[i], 0);
        s += ")";
        break;
    }
    return precedence(e) < context ? "(" + s + ")" : s;
}

} // namespace

ParsedExpr parse_expr(std::string_view text) { return Parser(text).run(); }

std::string to_string(const Expr& e) { return print(e, 0); }

SymFn evaluate(const Expr& e)
{
    switch (e.kind) {
    case Expr::Kind::number: return SymFn::constant(e.number);
    case Expr::Kind::atom: return SymFn::generator(e.basis, e.partition);
    case Expr::Kind::add: return evaluate(e.children[0]) + evaluate(e.children[1]);
    case Expr::Kind::sub: return evaluate(e.children[0]) - evaluate(e.children[1]);
    case Expr::Kind::negate: return -evaluate(e.children[0]);
    case Expr::Kind::mul: return evaluate(e.children[0]) * evaluate(e.children[1]);
    case Expr::Kind::plethysm: return plethysm(evaluate(e.children[0]), evaluate(e.children[1]));
    case Expr::Kind::call: break;
    }
    const auto& name = e.function;
    SymFn first = evaluate(e.children[0]);
    if (name == "dim")
        return SymFn::constant(dimension(first));
    if (name == "ones")
        return SymFn::constant(specialize_ones(first));
    if (name == "scalar")
        return SymFn::constant(scalar(first, evaluate(e.children[1])));
    if (name == "kron")
        return kronecker(first, evaluate(e.children[1]));
    if (name == "coeff") {
        const Expr& target = e.children[1];
        if (target.basis == Basis::m)
            return SymFn::constant(monomial_coefficient(first, target.partition));
        return SymFn::constant(to_basis(first, target.basis).coefficient(target.partition));
    }
    throw InternalError("unknown function " + name);
}

SymFn evaluate(std::string_view text)
{
    auto parsed = parse_expr(text);
    for (const auto& w : parsed.warnings)
        warn(w);
    return evaluate(parsed.expr);
}

} // namespace symf
