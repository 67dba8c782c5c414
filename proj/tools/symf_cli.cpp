// Command-line front end; talks to the library only through the C API.

#include "symf/symf.h"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>

namespace {

class Session {
public:
    explicit Session(symf_context* ctx) : ctx_(ctx) {}
    ~Session() { symf_context_destroy(ctx_); }
    Session(const Session&) = delete;
    Session& operator=(const Session&) = delete;

    symf_context* get() const { return ctx_; }

    // Prints pending warnings; on failure prints the error and returns its code.
    int report(symf_status status) const
    {
        for (size_t i = 0; i < symf_warning_count(ctx_); ++i)
            std::cerr << "warning: " << symf_warning(ctx_, i) << '\n';
        symf_clear_warnings(ctx_);
        if (status != SYMF_OK)
            std::cerr << "error: " << symf_last_error(ctx_) << '\n';
        return static_cast<int>(status);
    }

private:
    symf_context* ctx_;
};

struct FnDeleter {
    void operator()(symf_fn* f) const { symf_fn_destroy(f); }
};
using FnPtr = std::unique_ptr<symf_fn, FnDeleter>;

struct StringDeleter {
    void operator()(char* s) const { symf_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

const std::map<std::string, symf_basis> basis_names{
    {"p", SYMF_BASIS_P}, {"h", SYMF_BASIS_H}, {"e", SYMF_BASIS_E}, {"m", SYMF_BASIS_M}, {"s", SYMF_BASIS_S},
};

const std::map<std::string, symf_family> family_names{
    {"sl", SYMF_FAMILY_SL},
    {"sp", SYMF_FAMILY_SP},
    {"perm", SYMF_FAMILY_PERM},
    {"gl-adjoint", SYMF_FAMILY_GL_ADJOINT},
};

struct Output {
    std::string basis;
    bool json = false;
};

void add_output_flags(CLI::App* cmd, Output& out, const std::string& default_basis)
{
    out.basis = default_basis;
    cmd->add_option("--basis", out.basis, "Output basis")->check(CLI::IsMember({"p", "h", "e", "m", "s"}));
    cmd->add_flag("--json", out.json, "Emit JSON");
}

int print_fn(const Session& session, const symf_fn* f, const Output& out)
{
    char* text = nullptr;
    if (int rc = session.report(symf_fn_format(session.get(), f, basis_names.at(out.basis), out.json, &text)))
        return rc;
    StringPtr owned(text);
    std::cout << text << '\n';
    return 0;
}

int print_string(const Session& session, symf_status status, char* text)
{
    StringPtr owned(text);
    if (int rc = session.report(status))
        return rc;
    std::cout << text << '\n';
    return 0;
}

int parse_fn(const Session& session, const std::string& expr, FnPtr& out)
{
    symf_fn* f = nullptr;
    int rc = session.report(symf_fn_parse(session.get(), expr.c_str(), &f));
    out.reset(f);
    return rc;
}

void print_check(const char* name, int passed, const char* detail, double seconds, void* user)
{
    bool timings = *static_cast<bool*>(user);
    std::cout << (passed ? "PASS " : "FAIL ") << name << " (" << detail << ")";
    if (timings)
        std::printf(" [%.3fs]", seconds);
    std::cout << '\n' << std::flush;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact symmetric functions, plethysm and tensor invariants"};
    app.require_subcommand(1);

    std::string expr;
    Output eval_out;
    auto* eval = app.add_subcommand("eval", "Evaluate a symmetric-function expression");
    eval->add_option("expr", expr, "Expression, e.g. 'h3[h2]' or 'scalar(h2[h2], h2*h2)'")->required();
    add_output_flags(eval, eval_out, "s");

    std::string family;
    int n = 0;
    int r = 0;
    std::optional<std::string> functor;
    bool unstable = false;
    Output inv_out;
    auto* inv = app.add_subcommand("inv", "Frobenius character of tensor invariants");
    inv->add_option("--family", family)->required()->check(CLI::IsMember({"sl", "sp", "perm", "gl-adjoint"}));
    inv->add_option("--n", n)->required();
    inv->add_option("--r", r)->required();
    inv->add_option("--functor", functor, "Character of a polynomial functor, e.g. h2");
    inv->add_flag("--unstable", unstable, "gl-adjoint: keep only partitions with at most n parts");
    add_output_flags(inv, inv_out, "s");

    auto* hilbert = app.add_subcommand("hilbert", "Dimension of degree-r invariant polynomials on P(V)");
    hilbert->add_option("--family", family)->required()->check(CLI::IsMember({"sl", "sp", "perm", "gl-adjoint"}));
    hilbert->add_option("--n", n)->required();
    hilbert->add_option("--r", r)->required();
    hilbert->add_option("--functor", functor, "Character of a polynomial functor (default p1)");
    hilbert->add_flag("--unstable", unstable);

    int m = 0;
    int k = 0;
    bool cycle_index = false;
    Output enum_out;
    auto* deals = app.add_subcommand("deals", "Count card deals (m copies of n card types into n hands)");
    deals->add_option("--m", m)->required();
    deals->add_option("--n", n)->required();
    deals->add_flag("--cycle-index", cycle_index, "Print the cycle index series instead");
    add_output_flags(deals, enum_out, "p");

    auto* regular = app.add_subcommand("regular", "Count k-regular multigraphs on n vertices");
    regular->add_option("--n", n)->required();
    regular->add_option("--k", k)->required();
    regular->add_flag("--cycle-index", cycle_index, "Print the cycle index series instead");
    add_output_flags(regular, enum_out, "p");

    bool table_json = false;
    auto* table = app.add_subcommand("table", "Character table of the symmetric group S_r");
    table->add_option("--r", r)->required();
    table->add_flag("--json", table_json);

    int max_degree = 0;
    bool timings = false;
    auto* selftest = app.add_subcommand("selftest", "Compare the library against its brute-force oracles");
    selftest->add_option("--max-degree", max_degree, "Shrink every range to about this degree (0 = full)");
    selftest->add_flag("--timings", timings, "Print the time spent in each check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    symf_context* raw = nullptr;
    if (symf_context_create(nullptr, &raw) != SYMF_OK) {
        std::cerr << "error: cannot create library context\n";
        return 6;
    }
    Session session(raw);
    symf_context* ctx = session.get();

    if (*eval) {
        FnPtr f;
        if (int rc = parse_fn(session, expr, f))
            return rc;
        return print_fn(session, f.get(), eval_out);
    }
    if (*inv || *hilbert) {
        FnPtr P;
        if (functor)
            if (int rc = parse_fn(session, *functor, P))
                return rc;
        auto fam = family_names.at(family);
        if (*inv) {
            symf_fn* out = nullptr;
            int rc = session.report(symf_inv_char(ctx, fam, n, unstable ? 0 : 1, r, P.get(), &out));
            FnPtr result(out);
            return rc ? rc : print_fn(session, result.get(), inv_out);
        }
        char* text = nullptr;
        auto status = symf_hilbert_dim(ctx, fam, n, unstable ? 0 : 1, r, P.get(), &text);
        return print_string(session, status, text);
    }
    if (*deals || *regular) {
        if (cycle_index) {
            symf_fn* out = nullptr;
            auto status = *deals ? symf_deals_cycle_index(ctx, m, n, &out) : symf_regular_graphs_cycle_index(ctx, n, k, &out);
            FnPtr result(out);
            if (int rc = session.report(status))
                return rc;
            return print_fn(session, result.get(), enum_out);
        }
        char* text = nullptr;
        auto status = *deals ? symf_card_deals(ctx, m, n, &text) : symf_regular_graphs(ctx, n, k, &text);
        return print_string(session, status, text);
    }
    if (*table) {
        char* text = nullptr;
        auto status = symf_character_table(ctx, r, table_json ? 1 : 0, &text);
        StringPtr owned(text);
        if (int rc = session.report(status))
            return rc;
        std::cout << text << (table_json ? "\n" : "");
        return 0;
    }
    if (*selftest) {
        int failures = 0;
        auto status = symf_selftest(ctx, max_degree, print_check, &timings, &failures);
        return session.report(status);
    }
    return 1;
}
