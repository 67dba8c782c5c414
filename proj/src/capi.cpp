#include "symf/symf.h"

#include "symf/character_table.hpp"
#include "symf/diagnostics.hpp"
#include "symf/enumeration.hpp"
#include "symf/errors.hpp"
#include "symf/expr.hpp"
#include "symf/invariants.hpp"
#include "symf/json_io.hpp"
#include "symf/plethysm.hpp"
#include "symf/selftest.hpp"

#include <cstdlib>
#include <cstring>
#include <mutex>
#include <new>
#include <string>
#include <vector>

struct symf_context {
    std::string last_error;
    std::vector<std::string> warnings;
};

struct symf_fn {
    symf::SymFn value;
};

namespace {

thread_local symf_context* active_context = nullptr;

void install_warning_router()
{
    static std::once_flag once;
    std::call_once(once, [] {
        auto fallback = symf::set_warning_handler({});
        symf::set_warning_handler([fallback](const std::string& msg) {
            if (active_context)
                active_context->warnings.push_back(msg);
            else if (fallback)
                fallback(msg);
        });
    });
}

// Routes warnings to ctx and converts exceptions to status codes.
template <class Body>
symf_status guarded(symf_context* ctx, Body&& body)
{
    if (!ctx)
        return SYMF_ERR_USAGE;
    struct Scope {
        symf_context* previous;
        explicit Scope(symf_context* c) : previous(active_context) { active_context = c; }
        ~Scope() { active_context = previous; }
    } scope(ctx);
    ctx->last_error.clear();
    try {
        body();
        return SYMF_OK;
    } catch (const symf::Error& e) {
        ctx->last_error = e.what();
        return static_cast<symf_status>(static_cast<int>(e.kind()));
    } catch (const std::bad_alloc&) {
        ctx->last_error = "out of memory";
        return SYMF_ERR_RESOURCE;
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        return SYMF_ERR_INTERNAL;
    }
}

char* duplicate(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out)
        throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(const void* p, const char* what)
{
    if (!p)
        throw symf::UsageError(std::string(what) + " must not be NULL");
}

symf_fn* wrap(symf::SymFn f) { return new symf_fn{std::move(f)}; }

symf::Basis to_basis_tag(symf_basis b)
{
    switch (b) {
    case SYMF_BASIS_P: return symf::Basis::p;
    case SYMF_BASIS_H: return symf::Basis::h;
    case SYMF_BASIS_E: return symf::Basis::e;
    case SYMF_BASIS_M: return symf::Basis::m;
    case SYMF_BASIS_S: return symf::Basis::s;
    }
    throw symf::UsageError("unknown basis code " + std::to_string(static_cast<int>(b)));
}

symf::InvariantFamily to_family(symf_family family, int n, int stable)
{
    switch (family) {
    case SYMF_FAMILY_SL: return symf::SLnDefining{n};
    case SYMF_FAMILY_SP: return symf::Sp2nDefining{n};
    case SYMF_FAMILY_PERM: return symf::SnPermutation{n};
    case SYMF_FAMILY_GL_ADJOINT: return symf::GLnAdjoint{n, stable != 0};
    }
    throw symf::UsageError("unknown family code " + std::to_string(static_cast<int>(family)));
}

} // namespace

extern "C" {

symf_status symf_context_create(const char* cache_dir, symf_context** out)
{
    if (!out)
        return SYMF_ERR_USAGE;
    install_warning_router();
    auto* ctx = new (std::nothrow) symf_context();
    if (!ctx)
        return SYMF_ERR_RESOURCE;
    if (!cache_dir)
        symf::set_table_cache_directory(symf::default_table_cache_directory());
    else if (*cache_dir == '\0')
        symf::set_table_cache_directory(std::nullopt);
    else
        symf::set_table_cache_directory(std::filesystem::path(cache_dir));
    *out = ctx;
    return SYMF_OK;
}

void symf_context_destroy(symf_context* ctx) { delete ctx; }

const char* symf_last_error(const symf_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

size_t symf_warning_count(const symf_context* ctx) { return ctx ? ctx->warnings.size() : 0; }

const char* symf_warning(const symf_context* ctx, size_t index)
{
    if (!ctx || index >= ctx->warnings.size())
        return nullptr;
    return ctx->warnings[index].c_str();
}

void symf_clear_warnings(symf_context* ctx)
{
    if (ctx)
        ctx->warnings.clear();
}

void symf_string_free(char* s) { std::free(s); }

symf_status symf_fn_parse(symf_context* ctx, const char* expr, symf_fn** out)
{
    return guarded(ctx, [&] {
        require(expr, "expr");
        require(out, "out");
        *out = wrap(symf::evaluate(std::string_view(expr)));
    });
}

symf_status symf_fn_from_json(symf_context* ctx, const char* json, symf_fn** out)
{
    return guarded(ctx, [&] {
        require(json, "json");
        require(out, "out");
        *out = wrap(symf::symfn_from_json(json));
    });
}

symf_status symf_fn_basis_element(symf_context* ctx, symf_basis basis, const int* parts, size_t len, symf_fn** out)
{
    return guarded(ctx, [&] {
        require(out, "out");
        if (len > 0)
            require(parts, "parts");
        std::vector<int> v(parts, parts + len);
        *out = wrap(symf::SymFn::generator(to_basis_tag(basis), symf::Partition::normalized(std::move(v))));
    });
}

void symf_fn_destroy(symf_fn* f) { delete f; }

symf_status symf_fn_format(symf_context* ctx, const symf_fn* f, symf_basis basis, int json, char** out)
{
    return guarded(ctx, [&] {
        require(f, "f");
        require(out, "out");
        auto converted = symf::to_basis(f->value, to_basis_tag(basis));
        *out = duplicate(json ? symf::to_json(converted) : converted.to_string());
    });
}

symf_status symf_fn_equal(symf_context* ctx, const symf_fn* f, const symf_fn* g, int* out)
{
    return guarded(ctx, [&] {
        require(f, "f");
        require(g, "g");
        require(out, "out");
        *out = f->value == g->value ? 1 : 0;
    });
}

#define SYMF_BINARY(name, expr)                                                                 \
    symf_status name(symf_context* ctx, const symf_fn* f, const symf_fn* g, symf_fn** out)      \
    {                                                                                           \
        return guarded(ctx, [&] {                                                               \
            require(f, "f");                                                                    \
            require(g, "g");                                                                    \
            require(out, "out");                                                                \
            const auto& a = f->value;                                                           \
            const auto& b = g->value;                                                           \
            *out = wrap(expr);                                                                  \
        });                                                                                     \
    }

SYMF_BINARY(symf_fn_add, a + b)
SYMF_BINARY(symf_fn_mul, a * b)
SYMF_BINARY(symf_fn_plethysm, symf::plethysm(a, b))
SYMF_BINARY(symf_fn_kronecker, symf::kronecker(a, b))

#undef SYMF_BINARY

symf_status symf_fn_scalar(symf_context* ctx, const symf_fn* f, const symf_fn* g, char** out)
{
    return guarded(ctx, [&] {
        require(f, "f");
        require(g, "g");
        require(out, "out");
        *out = duplicate(symf::to_string(symf::scalar(f->value, g->value)));
    });
}

symf_status symf_fn_dimension(symf_context* ctx, const symf_fn* f, char** out)
{
    return guarded(ctx, [&] {
        require(f, "f");
        require(out, "out");
        *out = duplicate(symf::to_string(symf::dimension(f->value)));
    });
}

symf_status symf_fundamental(symf_context* ctx, const symf_fn* outer, const symf_fn* paired, int r, int mode,
                             symf_fn** out)
{
    return guarded(ctx, [&] {
        require(outer, "outer");
        require(paired, "paired");
        require(out, "out");
        if (mode != 0 && mode != 1)
            throw symf::UsageError("mode must be 0 (power-sum) or 1 (Schur)");
        *out = wrap(symf::fundamental(outer->value, paired->value, r,
                                      mode == 0 ? symf::FundamentalMode::power_sum : symf::FundamentalMode::schur));
    });
}

symf_status symf_inv_char(symf_context* ctx, symf_family family, int n, int stable, int r, const symf_fn* functor,
                          symf_fn** out)
{
    return guarded(ctx, [&] {
        require(out, "out");
        auto fam = to_family(family, n, stable);
        if (functor)
            *out = wrap(symf::inv_char_polyfunc(fam, symf::PolyFunctor(functor->value), r));
        else
            *out = wrap(symf::inv_char(fam, r));
    });
}

symf_status symf_hilbert_dim(symf_context* ctx, symf_family family, int n, int stable, int r, const symf_fn* functor,
                             char** out)
{
    return guarded(ctx, [&] {
        require(out, "out");
        auto P = functor ? symf::PolyFunctor(functor->value) : symf::PolyFunctor::identity();
        *out = duplicate(symf::to_string(symf::hilbert_dim(to_family(family, n, stable), P, r)));
    });
}

symf_status symf_card_deals(symf_context* ctx, int m, int n, char** out)
{
    return guarded(ctx, [&] {
        require(out, "out");
        *out = duplicate(symf::to_string(symf::card_deals({m, n})));
    });
}

symf_status symf_deals_cycle_index(symf_context* ctx, int m, int n, symf_fn** out)
{
    return guarded(ctx, [&] {
        require(out, "out");
        *out = wrap(symf::deals_cycle_index({m, n}));
    });
}

symf_status symf_regular_graphs(symf_context* ctx, int n, int k, char** out)
{
    return guarded(ctx, [&] {
        require(out, "out");
        *out = duplicate(symf::to_string(symf::regular_graphs({n, k})));
    });
}

symf_status symf_regular_graphs_cycle_index(symf_context* ctx, int n, int k, symf_fn** out)
{
    return guarded(ctx, [&] {
        require(out, "out");
        *out = wrap(symf::regular_graphs_cycle_index({n, k}));
    });
}

symf_status symf_character_table(symf_context* ctx, int r, int json, char** out)
{
    return guarded(ctx, [&] {
        require(out, "out");
        auto table = symf::character_table(r);
        *out = duplicate(json ? table->to_json() : table->to_text());
    });
}

symf_status symf_selftest(symf_context* ctx, int max_degree, symf_check_callback callback, void* user, int* failures)
{
    int failed = 0;
    auto status = guarded(ctx, [&] {
        auto bounds = max_degree > 0 ? symf::selftest::Bounds::reduced(max_degree) : symf::selftest::Bounds::full();
        symf::selftest::run_all(bounds, [&](const symf::selftest::CheckResult& r) {
            if (!r.passed)
                ++failed;
            if (callback)
                callback(r.name.c_str(), r.passed ? 1 : 0, r.detail.c_str(), r.seconds, user);
        });
    });
    if (failures)
        *failures = failed;
    if (status == SYMF_OK && failed > 0) {
        ctx->last_error = std::to_string(failed) + " selftest check(s) failed";
        return SYMF_ERR_SELFTEST;
    }
    return status;
}

} // extern "C"
