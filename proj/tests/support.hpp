#pragma once

#include "symf/diagnostics.hpp"
#include "symf/expr.hpp"
#include "symf/symfn.hpp"

#include <string>
#include <vector>

namespace symf::test {

inline SymFn fn(std::string_view text) { return evaluate(parse_expr(text).expr); }

inline SymFn in_s(std::string_view text) { return to_basis(fn(text), Basis::s); }

/// Collects warnings for the lifetime of the object instead of printing them.
class WarningCapture {
public:
    WarningCapture()
    {
        previous_ = set_warning_handler([this](const std::string& m) { messages.push_back(m); });
    }
    ~WarningCapture() { set_warning_handler(previous_); }
    WarningCapture(const WarningCapture&) = delete;
    WarningCapture& operator=(const WarningCapture&) = delete;

    std::vector<std::string> messages;

private:
    WarningHandler previous_;
};

} // namespace symf::test

#include <random>

namespace symf::test {

/// Random homogeneous function of the given degree in `basis`, with small integer coefficients.
inline SymFn random_homogeneous(std::mt19937& rng, int degree, Basis basis, bool nonnegative = false)
{
    auto ps = partitions_of(degree);
    std::uniform_int_distribution<int> coeff(nonnegative ? 0 : -2, 2);
    SymFn f(basis);
    for (const auto& l : ps)
        f.add_term(l, coeff(rng));
    if (f.is_zero())
        f.add_term(ps.front(), 1);
    return f;
}

} // namespace symf::test
