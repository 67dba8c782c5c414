#include "symf/enumeration.hpp"

#include "symf/errors.hpp"
#include "symf/plethysm.hpp"

namespace symf {

namespace {

SymFn h(int k)
{
    return k == 0 ? SymFn::constant(1) : SymFn::generator(Basis::h, {k});
}

void validate(const DealSpec& spec)
{
    if (spec.m < 1 || spec.n < 1)
        throw UsageError("deals: m and n must be at least 1");
}

void validate(const RegularGraphSpec& spec)
{
    if (spec.n < 1 || spec.k < 0)
        throw UsageError("regular graphs: need n >= 1 and k >= 0");
}

Rational checked_count(const Rational& q, const char* what)
{
    if (q < 0 || !is_integer(q))
        throw InternalError(std::string(what) + " produced non-integral count " + to_string(q));
    return q;
}

} // namespace

Rational card_deals(const DealSpec& spec)
{
    validate(spec);
    return checked_count(scalar(plethysm(h(spec.n), h(spec.m)), power(h(spec.m), spec.n)), "card_deals");
}

SymFn deals_cycle_index(const DealSpec& spec)
{
    validate(spec);
    return fundamental(h(spec.m), power(h(spec.m), spec.n), spec.n);
}

Rational regular_graphs(const RegularGraphSpec& spec)
{
    validate(spec);
    if ((spec.n * spec.k) % 2 != 0)
        return 0;
    return checked_count(scalar(plethysm(h(spec.n), h(spec.k)), plethysm(h(spec.n * spec.k / 2), h(2))),
                         "regular_graphs");
}

SymFn regular_graphs_cycle_index(const RegularGraphSpec& spec)
{
    validate(spec);
    if ((spec.n * spec.k) % 2 != 0)
        throw DegreeError("regular graph cycle index undefined for odd n*k = " + std::to_string(spec.n * spec.k));
    return fundamental(h(spec.k), plethysm(h(spec.n * spec.k / 2), h(2)), spec.n);
}

} // namespace symf
