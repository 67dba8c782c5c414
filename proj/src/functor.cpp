#include "symf/functor.hpp"

#include "symf/errors.hpp"

namespace symf {

RepCharacter::RepCharacter(int r, std::map<Partition, std::int64_t> traces) : degree_(r)
{
    if (r < 0)
        throw UsageError("representation degree must be nonnegative");
    for (auto& [mu, t] : traces) {
        if (mu.weight() != r)
            throw UsageError("cycle type " + mu.to_string() + " is not a partition of " + std::to_string(r));
        if (t != 0)
            traces_.emplace(mu, t);
    }
}

RepCharacter RepCharacter::trivial(int r)
{
    std::map<Partition, std::int64_t> t;
    for (const auto& mu : partitions_of(r))
        t.emplace(mu, 1);
    return {r, std::move(t)};
}

RepCharacter RepCharacter::sign(int r)
{
    std::map<Partition, std::int64_t> t;
    for (const auto& mu : partitions_of(r))
        t.emplace(mu, (r - mu.length()) % 2 == 0 ? 1 : -1);
    return {r, std::move(t)};
}

RepCharacter RepCharacter::regular(int r)
{
    std::map<Partition, std::int64_t> t;
    t.emplace(Partition(std::vector<int>(static_cast<std::size_t>(r), 1)),
              static_cast<std::int64_t>(factorial(static_cast<unsigned>(r)).get_si()));
    return {r, std::move(t)};
}

RepCharacter RepCharacter::irreducible(const Partition& lambda)
{
    auto table = character_table(lambda.weight());
    std::size_t row = table->index_of(lambda);
    std::map<Partition, std::int64_t> t;
    for (std::size_t col = 0; col < table->size(); ++col)
        t.emplace(table->partitions()[col], table->at(row, col));
    return {lambda.weight(), std::move(t)};
}

std::int64_t RepCharacter::trace(const Partition& cycle_type) const
{
    auto it = traces_.find(cycle_type);
    return it == traces_.end() ? 0 : it->second;
}

std::int64_t RepCharacter::dimension() const
{
    return trace(Partition(std::vector<int>(static_cast<std::size_t>(degree_), 1)));
}

RepCharacter RepCharacter::operator+(const RepCharacter& other) const
{
    if (other.degree_ != degree_)
        throw DegreeError("adding characters of different symmetric groups");
    auto sum = traces_;
    for (const auto& [mu, t] : other.traces_)
        sum[mu] += t;
    return {degree_, std::move(sum)};
}

SymFn char_of_functor(const RepCharacter& rho)
{
    SymFn out(Basis::p);
    for (const auto& [mu, t] : rho.traces())
        out.add_term(mu, ratio(static_cast<long>(t), z_of(mu)));
    return out;
}

SymFn schur_functor_char(const Partition& lambda) { return SymFn::generator(Basis::s, lambda); }

} // namespace symf
