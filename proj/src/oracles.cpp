#include "symf/oracles.hpp"

#include "symf/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace symf::oracles {

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::monomial(int exponent, const Integer& coeff)
{
    LaurentPoly p;
    p.add(exponent, coeff);
    return p;
}

LaurentPoly LaurentPoly::sl2_character(int k, int step)
{
    LaurentPoly p;
    for (int j = 0; j <= k; ++j)
        p.add(step * (k - 2 * j), 1);
    return p;
}

void LaurentPoly::add(int exponent, const Integer& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const
{
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_)
        out.add(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const
{
    LaurentPoly out;
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : o.terms_)
            out.add(a + b, ca * cb);
    return out;
}

Integer LaurentPoly::coefficient(int exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
}

// ---------------------------------------------------------------------------
// Plethysm by explicit monomials

namespace {

using Exponents = std::vector<int>;

// All exponent vectors in `vars` variables of the monomials of h_d (multisets) or e_d (sets).
std::vector<Exponents> basic_monomials(Outer kind, int degree, int vars)
{
    std::vector<Exponents> out;
    Exponents cur(static_cast<std::size_t>(vars), 0);
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == vars) {
            if (left == 0)
                out.push_back(cur);
            return;
        }
        int top = kind == Outer::h ? left : std::min(left, 1);
        for (int x = 0; x <= top; ++x) {
            cur[static_cast<std::size_t>(var)] = x;
            rec(var + 1, left - x);
        }
        cur[static_cast<std::size_t>(var)] = 0;
    };
    rec(0, degree);
    return out;
}

void count_strips(const std::vector<int>& shape, std::vector<int>& current, const std::vector<int>& content,
                  std::size_t step, Integer& total)
{
    if (step == content.size()) {
        if (current == shape)
            ++total;
        return;
    }
    // Add a horizontal strip of size content[step]: new row j lies between current[j] and
    // min(shape[j], current[j-1]).
    std::vector<int> next = current;
    std::function<void(std::size_t, int)> rec = [&](std::size_t row, int left) {
        if (row == shape.size()) {
            if (left == 0)
                count_strips(shape, next, content, step + 1, total);
            return;
        }
        int upper = shape[row];
        if (row > 0)
            upper = std::min(upper, current[row - 1]);
        for (int len = current[row]; len <= upper && len - current[row] <= left; ++len) {
            next[row] = len;
            rec(row + 1, left - (len - current[row]));
        }
        next[row] = current[row];
    };
    rec(0, content[step]);
}

} // namespace

Integer kostka(const Partition& shape, const Partition& content)
{
    if (shape.weight() != content.weight())
        return 0;
    std::vector<int> target(shape.begin(), shape.end());
    std::vector<int> current(target.size(), 0);
    Integer total = 0;
    count_strips(target, current, content.parts(), 0, total);
    return total;
}

std::map<Partition, Integer> plethysm_schur_by_monomials(Outer outer, int outer_degree, Outer inner, int inner_degree)
{
    const int total = outer_degree * inner_degree;
    const int vars = std::max(total, 1);
    auto alphabet = basic_monomials(inner, inner_degree, vars);

    // Choose outer_degree letters from the alphabet: multisets for h, sets for e.
    std::map<Exponents, Integer> poly;
    Exponents acc(static_cast<std::size_t>(vars), 0);
    std::function<void(std::size_t, int)> choose = [&](std::size_t from, int left) {
        if (left == 0) {
            ++poly[acc];
            return;
        }
        for (std::size_t i = from; i < alphabet.size(); ++i) {
            for (int v = 0; v < vars; ++v)
                acc[static_cast<std::size_t>(v)] += alphabet[i][static_cast<std::size_t>(v)];
            choose(outer == Outer::h ? i : i + 1, left - 1);
            for (int v = 0; v < vars; ++v)
                acc[static_cast<std::size_t>(v)] -= alphabet[i][static_cast<std::size_t>(v)];
        }
    };
    choose(0, outer_degree);

    auto shapes = partitions_of(total);
    std::map<Partition, Integer> schur;
    for (const auto& lambda : shapes) {
        Exponents key(static_cast<std::size_t>(vars), 0);
        std::copy(lambda.begin(), lambda.end(), key.begin());
        Integer c = poly.count(key) ? poly[key] : Integer(0);
        for (const auto& [nu, cn] : schur)
            c -= cn * kostka(nu, lambda);
        if (c != 0)
            schur.emplace(lambda, c);
    }
    return schur;
}

// ---------------------------------------------------------------------------
// Deals

Integer deals(int m, int n)
{
    if (m < 1 || n < 1)
        throw UsageError("oracle deals: m, n >= 1");
    if (m * n > 14)
        throw ResourceError("oracle deals limited to m*n <= 14");
    std::vector<std::vector<int>> hands;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> gen = [&](int type, int left) {
        if (type == n - 1) {
            cur[static_cast<std::size_t>(type)] = left;
            hands.push_back(cur);
            return;
        }
        for (int x = left; x >= 0; --x) {
            cur[static_cast<std::size_t>(type)] = x;
            gen(type + 1, left - x);
        }
    };
    gen(0, m);

    std::vector<int> used(static_cast<std::size_t>(n), 0);
    Integer count = 0;
    std::function<void(std::size_t, int)> deal = [&](std::size_t from, int dealt) {
        if (dealt == n) {
            ++count;
            return;
        }
        for (std::size_t i = from; i < hands.size(); ++i) {
            bool fits = true;
            for (int t = 0; t < n; ++t)
                if (used[static_cast<std::size_t>(t)] + hands[i][static_cast<std::size_t>(t)] > m) {
                    fits = false;
                    break;
                }
            if (!fits)
                continue;
            for (int t = 0; t < n; ++t)
                used[static_cast<std::size_t>(t)] += hands[i][static_cast<std::size_t>(t)];
            deal(i, dealt + 1);
            for (int t = 0; t < n; ++t)
                used[static_cast<std::size_t>(t)] -= hands[i][static_cast<std::size_t>(t)];
        }
    };
    deal(0, 0);
    return count;
}

Integer deals_by_matrices(int m, int n)
{
    if (m < 1 || n < 1)
        throw UsageError("oracle deals: m, n >= 1");
    if (m * n > 12)
        throw ResourceError("matrix deal oracle limited to m*n <= 12");
    using Matrix = std::vector<std::vector<int>>;
    std::set<Matrix> orbits;
    Matrix rows;
    std::vector<int> col_left(static_cast<std::size_t>(n), m);
    std::vector<int> row(static_cast<std::size_t>(n), 0);

    std::function<void()> next_row;
    std::function<void(int, int)> fill = [&](int col, int left) {
        if (col == n) {
            if (left != 0)
                return;
            rows.push_back(row);
            next_row();
            rows.pop_back();
            return;
        }
        int top = std::min(left, col_left[static_cast<std::size_t>(col)]);
        for (int x = 0; x <= top; ++x) {
            row[static_cast<std::size_t>(col)] = x;
            col_left[static_cast<std::size_t>(col)] -= x;
            fill(col + 1, left - x);
            col_left[static_cast<std::size_t>(col)] += x;
        }
        row[static_cast<std::size_t>(col)] = 0;
    };
    next_row = [&] {
        if (static_cast<int>(rows.size()) == n) {
            Matrix canon = rows;
            std::sort(canon.begin(), canon.end());
            orbits.insert(std::move(canon));
            return;
        }
        std::vector<int> saved = row;
        fill(0, m);
        row = saved;
    };
    next_row();
    return static_cast<unsigned long>(orbits.size());
}

// ---------------------------------------------------------------------------
// Regular multigraphs

Integer regular_graphs(int n, int k)
{
    if (n < 1 || k < 0)
        throw UsageError("oracle regular graphs: n >= 1, k >= 0");
    if (n > 5 || k > 6)
        throw ResourceError("regular graph oracle limited to n <= 5, k <= 6");
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            slots.emplace_back(i, j);
    std::vector<int> value(slots.size(), 0);
    std::vector<int> left(static_cast<std::size_t>(n), k);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::set<std::vector<int>> classes;

    auto canonical = [&] {
        std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
        for (std::size_t s = 0; s < slots.size(); ++s) {
            auto [i, j] = slots[s];
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = value[s];
            a[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = value[s];
        }
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<int> best;
        do {
            std::vector<int> flat;
            for (auto [i, j] : slots)
                flat.push_back(a[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]
                                [static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])]);
            if (best.empty() || flat < best)
                best = std::move(flat);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    };

    std::function<void(std::size_t)> rec = [&](std::size_t s) {
        if (s == slots.size()) {
            classes.insert(canonical());
            return;
        }
        auto [i, j] = slots[s];
        auto& li = left[static_cast<std::size_t>(i)];
        auto& lj = left[static_cast<std::size_t>(j)];
        int top = i == j ? li / 2 : std::min(li, lj);
        for (int v = 0; v <= top; ++v) {
            value[s] = v;
            if (i == j)
                li -= 2 * v;
            else {
                li -= v;
                lj -= v;
            }
            // slot (i, n-1) is the last one touching vertex i
            if (j != n - 1 || li == 0)
                rec(s + 1);
            if (i == j)
                li += 2 * v;
            else {
                li += v;
                lj += v;
            }
        }
        value[s] = 0;
    };
    rec(0);
    return static_cast<unsigned long>(classes.size());
}

// ---------------------------------------------------------------------------
// Finite-group averaging for S_n

namespace {

struct GroupElement {
    std::vector<int> cycle_lengths;
    int sign;

    // Fixed points of g^j.
    long fixed_by_power(long j) const
    {
        long f = 0;
        for (int c : cycle_lengths)
            if (j % c == 0)
                f += c;
        return f;
    }
};

std::vector<GroupElement> symmetric_group(int n)
{
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<GroupElement> out;
    do {
        GroupElement g;
        std::vector<bool> seen(perm.size(), false);
        int transpositions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            if (seen[i])
                continue;
            int len = 0;
            for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
                seen[j] = true;
                ++len;
            }
            g.cycle_lengths.push_back(len);
            transpositions += len - 1;
        }
        g.sign = transpositions % 2 == 0 ? 1 : -1;
        out.push_back(std::move(g));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Σ_μ (χ(μ)/z_μ) p_μ, given the class function χ.
template <class ClassFn>
SymFn frobenius(int r, ClassFn&& chi)
{
    SymFn out(Basis::p);
    for (const auto& mu : partitions_of(r))
        out.add_term(mu, chi(mu) / z_of(mu));
    return out;
}

} // namespace

SymFn perm_hom_char(int n, int r, bool sign_twist)
{
    if (n < 1 || r < 0)
        throw UsageError("oracle perm_hom_char: n >= 1, r >= 0");
    if (n > 5 || r > 8)
        throw ResourceError("permutation-group oracle limited to n <= 5, r <= 8");
    auto group = symmetric_group(n);
    Integer order = factorial(static_cast<unsigned>(n));
    return frobenius(r, [&](const Partition& mu) {
        Integer sum = 0;
        for (const auto& g : group) {
            Integer trace = 1;
            for (int c : mu)
                trace *= g.fixed_by_power(c);
            sum += sign_twist ? Integer(g.sign * trace) : trace;
        }
        return ratio(sum, order);
    });
}

SymFn perm_hom_char_polyfunc(int n, const std::map<Partition, Rational>& functor_p, int r, bool sign_twist)
{
    if (n < 1 || r < 0)
        throw UsageError("oracle perm_hom_char_polyfunc: n >= 1, r >= 0");
    int k = functor_p.empty() ? 0 : functor_p.begin()->first.weight();
    for (const auto& [nu, c] : functor_p)
        if (nu.weight() != k)
            throw UsageError("oracle perm_hom_char_polyfunc: functor must be homogeneous");
    if (n > 4 || r * k > 8)
        throw ResourceError("functor oracle limited to n <= 4, r*deg P <= 8");
    auto group = symmetric_group(n);
    Integer order = factorial(static_cast<unsigned>(n));

    // Trace of h on P(V) is ch P with p_i ↦ fix(h^i); here h = g^c.
    auto functor_trace = [&](const GroupElement& g, int c) {
        Rational t = 0;
        for (const auto& [nu, coeff] : functor_p) {
            Rational term = coeff;
            for (int part : nu)
                term *= g.fixed_by_power(static_cast<long>(part) * c);
            t += term;
        }
        return t;
    };
    return frobenius(r, [&](const Partition& mu) {
        Rational sum = 0;
        for (const auto& g : group) {
            Rational trace = 1;
            for (int c : mu)
                trace *= functor_trace(g, c);
            sum += sign_twist ? Rational(g.sign * trace) : trace;
        }
        return Rational(sum / order);
    });
}

// ---------------------------------------------------------------------------
// SL(2) by Weyl integration

Rational su2_frobenius(int k, int r, const Partition& mu)
{
    if (k < 0 || r < 0 || mu.weight() != r)
        throw UsageError("oracle su2_frobenius: need k, r >= 0 and mu a partition of r");
    if (k * r > 36)
        throw ResourceError("SL(2) oracle limited to k*r <= 36");
    LaurentPoly integrand = LaurentPoly::monomial(0) + LaurentPoly::monomial(2, -1);
    for (int c : mu)
        integrand = integrand * LaurentPoly::sl2_character(k, c);
    return Rational(integrand.constant_term());
}

SymFn su2_inv_char(int k, int r)
{
    return frobenius(r, [&](const Partition& mu) { return su2_frobenius(k, r, mu); });
}

Integer su2_symmetric_invariants(int k, int r)
{
    Rational total = 0;
    for (const auto& mu : partitions_of(r))
        total += su2_frobenius(k, r, mu) / z_of(mu);
    if (total.get_den() != 1)
        throw InternalError("non-integral SL(2) invariant count");
    return total.get_num();
}

// ---------------------------------------------------------------------------
// Classical counts

namespace {

Integer box_partitions(int d, int rows, int cols)
{
    std::vector<std::vector<std::vector<Integer>>> memo(
        static_cast<std::size_t>(d + 1),
        std::vector<std::vector<Integer>>(static_cast<std::size_t>(rows + 1),
                                          std::vector<Integer>(static_cast<std::size_t>(cols + 1), -1)));
    std::function<Integer(int, int, int)> f = [&](int dd, int rr, int cc) -> Integer {
        if (dd == 0)
            return 1;
        if (dd < 0 || rr == 0 || cc == 0)
            return 0;
        auto& slot = memo[static_cast<std::size_t>(dd)][static_cast<std::size_t>(rr)][static_cast<std::size_t>(cc)];
        if (slot >= 0)
            return slot;
        // either no part equals cc, or remove one part of size cc
        slot = f(dd, rr, cc - 1) + f(dd - cc, rr - 1, cc);
        return slot;
    };
    return f(d, rows, cols);
}

} // namespace

Integer cayley_sylvester(int k, int r)
{
    if (k < 0 || r < 0)
        throw UsageError("oracle cayley_sylvester: k, r >= 0");
    if (k * r > 60)
        throw ResourceError("Cayley-Sylvester oracle limited to k*r <= 60");
    if ((k * r) % 2 != 0)
        return 0;
    int half = k * r / 2;
    Integer top = box_partitions(half, r, k);
    Integer below = half >= 1 ? box_partitions(half - 1, r, k) : Integer(0);
    return top - below;
}

Integer syt(const Partition& lambda)
{
    if (lambda.weight() > 30)
        throw ResourceError("hook-length oracle limited to weight <= 30");
    auto conj = conjugate(lambda);
    Integer hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j)
            hooks *= (lambda[static_cast<std::size_t>(i)] - j - 1) + (conj[static_cast<std::size_t>(j)] - i - 1) + 1;
    return factorial(static_cast<unsigned>(lambda.weight())) / hooks;
}

Integer matchings(int q)
{
    Integer out = 1;
    for (int i = 2 * q - 1; i > 1; i -= 2)
        out *= i;
    return out;
}

Integer restricted_bell(int r, int n)
{
    // Stirling numbers of the second kind, row by row.
    std::vector<Integer> s(static_cast<std::size_t>(r + 1), 0);
    s[0] = 1;
    for (int i = 1; i <= r; ++i) {
        std::vector<Integer> next(static_cast<std::size_t>(r + 1), 0);
        for (int j = 1; j <= i; ++j)
            next[static_cast<std::size_t>(j)] = j * s[static_cast<std::size_t>(j)] + s[static_cast<std::size_t>(j - 1)];
        s = std::move(next);
    }
    Integer total = 0;
    for (int j = 0; j <= std::min(r, n); ++j)
        total += s[static_cast<std::size_t>(j)];
    return total;
}

Integer catalan(int m)
{
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(2 * m), static_cast<unsigned long>(m));
    return binom / (m + 1);
}

} // namespace symf::oracles
