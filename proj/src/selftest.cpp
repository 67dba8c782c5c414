#include "symf/selftest.hpp"

#include "symf/enumeration.hpp"
#include "symf/errors.hpp"
#include "symf/invariants.hpp"
#include "symf/oracles.hpp"
#include "symf/plethysm.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <sstream>

namespace symf::selftest {

namespace {

// Records the first few mismatches of a check.
class Tally {
public:
    void expect(bool ok, const std::string& what)
    {
        ++checked_;
        if (ok)
            return;
        ++failed_;
        if (failed_ <= 5)
            notes_ << (failed_ > 1 ? "; " : "") << what;
    }

    bool passed() const { return failed_ == 0 && checked_ > 0; }

    std::string summary() const
    {
        std::ostringstream s;
        s << checked_ - failed_ << "/" << checked_ << " cases";
        if (failed_)
            s << ": " << notes_.str();
        return s.str();
    }

private:
    int checked_ = 0;
    int failed_ = 0;
    std::ostringstream notes_;
};

template <class Body>
CheckResult timed(const std::string& name, Body&& body)
{
    CheckResult result;
    result.name = name;
    auto start = std::chrono::steady_clock::now();
    try {
        Tally tally;
        body(tally);
        result.passed = tally.passed();
        result.detail = tally.summary();
    } catch (const std::exception& e) {
        result.passed = false;
        result.detail = std::string("exception: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::string str(const SymFn& f) { return to_basis(f, Basis::s).to_string(); }

SymFn from_oracle(const std::map<Partition, Integer>& schur)
{
    SymFn f(Basis::s);
    for (const auto& [lambda, c] : schur)
        f.add_term(lambda, Rational(c));
    return f;
}

// Power-sum expansions written out by hand, so the functor oracle shares no conversion code.
struct HandFunctor {
    const char* name;
    SymFn character;
    std::map<Partition, Rational> power_sums;
};

std::vector<HandFunctor> hand_functors()
{
    auto q = [](long a, long b) { return ratio(a, b); };
    std::vector<HandFunctor> out;
    out.push_back({"h2", SymFn::generator(Basis::h, {2}), {{{1, 1}, q(1, 2)}, {{2}, q(1, 2)}}});
    out.push_back({"e2", SymFn::generator(Basis::e, {2}), {{{1, 1}, q(1, 2)}, {{2}, q(-1, 2)}}});
    out.push_back({"h3", SymFn::generator(Basis::h, {3}),
                   {{{1, 1, 1}, q(1, 6)}, {{2, 1}, q(1, 2)}, {{3}, q(1, 3)}}});
    out.push_back({"s21", SymFn::generator(Basis::s, {2, 1}), {{{1, 1, 1}, q(1, 3)}, {{3}, q(-1, 3)}}});
    return out;
}

SymFn random_schur_positive(std::mt19937& rng, int degree, int max_terms, int max_coeff)
{
    auto shapes = partitions_of(degree);
    std::uniform_int_distribution<std::size_t> pick(0, shapes.size() - 1);
    std::uniform_int_distribution<int> count(1, max_terms);
    std::uniform_int_distribution<int> coeff(1, max_coeff);
    SymFn f(Basis::s);
    int n = count(rng);
    for (int i = 0; i < n; ++i)
        f.add_term(shapes[pick(rng)], coeff(rng));
    return f;
}

} // namespace

Bounds Bounds::reduced(int max_degree)
{
    int d = std::max(max_degree, 2);
    Bounds b;
    b.cauchy_pairs = 10;
    b.cauchy_max_total = std::min(12, d);
    b.perm_max_r = std::min(6, d);
    b.theorem_perm_max_total = std::min(6, d);
    b.sl2_max_r = std::min(4, d / 2);
    b.catalan_max_m = std::min(6, d / 2);
    b.sp_max_q = std::min(5, d / 2);
    b.gl_max_r = std::min(8, d);
    b.hilbert_max_k = std::min(6, d / 2);
    b.hilbert_max_r = std::min(6, d / 2 + 1);
    b.deals_max_mn = std::min(12, d);
    b.regular_max_k = std::min(4, d / 2);
    return b;
}

CheckResult plethysm_identities()
{
    return timed("plethysm identities h2[h2], e2[e2]", [](Tally& t) {
        SymFn h2 = SymFn::generator(Basis::h, {2});
        SymFn e2 = SymFn::generator(Basis::e, {2});
        SymFn hh = to_basis(plethysm(h2, h2), Basis::s);
        SymFn ee = to_basis(plethysm(e2, e2), Basis::s);

        SymFn hh_expected(Basis::s, {{{4}, 1}, {{2, 2}, 1}});
        SymFn ee_expected(Basis::s, {{{2, 1, 1}, 1}});
        auto hh_oracle = from_oracle(oracles::plethysm_schur_by_monomials(oracles::Outer::h, 2, oracles::Outer::h, 2));
        auto ee_oracle = from_oracle(oracles::plethysm_schur_by_monomials(oracles::Outer::e, 2, oracles::Outer::e, 2));

        t.expect(hh.terms() == hh_oracle.terms(), "h2[h2] = " + hh.to_string() + ", oracle " + hh_oracle.to_string());
        t.expect(ee.terms() == ee_oracle.terms(), "e2[e2] = " + ee.to_string() + ", oracle " + ee_oracle.to_string());
        t.expect(hh_oracle.terms() == hh_expected.terms(), "oracle h2[h2] = " + hh_oracle.to_string());
        t.expect(ee_oracle.terms() == ee_expected.terms(), "oracle e2[e2] = " + ee_oracle.to_string());
    });
}

CheckResult cauchy_mode_agreement(int pairs, int max_total, std::uint32_t seed)
{
    return timed("Cauchy identity: power-sum and Schur modes agree", [&](Tally& t) {
        std::mt19937 rng(seed);
        for (int i = 0; i < pairs; ++i) {
            int k = std::uniform_int_distribution<int>(1, std::min(4, max_total))(rng);
            int r = std::uniform_int_distribution<int>(1, max_total / k)(rng);
            SymFn F = random_schur_positive(rng, k, 2, 2);
            SymFn G = random_schur_positive(rng, r * k, 3, 3);
            SymFn by_p = fundamental(F, G, r, FundamentalMode::power_sum);
            SymFn by_s = fundamental(F, G, r, FundamentalMode::schur);
            std::string label = "F=" + F.to_string() + " G=" + G.to_string() + " r=" + std::to_string(r);
            t.expect(by_p == by_s, label + ": p-mode " + str(by_p) + " vs s-mode " + by_s.to_string());
            t.expect(is_schur_positive_integral(by_s), label + ": not Schur-positive " + by_s.to_string());
        }
    });
}

CheckResult permutation_family(int max_n, int max_r)
{
    return timed("S(n) permutation family vs group averaging", [&](Tally& t) {
        for (int n = 1; n <= max_n; ++n)
            for (int r = 0; r <= max_r; ++r) {
                SymFn engine = inv_char(SnPermutation{n}, r);
                SymFn oracle = oracles::perm_inv_char(n, r);
                std::string label = "n=" + std::to_string(n) + " r=" + std::to_string(r);
                t.expect(engine == oracle, label + ": " + str(engine) + " vs " + str(oracle));
                t.expect(dimension(engine) == Rational(oracles::restricted_bell(r, n)),
                         label + ": dimension " + to_string(dimension(engine)));
            }
    });
}

CheckResult theorem_permutation(int max_n, int max_total)
{
    return timed("invariants of P(V) for S(n) vs group averaging", [&](Tally& t) {
        for (const auto& functor : hand_functors()) {
            PolyFunctor P(functor.character);
            for (int n = 1; n <= max_n; ++n)
                for (int r = 0; r * P.degree() <= max_total; ++r) {
                    SymFn engine = inv_char_polyfunc(SnPermutation{n}, P, r);
                    SymFn oracle = oracles::perm_inv_char_polyfunc(n, functor.power_sums, r);
                    t.expect(engine == oracle, std::string(functor.name) + " n=" + std::to_string(n) + " r="
                                                   + std::to_string(r) + ": " + str(engine) + " vs " + str(oracle));
                }
        }
    });
}

CheckResult theorem_sl2(int max_k, int max_r)
{
    return timed("invariants of Sym^k V for SL(2) vs Weyl integration", [&](Tally& t) {
        for (int k = 1; k <= max_k; ++k)
            for (int r = 0; r <= max_r; ++r) {
                SymFn engine = inv_char_polyfunc(SLnDefining{2}, PolyFunctor::symmetric_power(k), r);
                SymFn oracle = oracles::su2_inv_char(k, r);
                t.expect(engine == oracle, "k=" + std::to_string(k) + " r=" + std::to_string(r) + ": " + str(engine)
                                               + " vs " + str(oracle));
            }
    });
}

CheckResult catalan_dimensions(int max_m)
{
    static const long expected[] = {1, 1, 2, 5, 14, 42, 132};
    return timed("SL(2) invariant dimensions are Catalan numbers", [&](Tally& t) {
        for (int m = 1; m <= max_m; ++m) {
            Rational dim = dimension(inv_char(SLnDefining{2}, 2 * m));
            Integer hook = oracles::syt(Partition::rectangle(m, 2));
            std::string label = "m=" + std::to_string(m) + ": " + to_string(dim);
            t.expect(dim == Rational(hook), label + " vs hook length " + hook.get_str());
            if (m < 7)
                t.expect(dim == expected[m], label + " vs " + std::to_string(expected[m]));
        }
    });
}

CheckResult symplectic_stable(int max_q)
{
    static const long expected[] = {1, 1, 3, 15, 105, 945};
    return timed("Sp(2n) stable dimensions are (2q-1)!!", [&](Tally& t) {
        for (int q = 1; q <= max_q; ++q)
            for (int n = q; n <= q + 1; ++n) {
                Rational dim = dimension(inv_char(Sp2nDefining{n}, 2 * q));
                std::string label = "q=" + std::to_string(q) + " n=" + std::to_string(n) + ": " + to_string(dim);
                t.expect(dim == Rational(oracles::matchings(q)), label);
                if (q < 6)
                    t.expect(dim == expected[q], label + " vs " + std::to_string(expected[q]));
                t.expect(inv_char(Sp2nDefining{n}, 2 * q - 1).is_zero(), label + ": odd degree nonzero");
            }
    });
}

CheckResult gl_adjoint_identity(int max_r)
{
    return timed("GL(n) adjoint: sum of s*s equals sum of p", [&](Tally& t) {
        for (int r = 0; r <= max_r; ++r) {
            SymFn engine = inv_char(GLnAdjoint{std::max(r, 1), true}, r);
            SymFn all_p(Basis::p);
            for (const auto& mu : partitions_of(r))
                all_p.add_term(mu, 1);
            std::string label = "r=" + std::to_string(r);
            t.expect(engine == all_p, label + ": " + engine.to_string());
            t.expect(dimension(engine) == Rational(factorial(static_cast<unsigned>(r))),
                     label + ": dimension " + to_string(dimension(engine)));
        }
    });
}

CheckResult hilbert_binary_forms(int max_k, int max_r)
{
    static const long quartic[] = {1, 0, 1, 1, 1, 1, 2};
    return timed("Hilbert dimensions of binary forms", [&](Tally& t) {
        for (int k = 1; k <= max_k; ++k)
            for (int r = 0; r <= max_r; ++r) {
                Rational dim = hilbert_dim(SLnDefining{2}, PolyFunctor::symmetric_power(k), r);
                Integer cs = oracles::cayley_sylvester(k, r);
                Integer weyl = oracles::su2_symmetric_invariants(k, r);
                std::string label = "k=" + std::to_string(k) + " r=" + std::to_string(r) + ": " + to_string(dim);
                t.expect(dim == Rational(cs), label + " vs Cayley-Sylvester " + cs.get_str());
                t.expect(dim == Rational(weyl), label + " vs Weyl " + weyl.get_str());
                if (k == 4 && r < 7)
                    t.expect(dim == quartic[r], label + " vs classical " + std::to_string(quartic[r]));
            }
    });
}

CheckResult card_deals(int max_mn)
{
    return timed("MacMahon card deals vs enumeration", [&](Tally& t) {
        for (int m = 1; m <= max_mn; ++m)
            for (int n = 1; m * n <= max_mn; ++n) {
                Rational count = symf::card_deals({m, n});
                std::string label = "m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " + to_string(count);
                t.expect(count == Rational(oracles::deals(m, n)), label + " vs oracle " + oracles::deals(m, n).get_str());
                if (n <= 6)
                    t.expect(count == Rational(oracles::deals_by_matrices(m, n)), label + " vs matrix oracle");
                SymFn cycle = deals_cycle_index({m, n});
                t.expect(specialize_ones(cycle) == count, label + ": cycle index gives " + to_string(specialize_ones(cycle)));
            }
        if (max_mn >= 6) {
            t.expect(symf::card_deals({2, 2}) == 2, "f(2,2) != 2");
            t.expect(symf::card_deals({2, 3}) == 5, "f(2,3) != 5");
        }
    });
}

CheckResult regular_multigraphs(int max_n, int max_k)
{
    return timed("regular multigraphs vs enumeration", [&](Tally& t) {
        for (int n = 1; n <= max_n; ++n)
            for (int k = 0; k <= max_k; ++k) {
                if ((n * k) % 2 != 0)
                    continue;
                Rational count = regular_graphs({n, k});
                Integer oracle = oracles::regular_graphs(n, k);
                std::string label = "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + to_string(count);
                t.expect(count == Rational(oracle), label + " vs oracle " + oracle.get_str());
                SymFn cycle = regular_graphs_cycle_index({n, k});
                t.expect(specialize_ones(cycle) == count, label + ": cycle index gives " + to_string(specialize_ones(cycle)));
            }
        if (max_n >= 3 && max_k >= 2)
            t.expect(regular_graphs({3, 2}) == 3, "(3,2) != 3");
    });
}

std::vector<CheckResult> run_all(const Bounds& b, const std::function<void(const CheckResult&)>& on_result)
{
    std::vector<CheckResult> results;
    auto record = [&](CheckResult r) {
        if (on_result)
            on_result(r);
        results.push_back(std::move(r));
    };
    record(plethysm_identities());
    record(cauchy_mode_agreement(b.cauchy_pairs, b.cauchy_max_total, b.seed));
    record(permutation_family(b.perm_max_n, b.perm_max_r));
    record(theorem_permutation(b.theorem_perm_max_n, b.theorem_perm_max_total));
    record(theorem_sl2(b.sl2_max_k, b.sl2_max_r));
    record(catalan_dimensions(b.catalan_max_m));
    record(symplectic_stable(b.sp_max_q));
    record(gl_adjoint_identity(b.gl_max_r));
    record(hilbert_binary_forms(b.hilbert_max_k, b.hilbert_max_r));
    record(card_deals(b.deals_max_mn));
    record(regular_multigraphs(b.regular_max_n, b.regular_max_k));
    return results;
}

} // namespace symf::selftest
