#include "support.hpp"

#include "symf/errors.hpp"
#include "symf/invariants.hpp"
#include "symf/oracles.hpp"

#include <doctest.h>

using namespace symf;
using symf::test::fn;

TEST_CASE("inv_char examples")
{
    CHECK(inv_char(SLnDefining{2}, 2) == fn("s[1,1]"));
    CHECK(inv_char(SLnDefining{2}, 3).is_zero());
    CHECK(inv_char(SLnDefining{3}, 6) == fn("s[2,2,2]"));
    CHECK(inv_char(SLnDefining{2}, 0) == fn("1"));
    CHECK(inv_char(SnPermutation{2}, 2) == fn("2*h2"));
    CHECK(inv_char(GLnAdjoint{2}, 2) == fn("2*s2"));
    CHECK(inv_char(Sp2nDefining{1}, 4) == fn("s[2,2]"));
    CHECK(inv_char(Sp2nDefining{2}, 4) == fn("s[2,2] + s[1,1,1,1]"));
    CHECK(inv_char(Sp2nDefining{3}, 3).is_zero());
    CHECK_THROWS_AS(inv_char(SLnDefining{0}, 2), UsageError);
    CHECK_THROWS_AS(inv_char(SLnDefining{2}, -1), UsageError);
}

TEST_CASE("family outputs are Schur-positive and integral")
{
    for (int r = 0; r <= 6; ++r)
        for (int n = 1; n <= 3; ++n)
            for (InvariantFamily fam : {InvariantFamily{SLnDefining{n}}, InvariantFamily{Sp2nDefining{n}},
                                        InvariantFamily{SnPermutation{n}}, InvariantFamily{GLnAdjoint{n}},
                                        InvariantFamily{GLnAdjoint{n, false}}}) {
                CAPTURE(describe(fam));
                CAPTURE(r);
                CHECK(is_schur_positive_integral(inv_char(fam, r)));
            }
}

TEST_CASE("classical dimension identities")
{
    for (int m = 0; m <= 6; ++m)
        CHECK(dimension(inv_char(SLnDefining{2}, 2 * m)) == oracles::catalan(m));
    for (int q = 1; q <= 5; ++q)
        for (int n : {q, q + 1})
            CHECK(dimension(inv_char(Sp2nDefining{n}, 2 * q)) == oracles::matchings(q));
    for (int n = 1; n <= 4; ++n)
        for (int r = 0; r <= 6; ++r) {
            CHECK(inv_char(SnPermutation{n}, r) == oracles::perm_inv_char(n, r));
            CHECK(dimension(inv_char(SnPermutation{n}, r)) == oracles::restricted_bell(r, n));
        }
    for (int r = 1; r <= 6; ++r) {
        SymFn all_p(Basis::p);
        for (const auto& mu : partitions_of(r))
            all_p.add_term(mu, 1);
        CHECK(inv_char(GLnAdjoint{3}, r) == all_p);
        CHECK(dimension(all_p) == factorial(static_cast<unsigned>(r)));
        CHECK(inv_char(GLnAdjoint{1, false}, r) == SymFn::generator(Basis::h, {r}));
    }
}

TEST_CASE("polynomial functors")
{
    CHECK(PolyFunctor::identity().degree() == 1);
    CHECK(PolyFunctor::symmetric_power(3).character() == fn("h3"));
    CHECK(PolyFunctor::exterior_power(2).is_genuine());
    CHECK(PolyFunctor::from_rep(RepCharacter::sign(3)).character() == fn("e3"));
    CHECK_THROWS_AS(PolyFunctor(SymFn(Basis::s)), DegreeError);
    CHECK_THROWS_AS(PolyFunctor(fn("3")), DegreeError);
    CHECK_THROWS_AS(PolyFunctor(fn("h1 + h2")), DegreeError);

    test::WarningCapture warnings;
    PolyFunctor virtual_functor(fn("h2 - e2"));
    CHECK_FALSE(virtual_functor.is_genuine());
    CHECK(warnings.messages.size() == 1);
}

TEST_CASE("inv_char_polyfunc")
{
    for (int r = 0; r <= 4; ++r)
        CHECK(inv_char_polyfunc(SnPermutation{3}, PolyFunctor::identity(), r) == inv_char(SnPermutation{3}, r));
    CHECK(inv_char_polyfunc(SLnDefining{2}, PolyFunctor::symmetric_power(2), 1).is_zero());
    CHECK(inv_char_polyfunc(SLnDefining{2}, PolyFunctor::symmetric_power(2), 2) == fn("h2"));
    for (int k = 1; k <= 3; ++k)
        for (int r = 0; r <= 4; ++r)
            CHECK(inv_char_polyfunc(SLnDefining{2}, PolyFunctor::symmetric_power(k), r)
                  == oracles::su2_inv_char(k, r));
    for (const char* p : {"h2", "e2", "s[2,1]"}) {
        SymFn ch = fn(p);
        PolyFunctor P(ch);
        auto p_coeffs = to_basis(ch, Basis::p).terms();
        for (int r = 0; r * P.degree() <= 6; ++r)
            CHECK(inv_char_polyfunc(SnPermutation{3}, P, r) == oracles::perm_inv_char_polyfunc(3, p_coeffs, r));
    }
}

TEST_CASE("Hilbert dimensions of binary forms")
{
    CHECK(hilbert_dim(SLnDefining{2}, PolyFunctor::symmetric_power(2), 2) == 1);
    CHECK(hilbert_dim(SLnDefining{2}, PolyFunctor::symmetric_power(2), 1) == 0);
    CHECK(hilbert_dim(SLnDefining{2}, PolyFunctor::symmetric_power(4), 3) == 1);
    const int quartic[] = {1, 0, 1, 1, 1, 1, 2};
    for (int r = 0; r <= 6; ++r)
        CHECK(hilbert_dim(SLnDefining{2}, PolyFunctor::symmetric_power(4), r) == quartic[r]);
    for (int k = 1; k <= 5; ++k)
        for (int r = 0; r <= 5; ++r)
            CHECK(hilbert_dim(SLnDefining{2}, PolyFunctor::symmetric_power(k), r) == oracles::cayley_sylvester(k, r));
}

TEST_CASE("custom families and Hom series")
{
    auto sl2 = invariant_series(SLnDefining{2}, 6);
    CHECK(sl2.component(4) == fn("s[2,2]"));
    CustomFamily custom{sl2};
    CHECK(hilbert_dim(custom, PolyFunctor::symmetric_power(2), 2) == 1);
    for (const char* p : {"h2", "e2", "h3"}) {
        PolyFunctor P(fn(p));
        for (int r = 0; r * P.degree() <= 6; ++r)
            CHECK(hom_series_char(sl2, P, r) == inv_char_polyfunc(SLnDefining{2}, P, r));
    }
    CHECK(hom_series_char(sl2, PolyFunctor::symmetric_power(2), 0) == fn("1"));

    // Hom_{S_2}(⊗^r V, sign) for the permutation representation of S_2.
    GradedSeries sign_series(2);
    for (int d = 0; d <= 2; ++d)
        sign_series.set_component(d, oracles::perm_hom_char(2, d, true));
    CHECK(hom_series_char(sign_series, PolyFunctor::identity(), 2) == oracles::perm_hom_char(2, 2, true));

    CHECK(hom_dim(fn("s[2,1]"), invariant_series(GLnAdjoint{3}, 3)) == 1);
    CHECK(hom_dim(fn("h2"), sl2) == 0);
    CHECK(hom_dim(fn("e2"), sl2) == 1);
    CHECK(hom_dim(SymFn(Basis::s), sl2) == 0);

    GradedSeries odd(2);
    odd.set_component(2, fn("1/2*s[2]"));
    test::WarningCapture warnings;
    CHECK(hilbert_dim(CustomFamily{odd}, PolyFunctor::identity(), 2) == Rational(1, 2));
    CHECK(warnings.messages.size() == 1);
}

TEST_CASE("describe")
{
    CHECK(describe(SLnDefining{2}) == "SL(2) defining");
    CHECK(describe(Sp2nDefining{2}) == "Sp(4) defining");
    CHECK(describe(GLnAdjoint{3, false}) == "GL(3) adjoint");
}
