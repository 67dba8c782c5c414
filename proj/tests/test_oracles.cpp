#include "symf/errors.hpp"
#include "symf/oracles.hpp"

#include <doctest.h>

using namespace symf;
using namespace symf::oracles;

TEST_CASE("Laurent polynomials")
{
    auto chi = LaurentPoly::sl2_character(2);
    CHECK(chi.coefficient(2) == 1);
    CHECK(chi.coefficient(0) == 1);
    CHECK(chi.coefficient(-2) == 1);
    CHECK(chi.coefficient(1) == 0);
    auto sq = chi * chi;
    CHECK(sq.constant_term() == 3);
    CHECK(LaurentPoly::sl2_character(1, 2).coefficient(2) == 1);
    CHECK((chi + LaurentPoly::monomial(0, -1)).constant_term() == 0);
}

TEST_CASE("classical counts")
{
    const long cat[] = {1, 1, 2, 5, 14, 42, 132};
    for (int m = 0; m <= 6; ++m)
        CHECK(catalan(m) == cat[m]);
    const long dfact[] = {1, 1, 3, 15, 105, 945};
    for (int q = 0; q <= 5; ++q)
        CHECK(matchings(q) == dfact[q]);
    CHECK(syt({3, 3}) == 5);
    CHECK(syt({3, 2, 1}) == 16);
    CHECK(syt({}) == 1);
    CHECK(restricted_bell(5, 2) == 16);
    CHECK(restricted_bell(4, 4) == 15);
    CHECK(restricted_bell(0, 3) == 1);
    CHECK(kostka({2, 1}, {1, 1, 1}) == 2);
    CHECK(kostka({4, 2}, {2, 2, 1, 1}) == 4);
    CHECK(kostka({2, 2}, {3, 1}) == 0);
}

TEST_CASE("independent deal and graph enumerations")
{
    CHECK(deals(2, 2) == 2);
    CHECK(deals(2, 3) == 5);
    CHECK(deals(3, 3) == 10);
    CHECK(deals(2, 4) == 17);
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 4; ++n)
            CHECK(deals(m, n) == deals_by_matrices(m, n));
    CHECK(regular_graphs(3, 2) == 3);
    CHECK(regular_graphs(4, 3) == 8);
    CHECK(regular_graphs(5, 4) == 56);
    CHECK_THROWS_AS(deals(5, 3), ResourceError);
    CHECK_THROWS_AS(regular_graphs(6, 2), ResourceError);
}

TEST_CASE("SU(2) oracle against hook lengths and Cayley-Sylvester")
{
    for (int m = 0; m <= 5; ++m)
        CHECK(dimension(su2_inv_char(1, 2 * m)) == syt(Partition::rectangle(m, 2)));
    const int quartic[] = {1, 0, 1, 1, 1, 1, 2};
    for (int r = 0; r <= 6; ++r)
        CHECK(cayley_sylvester(4, r) == quartic[r]);
    for (int k = 1; k <= 4; ++k)
        for (int r = 0; k * r <= 16; ++r)
            CHECK(cayley_sylvester(k, r) == su2_symmetric_invariants(k, r));
    CHECK_THROWS_AS(su2_inv_char(7, 6), ResourceError);
}

TEST_CASE("permutation averaging gives genuine characters")
{
    for (int n = 1; n <= 4; ++n)
        for (int r = 0; r <= 6; ++r) {
            CHECK(is_schur_positive_integral(perm_inv_char(n, r)));
            CHECK(is_schur_positive_integral(perm_hom_char(n, r, true)));
        }
    CHECK(perm_inv_char(2, 2).to_string() == "p[2] + p[1,1]");
    CHECK_THROWS_AS(perm_inv_char(6, 2), ResourceError);
}
