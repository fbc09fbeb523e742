#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hitprob/polyalg.hpp"
#include "hitprob/weights.hpp"
#include "oracles.hpp"

using namespace hitprob;
using hitprob::testing::random_monomial;
using hitprob::testing::random_polynomial;

namespace {

Polynomial P(const Monomial& m)
{
    return Polynomial(m);
}

}  // namespace

TEST_CASE("Sq^0 is the identity")
{
    std::mt19937 rng(7);
    for (int it = 0; it < 20; ++it) {
        Polynomial f = random_polynomial(rng, 3, it % 6, 4);
        CHECK(sq(0, f) == f);
    }
}

TEST_CASE("Sq^1 on x1 x2")
{
    Polynomial f = P(Monomial(2, {1, 1}));
    Polynomial expected(2, {Monomial(2, {2, 1}), Monomial(2, {1, 2})});
    CHECK(sq(1, f) == expected);
}

TEST_CASE("Sq^2 on x1^3 (frozen from the total-square expansion of (x+x^2)^3)")
{
    CHECK(sq(2, P(Monomial(1, {3}))) == P(Monomial(1, {5})));
}

TEST_CASE("single-power law agrees with the Cartan-splitting oracle")
{
    for (std::uint64_t a = 0; a <= 32; ++a)
        for (std::uint64_t k = 0; k <= 32; ++k) {
            Polynomial got = sq(k, P(Monomial(1, {static_cast<std::uint32_t>(a)})));
            int coeff = hitprob::testing::sq_single_power_oracle(a, k);
            if (coeff)
                CHECK(got == P(Monomial(1, {static_cast<std::uint32_t>(a + k)})));
            else
                CHECK(got.is_zero());
        }
}

TEST_CASE("Cartan formula on random products")
{
    std::mt19937 rng(11);
    for (int it = 0; it < 300; ++it) {
        int n = 2 + static_cast<int>(rng() % 3);
        Polynomial f = random_polynomial(rng, n, 1 + rng() % 6, 3);
        Polynomial g = random_polynomial(rng, n, 1 + rng() % 6, 3);
        std::uint64_t k = rng() % 9;
        Polynomial lhs = sq(k, multiply(f, g));
        Polynomial rhs(n);
        for (std::uint64_t i = 0; i <= k; ++i)
            rhs = rhs + multiply(sq(i, f), sq(k - i, g));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("instability: top square is the squaring map, above it zero")
{
    std::mt19937 rng(13);
    for (int it = 0; it < 60; ++it) {
        int n = 2 + static_cast<int>(rng() % 3);
        std::uint64_t d = 1 + rng() % 6;
        Polynomial f = random_polynomial(rng, n, d, 3);
        CHECK(sq(d, f) == multiply(f, f));
        CHECK(sq(d + 1 + rng() % 3, f).is_zero());
    }
}

TEST_CASE("multiplication basics")
{
    Polynomial one = P(Monomial(2));
    Polynomial f(2, {Monomial(2, {1, 2}), Monomial(2, {3, 0})});
    CHECK(multiply(one, f) == f);

    Polynomial sum(2, {Monomial(2, {1, 0}), Monomial(2, {0, 1})});
    CHECK(multiply(sum, sum) == Polynomial(2, {Monomial(2, {2, 0}), Monomial(2, {0, 2})}));

    Polynomial m = P(Monomial(2, {1, 1}));
    CHECK(multiply(m, m) == P(Monomial(2, {2, 2})));

    CHECK_THROWS_AS(multiply(Polynomial(2), Polynomial(3)), std::invalid_argument);
}

TEST_CASE("duplicate terms cancel on construction")
{
    Polynomial f(2, {Monomial(2, {1, 1}), Monomial(2, {1, 1})});
    CHECK(f.is_zero());
}

TEST_CASE("rho_n sends x_1 to x_1 + x_2")
{
    LinearSubstitution rho5 = rho_substitution(5, 5);
    Polynomial img = substitute(rho5, P(Monomial::variable(5, 1)));
    CHECK(img == Polynomial(5, {Monomial::variable(5, 1), Monomial::variable(5, 2)}));
    for (int j = 2; j <= 5; ++j)
        CHECK(substitute(rho5, P(Monomial::variable(5, j))) == P(Monomial::variable(5, j)));
}

TEST_CASE("substitution with an empty image kills the variable")
{
    LinearSubstitution p(3, 2);
    p.set_image(1, {});
    p.set_image(2, {1});
    p.set_image(3, {2});
    CHECK(substitute(p, P(Monomial::variable(3, 1))).is_zero());
    CHECK(substitute(p, P(Monomial(3, {0, 2, 1}))) == P(Monomial(2, {2, 1})));
}

TEST_CASE("substitute distributes over multiply and is additive")
{
    std::mt19937 rng(17);
    LinearSubstitution s(3, 3);
    s.set_image(1, {1, 2});
    s.set_image(2, {2, 3});
    s.set_image(3, {3});
    for (int it = 0; it < 40; ++it) {
        Polynomial f = random_polynomial(rng, 3, 1 + rng() % 4, 3);
        Polynomial g = random_polynomial(rng, 3, 1 + rng() % 4, 3);
        CHECK(substitute(s, multiply(f, g)) == multiply(substitute(s, f), substitute(s, g)));
        Polynomial h = random_polynomial(rng, 3, f.is_zero() ? 1 : f.degree(), 3);
        CHECK(substitute(s, f + h) == substitute(s, f) + substitute(s, h));
    }
}

TEST_CASE("the Steenrod action commutes with the variable maps")
{
    std::mt19937 rng(19);
    for (int n = 2; n <= 4; ++n)
        for (int j = 1; j <= n; ++j) {
            LinearSubstitution rho = rho_substitution(n, j);
            for (int it = 0; it < 12; ++it) {
                Polynomial f = random_polynomial(rng, n, 1 + rng() % 5, 3);
                std::uint64_t k = rng() % 6;
                CHECK(substitute(rho, sq(k, f)) == sq(k, substitute(rho, f)));
            }
        }
}

TEST_CASE("X_J products")
{
    CHECK(x_omit({}, 5) == Monomial(5, {1, 1, 1, 1, 1}));
    CHECK(x_omit({1, 2, 3}, 3) == Monomial(3));
    CHECK(x_omit({2}, 3) == Monomial(3, {1, 0, 1}));
    CHECK_THROWS_AS(x_omit({4}, 3), std::out_of_range);
}

TEST_CASE("binomial parity matches the Pascal triangle")
{
    std::vector<std::vector<int>> pascal{{1}};
    for (std::uint64_t a = 1; a <= 24; ++a) {
        std::vector<int> row(a + 1, 1);
        for (std::uint64_t k = 1; k < a; ++k)
            row[k] = pascal.back()[k - 1] ^ pascal.back()[k];
        pascal.push_back(row);
    }
    for (std::uint64_t a = 0; a <= 24; ++a)
        for (std::uint64_t k = 0; k <= a; ++k)
            CHECK(binom_odd(a, k) == static_cast<bool>(pascal[a][k]));
}
