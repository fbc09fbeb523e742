#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "hitprob/hitsolver.hpp"
#include "hitprob/textio.hpp"
#include "oracles.hpp"

using namespace hitprob;
using hitprob::testing::random_monomial;

namespace {

std::vector<std::vector<std::uint32_t>> exps_of(const std::vector<Monomial>& ms)
{
    std::vector<std::vector<std::uint32_t>> out;
    for (const Monomial& m : ms) {
        std::vector<std::uint32_t> e;
        for (int j = 1; j <= m.vars(); ++j)
            e.push_back(m.exp(j));
        out.push_back(e);
    }
    return out;
}

}  // namespace

TEST_CASE("degree basis counts and ordering")
{
    Solver solver;
    CHECK(solver.degree_basis(5, 10).count() == 1001);
    CHECK(solver.degree_basis(5, 25).count() == 23751);
    CHECK(solver.degree_basis(1, 9).count() == 1);
    CHECK(solver.degree_basis(1, 9).at(0) == Monomial(1, {9}));

    const DegreeBasis& b = solver.degree_basis(4, 7);
    for (std::size_t i = 1; i < b.count(); ++i)
        CHECK(admissible_less(b.at(i - 1), b.at(i)));
    for (std::size_t i = 0; i < b.count(); ++i)
        CHECK(b.index_of(b.at(i)) == static_cast<std::int64_t>(i));
}

TEST_CASE("hit space of two variables in degree three")
{
    Solver solver;
    CHECK(solver.hit_space(2, 3).rank() == 1);
    AdmissibleBasis adm = solver.admissible_basis(2, 3);
    std::vector<Monomial> expected{Monomial(2, {0, 3}), Monomial(2, {1, 2}), Monomial(2, {3, 0})};
    CHECK(adm.monomials == expected);
    CHECK(solver.admissible_basis(1, 3).monomials == std::vector<Monomial>{Monomial(1, {3})});
}

TEST_CASE("hit membership basics")
{
    Solver solver;
    CHECK(solver.is_hit(Polynomial(Monomial(2, {2, 0}))));  // Sq^1(x_1)
    CHECK_FALSE(solver.is_hit(Polynomial(Monomial(2, {3, 0}))));
    CHECK_FALSE(solver.is_hit(Polynomial(Monomial(5, {15, 7, 3, 0, 0}))));
    CHECK_THROWS_AS(
        solver.is_hit(Polynomial(2, {Monomial(2, {1, 0}), Monomial(2, {1, 1})})),
        std::invalid_argument);
}

TEST_CASE("everything of degree five in two variables is hit")
{
    // mu(5) = 3 > 2. Brute force over all 2^6 polynomials as a cross-check.
    Solver solver;
    CHECK(solver.qp_dimension(2, 5) == 0);
    const DegreeBasis& b = solver.degree_basis(2, 5);
    REQUIRE(b.count() == 6);
    for (unsigned mask = 0; mask < 64; ++mask) {
        std::vector<Monomial> terms;
        for (unsigned i = 0; i < 6; ++i)
            if ((mask >> i) & 1u)
                terms.push_back(b.at(i));
        CHECK(solver.is_hit(Polynomial(2, std::move(terms))));
    }
}

TEST_CASE("vanishing below the spike threshold")
{
    Solver solver;
    for (int n = 1; n <= 3; ++n)
        for (std::uint64_t d = 1; d <= 20; ++d)
            if (mu(d) > n)
                CHECK(solver.qp_dimension(n, d) == 0);
}

TEST_CASE("basis size, hit rank and the counting identity")
{
    Solver solver;
    for (int n = 1; n <= 4; ++n)
        for (std::uint64_t d = 1; d <= 10; ++d) {
            const HitSpace& hs = solver.hit_space(n, d);
            CHECK(solver.admissible_basis(n, d).size() + hs.rank() == hs.basis->count());
        }
}

TEST_CASE("leading-term basis equals the one-monomial-at-a-time definition")
{
    // x is inadmissible iff x lies in span{y < x} + hit. Incremental unit-row
    // elimination realises the definition directly.
    Solver solver;
    for (int n = 1; n <= 3; ++n)
        for (std::uint64_t d = 1; d <= 12; ++d) {
            const DegreeBasis& b = solver.degree_basis(n, d);
            std::vector<Monomial> by_definition;
            {
                gf2::Eliminator inc(b.count());
                for (const auto& row : solver.hit_rows(n, d))
                    inc.add_row(row);
                inc.flush();
                // process monomials in ascending order; rank grows iff the
                // monomial is NOT in the span of hit + smaller monomials.
                std::size_t rank_before = inc.current_rank();
                for (std::size_t i = 0; i < b.count(); ++i) {
                    std::uint32_t r = b.rank_of_index(i);
                    inc.add_row(std::span<const std::uint32_t>(&r, 1));
                    inc.flush();
                    if (inc.current_rank() > rank_before)
                        by_definition.push_back(b.at(i));
                    rank_before = inc.current_rank();
                }
            }
            CHECK(by_definition == solver.admissible_basis(n, d).monomials);
        }
}

TEST_CASE("spikes are admissible")
{
    Solver solver;
    for (int n = 1; n <= 3; ++n)
        for (std::uint64_t d = 1; d <= 12; ++d) {
            AdmissibleBasis adm = solver.admissible_basis(n, d);
            for (const Monomial& m : solver.degree_basis(n, d).monomials())
                if (is_spike(m))
                    CHECK(adm.position_of(m) >= 0);
        }
}

TEST_CASE("every small Sq^j image lies in the power-of-two span")
{
    // The hit space uses only Sq^{2^i} generators; all other Sq^j images must
    // already be inside.
    Solver solver;
    for (int n = 1; n <= 3; ++n)
        for (std::uint64_t d = 2; d <= 10; ++d)
            for (std::uint64_t j = 1; j < d; ++j)
                for (const Monomial& m : solver.degree_basis(n, d - j).monomials()) {
                    Polynomial img = sq(j, Polynomial(m));
                    if (!img.is_zero())
                        CHECK(solver.is_hit(img));
                }
}

TEST_CASE("weight filtration: quotient dimensions add up")
{
    Solver solver;
    for (int n = 1; n <= 4; ++n)
        for (std::uint64_t d = 1; d <= 10; ++d) {
            std::uint64_t total = 0;
            for (const WeightVector& w :
                 weight_vectors_of_degree(d, static_cast<std::uint32_t>(n)))
                total += solver.qp_dimension(n, w);
            CHECK(total == solver.qp_dimension(n, d));
        }
}

TEST_CASE("inadmissibility propagates through Frobenius factors")
{
    Solver solver;
    std::mt19937 rng(59);
    for (int n = 2; n <= 3; ++n)
        for (std::uint64_t d = 2; d <= 6; ++d) {
            AdmissibleBasis adm = solver.admissible_basis(n, d);
            for (const Monomial& w : solver.degree_basis(n, d).monomials()) {
                if (adm.position_of(w) >= 0)
                    continue;  // admissible; skip
                std::size_t r = weight_vector(w).length();
                for (int it = 0; it < 3; ++it) {
                    Monomial x = random_monomial(rng, n, rng() % 3);
                    bool fits = true;  // need w_i(x) = 0 for i > r
                    for (int j = 1; j <= n; ++j)
                        if (x.exp(j) >= (1u << r))
                            fits = false;
                    if (!fits)
                        continue;
                    Monomial prod(n);
                    for (int j = 1; j <= n; ++j)
                        prod.set_exp(j, x.exp(j) + (w.exp(j) << r));
                    AdmissibleBasis big = solver.admissible_basis(n, prod.degree());
                    CHECK(big.position_of(prod) < 0);
                }
            }
        }
}

TEST_CASE("halving map basics")
{
    CHECK(*kameko_psi(Monomial(5, {1, 1, 1, 1, 1})) == Monomial(5));
    CHECK(*kameko_psi(Monomial(5, {3, 1, 1, 1, 1})) == Monomial::variable(5, 1));
    CHECK_FALSE(kameko_psi(Monomial(5, {2, 1, 1, 1, 1})).has_value());

    std::mt19937 rng(61);
    for (int it = 0; it < 100; ++it) {
        Monomial y = random_monomial(rng, 4, rng() % 6);
        CHECK(*kameko_psi(kameko_section(y)) == y);
    }
}

TEST_CASE("halving map naturality")
{
    std::mt19937 rng(67);
    for (int it = 0; it < 80; ++it) {
        int n = 2 + static_cast<int>(rng() % 3);
        Polynomial f(random_monomial(rng, n, 1 + rng() % 8));
        std::uint64_t i = rng() % 4;
        CHECK(kameko_psi(sq(2 * i, f)) == sq(i, kameko_psi(f)));
        CHECK(kameko_psi(sq(2 * i + 1, f)).is_zero());
    }
}

TEST_CASE("halving map is an isomorphism when mu(2m+n) = n")
{
    Solver solver;
    {
        KamekoMap km = solver.kameko_matrix(2, 1);  // mu(4) = 2
        CHECK(km.surjective());
        CHECK(km.kernel_dimension() == 0);
        CHECK(km.domain.size() == km.target.size());
    }
    {
        KamekoMap km = solver.kameko_matrix(3, 1);  // mu(5) = 3
        CHECK(km.surjective());
        CHECK(km.kernel_dimension() == 0);
    }
    CHECK_THROWS_AS(solver.kameko_matrix(2, 5), std::domain_error);  // mu(12) = 4 > 2
}

TEST_CASE("kernel classes are killed by the halving map")
{
    Solver solver;
    KamekoMap km = solver.kameko_matrix(3, 2);  // (QP_3)_7 -> (QP_3)_2
    CHECK(km.rank == km.target.size());
    const HitSpace& target_space = solver.hit_space(3, 2);
    for (const Polynomial& f : km.kernel)
        CHECK(solver.reduce_to_classes(kameko_psi(f), target_space).empty());
}

TEST_CASE("relation checker")
{
    Solver solver;
    Polynomial f(Monomial(3, {2, 1, 3}));
    CHECK(solver.relation_check(f, f, 2, weight_vector(Monomial(3, {2, 1, 3}))));

    // X_1 X_2^2 and X_1^2 X_2 in three variables are related through Sq^1,
    // Sq^2, Sq^3 modulo lower weight.
    Monomial lhs(3, {2, 1, 3});
    Monomial rhs(3, {1, 2, 3});
    CHECK(solver.relation_check(Polynomial(lhs), Polynomial(rhs), 2, weight_vector(lhs)));

    // s = 0 leaves only the weight mask, so distinct monomials of the top
    // weight stay distinct.
    CHECK_FALSE(solver.relation_check(Polynomial(lhs), Polynomial(rhs), 0, weight_vector(lhs)));

    CHECK_THROWS_AS(solver.relation_check(Polynomial(Monomial(2, {1, 0})),
                                          Polynomial(Monomial(2, {0, 2})), 1, std::nullopt),
                    std::invalid_argument);
}

TEST_CASE("weight-restricted basis embeds at the spike weight")
{
    // (2,2,1) is the weight of the minimal spike of degree 10: every class of
    // B_5(2,2,1) is also a full admissible class.
    Solver solver;
    AdmissibleBasis restricted = solver.weight_quotient_basis(5, WeightVector({2, 2, 1}));
    AdmissibleBasis full = solver.admissible_basis(5, 10);
    CHECK(restricted.size() == 165);
    for (const Monomial& m : restricted.monomials)
        CHECK(full.position_of(m) >= 0);
}

TEST_CASE("strictly inadmissible is a sound inadmissibility filter")
{
    Solver solver;
    for (int n = 2; n <= 3; ++n)
        for (std::uint64_t d = 2; d <= 8; ++d) {
            AdmissibleBasis adm = solver.admissible_basis(n, d);
            for (const Monomial& m : solver.degree_basis(n, d).monomials())
                if (solver.is_strictly_inadmissible(m))
                    CHECK(adm.position_of(m) < 0);
        }
}

TEST_CASE("basis file cache round trip")
{
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "hitprob_cache_test";
    fs::remove_all(dir);
    fs::create_directories(dir);

    SolverOptions opts;
    opts.cache_dir = dir.string();
    std::vector<Monomial> first, second;
    {
        Solver solver(opts);
        first = solver.admissible_basis(4, 9).monomials;
    }
    std::string path = textio::cache_path(opts.cache_dir, 4, 9, std::nullopt);
    CHECK(fs::exists(path));
    std::string before, line;
    {
        std::ifstream in(path);
        std::ostringstream ss;
        ss << in.rdbuf();
        before = ss.str();
    }
    {
        Solver solver(opts);  // loads from the cache
        second = solver.admissible_basis(4, 9).monomials;
    }
    CHECK(exps_of(first) == exps_of(second));
    // re-serialisation is byte identical
    textio::save_basis_file(path, 4, 9, std::nullopt, second);
    std::string after;
    {
        std::ifstream in(path);
        std::ostringstream ss;
        ss << in.rdbuf();
        after = ss.str();
    }
    CHECK(before == after);
    fs::remove_all(dir);
}
