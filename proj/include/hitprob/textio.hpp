#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hitprob/polyalg.hpp"
#include "hitprob/weights.hpp"

namespace hitprob::textio {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t position);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Monomial grammar: factors `x<i>` or `x<i>^<e>`, index/exponent optionally
// braced, factors juxtaposed or joined by '*', optional '_' before the index.
// "1" is the constant. Polynomials join terms with '+'; "0" is zero.
Monomial parse_monomial(const std::string& text, int n);
Polynomial parse_polynomial(const std::string& text, int n);

std::string format_monomial(const Monomial& m);    // x_1^{15}x_2^{7}x_3^{3}
std::string format_exponents(const Monomial& m);   // "15 7 3 0 0"
std::string format_polynomial(const Polynomial& f);

// Basis cache file: `# n=<n> d=<d> [omega=<w>] count=<k> order=omega-sigma`
// then one monomial per line as space-separated exponents.
struct BasisFile {
    int n = 0;
    std::uint64_t d = 0;
    std::optional<WeightVector> omega;
    std::vector<Monomial> monomials;
};

void save_basis_file(const std::string& path, int n, std::uint64_t d,
                     const std::optional<WeightVector>& omega,
                     const std::vector<Monomial>& monomials);
std::optional<BasisFile> load_basis_file(const std::string& path);
std::string cache_path(const std::string& dir, int n, std::uint64_t d,
                       const std::optional<WeightVector>& omega);

// Fixture file: `# n=<n> d=<d> [omega=<w>] part=<zero|plus|all> count=<k>`
// then one monomial per line in the text grammar.
struct Fixture {
    int n = 0;
    std::uint64_t d = 0;
    std::optional<WeightVector> omega;
    std::string part = "all";
    std::vector<Monomial> monomials;
};

Fixture load_fixture(const std::string& path);

struct FixtureDiff {
    std::vector<Monomial> missing;  // in the fixture, not computed
    std::vector<Monomial> extra;    // computed, not in the fixture
    bool equal() const { return missing.empty() && extra.empty(); }
};

FixtureDiff verify_fixture(const Fixture& fixture, const std::vector<Monomial>& computed);

}  // namespace hitprob::textio
