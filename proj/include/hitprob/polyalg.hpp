#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace hitprob {

inline constexpr int kMaxVars = 8;

// True iff the binomial coefficient C(a, k) is odd (Lucas: k is a submask of a).
inline bool binom_odd(std::uint64_t a, std::uint64_t k)
{
    return (a & k) == k;
}

// A monomial x_1^{e_1} ... x_n^{e_n} over F_2. Variable indices are 1-based
// throughout the public API, matching the classical notation.
class Monomial {
public:
    explicit Monomial(int n);  // the constant 1
    Monomial(int n, std::initializer_list<std::uint32_t> exps);
    Monomial(int n, std::span<const std::uint32_t> exps);

    static Monomial variable(int n, int j);  // x_j

    int vars() const { return n_; }
    std::uint64_t degree() const;
    std::uint32_t exp(int j) const;  // j in [1, n]
    void set_exp(int j, std::uint32_t e);

    bool is_constant() const;
    bool all_positive() const;  // no zero exponent

    bool divides(const Monomial& m) const;
    Monomial divide_into(const Monomial& numerator) const;  // numerator / *this

    friend bool operator==(const Monomial& a, const Monomial& b)
    {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

    const std::array<std::uint32_t, kMaxVars>& raw() const { return e_; }

private:
    int n_;
    std::array<std::uint32_t, kMaxVars> e_{};
};

Monomial operator*(const Monomial& a, const Monomial& b);

// Canonical container order: degree, then weight-vector lex, then exponent lex.
// On a fixed degree this coincides with the admissibility order.
bool total_less(const Monomial& a, const Monomial& b);

// A polynomial over F_2: a set of monomials, kept sorted under total_less.
// Inserting a duplicate cancels it.
class Polynomial {
public:
    explicit Polynomial(int n) : n_(n) {}
    Polynomial(const Monomial& m) : n_(m.vars()), terms_{m} {}
    Polynomial(int n, std::vector<Monomial> terms);  // normalises (sorts, cancels)

    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Monomial>& terms() const { return terms_; }

    bool is_homogeneous() const;
    std::uint64_t degree() const;  // of a homogeneous polynomial; throws otherwise

    void toggle(const Monomial& m);  // F_2 insert

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    int n_;
    std::vector<Monomial> terms_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);  // symmetric difference
Polynomial multiply(const Polynomial& a, const Polynomial& b);
Polynomial multiply(const Polynomial& a, const Monomial& m);

// The Steenrod square Sq^k, acting term-wise via the Cartan formula with
// Sq^i(x^a) = C(a, i) x^{a+i} mod 2.
Polynomial sq(std::uint64_t k, const Polynomial& f);
std::vector<Monomial> sq_monomial(std::uint64_t k, const Monomial& m);

// An algebra homomorphism determined by sending each source variable to a sum
// of distinct target variables (possibly the empty sum, i.e. zero).
class LinearSubstitution {
public:
    LinearSubstitution(int n_from, int n_to);

    int n_from() const { return n_from_; }
    int n_to() const { return n_to_; }

    // Image of x_j as a list of 1-based target variables.
    void set_image(int j, std::vector<int> target_vars);
    const std::vector<int>& image(int j) const;

private:
    int n_from_, n_to_;
    std::vector<std::vector<int>> images_;
};

Polynomial substitute(const LinearSubstitution& s, const Polynomial& f);
Polynomial substitute(const LinearSubstitution& s, const Monomial& m);

// The standard generators of GL_n: rho_j swaps x_j, x_{j+1} for j < n, and
// rho_n sends x_1 to x_1 + x_2. For n = 1 every generator is the identity.
LinearSubstitution rho_substitution(int n, int j);

// X_J = prod_{j not in J} x_j (J is a set of 1-based indices).
Monomial x_omit(std::span<const int> J, int n);
Monomial x_omit(std::initializer_list<int> J, int n);

}  // namespace hitprob
