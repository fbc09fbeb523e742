#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "hitprob/polyalg.hpp"

namespace hitprob {

// The weight vector of a monomial: entry i counts the variables whose
// exponent has bit i-1 set. Trailing zeros are trimmed; comparison is
// left-lexicographic with missing entries read as 0.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<std::uint32_t> entries);

    std::size_t length() const { return w_.size(); }
    std::uint32_t entry(std::size_t i) const;  // 1-based; 0 beyond length
    const std::vector<std::uint32_t>& entries() const { return w_; }

    std::string to_string() const;             // "3,3,2,1"; "" for the empty vector
    static WeightVector parse(const std::string& text);

    friend std::strong_ordering operator<=>(const WeightVector& a, const WeightVector& b);
    friend bool operator==(const WeightVector& a, const WeightVector& b) = default;

private:
    std::vector<std::uint32_t> w_;
};

WeightVector weight_vector(const Monomial& x);
std::uint64_t weight_degree(const WeightVector& w);  // sum 2^{i-1} w_i

enum class Cmp { LT, EQ, GT };

// Total order on the monomials of one degree: weight vector first, then the
// exponent tuple, both left-lexicographic.
Cmp compare(const Monomial& x, const Monomial& y);
bool admissible_less(const Monomial& x, const Monomial& y);

// mu(d): the least r with d = sum of r numbers of the form 2^s - 1, s > 0.
int mu(std::uint64_t d);

// The unique spike x_1^{2^{s_1}-1} ... x_r^{2^{s_r}-1} of degree d with
// s_1 > ... > s_{r-1} >= s_r > 0 and r = mu(d). Throws if mu(d) > n.
Monomial minimal_spike(std::uint64_t d, int n);

bool is_spike(const Monomial& x);  // every exponent of the form 2^s - 1

// All weight vectors w with weight_degree(w) = d and entries <= max_entry.
std::vector<WeightVector> weight_vectors_of_degree(std::uint64_t d, std::uint32_t max_entry);

}  // namespace hitprob
