#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hitprob/gf2.hpp"
#include "hitprob/polyalg.hpp"
#include "hitprob/weights.hpp"

namespace hitprob {

// All monomials of one degree, sorted ascending in the admissibility order
// (weight vector lex, then exponent lex). Column ranks for the elimination
// engine run in the opposite direction: rank 0 is the largest monomial.
class DegreeBasis {
public:
    DegreeBasis(int n, std::uint64_t d);

    int n() const { return n_; }
    std::uint64_t d() const { return d_; }
    std::size_t count() const { return monomials_.size(); }

    const Monomial& at(std::size_t idx) const { return monomials_[idx]; }
    const std::vector<Monomial>& monomials() const { return monomials_; }

    std::int64_t index_of(const Monomial& m) const;  // -1 if absent
    std::uint32_t rank_of_index(std::size_t idx) const
    {
        return static_cast<std::uint32_t>(count() - 1 - idx);
    }
    std::size_t index_of_rank(std::uint32_t rank) const { return count() - 1 - rank; }

    // Ascending index range [lo, hi) of the monomials with weight exactly w.
    std::pair<std::size_t, std::size_t> weight_block(const WeightVector& w) const;

private:
    int n_;
    std::uint64_t d_;
    std::vector<Monomial> monomials_;
    std::unordered_map<std::uint64_t, std::uint32_t> lookup_;
};

// The reduced echelon form of (A^+ P_n)_d, pivot priority descending in the
// admissibility order; optionally with the span of P_n^-(w) modded out by
// truncating every column of weight below w.
struct HitSpace {
    int n = 0;
    std::uint64_t d = 0;
    std::optional<WeightVector> omega;
    const DegreeBasis* basis = nullptr;
    std::size_t cols = 0;      // ranks kept; cols < basis->count() iff omega is set
    std::size_t block_lo = 0;  // ascending index range of weight == omega
    std::size_t block_hi = 0;
    gf2::Echelon ech;

    std::size_t rank() const { return ech.rank(); }
};

// An admissible-monomial basis B_n(d) or B_n(w), ascending, partitioned into
// the zero part (some exponent zero) and the positive part.
struct AdmissibleBasis {
    int n = 0;
    std::uint64_t d = 0;
    std::optional<WeightVector> omega;
    std::vector<Monomial> monomials;
    std::vector<std::uint8_t> plus_flag;

    std::size_t size() const { return monomials.size(); }
    std::size_t zero_count() const;
    std::size_t plus_count() const;
    std::vector<Monomial> zero_part() const;
    std::vector<Monomial> plus_part() const;
    std::int64_t position_of(const Monomial& m) const;  // -1 if absent
};

// The map on admissible classes induced by x_1...x_n y^2 -> y, with its
// kernel. matrix is |target| x |domain| over the two admissible bases.
struct KamekoMap {
    int n = 0;
    std::uint64_t m = 0;
    AdmissibleBasis domain;  // B_n(2m+n)
    AdmissibleBasis target;  // B_n(m)
    gf2::BitMatrix matrix;
    std::size_t rank = 0;
    std::vector<Polynomial> kernel;  // classes, as sums of domain monomials

    bool surjective() const { return rank == target.size(); }
    std::size_t kernel_dimension() const { return kernel.size(); }
};

std::optional<Monomial> kameko_psi(const Monomial& x);  // y if x = x_1...x_n y^2
Polynomial kameko_psi(const Polynomial& f);
Monomial kameko_section(const Monomial& y);  // x_1...x_n y^2

struct SolverOptions {
    std::string cache_dir;  // empty: no file cache
};

// Computation context. Owns every degree basis and echelon form computed so
// far; repeated queries are free. Not safe for concurrent use from several
// threads (operations parallelise internally).
class Solver {
public:
    explicit Solver(SolverOptions opts = {});
    ~Solver();

    const DegreeBasis& degree_basis(int n, std::uint64_t d);

    // Row span sum_i Sq^{2^i}((P_n)_{d-2^i}) = (A^+ P_n)_d.
    const HitSpace& hit_space(int n, std::uint64_t d);
    // As above with P_n^-(w) adjoined (columns of weight < w truncated).
    const HitSpace& hit_space(int n, const WeightVector& omega);

    bool is_hit(const Polynomial& f);

    AdmissibleBasis admissible_basis(int n, std::uint64_t d);
    AdmissibleBasis weight_quotient_basis(int n, const WeightVector& omega);
    std::uint64_t qp_dimension(int n, std::uint64_t d);
    std::uint64_t qp_dimension(int n, const WeightVector& omega);

    KamekoMap kameko_matrix(int n, std::uint64_t m);

    // f - g in A_s^+ P_n + P_n^-(w). s = nullopt means all of A^+ (the
    // relations == and ==_w); finite s uses every Sq^j with 1 <= j < 2^s.
    bool relation_check(const Polynomial& f, const Polynomial& g, std::optional<int> s,
                        const std::optional<WeightVector>& omega);

    // Membership of f in span(extra) + A_s^+ P_n + P_n^-(w).
    bool span_member(const Polynomial& f, std::optional<int> s,
                     const std::optional<WeightVector>& omega,
                     const std::vector<Polynomial>& extra);

    // Adopted filter: x is congruent to a sum of smaller monomials modulo
    // A_s^+ P_n with s = max nonzero level of w(x).
    bool is_strictly_inadmissible(const Monomial& x);

    // Classes of f modulo the hit space (and P^-(w) if hs is weighted), as
    // ascending indices into hs.basis.
    std::vector<std::uint32_t> reduce_to_classes(const Polynomial& f, const HitSpace& hs);

    // Raw generator rows of hit_space(n, d) as rank lists (for oracles/tests).
    const std::vector<std::vector<std::uint32_t>>& hit_rows(int n, std::uint64_t d);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace hitprob
