#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hitprob/hitsolver.hpp"
#include "hitprob/polyalg.hpp"
#include "hitprob/weights.hpp"

namespace hitprob {

// A pair (i; I) with 1 <= i < i_1 < ... < i_r <= n, 0 <= r < n.
struct PairIndex {
    int i = 1;
    std::vector<int> I;

    int r() const { return static_cast<int>(I.size()); }
    std::string to_string() const;

    friend bool operator==(const PairIndex& a, const PairIndex& b) = default;
    friend auto operator<=>(const PairIndex& a, const PairIndex& b) = default;
};

// All pairs valid for n variables, ordered by i then by I lexicographically.
std::vector<PairIndex> enumerate_pairs(int n);

// (i; I u j): inserts j into I keeping it sorted; no-op when j is present.
PairIndex pair_union(const PairIndex& p, int j);

// The variable-inserting algebra map f_i : P_{n-1} -> P_n and the projection
// p_{(i;I)} : P_n -> P_{n-1} with x_i |-> sum_{s in I} x_{s-1}.
LinearSubstitution f_substitution(int n, int i);
LinearSubstitution p_substitution(int n, const PairIndex& p);
Monomial f_shift(const Monomial& x, int i);  // f_i on a monomial

// The unique u in [1, r] making x u-compatible with (i; I); 1 for I = empty.
std::optional<int> u_compatible(const Monomial& x, const PairIndex& p);

// phi_{(i;I)}(x) = x_i^{2^r - 1} f_i(x) / x_{(I,u)}, or nothing (zero).
std::optional<Monomial> phi_apply(const PairIndex& p, const Monomial& x);

struct PhiImage {
    std::vector<Monomial> zero_part;  // union of the f_i images
    std::vector<Monomial> plus_part;  // phi images with every exponent positive
    std::vector<Monomial> all;
};

PhiImage phi_set(const std::vector<Monomial>& B, int n);  // B lives in P_{n-1}

struct ConjectureReport {
    bool holds = false;
    int n = 0;
    WeightVector omega;
    std::size_t source_size = 0;  // |B_{n-1}(w)|
    std::size_t image_size = 0;   // |Phi(B_{n-1}(w))|
    std::size_t target_size = 0;  // |B_n(w)|
    std::vector<Monomial> violations;
};

// Does Phi(B_{n-1}(w)) land inside B_n(w)?
ConjectureReport check_conjecture(Solver& solver, int n, const WeightVector& omega);

// Numerical checker for the generator-construction identities. Each name
// selects one identity; params carry its integer arguments (and a monomial
// argument "x" where applicable) as strings.
using IdentityParams = std::map<std::string, std::string>;

const std::vector<std::string>& identity_names();
bool verify_identity(Solver& solver, const std::string& name, const IdentityParams& params);

// The full in-range parameter grid for one identity (n <= 4, degree <= 40).
std::vector<IdentityParams> identity_grid(const std::string& name);

}  // namespace hitprob
