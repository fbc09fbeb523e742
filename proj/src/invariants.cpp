#include "hitprob/invariants.hpp"

#include <stdexcept>

#include "hitprob/config.hpp"

namespace hitprob {

namespace {

const HitSpace& space_for(Solver& solver, const AdmissibleBasis& basis)
{
    return basis.omega ? solver.hit_space(basis.n, *basis.omega)
                       : solver.hit_space(basis.n, basis.d);
}

}  // namespace

gf2::BitMatrix induced_action(Solver& solver, const AdmissibleBasis& basis, int j)
{
    const std::size_t dim = basis.size();
    const HitSpace& hs = space_for(solver, basis);
    LinearSubstitution rho = rho_substitution(basis.n, j);

    // Row b of `by_source` holds the coordinates of rho_j(b); the returned
    // matrix is its transpose, so that columns are reductions.
    gf2::BitMatrix by_source(dim, dim);
    std::vector<std::string> errors(dim);
    parallel_for_chunks(dim, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t b = lo; b < hi; ++b) {
            Polynomial image = substitute(rho, Polynomial(basis.monomials[b]));
            for (std::uint32_t idx : solver.reduce_to_classes(image, hs)) {
                std::int64_t pos = basis.position_of(hs.basis->at(idx));
                if (pos < 0) {
                    errors[b] = "reduction left the admissible block";
                    return;
                }
                by_source.set(b, static_cast<std::uint32_t>(pos));
            }
        }
    });
    for (const std::string& e : errors)
        if (!e.empty())
            throw std::logic_error("induced_action: " + e);
    return gf2::transpose(by_source);
}

InducedAction induced_actions(Solver& solver, const AdmissibleBasis& basis)
{
    InducedAction act;
    act.basis = basis;
    for (int j = 1; j <= basis.n; ++j)
        act.generators.push_back(induced_action(solver, basis, j));
    return act;
}

std::vector<gf2::BitVec> fixed_vectors(const std::vector<gf2::BitMatrix>& generators,
                                       std::size_t dim)
{
    if (dim == 0)
        return {};
    if (generators.empty()) {
        // No conditions: everything is fixed.
        std::vector<gf2::BitVec> all;
        for (std::size_t i = 0; i < dim; ++i) {
            gf2::BitVec v(dim);
            v.set(i);
            all.push_back(std::move(v));
        }
        return all;
    }
    std::vector<gf2::BitMatrix> diffs;
    diffs.reserve(generators.size());
    for (const gf2::BitMatrix& m : generators) {
        if (m.rows() != dim || m.cols() != dim)
            throw std::invalid_argument("generator matrix dimension mismatch");
        gf2::BitMatrix d = m;
        for (std::size_t i = 0; i < dim; ++i)
            d.flip(i, static_cast<std::uint32_t>(i));
        diffs.push_back(std::move(d));
    }
    std::vector<const gf2::BitMatrix*> parts;
    for (const auto& d : diffs)
        parts.push_back(&d);
    return gf2::nullspace(gf2::stack(parts));
}

namespace {

std::vector<Polynomial> fixed_classes(Solver& solver, const AdmissibleBasis& basis, int j_max,
                                      BasisPart part)
{
    // Build the generator matrices on the full basis once.
    std::vector<gf2::BitMatrix> gens;
    for (int j = 1; j <= j_max; ++j)
        gens.push_back(induced_action(solver, basis, j));

    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool plus = basis.plus_flag[i];
        if (part == BasisPart::All || (part == BasisPart::Plus && plus) ||
            (part == BasisPart::Zero && !plus))
            keep.push_back(i);
    }

    std::vector<gf2::BitMatrix> restricted;
    if (part == BasisPart::All) {
        restricted = std::move(gens);
    } else {
        // The action must not mix the summands; verify while restricting.
        std::vector<std::int64_t> pos_of(basis.size(), -1);
        for (std::size_t k = 0; k < keep.size(); ++k)
            pos_of[keep[k]] = static_cast<std::int64_t>(k);
        for (const gf2::BitMatrix& m : gens) {
            gf2::BitMatrix r(keep.size(), keep.size());
            for (std::size_t col = 0; col < basis.size(); ++col) {
                bool in = pos_of[col] >= 0;
                for (std::size_t row = 0; row < basis.size(); ++row) {
                    if (!m.get(row, static_cast<std::uint32_t>(col)))
                        continue;
                    if (in != (pos_of[row] >= 0))
                        throw std::logic_error("action does not preserve the requested summand");
                    if (in)
                        r.set(static_cast<std::size_t>(pos_of[row]),
                              static_cast<std::uint32_t>(pos_of[col]));
                }
            }
            restricted.push_back(std::move(r));
        }
    }

    std::vector<Polynomial> out;
    for (const gf2::BitVec& v : fixed_vectors(restricted, keep.size())) {
        std::vector<Monomial> terms;
        for (std::uint32_t k : v.set_bits())
            terms.push_back(basis.monomials[keep[k]]);
        out.emplace_back(basis.n, std::move(terms));
    }
    return out;
}

}  // namespace

std::vector<Polynomial> sigma_fixed(Solver& solver, const AdmissibleBasis& basis, BasisPart part)
{
    return fixed_classes(solver, basis, basis.n - 1, part);
}

std::vector<Polynomial> gl_fixed(Solver& solver, const AdmissibleBasis& basis, BasisPart part)
{
    if (part == BasisPart::Zero)
        throw std::invalid_argument("the full GL action does not preserve the zero part");
    return fixed_classes(solver, basis, basis.n, part);
}

}  // namespace hitprob
