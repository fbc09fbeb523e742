#include "hitprob/hitsolver.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "hitprob/config.hpp"
#include "hitprob/textio.hpp"

namespace hitprob {

namespace {

constexpr std::uint64_t kMaxDegree = 63;  // engine limit; keys pack one byte per exponent

std::uint64_t pack_exps(const Monomial& m)
{
    std::uint64_t key = 0;
    for (int j = 1; j <= m.vars(); ++j)
        key |= std::uint64_t(m.exp(j) & 0xffu) << (8 * (j - 1));
    return key;
}

// Weight vector as a nibble-packed big-endian key; lex compare = integer compare.
std::uint64_t pack_weight(const Monomial& m)
{
    std::uint64_t key = 0;
    std::uint32_t all = 0;
    for (int j = 1; j <= m.vars(); ++j)
        all |= m.exp(j);
    for (int bit = 0; (all >> bit) != 0; ++bit) {
        std::uint64_t w = 0;
        for (int j = 1; j <= m.vars(); ++j)
            w += (m.exp(j) >> bit) & 1u;
        key |= w << (4 * (15 - bit));
    }
    return key;
}

// Exponent tuple as a big-endian key (x_1 most significant).
std::uint64_t pack_sigma(const Monomial& m)
{
    std::uint64_t key = 0;
    for (int j = 1; j <= m.vars(); ++j)
        key |= std::uint64_t(m.exp(j) & 0xffu) << (8 * (8 - j));
    return key;
}

void enumerate_exponents(int n, std::uint64_t d, std::vector<Monomial>& out)
{
    std::vector<std::uint32_t> exps(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int j, std::uint64_t rem) -> void {
        if (j == n) {
            exps[static_cast<std::size_t>(n - 1)] = static_cast<std::uint32_t>(rem);
            out.emplace_back(n, std::span<const std::uint32_t>(exps));
            return;
        }
        for (std::uint64_t e = 0; e <= rem; ++e) {
            exps[static_cast<std::size_t>(j - 1)] = static_cast<std::uint32_t>(e);
            self(self, j + 1, rem - e);
        }
    };
    rec(rec, 1, d);
}

}  // namespace

DegreeBasis::DegreeBasis(int n, std::uint64_t d) : n_(n), d_(d)
{
    if (n < 1 || n > kMaxVars)
        throw std::invalid_argument("variable count out of range");
    if (d > kMaxDegree)
        throw std::invalid_argument("degree beyond engine limit");
    enumerate_exponents(n, d, monomials_);

    std::vector<std::pair<std::pair<std::uint64_t, std::uint64_t>, std::uint32_t>> keys;
    keys.reserve(monomials_.size());
    for (std::size_t i = 0; i < monomials_.size(); ++i)
        keys.push_back({{pack_weight(monomials_[i]), pack_sigma(monomials_[i])},
                        static_cast<std::uint32_t>(i)});
    std::sort(keys.begin(), keys.end());

    std::vector<Monomial> sorted;
    sorted.reserve(monomials_.size());
    for (auto& [k, i] : keys)
        sorted.push_back(monomials_[i]);
    monomials_ = std::move(sorted);

    lookup_.reserve(monomials_.size() * 2);
    for (std::size_t i = 0; i < monomials_.size(); ++i)
        lookup_.emplace(pack_exps(monomials_[i]), static_cast<std::uint32_t>(i));
}

std::int64_t DegreeBasis::index_of(const Monomial& m) const
{
    if (m.vars() != n_ || m.degree() != d_)
        return -1;
    auto it = lookup_.find(pack_exps(m));
    return it == lookup_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::pair<std::size_t, std::size_t> DegreeBasis::weight_block(const WeightVector& w) const
{
    auto weight_less = [](const Monomial& m, const WeightVector& target) {
        return weight_vector(m) < target;
    };
    auto lo = std::lower_bound(monomials_.begin(), monomials_.end(), w, weight_less);
    auto hi = std::upper_bound(monomials_.begin(), monomials_.end(), w,
                               [](const WeightVector& target, const Monomial& m) {
                                   return target < weight_vector(m);
                               });
    return {static_cast<std::size_t>(lo - monomials_.begin()),
            static_cast<std::size_t>(hi - monomials_.begin())};
}

std::size_t AdmissibleBasis::zero_count() const
{
    return monomials.size() - plus_count();
}

std::size_t AdmissibleBasis::plus_count() const
{
    std::size_t c = 0;
    for (std::uint8_t f : plus_flag)
        c += f;
    return c;
}

std::vector<Monomial> AdmissibleBasis::zero_part() const
{
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < monomials.size(); ++i)
        if (!plus_flag[i])
            out.push_back(monomials[i]);
    return out;
}

std::vector<Monomial> AdmissibleBasis::plus_part() const
{
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < monomials.size(); ++i)
        if (plus_flag[i])
            out.push_back(monomials[i]);
    return out;
}

std::int64_t AdmissibleBasis::position_of(const Monomial& m) const
{
    auto it = std::lower_bound(monomials.begin(), monomials.end(), m, admissible_less);
    if (it != monomials.end() && *it == m)
        return it - monomials.begin();
    return -1;
}

std::optional<Monomial> kameko_psi(const Monomial& x)
{
    Monomial y(x.vars());
    for (int j = 1; j <= x.vars(); ++j) {
        std::uint32_t e = x.exp(j);
        if (!(e & 1u))
            return std::nullopt;
        y.set_exp(j, e >> 1);
    }
    return y;
}

Polynomial kameko_psi(const Polynomial& f)
{
    std::vector<Monomial> out;
    for (const Monomial& m : f.terms())
        if (auto y = kameko_psi(m))
            out.push_back(*y);
    return Polynomial(f.vars(), std::move(out));
}

Monomial kameko_section(const Monomial& y)
{
    Monomial x(y.vars());
    for (int j = 1; j <= y.vars(); ++j)
        x.set_exp(j, 2 * y.exp(j) + 1);
    return x;
}

struct Solver::Impl {
    SolverOptions opts;

    std::map<std::pair<int, std::uint64_t>, std::unique_ptr<DegreeBasis>> bases;
    std::map<std::pair<int, std::uint64_t>, std::unique_ptr<std::vector<std::vector<std::uint32_t>>>>
        row_cache;
    std::map<std::pair<int, std::uint64_t>, std::unique_ptr<HitSpace>> hits;
    std::map<std::tuple<int, std::uint64_t, std::string>, std::unique_ptr<HitSpace>> weighted_hits;
    std::map<std::tuple<int, std::uint64_t, int, std::string>, std::unique_ptr<HitSpace>> ats;
    std::map<std::pair<int, std::uint64_t>, AdmissibleBasis> adm;
    std::map<std::tuple<int, std::string>, AdmissibleBasis> adm_weighted;

    const DegreeBasis& basis(int n, std::uint64_t d)
    {
        auto key = std::make_pair(n, d);
        auto it = bases.find(key);
        if (it == bases.end())
            it = bases.emplace(key, std::make_unique<DegreeBasis>(n, d)).first;
        return *it->second;
    }

    // Generator rows Sq^{2^i}(m), 2^i <= d, as rank lists over the full basis.
    const std::vector<std::vector<std::uint32_t>>& generator_rows(int n, std::uint64_t d)
    {
        auto key = std::make_pair(n, d);
        auto it = row_cache.find(key);
        if (it != row_cache.end())
            return *it->second;

        const DegreeBasis& target = basis(n, d);
        auto rows = std::make_unique<std::vector<std::vector<std::uint32_t>>>();
        for (std::uint64_t k = 1; k <= d; k <<= 1) {
            const DegreeBasis& src = basis(n, d - k);
            std::size_t base = rows->size();
            rows->resize(base + src.count());
            parallel_for_chunks(src.count(), [&](std::size_t lo, std::size_t hi) {
                for (std::size_t t = lo; t < hi; ++t) {
                    auto terms = sq_monomial(k, src.at(t));
                    auto& row = (*rows)[base + t];
                    row.reserve(terms.size());
                    for (const Monomial& mm : terms) {
                        std::int64_t idx = target.index_of(mm);
                        assert(idx >= 0);
                        row.push_back(target.rank_of_index(static_cast<std::size_t>(idx)));
                    }
                }
            });
        }
        auto& ref = *rows;
        row_cache.emplace(key, std::move(rows));
        return ref;
    }

    // Rows spanning A_s^+ P_n in degree d: every Sq^j with 1 <= j < 2^s.
    std::vector<std::vector<std::uint32_t>> small_sq_rows(int n, std::uint64_t d, int s)
    {
        const DegreeBasis& target = basis(n, d);
        std::vector<std::vector<std::uint32_t>> rows;
        if (s <= 0)
            return rows;
        std::uint64_t jmax = (std::uint64_t(1) << s) - 1;
        jmax = std::min(jmax, d);
        for (std::uint64_t j = 1; j <= jmax; ++j) {
            const DegreeBasis& src = basis(n, d - j);
            std::size_t base = rows.size();
            rows.resize(base + src.count());
            parallel_for_chunks(src.count(), [&](std::size_t lo, std::size_t hi) {
                for (std::size_t t = lo; t < hi; ++t) {
                    auto terms = sq_monomial(j, src.at(t));
                    auto& row = rows[base + t];
                    row.reserve(terms.size());
                    for (const Monomial& mm : terms) {
                        std::int64_t idx = target.index_of(mm);
                        assert(idx >= 0);
                        row.push_back(target.rank_of_index(static_cast<std::size_t>(idx)));
                    }
                }
            });
        }
        return rows;
    }

    std::unique_ptr<HitSpace> build_space(int n, std::uint64_t d,
                                          const std::optional<WeightVector>& omega,
                                          const std::vector<std::vector<std::uint32_t>>& rows)
    {
        const DegreeBasis& b = basis(n, d);
        auto hs = std::make_unique<HitSpace>();
        hs->n = n;
        hs->d = d;
        hs->omega = omega;
        hs->basis = &b;
        hs->block_lo = 0;
        hs->block_hi = b.count();
        hs->cols = b.count();
        if (omega) {
            auto [lo, hi] = b.weight_block(*omega);
            hs->block_lo = lo;
            hs->block_hi = hi;
            hs->cols = b.count() - lo;  // drop every column of weight < omega
        }
        if (hs->cols == 0) {
            // Everything is modded out; keep a placeholder echelon. cols stays
            // 0 so every reduction filters every term away.
            gf2::Eliminator elim(1);
            std::uint32_t zero = 0;
            elim.add_row(std::span<const std::uint32_t>(&zero, 1));
            hs->ech = std::move(elim).finish();
            return hs;
        }
        gf2::Eliminator elim(hs->cols);
        std::vector<std::uint32_t> filtered;
        for (const auto& row : rows) {
            filtered.clear();
            for (std::uint32_t r : row)
                if (r < hs->cols)
                    filtered.push_back(r);
            elim.add_row(filtered);
        }
        hs->ech = std::move(elim).finish();
        return hs;
    }

    const HitSpace& ats_space(int n, std::uint64_t d, int s,
                              const std::optional<WeightVector>& omega)
    {
        auto key = std::make_tuple(n, d, s, omega ? omega->to_string() : std::string());
        auto it = ats.find(key);
        if (it == ats.end()) {
            auto rows = small_sq_rows(n, d, s);
            auto hs = build_space(n, d, omega, rows);
            it = ats.emplace(key, std::move(hs)).first;
        }
        return *it->second;
    }
};

Solver::Solver(SolverOptions opts) : impl_(std::make_unique<Impl>())
{
    impl_->opts = std::move(opts);
}

Solver::~Solver() = default;

const DegreeBasis& Solver::degree_basis(int n, std::uint64_t d)
{
    return impl_->basis(n, d);
}

const std::vector<std::vector<std::uint32_t>>& Solver::hit_rows(int n, std::uint64_t d)
{
    return impl_->generator_rows(n, d);
}

const HitSpace& Solver::hit_space(int n, std::uint64_t d)
{
    auto key = std::make_pair(n, d);
    auto it = impl_->hits.find(key);
    if (it == impl_->hits.end()) {
        auto hs = impl_->build_space(n, d, std::nullopt, impl_->generator_rows(n, d));
        it = impl_->hits.emplace(key, std::move(hs)).first;
    }
    return *it->second;
}

const HitSpace& Solver::hit_space(int n, const WeightVector& omega)
{
    std::uint64_t d = weight_degree(omega);
    auto key = std::make_tuple(n, d, omega.to_string());
    auto it = impl_->weighted_hits.find(key);
    if (it == impl_->weighted_hits.end()) {
        auto hs = impl_->build_space(n, d, omega, impl_->generator_rows(n, d));
        it = impl_->weighted_hits.emplace(key, std::move(hs)).first;
    }
    return *it->second;
}

std::vector<std::uint32_t> Solver::reduce_to_classes(const Polynomial& f, const HitSpace& hs)
{
    if (f.vars() != hs.n)
        throw std::invalid_argument("variable count mismatch");
    const DegreeBasis& b = *hs.basis;
    std::vector<std::uint32_t> ranks;
    ranks.reserve(f.term_count());
    for (const Monomial& m : f.terms()) {
        std::int64_t idx = b.index_of(m);
        if (idx < 0)
            throw std::invalid_argument("term of the wrong degree");
        std::uint32_t r = b.rank_of_index(static_cast<std::size_t>(idx));
        if (r < hs.cols)
            ranks.push_back(r);  // columns at rank >= cols lie in P^-(omega)
    }
    auto rem = hs.ech.reduce(ranks);
    std::vector<std::uint32_t> idxs;
    idxs.reserve(rem.size());
    for (std::uint32_t r : rem)
        idxs.push_back(static_cast<std::uint32_t>(b.index_of_rank(r)));
    std::sort(idxs.begin(), idxs.end());
    return idxs;
}

bool Solver::is_hit(const Polynomial& f)
{
    if (!f.is_homogeneous())
        throw std::invalid_argument("is_hit requires a homogeneous polynomial");
    if (f.is_zero())
        return true;
    const HitSpace& hs = hit_space(f.vars(), f.degree());
    return reduce_to_classes(f, hs).empty();
}

namespace {

AdmissibleBasis extract_basis(const HitSpace& hs)
{
    AdmissibleBasis out;
    out.n = hs.n;
    out.d = hs.d;
    out.omega = hs.omega;
    if (hs.cols == 0)
        return out;
    const DegreeBasis& b = *hs.basis;
    std::vector<std::uint32_t> idxs;
    for (std::uint32_t r : hs.ech.non_pivot_columns()) {
        std::size_t idx = b.index_of_rank(r);
        if (!hs.omega || (idx >= hs.block_lo && idx < hs.block_hi))
            idxs.push_back(static_cast<std::uint32_t>(idx));
    }
    std::sort(idxs.begin(), idxs.end());
    for (std::uint32_t idx : idxs) {
        out.monomials.push_back(b.at(idx));
        out.plus_flag.push_back(b.at(idx).all_positive() ? 1 : 0);
    }
    return out;
}

}  // namespace

AdmissibleBasis Solver::admissible_basis(int n, std::uint64_t d)
{
    auto key = std::make_pair(n, d);
    auto it = impl_->adm.find(key);
    if (it != impl_->adm.end())
        return it->second;

    if (!impl_->opts.cache_dir.empty()) {
        if (auto file = textio::load_basis_file(
                textio::cache_path(impl_->opts.cache_dir, n, d, std::nullopt))) {
            AdmissibleBasis out;
            out.n = n;
            out.d = d;
            out.monomials = std::move(file->monomials);
            for (const Monomial& m : out.monomials)
                out.plus_flag.push_back(m.all_positive() ? 1 : 0);
            impl_->adm.emplace(key, out);
            return out;
        }
    }

    AdmissibleBasis out = extract_basis(hit_space(n, d));
    if (!impl_->opts.cache_dir.empty())
        textio::save_basis_file(textio::cache_path(impl_->opts.cache_dir, n, d, std::nullopt), n,
                                d, std::nullopt, out.monomials);
    impl_->adm.emplace(key, out);
    return out;
}

AdmissibleBasis Solver::weight_quotient_basis(int n, const WeightVector& omega)
{
    for (std::size_t i = 1; i <= omega.length(); ++i)
        if (omega.entry(i) > static_cast<std::uint32_t>(n))
            throw std::invalid_argument("weight entry exceeds the variable count");
    auto key = std::make_tuple(n, omega.to_string());
    auto it = impl_->adm_weighted.find(key);
    if (it != impl_->adm_weighted.end())
        return it->second;

    std::uint64_t d = weight_degree(omega);
    if (!impl_->opts.cache_dir.empty()) {
        if (auto file =
                textio::load_basis_file(textio::cache_path(impl_->opts.cache_dir, n, d, omega))) {
            AdmissibleBasis out;
            out.n = n;
            out.d = d;
            out.omega = omega;
            out.monomials = std::move(file->monomials);
            for (const Monomial& m : out.monomials)
                out.plus_flag.push_back(m.all_positive() ? 1 : 0);
            impl_->adm_weighted.emplace(key, out);
            return out;
        }
    }

    AdmissibleBasis out = extract_basis(hit_space(n, omega));
    if (!impl_->opts.cache_dir.empty())
        textio::save_basis_file(textio::cache_path(impl_->opts.cache_dir, n, d, omega), n, d,
                                omega, out.monomials);
    impl_->adm_weighted.emplace(key, out);
    return out;
}

std::uint64_t Solver::qp_dimension(int n, std::uint64_t d)
{
    return admissible_basis(n, d).size();
}

std::uint64_t Solver::qp_dimension(int n, const WeightVector& omega)
{
    return weight_quotient_basis(n, omega).size();
}

KamekoMap Solver::kameko_matrix(int n, std::uint64_t m)
{
    if (m == 0)
        throw std::invalid_argument("kameko_matrix requires m >= 1");
    std::uint64_t big = 2 * m + static_cast<std::uint64_t>(n);
    if (mu(big) > n)
        throw std::domain_error("mu(2m+n) exceeds n (both sides vanish)");

    KamekoMap km;
    km.n = n;
    km.m = m;
    km.domain = admissible_basis(n, big);
    km.target = admissible_basis(n, m);
    const HitSpace& hsm = hit_space(n, m);

    km.matrix = gf2::BitMatrix(km.target.size(), km.domain.size());
    for (std::size_t j = 0; j < km.domain.size(); ++j) {
        auto y = kameko_psi(km.domain.monomials[j]);
        if (!y)
            continue;
        for (std::uint32_t idx : reduce_to_classes(Polynomial(*y), hsm)) {
            std::int64_t pos = km.target.position_of(hsm.basis->at(idx));
            assert(pos >= 0);
            km.matrix.set(static_cast<std::size_t>(pos), static_cast<std::uint32_t>(j));
        }
    }

    gf2::BitMatrix copy = km.matrix;
    km.rank = gf2::echelonize(std::move(copy)).rank();

    for (const gf2::BitVec& v : gf2::nullspace(km.matrix)) {
        std::vector<Monomial> terms;
        for (std::uint32_t j : v.set_bits())
            terms.push_back(km.domain.monomials[j]);
        km.kernel.emplace_back(n, std::move(terms));
    }
    return km;
}

bool Solver::relation_check(const Polynomial& f, const Polynomial& g, std::optional<int> s,
                            const std::optional<WeightVector>& omega)
{
    if (f.vars() != g.vars())
        throw std::invalid_argument("variable count mismatch");
    if (!f.is_homogeneous() || !g.is_homogeneous())
        throw std::invalid_argument("relation_check requires homogeneous polynomials");
    if (!f.is_zero() && !g.is_zero() && f.degree() != g.degree())
        throw std::invalid_argument("degree mismatch");
    Polynomial diff = f + g;
    if (diff.is_zero())
        return true;
    std::uint64_t d = diff.degree();
    if (omega && weight_degree(*omega) != d)
        throw std::invalid_argument("weight vector degree mismatch");

    const HitSpace& hs = !s ? (omega ? hit_space(f.vars(), *omega) : hit_space(f.vars(), d))
                            : impl_->ats_space(f.vars(), d, *s, omega);
    return reduce_to_classes(diff, hs).empty();
}

bool Solver::span_member(const Polynomial& f, std::optional<int> s,
                         const std::optional<WeightVector>& omega,
                         const std::vector<Polynomial>& extra)
{
    if (f.is_zero())
        return true;
    std::uint64_t d = f.degree();
    const DegreeBasis& b = impl_->basis(f.vars(), d);

    std::size_t cols = b.count();
    if (omega) {
        auto [lo, hi] = b.weight_block(*omega);
        (void)hi;
        cols = b.count() - lo;
    }
    if (cols == 0)
        return true;

    gf2::Eliminator elim(cols);
    auto add_poly = [&](const Polynomial& p) {
        std::vector<std::uint32_t> ranks;
        for (const Monomial& m : p.terms()) {
            std::int64_t idx = b.index_of(m);
            if (idx < 0)
                throw std::invalid_argument("term of the wrong degree");
            std::uint32_t r = b.rank_of_index(static_cast<std::size_t>(idx));
            if (r < cols)
                ranks.push_back(r);
        }
        elim.add_row(ranks);
    };
    for (const Polynomial& p : extra)
        add_poly(p);
    if (s && *s > 0)
        for (const auto& row : impl_->small_sq_rows(f.vars(), d, *s)) {
            std::vector<std::uint32_t> filtered;
            for (std::uint32_t r : row)
                if (r < cols)
                    filtered.push_back(r);
            elim.add_row(filtered);
        }
    else if (!s)
        for (const auto& row : impl_->generator_rows(f.vars(), d)) {
            std::vector<std::uint32_t> filtered;
            for (std::uint32_t r : row)
                if (r < cols)
                    filtered.push_back(r);
            elim.add_row(filtered);
        }
    gf2::Echelon ech = std::move(elim).finish();

    std::vector<std::uint32_t> ranks;
    for (const Monomial& m : f.terms()) {
        std::int64_t idx = b.index_of(m);
        if (idx < 0)
            throw std::invalid_argument("term of the wrong degree");
        std::uint32_t r = b.rank_of_index(static_cast<std::size_t>(idx));
        if (r < cols)
            ranks.push_back(r);
    }
    return ech.member(ranks);
}

bool Solver::is_strictly_inadmissible(const Monomial& x)
{
    std::uint64_t d = x.degree();
    const DegreeBasis& b = impl_->basis(x.vars(), d);
    std::int64_t idx = b.index_of(x);
    if (idx < 0)
        throw std::invalid_argument("monomial outside the degree basis");
    int s = static_cast<int>(weight_vector(x).length());

    gf2::Eliminator elim(b.count());
    // Unit rows for every monomial smaller than x.
    for (std::int64_t y = 0; y < idx; ++y) {
        std::uint32_t r = b.rank_of_index(static_cast<std::size_t>(y));
        elim.add_row(std::span<const std::uint32_t>(&r, 1));
    }
    for (const auto& row : impl_->small_sq_rows(x.vars(), d, s))
        elim.add_row(row);
    gf2::Echelon ech = std::move(elim).finish();
    std::uint32_t rx = b.rank_of_index(static_cast<std::size_t>(idx));
    return ech.member(std::span<const std::uint32_t>(&rx, 1));
}

}  // namespace hitprob
