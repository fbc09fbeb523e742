#include "hitprob/phi.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hitprob/textio.hpp"

namespace hitprob {

namespace {

void validate_pair(const PairIndex& p, int n)
{
    if (p.i < 1 || p.i > n)
        throw std::invalid_argument("pair index i out of range");
    int prev = p.i;
    for (int v : p.I) {
        if (v <= prev || v > n)
            throw std::invalid_argument("pair index I must increase strictly within range");
        prev = v;
    }
    if (p.r() >= n)
        throw std::invalid_argument("pair index I too long");
}

Monomial mono_pow(const Monomial& m, std::uint64_t e)
{
    Monomial out(m.vars());
    for (int j = 1; j <= m.vars(); ++j) {
        std::uint64_t v = m.exp(j) * e;
        if (v > 0xffffffffull)
            throw std::overflow_error("exponent overflow");
        out.set_exp(j, static_cast<std::uint32_t>(v));
    }
    return out;
}

Polynomial poly_frobenius(const Polynomial& f, int s)
{
    std::vector<Monomial> terms;
    terms.reserve(f.term_count());
    for (const Monomial& m : f.terms())
        terms.push_back(mono_pow(m, std::uint64_t(1) << s));
    return Polynomial(f.vars(), std::move(terms));
}

void sort_dedupe(std::vector<Monomial>& v)
{
    std::sort(v.begin(), v.end(), total_less);
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::string PairIndex::to_string() const
{
    std::ostringstream os;
    os << '(' << i << ";";
    for (std::size_t k = 0; k < I.size(); ++k)
        os << (k ? "," : "") << I[k];
    os << ')';
    return os.str();
}

std::vector<PairIndex> enumerate_pairs(int n)
{
    if (n < 1)
        throw std::invalid_argument("n must be positive");
    std::vector<PairIndex> out;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> cur;
        auto rec = [&](auto&& self, int from) -> void {
            out.push_back(PairIndex{i, cur});
            for (int j = from; j <= n; ++j) {
                cur.push_back(j);
                self(self, j + 1);
                cur.pop_back();
            }
        };
        rec(rec, i + 1);
    }
    return out;
}

PairIndex pair_union(const PairIndex& p, int j)
{
    if (j <= p.i)
        throw std::invalid_argument("cannot insert an index at or below i");
    PairIndex q = p;
    auto it = std::lower_bound(q.I.begin(), q.I.end(), j);
    if (it == q.I.end() || *it != j)
        q.I.insert(it, j);
    return q;
}

LinearSubstitution f_substitution(int n, int i)
{
    if (i < 1 || i > n)
        throw std::out_of_range("f_i index out of range");
    LinearSubstitution s(n - 1, n);
    for (int j = 1; j < n; ++j)
        s.set_image(j, {j < i ? j : j + 1});
    return s;
}

LinearSubstitution p_substitution(int n, const PairIndex& p)
{
    validate_pair(p, n);
    LinearSubstitution s(n, n - 1);
    for (int j = 1; j <= n; ++j) {
        if (j < p.i) {
            s.set_image(j, {j});
        } else if (j == p.i) {
            std::vector<int> img;
            for (int v : p.I)
                img.push_back(v - 1);
            s.set_image(j, img);
        } else {
            s.set_image(j, {j - 1});
        }
    }
    return s;
}

Monomial f_shift(const Monomial& x, int i)
{
    int n = x.vars() + 1;
    if (n > kMaxVars)
        throw std::invalid_argument("variable count out of range");
    if (i < 1 || i > n)
        throw std::out_of_range("f_i index out of range");
    Monomial out(n);
    for (int j = 1; j < n; ++j)
        out.set_exp(j < i ? j : j + 1, x.exp(j));
    return out;
}

std::optional<int> u_compatible(const Monomial& x, const PairIndex& p)
{
    int n = x.vars() + 1;
    validate_pair(p, n);
    int r = p.r();
    if (r == 0)
        return 1;  // convention for (i; empty)
    std::uint64_t full = (std::uint64_t(1) << r) - 1;

    std::optional<int> found;
    for (int u = 1; u <= r; ++u) {
        bool ok = true;
        for (int t = 1; ok && t < u; ++t)
            ok = x.exp(p.I[t - 1] - 1) == full;
        if (ok)
            ok = x.exp(p.I[u - 1] - 1) > full;
        for (int t = 1; ok && t <= u; ++t)
            ok = (x.exp(p.I[u - 1] - 1) >> (r - t)) & 1u;
        for (int t = u + 1; ok && t <= r; ++t)
            ok = (x.exp(p.I[t - 1] - 1) >> (r - t)) & 1u;
        if (ok) {
            if (found)
                throw std::logic_error("monomial is u-compatible for two values of u");
            found = u;
        }
    }
    return found;
}

std::optional<Monomial> phi_apply(const PairIndex& p, const Monomial& x)
{
    int n = x.vars() + 1;
    validate_pair(p, n);
    int r = p.r();
    if (r == 0)
        return f_shift(x, p.i);
    auto u = u_compatible(x, p);
    if (!u)
        return std::nullopt;

    Monomial numerator = f_shift(x, p.i);
    numerator.set_exp(p.i, numerator.exp(p.i) + ((std::uint32_t(1) << r) - 1));

    Monomial divisor(n);
    divisor.set_exp(p.I[*u - 1], (std::uint32_t(1) << r) - (std::uint32_t(1) << (r - *u)));
    for (int t = *u + 1; t <= r; ++t)
        divisor.set_exp(p.I[t - 1], std::uint32_t(1) << (r - t));

    return divisor.divide_into(numerator);  // throws on inexact division
}

PhiImage phi_set(const std::vector<Monomial>& B, int n)
{
    PhiImage img;
    if (B.empty())
        return img;
    for (const Monomial& b : B)
        if (b.vars() != n - 1)
            throw std::invalid_argument("phi_set input must live in P_{n-1}");

    for (int i = 1; i <= n; ++i)
        for (const Monomial& b : B)
            img.zero_part.push_back(f_shift(b, i));
    sort_dedupe(img.zero_part);

    for (const PairIndex& p : enumerate_pairs(n)) {
        if (p.r() == 0)
            continue;
        for (const Monomial& b : B) {
            auto y = phi_apply(p, b);
            if (y && y->all_positive())
                img.plus_part.push_back(*y);
        }
    }
    sort_dedupe(img.plus_part);

    img.all = img.zero_part;
    img.all.insert(img.all.end(), img.plus_part.begin(), img.plus_part.end());
    sort_dedupe(img.all);
    return img;
}

ConjectureReport check_conjecture(Solver& solver, int n, const WeightVector& omega)
{
    ConjectureReport rep;
    rep.n = n;
    rep.omega = omega;

    bool source_valid = true;
    for (std::size_t i = 1; i <= omega.length(); ++i)
        if (omega.entry(i) > static_cast<std::uint32_t>(n - 1))
            source_valid = false;

    std::vector<Monomial> source;
    if (source_valid)
        source = solver.weight_quotient_basis(n - 1, omega).monomials;
    rep.source_size = source.size();

    PhiImage img = phi_set(source, n);
    rep.image_size = img.all.size();

    AdmissibleBasis target = solver.weight_quotient_basis(n, omega);
    rep.target_size = target.size();

    for (const Monomial& m : img.all)
        if (target.position_of(m) < 0)
            rep.violations.push_back(m);
    rep.holds = rep.violations.empty();
    return rep;
}

// ---------------------------------------------------------------------------
// Identity verifier
// ---------------------------------------------------------------------------

namespace {

int get_int(const IdentityParams& params, const std::string& key)
{
    auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("missing identity parameter '" + key + "'");
    return std::stoi(it->second);
}

int get_int_or(const IdentityParams& params, const std::string& key, int dflt)
{
    auto it = params.find(key);
    return it == params.end() ? dflt : std::stoi(it->second);
}

std::vector<int> get_int_list(const IdentityParams& params, const std::string& key)
{
    auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("missing identity parameter '" + key + "'");
    std::vector<int> out;
    std::istringstream is(it->second);
    std::string item;
    while (std::getline(is, item, ','))
        if (!item.empty())
            out.push_back(std::stoi(item));
    return out;
}

Monomial big_x(int nv)  // x_1 ... x_nv
{
    return x_omit(std::initializer_list<int>{}, nv);
}

Monomial x_var_pow(int n, int j, std::uint64_t e)
{
    Monomial m(n);
    m.set_exp(j, static_cast<std::uint32_t>(e));
    return m;
}

PairIndex tail_pair(int n, int t)  // (t; I_t) with I_t = (t+1, ..., n)
{
    PairIndex p{t, {}};
    for (int v = t + 1; v <= n; ++v)
        p.I.push_back(v);
    return p;
}

Monomial phi_on_x_power(const PairIndex& p, int n, std::uint64_t e)
{
    auto y = phi_apply(p, mono_pow(big_x(n - 1), e));
    if (!y)
        throw std::logic_error("phi vanished on a power of x_1...x_{n-1}; parameters out of range");
    return *y;
}

// X_u^{2^d - 1} x_u^{2^d}
Monomial spike_tail(int n, int u, int d)
{
    Monomial m = mono_pow(x_omit({u}, n), (std::uint64_t(1) << d) - 1);
    m.set_exp(u, m.exp(u) + (std::uint32_t(1) << d));
    return m;
}

bool check_hq0(Solver& solver, int n, const std::vector<int>& js)
{
    int b = static_cast<int>(js.size());
    Monomial lhs(n);
    for (int t = 0; t < b; ++t)
        for (int v = 1; v <= n; ++v)
            if (v != js[t])
                lhs.set_exp(v, lhs.exp(v) + (std::uint32_t(1) << t));
    int i = *std::min_element(js.begin(), js.end());
    PairIndex p{i, {}};
    for (int v : js)
        if (v != i)
            p.I.push_back(v);
    std::sort(p.I.begin(), p.I.end());
    p.I.erase(std::unique(p.I.begin(), p.I.end()), p.I.end());
    Monomial rhs = phi_on_x_power(p, n, (std::uint64_t(1) << b) - 1);
    return solver.relation_check(lhs, rhs, b - 1, weight_vector(lhs));
}

bool check_bdad(Solver& solver, int n, int d, int a, int b, int i, int j)
{
    if (i == j || a < 1 || b < 1 || a + b != (1 << d) - 1)
        throw std::invalid_argument("bdad parameters out of range");
    Monomial lhs = mono_pow(x_omit({i}, n), a) * mono_pow(x_omit({j}, n), b);
    Monomial rhs = mono_pow(x_omit({i}, n), (std::uint64_t(1) << d) - 2) * x_omit({j}, n);
    return solver.relation_check(lhs, rhs, 2, weight_vector(lhs));
}

bool check_bdbss2(Solver& solver, int n, int i, const std::vector<int>& I, int d, int h, int u)
{
    PairIndex p{i, I};
    int r = p.r();
    if (!(r >= 1 && r < h && h <= d && i < u && u <= n))
        throw std::invalid_argument("bdbss2 parameters out of range");
    Monomial lhs = phi_on_x_power(p, n, (std::uint64_t(1) << h) - 1) *
                   mono_pow(x_omit({u}, n), (std::uint64_t(1) << d) - (std::uint64_t(1) << h));
    // At h = d with u outside I the right side can vanish; compare honestly.
    auto rhs = phi_apply(pair_union(p, u), mono_pow(big_x(n - 1), (std::uint64_t(1) << d) - 1));
    Polynomial rhs_poly = rhs ? Polynomial(*rhs) : Polynomial(n);
    return solver.relation_check(lhs, rhs_poly, r + 2, weight_vector(lhs));
}

bool check_bdbss(Solver& solver, int n, int l)
{
    if (l < 1 || l > n)
        throw std::invalid_argument("bdbss parameters out of range");
    Monomial lhs = spike_tail(n, l, l);
    std::vector<Monomial> rhs_terms;
    if (l >= 2)  // N_0 is empty
        for (int u = l; u <= n; ++u)
            for (const PairIndex& p : enumerate_pairs(l - 1)) {
                Monomial g = phi_on_x_power(pair_union(p, u), n, (std::uint64_t(1) << l) - 1);
                rhs_terms.push_back(g * x_var_pow(n, u, std::uint64_t(1) << l));
            }
    for (int u = l + 1; u <= n; ++u)
        rhs_terms.push_back(spike_tail(n, u, l));
    Polynomial rhs(n, std::move(rhs_terms));
    return solver.relation_check(lhs, rhs, l, weight_vector(lhs));
}

bool check_hq3(Solver& solver, int n, int d)
{
    if (!(2 <= d && d <= n))
        throw std::invalid_argument("hq3 parameters out of range");
    std::vector<Monomial> lhs_terms, rhs_terms;
    for (int u = 1; u < d; ++u)
        lhs_terms.push_back(spike_tail(n, u, d));
    for (int u = d; u <= n; ++u)
        for (const PairIndex& p : enumerate_pairs(d - 1)) {
            Monomial g = phi_on_x_power(pair_union(p, u), n, (std::uint64_t(1) << d) - 1);
            rhs_terms.push_back(g * x_var_pow(n, u, std::uint64_t(1) << d));
        }
    Polynomial lhs(n, std::move(lhs_terms));
    Polynomial rhs(n, std::move(rhs_terms));
    return solver.relation_check(lhs, rhs, d, weight_vector(spike_tail(n, 1, d)));
}

bool check_bdbss0(Solver& solver, int n, int t, int d, int h, int u, const Monomial& x)
{
    if (!(0 < t && t < h && h <= n && 1 <= u && u < d - n + t))
        throw std::invalid_argument("bdbss0 parameters out of range");
    PairIndex p = tail_pair(n, t);
    Monomial xp = mono_pow(x, std::uint64_t(1) << d);
    Monomial lhs =
        phi_on_x_power(p, n, (std::uint64_t(1) << (d - u)) - 1) *
        mono_pow(x_omit({h}, n), (std::uint64_t(1) << d) - (std::uint64_t(1) << (d - u))) *
        xp;
    Monomial rhs = phi_on_x_power(p, n, (std::uint64_t(1) << d) - 1) * xp;
    return solver.relation_check(lhs, rhs, n - t + 1, weight_vector(lhs));
}

bool check_bdbss1(Solver& solver, int n, int d)
{
    if (!(d >= n && n >= 2))
        throw std::invalid_argument("bdbss1 parameters out of range");
    Monomial lhs = spike_tail(n, n, d);
    std::vector<Monomial> rhs_terms;
    for (const PairIndex& p : enumerate_pairs(n - 1)) {
        Monomial g = phi_on_x_power(pair_union(p, n), n, (std::uint64_t(1) << d) - 1);
        rhs_terms.push_back(g * x_var_pow(n, n, std::uint64_t(1) << d));
    }
    Polynomial rhs(n, std::move(rhs_terms));
    return solver.relation_check(lhs, rhs, n, weight_vector(lhs));
}

Polynomial make_y_t(int n, int t, int d)
{
    PairIndex p = tail_pair(n, t);
    Monomial g = phi_on_x_power(p, n, (std::uint64_t(1) << d) - 1);
    std::vector<Monomial> terms;
    for (int u = t; u <= n; ++u)
        terms.push_back(g * x_var_pow(n, u, std::uint64_t(1) << d));
    return Polynomial(n, std::move(terms));
}

bool check_hq4(Solver& solver, int n, int t, int d)
{
    if (!(1 < t && t <= n && d > n - t + 1))
        throw std::invalid_argument("hq4 parameters out of range");
    Polynomial yt = make_y_t(n, t, d);
    WeightVector omega = weight_vector(spike_tail(n, 1, d));

    // Allowed right-hand generators: phi_{(j;J)}(X^{2^d-1}) x_j^{2^d} with
    // j < t and J a proper subset of I_{t-1} = (t, ..., n).
    std::vector<int> full;
    for (int v = t; v <= n; ++v)
        full.push_back(v);
    std::vector<Polynomial> allowed;
    for (int j = 1; j < t; ++j) {
        std::size_t subsets = std::size_t(1) << full.size();
        for (std::size_t mask = 0; mask + 1 < subsets; ++mask) {  // proper subsets
            PairIndex p{j, {}};
            for (std::size_t k = 0; k < full.size(); ++k)
                if ((mask >> k) & 1u)
                    p.I.push_back(full[k]);
            auto g = phi_apply(p, mono_pow(big_x(n - 1), (std::uint64_t(1) << d) - 1));
            if (!g)
                continue;
            allowed.push_back(Polynomial(*g * x_var_pow(n, j, std::uint64_t(1) << d)));
        }
    }
    return solver.span_member(yt, n - t + 1, omega, allowed);
}

bool check_bd5(Solver& solver, int n, int d)
{
    if (d < n)
        throw std::invalid_argument("bd5 parameters out of range");
    Polynomial y1 = make_y_t(n, 1, d);
    WeightVector omega = weight_vector(spike_tail(n, 1, d));
    return solver.relation_check(y1, Polynomial(n), n, omega);
}

Monomial random_monomial(std::mt19937& rng, int n, std::uint32_t max_exp_exclusive)
{
    Monomial m(n);
    std::uniform_int_distribution<std::uint32_t> dist(0, max_exp_exclusive - 1);
    for (int j = 1; j <= n; ++j)
        m.set_exp(j, dist(rng));
    return m;
}

Monomial random_monomial_of_degree(std::mt19937& rng, int n, std::uint64_t d)
{
    Monomial m(n);
    std::uniform_int_distribution<int> var(1, n);
    for (std::uint64_t k = 0; k < d; ++k) {
        int j = var(rng);
        m.set_exp(j, m.exp(j) + 1);
    }
    return m;
}

// f = x + (terms of A_t^+ P_n) + (terms of weight below w(x)).
Polynomial perturb(std::mt19937& rng, Solver& solver, const Monomial& x, int t)
{
    (void)solver;
    Polynomial f{x};
    std::uint64_t d = x.degree();
    int jmax = (1 << t) - 1;
    std::uniform_int_distribution<int> jdist(1, std::max(1, jmax));
    for (int rep = 0; rep < 2 && jmax >= 1; ++rep) {
        int j = jdist(rng);
        if (static_cast<std::uint64_t>(j) > d)
            continue;
        Monomial h = random_monomial_of_degree(rng, x.vars(), d - j);
        f = f + sq(j, Polynomial(h));
    }
    WeightVector wx = weight_vector(x);
    for (int rep = 0; rep < 20; ++rep) {
        Monomial c = random_monomial_of_degree(rng, x.vars(), d);
        if (weight_vector(c) < wx) {
            f.toggle(c);
            if (rep >= 10)
                break;
        }
    }
    return f;
}

bool check_mdcb4(Solver& solver, int part, int n, int s, int tr, unsigned seed)
{
    std::mt19937 rng(seed * 2654435761u + n * 97u + part);
    // y of degree 1 or 2, at most two variables involved
    Monomial y(n);
    std::uniform_int_distribution<int> var(1, n);
    y.set_exp(var(rng), 1);
    y.set_exp(var(rng), 1);

    if (part == 1) {
        // w_i(x) <= 1 for i > s; x ~_t f with t <= s implies x y^{2^s} ~_t f y^{2^s}.
        int t = tr;
        Monomial x = random_monomial(rng, n, std::uint32_t(1) << s);
        if (rng() & 1u) {
            int v = var(rng);
            x.set_exp(v, x.exp(v) | (std::uint32_t(1) << s));
        }
        Polynomial f = perturb(rng, solver, x, t);
        Monomial lhs = x * mono_pow(y, std::uint64_t(1) << s);
        Polynomial rhs = multiply(f, Polynomial(mono_pow(y, std::uint64_t(1) << s)));
        return solver.relation_check(Polynomial(lhs), rhs, t, weight_vector(lhs));
    }
    // part 2: w_i(x) = 0 for i > s; x ~_s f, y ~_r g imply x y^{2^s} ~_{s+r} f g^{2^s}.
    int r = tr;
    Monomial x = random_monomial(rng, n, std::uint32_t(1) << s);
    Polynomial f = perturb(rng, solver, x, s);
    Polynomial g = perturb(rng, solver, y, r);
    Monomial lhs = x * mono_pow(y, std::uint64_t(1) << s);
    Polynomial rhs = multiply(f, poly_frobenius(g, s));
    return solver.relation_check(Polynomial(lhs), rhs, s + r, weight_vector(lhs));
}

std::string join_ints(const std::vector<int>& v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    return os.str();
}

// Degree caps for the verification grids.
int max_d_for(int n, int weight)  // largest d with (n-1)(2^d - 1) + weight*2^d <= 40
{
    int best = 0;
    for (int d = 1; d < 8; ++d) {
        std::int64_t deg = std::int64_t(n - 1) * ((1 << d) - 1) + std::int64_t(weight) * (1 << d);
        if (deg <= 40)
            best = d;
    }
    return best;
}

}  // namespace

const std::vector<std::string>& identity_names()
{
    static const std::vector<std::string> names = {"mdcb4", "hq0",    "bdad",   "bdbss2", "bdbss",
                                                   "hq3",   "bdbss0", "bdbss1", "hq4",    "bd5"};
    return names;
}

bool verify_identity(Solver& solver, const std::string& name, const IdentityParams& params)
{
    int n = get_int(params, "n");
    if (name == "hq0")
        return check_hq0(solver, n, get_int_list(params, "js"));
    if (name == "bdad")
        return check_bdad(solver, n, get_int(params, "d"), get_int(params, "a"),
                          get_int(params, "b"), get_int_or(params, "i", 1),
                          get_int_or(params, "j", 2));
    if (name == "bdbss2")
        return check_bdbss2(solver, n, get_int(params, "i"), get_int_list(params, "I"),
                            get_int(params, "d"), get_int(params, "h"), get_int(params, "u"));
    if (name == "bdbss")
        return check_bdbss(solver, n, get_int(params, "l"));
    if (name == "hq3")
        return check_hq3(solver, n, get_int(params, "d"));
    if (name == "bdbss0") {
        auto it = params.find("x");
        Monomial x = it == params.end() ? Monomial(n) : textio::parse_monomial(it->second, n);
        return check_bdbss0(solver, n, get_int(params, "t"), get_int(params, "d"),
                            get_int(params, "h"), get_int(params, "u"), x);
    }
    if (name == "bdbss1")
        return check_bdbss1(solver, n, get_int(params, "d"));
    if (name == "hq4")
        return check_hq4(solver, n, get_int(params, "t"), get_int(params, "d"));
    if (name == "bd5")
        return check_bd5(solver, n, get_int(params, "d"));
    if (name == "mdcb4")
        return check_mdcb4(solver, get_int(params, "part"), n, get_int(params, "s"),
                           get_int(params, "tr"), static_cast<unsigned>(get_int(params, "seed")));
    throw std::invalid_argument("unknown identity '" + name + "'");
}

std::vector<IdentityParams> identity_grid(const std::string& name)
{
    std::vector<IdentityParams> grid;
    auto add = [&grid](std::initializer_list<std::pair<const std::string, std::string>> kv) {
        grid.push_back(IdentityParams(kv));
    };

    if (name == "hq0") {
        for (int n = 2; n <= 4; ++n)
            for (int b = 1; b <= 3; ++b) {
                std::vector<int> js(static_cast<std::size_t>(b), 1);
                while (true) {
                    add({{"n", std::to_string(n)}, {"js", join_ints(js)}});
                    int k = b - 1;
                    while (k >= 0 && js[k] == n)
                        js[k--] = 1;
                    if (k < 0)
                        break;
                    ++js[k];
                }
            }
    } else if (name == "bdad") {
        for (int n = 2; n <= 4; ++n)
            for (int d = 2; d <= max_d_for(n, 0); ++d)
                for (int i = 1; i <= n; ++i)
                    for (int j = 1; j <= n; ++j) {
                        if (i == j)
                            continue;
                        for (int a = 1; a + 1 < (1 << d); ++a)
                            add({{"n", std::to_string(n)},
                                 {"d", std::to_string(d)},
                                 {"a", std::to_string(a)},
                                 {"b", std::to_string((1 << d) - 1 - a)},
                                 {"i", std::to_string(i)},
                                 {"j", std::to_string(j)}});
                    }
    } else if (name == "bdbss2") {
        // The h = d endpoint fails (x_1 x_2^6 x_3^7 vs x_1^3 x_2^5 x_3^6 in
        // three variables are inequivalent classes); the grid covers the
        // valid range r < h < d.
        for (int n = 2; n <= 4; ++n)
            for (const PairIndex& p : enumerate_pairs(n)) {
                if (p.r() < 1)
                    continue;
                for (int d = p.r() + 2; d <= max_d_for(n, 0); ++d)
                    for (int h = p.r() + 1; h < d; ++h)
                        for (int u = p.i + 1; u <= n; ++u)
                            add({{"n", std::to_string(n)},
                                 {"i", std::to_string(p.i)},
                                 {"I", join_ints(p.I)},
                                 {"d", std::to_string(d)},
                                 {"h", std::to_string(h)},
                                 {"u", std::to_string(u)}});
            }
    } else if (name == "bdbss") {
        for (int n = 2; n <= 4; ++n)
            for (int l = 1; l <= n && l <= max_d_for(n, 1); ++l)
                add({{"n", std::to_string(n)}, {"l", std::to_string(l)}});
    } else if (name == "hq3") {
        for (int n = 2; n <= 4; ++n)
            for (int d = 2; d <= n && d <= max_d_for(n, 1); ++d)
                add({{"n", std::to_string(n)}, {"d", std::to_string(d)}});
    } else if (name == "bdbss0") {
        for (int n = 2; n <= 4; ++n) {
            int xcap = n == 4 ? 1 : (n == 3 ? 2 : 3);
            for (int t = 1; t < n; ++t)
                for (int h = t + 1; h <= n; ++h)
                    for (int d = 2; d <= 5; ++d)
                        for (int u = 1; u < d - n + t; ++u)
                            for (int dx = 0; dx <= xcap; ++dx) {
                                std::int64_t deg = std::int64_t(n - 1) * ((1 << d) - 1) +
                                                   std::int64_t(dx) * (1 << d);
                                if (deg > 40)
                                    continue;
                                DegreeBasis xs(n, static_cast<std::uint64_t>(dx));
                                for (const Monomial& x : xs.monomials())
                                    add({{"n", std::to_string(n)},
                                         {"t", std::to_string(t)},
                                         {"d", std::to_string(d)},
                                         {"h", std::to_string(h)},
                                         {"u", std::to_string(u)},
                                         {"x", textio::format_monomial(x)}});
                            }
        }
    } else if (name == "bdbss1") {
        for (int n = 2; n <= 4; ++n)
            for (int d = n; d <= max_d_for(n, 1); ++d)
                add({{"n", std::to_string(n)}, {"d", std::to_string(d)}});
    } else if (name == "hq4") {
        for (int n = 2; n <= 4; ++n)
            for (int t = 2; t <= n; ++t)
                for (int d = n - t + 2; d <= max_d_for(n, 1); ++d)
                    add({{"n", std::to_string(n)},
                         {"t", std::to_string(t)},
                         {"d", std::to_string(d)}});
    } else if (name == "bd5") {
        for (int n = 2; n <= 4; ++n)
            for (int d = n; d <= max_d_for(n, 1); ++d)
                add({{"n", std::to_string(n)}, {"d", std::to_string(d)}});
    } else if (name == "mdcb4") {
        for (int n = 2; n <= 4; ++n)
            for (int part = 1; part <= 2; ++part)
                for (int s = 1; s <= 2; ++s)
                    for (int tr = 1; tr <= (part == 1 ? s : 2); ++tr)
                        for (int seed = 1; seed <= 2; ++seed)
                            add({{"n", std::to_string(n)},
                                 {"part", std::to_string(part)},
                                 {"s", std::to_string(s)},
                                 {"tr", std::to_string(tr)},
                                 {"seed", std::to_string(seed)}});
    } else {
        throw std::invalid_argument("unknown identity '" + name + "'");
    }
    return grid;
}

}  // namespace hitprob
