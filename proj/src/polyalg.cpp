#include "hitprob/polyalg.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace hitprob {

namespace {

void check_var_count(int n)
{
    if (n < 1 || n > kMaxVars)
        throw std::invalid_argument("variable count out of range");
}

std::uint32_t checked_add(std::uint32_t a, std::uint32_t b)
{
    std::uint64_t s = std::uint64_t(a) + b;
    if (s > std::numeric_limits<std::uint32_t>::max())
        throw std::overflow_error("exponent overflow");
    return static_cast<std::uint32_t>(s);
}

}  // namespace

Monomial::Monomial(int n) : n_(n)
{
    check_var_count(n);
}

Monomial::Monomial(int n, std::span<const std::uint32_t> exps) : n_(n)
{
    check_var_count(n);
    if (static_cast<int>(exps.size()) != n)
        throw std::invalid_argument("exponent list size does not match variable count");
    std::copy(exps.begin(), exps.end(), e_.begin());
}

Monomial::Monomial(int n, std::initializer_list<std::uint32_t> exps)
    : Monomial(n, std::span<const std::uint32_t>(exps.begin(), exps.size()))
{
}

Monomial Monomial::variable(int n, int j)
{
    Monomial m(n);
    m.set_exp(j, 1);
    return m;
}

std::uint64_t Monomial::degree() const
{
    std::uint64_t d = 0;
    for (int i = 0; i < n_; ++i)
        d += e_[i];
    return d;
}

std::uint32_t Monomial::exp(int j) const
{
    if (j < 1 || j > n_)
        throw std::out_of_range("variable index out of range");
    return e_[j - 1];
}

void Monomial::set_exp(int j, std::uint32_t e)
{
    if (j < 1 || j > n_)
        throw std::out_of_range("variable index out of range");
    e_[j - 1] = e;
}

bool Monomial::is_constant() const
{
    for (int i = 0; i < n_; ++i)
        if (e_[i])
            return false;
    return true;
}

bool Monomial::all_positive() const
{
    for (int i = 0; i < n_; ++i)
        if (!e_[i])
            return false;
    return true;
}

bool Monomial::divides(const Monomial& m) const
{
    if (n_ != m.n_)
        throw std::invalid_argument("variable count mismatch");
    for (int i = 0; i < n_; ++i)
        if (e_[i] > m.e_[i])
            return false;
    return true;
}

Monomial Monomial::divide_into(const Monomial& numerator) const
{
    if (!divides(numerator))
        throw std::logic_error("inexact monomial division");
    Monomial q(n_);
    for (int i = 0; i < n_; ++i)
        q.e_[i] = numerator.e_[i] - e_[i];
    return q;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    if (a.vars() != b.vars())
        throw std::invalid_argument("variable count mismatch");
    Monomial p(a.vars());
    for (int j = 1; j <= a.vars(); ++j)
        p.set_exp(j, checked_add(a.exp(j), b.exp(j)));
    return p;
}

bool total_less(const Monomial& a, const Monomial& b)
{
    std::uint64_t da = a.degree(), db = b.degree();
    if (da != db)
        return da < db;
    // Weight-vector lex: entry i counts variables whose exponent has bit i-1.
    std::uint32_t any_a = 0, any_b = 0;
    for (int j = 1; j <= a.vars(); ++j)
        any_a |= a.exp(j);
    for (int j = 1; j <= b.vars(); ++j)
        any_b |= b.exp(j);
    std::uint32_t all = any_a | any_b;
    for (int bit = 0; (all >> bit) != 0 && bit < 32; ++bit) {
        int wa = 0, wb = 0;
        for (int j = 1; j <= a.vars(); ++j)
            wa += (a.exp(j) >> bit) & 1u;
        for (int j = 1; j <= b.vars(); ++j)
            wb += (b.exp(j) >> bit) & 1u;
        if (wa != wb)
            return wa < wb;
    }
    // Exponent lex, x_1 first.
    for (int j = 1; j <= std::min(a.vars(), b.vars()); ++j)
        if (a.exp(j) != b.exp(j))
            return a.exp(j) < b.exp(j);
    return a.vars() < b.vars();
}

Polynomial::Polynomial(int n, std::vector<Monomial> terms) : n_(n)
{
    std::sort(terms.begin(), terms.end(), total_less);
    for (std::size_t i = 0; i < terms.size();) {
        if (terms[i].vars() != n)
            throw std::invalid_argument("term variable count mismatch");
        std::size_t j = i + 1;
        while (j < terms.size() && terms[j] == terms[i])
            ++j;
        if ((j - i) % 2)
            terms_.push_back(terms[i]);
        i = j;
    }
}

bool Polynomial::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    std::uint64_t d = terms_.front().degree();
    for (const Monomial& m : terms_)
        if (m.degree() != d)
            return false;
    return true;
}

std::uint64_t Polynomial::degree() const
{
    if (!is_homogeneous())
        throw std::logic_error("degree of a non-homogeneous polynomial");
    return terms_.empty() ? 0 : terms_.front().degree();
}

void Polynomial::toggle(const Monomial& m)
{
    if (m.vars() != n_)
        throw std::invalid_argument("variable count mismatch");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, total_less);
    if (it != terms_.end() && *it == m)
        terms_.erase(it);
    else
        terms_.insert(it, m);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    if (a.vars() != b.vars())
        throw std::invalid_argument("variable count mismatch");
    Polynomial r(a.vars());
    std::vector<Monomial> out;
    std::set_symmetric_difference(a.terms().begin(), a.terms().end(), b.terms().begin(),
                                  b.terms().end(), std::back_inserter(out), total_less);
    return Polynomial(a.vars(), std::move(out));
}

Polynomial multiply(const Polynomial& a, const Monomial& m)
{
    if (a.vars() != m.vars())
        throw std::invalid_argument("variable count mismatch");
    std::vector<Monomial> out;
    out.reserve(a.term_count());
    for (const Monomial& t : a.terms())
        out.push_back(t * m);
    return Polynomial(a.vars(), std::move(out));
}

Polynomial multiply(const Polynomial& a, const Polynomial& b)
{
    if (a.vars() != b.vars())
        throw std::invalid_argument("variable count mismatch");
    std::vector<Monomial> out;
    out.reserve(a.term_count() * b.term_count());
    for (const Monomial& s : a.terms())
        for (const Monomial& t : b.terms())
            out.push_back(s * t);
    return Polynomial(a.vars(), std::move(out));
}

std::vector<Monomial> sq_monomial(std::uint64_t k, const Monomial& m)
{
    // Cartan over the variables: distribute k as k_1 + ... + k_n with each
    // C(e_j, k_j) odd, i.e. k_j a submask of e_j.
    std::vector<Monomial> out;
    const int n = m.vars();
    Monomial cur = m;

    // Distinct distributions give distinct exponent vectors, so no term of
    // this expansion cancels another.
    auto rec = [&](auto&& self, int j, std::uint64_t rem) -> void {
        if (j == n) {
            std::uint64_t e = m.exp(n);
            if (rem <= e && binom_odd(e, rem)) {
                cur.set_exp(n, static_cast<std::uint32_t>(e + rem));
                out.push_back(cur);
                cur.set_exp(n, static_cast<std::uint32_t>(e));
            }
            return;
        }
        std::uint64_t e = m.exp(j);
        std::uint64_t s = e;
        while (true) {  // all submasks of e, descending
            if (s <= rem) {
                cur.set_exp(j, static_cast<std::uint32_t>(e + s));
                self(self, j + 1, rem - s);
                cur.set_exp(j, static_cast<std::uint32_t>(e));
            }
            if (s == 0)
                break;
            s = (s - 1) & e;
        }
    };

    if (n == 1) {
        std::uint64_t e = m.exp(1);
        if (k <= e && binom_odd(e, k))
            out.push_back(Monomial(1, {static_cast<std::uint32_t>(e + k)}));
        return out;
    }
    rec(rec, 1, k);
    return out;
}

Polynomial sq(std::uint64_t k, const Polynomial& f)
{
    if (k == 0)
        return f;
    std::vector<Monomial> out;
    for (const Monomial& m : f.terms()) {
        auto part = sq_monomial(k, m);
        out.insert(out.end(), part.begin(), part.end());
    }
    return Polynomial(f.vars(), std::move(out));
}

LinearSubstitution::LinearSubstitution(int n_from, int n_to)
    : n_from_(n_from), n_to_(n_to), images_(static_cast<std::size_t>(n_from))
{
    check_var_count(n_from);
    check_var_count(n_to);
    for (int j = 1; j <= n_from && j <= n_to; ++j)
        images_[j - 1] = {j};  // identity where defined, zero beyond
}

void LinearSubstitution::set_image(int j, std::vector<int> target_vars)
{
    if (j < 1 || j > n_from_)
        throw std::out_of_range("variable index out of range");
    std::sort(target_vars.begin(), target_vars.end());
    for (std::size_t i = 0; i < target_vars.size(); ++i) {
        if (target_vars[i] < 1 || target_vars[i] > n_to_)
            throw std::out_of_range("image variable index out of range");
        if (i && target_vars[i] == target_vars[i - 1])
            throw std::invalid_argument("image variables must be distinct");
    }
    images_[j - 1] = std::move(target_vars);
}

const std::vector<int>& LinearSubstitution::image(int j) const
{
    if (j < 1 || j > n_from_)
        throw std::out_of_range("variable index out of range");
    return images_[j - 1];
}

namespace {

// (sum of distinct variables)^e over F_2, via the Frobenius splitting
// p^e = prod_{bits b of e} p^(2^b).
Polynomial linear_power(const std::vector<int>& vars, std::uint32_t e, int n_to)
{
    Polynomial one(n_to);
    Polynomial result = Polynomial(Monomial(n_to));
    if (e == 0)
        return result;
    if (vars.empty())
        return Polynomial(n_to);  // 0^e = 0
    for (int b = 0; (e >> b) != 0; ++b) {
        if (!((e >> b) & 1u))
            continue;
        std::vector<Monomial> pw;
        pw.reserve(vars.size());
        for (int v : vars) {
            Monomial m(n_to);
            m.set_exp(v, 1u << b);
            pw.push_back(m);
        }
        result = multiply(result, Polynomial(n_to, std::move(pw)));
    }
    return result;
}

}  // namespace

Polynomial substitute(const LinearSubstitution& s, const Monomial& m)
{
    if (m.vars() != s.n_from())
        throw std::invalid_argument("variable count mismatch");
    Polynomial result = Polynomial(Monomial(s.n_to()));
    for (int j = 1; j <= s.n_from(); ++j) {
        if (m.exp(j) == 0)
            continue;
        result = multiply(result, linear_power(s.image(j), m.exp(j), s.n_to()));
        if (result.is_zero())
            break;
    }
    return result;
}

Polynomial substitute(const LinearSubstitution& s, const Polynomial& f)
{
    if (f.vars() != s.n_from())
        throw std::invalid_argument("variable count mismatch");
    Polynomial result(s.n_to());
    for (const Monomial& m : f.terms())
        result = result + substitute(s, m);
    return result;
}

LinearSubstitution rho_substitution(int n, int j)
{
    if (j < 1 || j > n)
        throw std::out_of_range("generator index out of range");
    LinearSubstitution s(n, n);
    for (int v = 1; v <= n; ++v)
        s.set_image(v, {v});
    if (n == 1)
        return s;  // GL_1 is trivial
    if (j < n) {
        s.set_image(j, {j + 1});
        s.set_image(j + 1, {j});
    } else {
        s.set_image(1, {1, 2});
    }
    return s;
}

Monomial x_omit(std::span<const int> J, int n)
{
    Monomial m(n);
    for (int j = 1; j <= n; ++j)
        m.set_exp(j, 1);
    for (int j : J) {
        if (j < 1 || j > n)
            throw std::out_of_range("omitted index out of range");
        m.set_exp(j, 0);
    }
    return m;
}

Monomial x_omit(std::initializer_list<int> J, int n)
{
    return x_omit(std::span<const int>(J.begin(), J.size()), n);
}

}  // namespace hitprob
