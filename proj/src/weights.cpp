#include "hitprob/weights.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hitprob {

WeightVector::WeightVector(std::vector<std::uint32_t> entries) : w_(std::move(entries))
{
    while (!w_.empty() && w_.back() == 0)
        w_.pop_back();
}

std::uint32_t WeightVector::entry(std::size_t i) const
{
    if (i == 0)
        throw std::out_of_range("weight-vector entries are 1-based");
    return i <= w_.size() ? w_[i - 1] : 0;
}

std::string WeightVector::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (i)
            os << ',';
        os << w_[i];
    }
    return os.str();
}

WeightVector WeightVector::parse(const std::string& text)
{
    std::vector<std::uint32_t> entries;
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        std::size_t pos = 0;
        unsigned long v = std::stoul(item, &pos);
        if (pos != item.size())
            throw std::invalid_argument("malformed weight vector: '" + text + "'");
        entries.push_back(static_cast<std::uint32_t>(v));
    }
    return WeightVector(std::move(entries));
}

std::strong_ordering operator<=>(const WeightVector& a, const WeightVector& b)
{
    std::size_t len = std::max(a.w_.size(), b.w_.size());
    for (std::size_t i = 1; i <= len; ++i) {
        std::uint32_t x = a.entry(i), y = b.entry(i);
        if (x != y)
            return x <=> y;
    }
    return std::strong_ordering::equal;
}

WeightVector weight_vector(const Monomial& x)
{
    std::uint32_t all = 0;
    for (int j = 1; j <= x.vars(); ++j)
        all |= x.exp(j);
    std::vector<std::uint32_t> w;
    for (int bit = 0; (all >> bit) != 0; ++bit) {
        std::uint32_t count = 0;
        for (int j = 1; j <= x.vars(); ++j)
            count += (x.exp(j) >> bit) & 1u;
        w.push_back(count);
    }
    return WeightVector(std::move(w));
}

std::uint64_t weight_degree(const WeightVector& w)
{
    std::uint64_t d = 0;
    for (std::size_t i = 1; i <= w.length(); ++i)
        d += (std::uint64_t(1) << (i - 1)) * w.entry(i);
    return d;
}

Cmp compare(const Monomial& x, const Monomial& y)
{
    if (x.vars() != y.vars())
        throw std::invalid_argument("variable count mismatch");
    if (x.degree() != y.degree())
        throw std::invalid_argument("degree mismatch");
    WeightVector wx = weight_vector(x), wy = weight_vector(y);
    auto c = wx <=> wy;
    if (c != 0)
        return c < 0 ? Cmp::LT : Cmp::GT;
    for (int j = 1; j <= x.vars(); ++j)
        if (x.exp(j) != y.exp(j))
            return x.exp(j) < y.exp(j) ? Cmp::LT : Cmp::GT;
    return Cmp::EQ;
}

bool admissible_less(const Monomial& x, const Monomial& y)
{
    return compare(x, y) == Cmp::LT;
}

int mu(std::uint64_t d)
{
    if (d == 0)
        return 0;
    // Exhaustive DP over all sums of terms 2^s - 1; d stays tiny here.
    std::vector<int> dp(d + 1, std::numeric_limits<int>::max() - 1);
    dp[0] = 0;
    for (std::uint64_t k = 1; k <= d; ++k)
        for (int s = 1; s < 63 && (std::uint64_t(1) << s) - 1 <= k; ++s)
            dp[k] = std::min(dp[k], 1 + dp[k - ((std::uint64_t(1) << s) - 1)]);
    return dp[d];
}

namespace {

void spike_search(std::uint64_t remaining, int max_s, int slots, std::vector<int>& cur,
                  std::vector<std::vector<int>>& found)
{
    if (slots == 0) {
        if (remaining == 0)
            found.push_back(cur);
        return;
    }
    for (int s = max_s; s >= 1; --s) {
        std::uint64_t t = (std::uint64_t(1) << s) - 1;
        if (t > remaining)
            continue;
        cur.push_back(s);
        // s_1 > ... > s_{r-1} >= s_r: strict except between the last pair.
        int next_max = (slots == 2) ? s : s - 1;
        spike_search(remaining - t, next_max, slots - 1, cur, found);
        cur.pop_back();
    }
}

}  // namespace

Monomial minimal_spike(std::uint64_t d, int n)
{
    if (d == 0)
        throw std::invalid_argument("minimal spike requires d >= 1");
    int r = mu(d);
    if (r > n)
        throw std::domain_error("mu(d) exceeds the variable count (the quotient vanishes)");
    std::vector<int> cur;
    std::vector<std::vector<int>> found;
    spike_search(d, 31, r, cur, found);
    if (found.size() != 1)
        throw std::logic_error("minimal spike is not unique; exponent-pattern search found " +
                               std::to_string(found.size()) + " candidates");
    Monomial z(n);
    for (int j = 0; j < r; ++j)
        z.set_exp(j + 1, (std::uint32_t(1) << found[0][j]) - 1);
    return z;
}

bool is_spike(const Monomial& x)
{
    for (int j = 1; j <= x.vars(); ++j) {
        std::uint32_t e = x.exp(j);
        if (e & (e + 1))
            return false;
    }
    return true;
}

namespace {

void weight_enum(std::uint64_t remaining, std::uint32_t max_entry, std::size_t level,
                 std::vector<std::uint32_t>& cur, std::vector<WeightVector>& out)
{
    if (remaining == 0) {
        out.push_back(WeightVector(cur));
        return;
    }
    std::uint64_t unit = std::uint64_t(1) << (level - 1);
    if (unit > remaining)
        return;
    std::uint32_t cap = static_cast<std::uint32_t>(std::min<std::uint64_t>(max_entry, remaining / unit));
    for (std::uint32_t v = 0; v <= cap; ++v) {
        cur.push_back(v);
        weight_enum(remaining - v * unit, max_entry, level + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<WeightVector> weight_vectors_of_degree(std::uint64_t d, std::uint32_t max_entry)
{
    std::vector<WeightVector> out;
    std::vector<std::uint32_t> cur;
    weight_enum(d, max_entry, 1, cur, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace hitprob
