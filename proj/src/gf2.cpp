#include "hitprob/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "hitprob/config.hpp"

namespace hitprob::gf2 {

namespace {

// First set bit at position >= from, or npos.
constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::size_t find_from(std::span<const Word> w, std::size_t from, std::size_t bits)
{
    std::size_t wi = from / kWordBits;
    if (wi >= w.size())
        return npos;
    Word cur = w[wi] & (~Word(0) << (from % kWordBits));
    while (true) {
        if (cur) {
            std::size_t bit = wi * kWordBits + std::countr_zero(cur);
            return bit < bits ? bit : npos;
        }
        if (++wi >= w.size())
            return npos;
        cur = w[wi];
    }
}

void xor_from(std::span<Word> dst, std::span<const Word> src, std::size_t from_word)
{
    Word* d = dst.data() + from_word;
    const Word* s = src.data() + from_word;
    std::size_t k = dst.size() - from_word;
    for (std::size_t i = 0; i < k; ++i)
        d[i] ^= s[i];
}

bool all_zero(std::span<const Word> w)
{
    for (Word x : w)
        if (x)
            return false;
    return true;
}

std::vector<std::uint32_t> invert_order(const std::vector<std::uint32_t>& order, std::size_t cols)
{
    std::vector<std::uint32_t> inv(cols, static_cast<std::uint32_t>(-1));
    for (std::size_t r = 0; r < order.size(); ++r) {
        if (order[r] >= cols)
            throw std::out_of_range("col_order entry out of range");
        if (inv[order[r]] != static_cast<std::uint32_t>(-1))
            throw std::invalid_argument("col_order is not a permutation");
        inv[order[r]] = static_cast<std::uint32_t>(r);
    }
    for (std::size_t c = 0; c < cols; ++c)
        if (inv[c] == static_cast<std::uint32_t>(-1))
            throw std::invalid_argument("col_order does not cover every column");
    return inv;
}

}  // namespace

bool BitVec::any() const
{
    return !all_zero(w_);
}

std::size_t BitVec::popcount() const
{
    std::size_t c = 0;
    for (Word x : w_)
        c += std::popcount(x);
    return c;
}

std::vector<std::uint32_t> BitVec::set_bits() const
{
    std::vector<std::uint32_t> out;
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
        Word x = w_[wi];
        while (x) {
            out.push_back(static_cast<std::uint32_t>(wi * kWordBits + std::countr_zero(x)));
            x &= x - 1;
        }
    }
    return out;
}

BitVec& BitVec::operator^=(const BitVec& o)
{
    if (bits_ != o.bits_)
        throw std::invalid_argument("bit-vector length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i)
        w_[i] ^= o.w_[i];
    return *this;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint32_t> col_order)
    : rows_(rows), cols_(cols), words_(words_for(cols)), data_(rows * words_for(cols)),
      col_order_(std::move(col_order))
{
    if (!col_order_.empty()) {
        if (col_order_.size() != cols_)
            throw std::invalid_argument("col_order size mismatch");
        rank_of_ = invert_order(col_order_, cols_);
    }
}

BitMatrix BitMatrix::identity(std::size_t n)
{
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, static_cast<std::uint32_t>(i));
    return m;
}

std::uint32_t BitMatrix::rank_of(std::uint32_t col) const
{
    if (col >= cols_)
        throw std::out_of_range("column out of range");
    return rank_of_.empty() ? col : rank_of_[col];
}

void BitMatrix::set(std::size_t r, std::uint32_t col)
{
    std::uint32_t k = rank_of(col);
    data_[r * words_ + k / kWordBits] |= Word(1) << (k % kWordBits);
}

void BitMatrix::flip(std::size_t r, std::uint32_t col)
{
    std::uint32_t k = rank_of(col);
    data_[r * words_ + k / kWordBits] ^= Word(1) << (k % kWordBits);
}

bool BitMatrix::get(std::size_t r, std::uint32_t col) const
{
    std::uint32_t k = rank_of(col);
    return (data_[r * words_ + k / kWordBits] >> (k % kWordBits)) & 1u;
}

std::span<const Word> BitMatrix::row_words(std::size_t r) const
{
    return {data_.data() + r * words_, words_};
}

std::span<Word> BitMatrix::row_words(std::size_t r)
{
    return {data_.data() + r * words_, words_};
}

bool Echelon::is_pivot(std::uint32_t col) const
{
    std::uint32_t k = rank_of_.empty() ? col : rank_of_[col];
    if (k >= cols_)
        throw std::out_of_range("column out of range");
    return pivot_row_of_rank_[k] >= 0;
}

std::vector<std::uint32_t> Echelon::pivot_columns() const
{
    std::vector<std::uint32_t> out;
    out.reserve(pivot_ranks_.size());
    for (std::uint32_t k : pivot_ranks_)
        out.push_back(col_order_.empty() ? k : col_order_[k]);
    return out;
}

std::vector<std::uint32_t> Echelon::non_pivot_columns() const
{
    std::vector<std::uint32_t> out;
    out.reserve(cols_ - pivot_ranks_.size());
    for (std::uint32_t k = 0; k < cols_; ++k)
        if (pivot_row_of_rank_[k] < 0)
            out.push_back(col_order_.empty() ? k : col_order_[k]);
    return out;
}

void Echelon::reduce_packed(std::vector<Word>& v) const
{
    std::size_t pos = 0;
    while (true) {
        std::size_t bit = find_from(v, pos, cols_);
        if (bit == npos)
            break;
        std::int32_t r = pivot_row_of_rank_[bit];
        if (r >= 0)
            xor_from(v, rows_[static_cast<std::size_t>(r)], bit / kWordBits);
        pos = bit + 1;
    }
}

std::vector<std::uint32_t> Echelon::reduce(std::span<const std::uint32_t> cols_set) const
{
    std::vector<Word> v(words_);
    for (std::uint32_t c : cols_set) {
        std::uint32_t k = rank_of_.empty() ? c : rank_of_[c];
        if (k >= cols_)
            throw std::out_of_range("column out of range");
        v[k / kWordBits] ^= Word(1) << (k % kWordBits);
    }
    reduce_packed(v);
    std::vector<std::uint32_t> out;
    for (std::size_t wi = 0; wi < v.size(); ++wi) {
        Word x = v[wi];
        while (x) {
            std::uint32_t k = static_cast<std::uint32_t>(wi * kWordBits + std::countr_zero(x));
            out.push_back(col_order_.empty() ? k : col_order_[k]);
            x &= x - 1;
        }
    }
    return out;
}

bool Echelon::member(std::span<const std::uint32_t> cols_set) const
{
    return reduce(cols_set).empty();
}

bool Echelon::member(const BitVec& v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("dimension mismatch");
    return member(v.set_bits());
}

std::vector<BitVec> Echelon::rows_snapshot() const
{
    std::vector<BitVec> out;
    out.reserve(rows_.size());
    for (std::uint32_t k : pivot_ranks_) {
        const auto& row = rows_[static_cast<std::size_t>(pivot_row_of_rank_[k])];
        BitVec v(cols_);
        std::copy(row.begin(), row.end(), v.words().begin());
        out.push_back(std::move(v));
    }
    return out;
}

Eliminator::Eliminator(std::size_t cols, std::vector<std::uint32_t> col_order,
                       std::size_t batch_rows)
    : cols_(cols), words_(words_for(cols)), batch_rows_(batch_rows ? batch_rows : 1),
      col_order_(std::move(col_order)), pivot_row_of_rank_(cols, -1)
{
    if (cols_ == 0)
        throw std::invalid_argument("eliminator needs at least one column");
    if (!col_order_.empty()) {
        if (col_order_.size() != cols_)
            throw std::invalid_argument("col_order size mismatch");
        rank_of_ = invert_order(col_order_, cols_);
    }
}

std::vector<Word> Eliminator::pack(std::span<const std::uint32_t> cols_set) const
{
    std::vector<Word> v(words_);
    for (std::uint32_t c : cols_set) {
        std::uint32_t k = rank_of_.empty() ? c : rank_of_[c];
        if (k >= cols_)
            throw std::out_of_range("column out of range");
        v[k / kWordBits] ^= Word(1) << (k % kWordBits);
    }
    return v;
}

void Eliminator::add_row(std::span<const std::uint32_t> cols_set)
{
    pending_.push_back(pack(cols_set));
    if (pending_.size() >= batch_rows_)
        flush();
}

void Eliminator::add_row(const BitVec& v)
{
    if (!col_order_.empty())
        throw std::logic_error("packed add_row requires natural column order");
    if (v.size() != cols_)
        throw std::invalid_argument("dimension mismatch");
    std::vector<Word> row(v.words().begin(), v.words().end());
    pending_.push_back(std::move(row));
    if (pending_.size() >= batch_rows_)
        flush();
}

void Eliminator::project(std::vector<Word>& row) const
{
    std::size_t pos = 0;
    while (true) {
        std::size_t bit = find_from(row, pos, cols_);
        if (bit == npos)
            break;
        std::int32_t r = pivot_row_of_rank_[bit];
        if (r >= 0)
            xor_from(row, rows_[static_cast<std::size_t>(r)], bit / kWordBits);
        pos = bit + 1;
    }
}

void Eliminator::insert(std::vector<Word>&& row)
{
    std::size_t bit = find_from(row, 0, cols_);
    if (bit == npos)
        return;
    rows_.push_back(std::move(row));
    pivot_row_of_rank_[bit] = static_cast<std::int32_t>(rows_.size() - 1);
    if (rows_.size() - fresh_start_ >= kWordBits)
        sweep();
}

void Eliminator::sweep()
{
    if (fresh_start_ == rows_.size())
        return;
    // Clean the fresh rows against each other, newest first: a fresh row can
    // only carry bits at pivots inserted after it. Skip the row's own pivot.
    for (std::size_t k = rows_.size(); k-- > fresh_start_;) {
        std::size_t own = find_from(rows_[k], 0, cols_);
        std::size_t pos = own + 1;
        while (true) {
            std::size_t bit = find_from(rows_[k], pos, cols_);
            if (bit == npos)
                break;
            std::int32_t r = pivot_row_of_rank_[bit];
            if (r >= 0)
                xor_from(rows_[k], rows_[static_cast<std::size_t>(r)], bit / kWordBits);
            pos = bit + 1;
        }
    }

    // Pivot ranks of the fresh rows, ascending.
    std::vector<std::pair<std::size_t, std::size_t>> fresh;  // (rank, row index)
    for (std::size_t k = fresh_start_; k < rows_.size(); ++k)
        fresh.emplace_back(find_from(rows_[k], 0, cols_), k);
    std::sort(fresh.begin(), fresh.end());

    std::size_t old_count = fresh_start_;
    parallel_for_chunks(old_count, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t q = lo; q < hi; ++q) {
            auto& row = rows_[q];
            for (const auto& [rank, rid] : fresh) {
                if ((row[rank / kWordBits] >> (rank % kWordBits)) & 1u)
                    xor_from(row, rows_[rid], rank / kWordBits);
            }
        }
    });
    fresh_start_ = rows_.size();
}

void Eliminator::flush()
{
    if (pending_.empty())
        return;
    std::vector<std::vector<Word>> batch;
    batch.swap(pending_);
    parallel_for_chunks(batch.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i)
            project(batch[i]);
    });
    for (auto& row : batch) {
        project(row);  // cheap second pass against pivots added within the batch
        insert(std::move(row));
    }
}

Echelon Eliminator::finish() &&
{
    flush();
    sweep();
    Echelon e;
    e.cols_ = cols_;
    e.words_ = words_;
    e.col_order_ = std::move(col_order_);
    e.rank_of_ = std::move(rank_of_);
    e.rows_ = std::move(rows_);
    e.pivot_row_of_rank_ = std::move(pivot_row_of_rank_);
    for (std::uint32_t k = 0; k < cols_; ++k)
        if (e.pivot_row_of_rank_[k] >= 0)
            e.pivot_ranks_.push_back(k);
    return e;
}

Echelon echelonize(BitMatrix&& m)
{
    Eliminator elim(m.cols(), m.col_order());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto w = m.row_words(r);
        std::vector<std::uint32_t> ranks;
        for (std::size_t wi = 0; wi < w.size(); ++wi) {
            Word x = w[wi];
            while (x) {
                std::uint32_t k = static_cast<std::uint32_t>(wi * kWordBits + std::countr_zero(x));
                ranks.push_back(m.natural_order() ? k : m.col_order()[k]);
                x &= x - 1;
            }
        }
        elim.add_row(ranks);
    }
    return std::move(elim).finish();
}

BitMatrix transpose(const BitMatrix& m)
{
    if (!m.natural_order())
        throw std::logic_error("transpose requires natural column order");
    BitMatrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        auto w = m.row_words(r);
        for (std::size_t wi = 0; wi < w.size(); ++wi) {
            Word x = w[wi];
            while (x) {
                std::size_t c = wi * kWordBits + std::countr_zero(x);
                t.set(c, static_cast<std::uint32_t>(r));
                x &= x - 1;
            }
        }
    }
    return t;
}

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b)
{
    if (!a.natural_order() || !b.natural_order())
        throw std::logic_error("multiply requires natural column order");
    if (a.cols() != b.rows())
        throw std::invalid_argument("dimension mismatch");
    BitMatrix c(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto w = a.row_words(r);
        auto out = c.row_words(r);
        for (std::size_t wi = 0; wi < w.size(); ++wi) {
            Word x = w[wi];
            while (x) {
                std::size_t k = wi * kWordBits + std::countr_zero(x);
                xor_from(out, b.row_words(k), 0);
                x &= x - 1;
            }
        }
    }
    return c;
}

BitMatrix stack(const std::vector<const BitMatrix*>& parts)
{
    if (parts.empty())
        throw std::invalid_argument("nothing to stack");
    std::size_t cols = parts.front()->cols();
    std::size_t rows = 0;
    for (const BitMatrix* p : parts) {
        if (!p->natural_order() || p->cols() != cols)
            throw std::invalid_argument("incompatible stack parts");
        rows += p->rows();
    }
    BitMatrix out(rows, cols);
    std::size_t at = 0;
    for (const BitMatrix* p : parts)
        for (std::size_t r = 0; r < p->rows(); ++r, ++at) {
            auto src = p->row_words(r);
            std::copy(src.begin(), src.end(), out.row_words(at).begin());
        }
    return out;
}

std::vector<BitVec> nullspace(const BitMatrix& m)
{
    if (!m.natural_order())
        throw std::logic_error("nullspace requires natural column order");
    BitMatrix copy = m;
    Echelon e = echelonize(std::move(copy));
    std::vector<std::uint32_t> free_cols = e.non_pivot_columns();
    std::vector<BitVec> basis;
    basis.reserve(free_cols.size());
    // For RREF rows e_c + sum_f R_{c,f} e_f the kernel vector for free column
    // f0 has v_f0 = 1 and v_c = R_{c,f0} at every pivot column c.
    auto rows = e.rows_snapshot();
    auto pivots = e.pivot_columns();
    for (std::uint32_t f : free_cols) {
        BitVec v(m.cols());
        v.set(f);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (rows[i].get(f))
                v.set(pivots[i]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace hitprob::gf2
