#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hitprob::gf2 {

using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t bits)
{
    return (bits + kWordBits - 1) / kWordBits;
}

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t bits) : bits_(bits), w_(words_for(bits)) {}

    std::size_t size() const { return bits_; }
    bool get(std::size_t i) const { return (w_[i / kWordBits] >> (i % kWordBits)) & 1u; }
    void set(std::size_t i) { w_[i / kWordBits] |= Word(1) << (i % kWordBits); }
    void reset(std::size_t i) { w_[i / kWordBits] &= ~(Word(1) << (i % kWordBits)); }
    void flip(std::size_t i) { w_[i / kWordBits] ^= Word(1) << (i % kWordBits); }

    bool any() const;
    std::size_t popcount() const;
    std::vector<std::uint32_t> set_bits() const;

    BitVec& operator^=(const BitVec& o);
    friend bool operator==(const BitVec& a, const BitVec& b) = default;

    std::span<const Word> words() const { return w_; }
    std::span<Word> words() { return w_; }

private:
    std::size_t bits_ = 0;
    std::vector<Word> w_;
};

// Packed rows over GF(2). col_order, when given, is the pivot priority: the
// column col_order[0] is eliminated first. Bits are stored by priority rank;
// every public index is an external column id.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint32_t> col_order = {});

    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool natural_order() const { return col_order_.empty(); }
    const std::vector<std::uint32_t>& col_order() const { return col_order_; }

    void set(std::size_t r, std::uint32_t col);
    void flip(std::size_t r, std::uint32_t col);
    bool get(std::size_t r, std::uint32_t col) const;

    std::span<const Word> row_words(std::size_t r) const;
    std::span<Word> row_words(std::size_t r);
    std::size_t words_per_row() const { return words_; }

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) = default;

private:
    std::uint32_t rank_of(std::uint32_t col) const;

    std::size_t rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<Word> data_;
    std::vector<std::uint32_t> col_order_;  // rank -> external column
    std::vector<std::uint32_t> rank_of_;    // external column -> rank
};

// Reduced echelon form of a row space with a fixed pivot priority. Rows are
// fully reduced: each one's first set bit (in rank order) is its pivot and
// every other set bit sits at a non-pivot rank. The form is canonical given
// (row space, col_order), independent of insertion order and thread count.
class Echelon {
public:
    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return pivot_ranks_.size(); }

    const std::vector<std::uint32_t>& col_order() const { return col_order_; }

    bool is_pivot(std::uint32_t col) const;
    std::vector<std::uint32_t> pivot_columns() const;      // external ids, priority order
    std::vector<std::uint32_t> non_pivot_columns() const;  // external ids, priority order

    // Canonical representative of v modulo the row space; the set bits of the
    // result lie at non-pivot columns. Input and output are external ids.
    std::vector<std::uint32_t> reduce(std::span<const std::uint32_t> cols_set) const;
    bool member(std::span<const std::uint32_t> cols_set) const;
    bool member(const BitVec& v) const;

    // Row data by pivot priority, for tests and diagnostics.
    std::vector<BitVec> rows_snapshot() const;

private:
    friend class Eliminator;

    void reduce_packed(std::vector<Word>& v) const;

    std::size_t cols_ = 0, words_ = 0;
    std::vector<std::uint32_t> col_order_;       // empty = identity
    std::vector<std::uint32_t> rank_of_;         // empty = identity
    std::vector<std::vector<Word>> rows_;        // by insertion; fully reduced
    std::vector<std::int32_t> pivot_row_of_rank_;
    std::vector<std::uint32_t> pivot_ranks_;     // sorted ascending (priority order)
};

// Streaming Gaussian eliminator. Rows may be added in any order and in
// batches; internal parallelism never changes the result.
class Eliminator {
public:
    explicit Eliminator(std::size_t cols, std::vector<std::uint32_t> col_order = {},
                        std::size_t batch_rows = 2048);

    std::size_t cols() const { return cols_; }
    std::size_t current_rank() const { return rows_.size(); }

    void add_row(std::span<const std::uint32_t> cols_set);  // external ids
    void add_row(const BitVec& v);                          // natural order only
    void flush();

    Echelon finish() &&;

private:
    std::vector<Word> pack(std::span<const std::uint32_t> cols_set) const;
    void project(std::vector<Word>& row) const;
    void insert(std::vector<Word>&& row);
    void sweep();

    std::size_t cols_, words_, batch_rows_;
    std::vector<std::uint32_t> col_order_;
    std::vector<std::uint32_t> rank_of_;
    std::vector<std::vector<Word>> rows_;
    std::vector<std::int32_t> pivot_row_of_rank_;
    std::size_t fresh_start_ = 0;  // rows_[fresh_start_..] not yet swept into older rows
    std::vector<std::vector<Word>> pending_;
};

Echelon echelonize(BitMatrix&& m);

BitMatrix transpose(const BitMatrix& m);                      // natural order
BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);   // natural order
BitMatrix stack(const std::vector<const BitMatrix*>& parts);  // vertical

// Basis of { v : M v = 0 }, natural column order.
std::vector<BitVec> nullspace(const BitMatrix& m);

}  // namespace hitprob::gf2
