#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace twistcode {

class LineReader;

namespace detail {
inline constexpr std::size_t kWordBits = 64;
inline constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }
}  // namespace detail

/// Fixed-length vector over F2, packed 64 coordinates per word.
/// Padding bits past size() are always zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t length) : size_(length), words_(detail::words_for(length), 0) {}

    /// Parses a string of '0'/'1' characters.
    static BitVector from_string(std::string_view bits);
    static BitVector unit(std::size_t length, std::size_t index);
    static BitVector ones(std::size_t length);

    std::size_t size() const noexcept { return size_; }

    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i, bool value = true) {
        const std::uint64_t mask = std::uint64_t{1} << (i % 64);
        if (value) {
            words_[i / 64] |= mask;
        } else {
            words_[i / 64] &= ~mask;
        }
    }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    std::size_t weight() const noexcept {
        std::size_t total = 0;
        for (const auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }
    bool is_zero() const noexcept;
    std::optional<std::size_t> first_set() const noexcept;

    /// Inner product over F2.
    bool dot(const BitVector& other) const;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
    bool operator==(const BitVector&) const = default;
    /// Lexicographic on the packed words; used only to give containers a total order.
    bool operator<(const BitVector& other) const;

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::span<std::uint64_t> words() noexcept { return words_; }

    /// Contiguous slice [offset, offset + length).
    BitVector slice(std::size_t offset, std::size_t length) const;

    std::string to_string() const;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

inline std::size_t weight(const BitVector& v) { return v.weight(); }

/// Dense row-major matrix over F2. Either dimension may be zero; a 0 x n or
/// n x 0 matrix is the zero map to or from the zero space.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_(detail::words_for(cols)), words_(rows * stride_, 0) {}

    static BitMatrix identity(std::size_t n);
    static BitMatrix ones(std::size_t rows, std::size_t cols);
    /// All rows must have length `cols`.
    static BitMatrix from_rows(std::span<const BitVector> rows, std::size_t cols);
    /// Rows given as '0'/'1' strings of equal length.
    static BitMatrix from_strings(std::span<const std::string> rows);
    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);
    /// Matrix whose columns are the given vectors, each of length `rows`.
    static BitMatrix from_columns(std::span<const BitVector> columns, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const { return (words_[r * stride_ + c / 64] >> (c % 64)) & 1U; }
    void set(std::size_t r, std::size_t c, bool value = true) {
        auto& w = words_[r * stride_ + c / 64];
        const std::uint64_t mask = std::uint64_t{1} << (c % 64);
        w = value ? (w | mask) : (w & ~mask);
    }
    void flip(std::size_t r, std::size_t c) { words_[r * stride_ + c / 64] ^= std::uint64_t{1} << (c % 64); }

    std::span<const std::uint64_t> row_words(std::size_t r) const { return {words_.data() + r * stride_, stride_}; }
    std::span<std::uint64_t> row_words(std::size_t r) { return {words_.data() + r * stride_, stride_}; }

    BitVector row(std::size_t r) const;
    BitVector column(std::size_t c) const;
    void set_row(std::size_t r, const BitVector& v);
    std::vector<BitVector> row_vectors() const;

    /// row[dst] ^= row[src]
    void add_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);

    /// XORs `block` into this matrix with its top-left corner at (row, col).
    void add_block(std::size_t row, std::size_t col, const BitMatrix& block);

    BitMatrix transpose() const;
    bool is_zero() const noexcept;
    std::string to_string() const;

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> words_;
};

BitMatrix operator*(const BitMatrix& lhs, const BitMatrix& rhs);
BitVector mat_vec(const BitMatrix& m, const BitVector& v);
inline BitVector operator*(const BitMatrix& m, const BitVector& v) { return mat_vec(m, v); }

/// Stacks matrices with equal column counts top to bottom.
BitMatrix vstack(std::span<const BitMatrix> blocks, std::size_t cols);

struct EchelonForm {
    BitMatrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivots are chosen scanning columns left to right
/// and rows top to bottom, so the result is a pure function of the input.
EchelonForm row_reduce(BitMatrix m);

std::size_t rank(const BitMatrix& m);
/// Basis of {x : m x = 0}, one vector per free column in increasing order.
std::vector<BitVector> kernel_basis(const BitMatrix& m);
/// The pivot columns of m; they form a basis of its column space.
std::vector<BitVector> column_space_basis(const BitMatrix& m);
/// Exact membership of v in the span of `basis` (basis need not be independent).
bool in_span(std::span<const BitVector> basis, const BitVector& v);
/// Some x with m x = b, or nullopt when b is outside the column space.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);
std::optional<BitMatrix> inverse(const BitMatrix& m);

/// Incrementally built subspace held in echelon form.
class SpanBasis {
public:
    explicit SpanBasis(std::size_t length) : length_(length) {}

    /// Reduces v against the stored basis; zero iff v is in the span.
    BitVector reduce(BitVector v) const;
    bool contains(const BitVector& v) const { return reduce(v).is_zero(); }
    /// Adds v; returns false when it was already in the span.
    bool insert(const BitVector& v);

    std::size_t dimension() const noexcept { return rows_.size(); }
    std::size_t length() const noexcept { return length_; }

private:
    std::size_t length_;
    std::vector<BitVector> rows_;
    std::vector<std::size_t> leads_;
};

// Matrix text format: "<rows> <cols>" then one line of '0'/'1' per row.
void write_matrix(std::ostream& out, const BitMatrix& m);
BitMatrix read_matrix(LineReader& in);
/// Reads just the row lines of a matrix whose shape is already known.
BitMatrix read_matrix_rows(LineReader& in, std::size_t rows, std::size_t cols);
BitMatrix read_matrix(std::istream& in);

}  // namespace twistcode
