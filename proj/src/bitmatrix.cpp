#include "twistcode/bitmatrix.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "twistcode/errors.hpp"
#include "twistcode/text_io.hpp"

namespace twistcode {

namespace {

void require(bool condition, const char* what) {
    if (!condition) throw DimensionMismatch(what);
}

void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, std::size_t from = 0) {
    for (std::size_t i = from; i < dst.size(); ++i) dst[i] ^= src[i];
}

}  // namespace

// ---------------------------------------------------------------- BitVector

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw ValidationError("bit string may only contain '0' and '1'");
        }
    }
    return v;
}

BitVector BitVector::unit(std::size_t length, std::size_t index) {
    BitVector v(length);
    v.set(index);
    return v;
}

BitVector BitVector::ones(std::size_t length) {
    BitVector v(length);
    for (std::size_t i = 0; i < length; ++i) v.set(i);
    return v;
}

bool BitVector::is_zero() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::optional<std::size_t> BitVector::first_set() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    }
    return std::nullopt;
}

bool BitVector::dot(const BitVector& other) const {
    require(size_ == other.size_, "dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    require(size_ == other.size_, "xor: length mismatch");
    xor_words(words_, other.words_);
    return *this;
}

bool BitVector::operator<(const BitVector& other) const {
    if (size_ != other.size_) return size_ < other.size_;
    return words_ < other.words_;
}

BitVector BitVector::slice(std::size_t offset, std::size_t length) const {
    require(offset + length <= size_, "slice out of range");
    BitVector out(length);
    for (std::size_t i = 0; i < length; ++i) {
        if (get(offset + i)) out.set(i);
    }
    return out;
}

std::string BitVector::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (get(i)) s[i] = '1';
    }
    return s;
}

// ---------------------------------------------------------------- BitMatrix

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix BitMatrix::ones(std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    const auto row = BitVector::ones(cols);
    for (std::size_t r = 0; r < rows; ++r) m.set_row(r, row);
    return m;
}

BitMatrix BitMatrix::from_rows(std::span<const BitVector> rows, std::size_t cols) {
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

BitMatrix BitMatrix::from_strings(std::span<const std::string> rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require(rows[r].size() == cols, "from_strings: ragged rows");
        m.set_row(r, BitVector::from_string(rows[r]));
    }
    return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    std::vector<std::string> owned(rows.begin(), rows.end());
    return from_strings(std::span<const std::string>(owned));
}

BitMatrix BitMatrix::from_columns(std::span<const BitVector> columns, std::size_t rows) {
    BitMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        require(columns[c].size() == rows, "from_columns: column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) {
            if (columns[c].get(r)) m.set(r, c);
        }
    }
    return m;
}

BitVector BitMatrix::row(std::size_t r) const {
    BitVector v(cols_);
    std::copy_n(words_.begin() + static_cast<std::ptrdiff_t>(r * stride_), stride_, v.words().begin());
    return v;
}

BitVector BitMatrix::column(std::size_t c) const {
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (get(r, c)) v.set(r);
    }
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
    require(v.size() == cols_, "set_row: length mismatch");
    std::copy(v.words().begin(), v.words().end(), words_.begin() + static_cast<std::ptrdiff_t>(r * stride_));
}

std::vector<BitVector> BitMatrix::row_vectors() const {
    std::vector<BitVector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
}

void BitMatrix::add_row(std::size_t dst, std::size_t src) { xor_words(row_words(dst), row_words(src)); }

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row_words(a).begin(), row_words(a).end(), row_words(b).begin());
}

void BitMatrix::add_block(std::size_t row, std::size_t col, const BitMatrix& block) {
    require(row + block.rows_ <= rows_ && col + block.cols_ <= cols_, "add_block: block out of range");
    for (std::size_t r = 0; r < block.rows_; ++r) {
        for (std::size_t c = 0; c < block.cols_; ++c) {
            if (block.get(r, c)) flip(row + r, col + c);
        }
    }
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) t.set(c, r);
        }
    }
    return t;
}

bool BitMatrix::is_zero() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        s += row(r).to_string();
        s += '\n';
    }
    return s;
}

BitMatrix operator*(const BitMatrix& lhs, const BitMatrix& rhs) {
    require(lhs.cols() == rhs.rows(), "matrix product: inner dimension mismatch");
    BitMatrix out(lhs.rows(), rhs.cols());
    for (std::size_t r = 0; r < lhs.rows(); ++r) {
        auto dst = out.row_words(r);
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            if (lhs.get(r, k)) xor_words(dst, rhs.row_words(k));
        }
    }
    return out;
}

BitVector mat_vec(const BitMatrix& m, const BitVector& v) {
    require(v.size() == m.cols(), "mat_vec: vector length must equal column count");
    BitVector out(m.rows());
    const auto vw = v.words();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto rw = m.row_words(r);
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < rw.size(); ++i) acc ^= rw[i] & vw[i];
        if (std::popcount(acc) & 1) out.set(r);
    }
    return out;
}

BitMatrix vstack(std::span<const BitMatrix> blocks, std::size_t cols) {
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        require(b.cols() == cols, "vstack: column count mismatch");
        rows += b.rows();
    }
    BitMatrix out(rows, cols);
    std::size_t at = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r) {
            std::copy(b.row_words(r).begin(), b.row_words(r).end(), out.row_words(at++).begin());
        }
    }
    return out;
}

// ---------------------------------------------------------------- elimination

EchelonForm row_reduce(BitMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < m.cols() && next < m.rows(); ++c) {
        std::size_t p = next;
        while (p < m.rows() && !m.get(p, c)) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, next);
        // The pivot row is zero left of column c, so only words from c / 64 on change.
        const auto pivot = m.row_words(next);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != next && m.get(r, c)) xor_words(m.row_words(r), pivot, c / 64);
        }
        pivots.push_back(c);
        ++next;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const BitMatrix& m) { return row_reduce(m).pivots.size(); }

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
    const auto [reduced, pivots] = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (const auto p : pivots) is_pivot[p] = true;

    std::vector<BitVector> basis;
    basis.reserve(m.cols() - pivots.size());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        BitVector k(m.cols());
        k.set(free);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            if (reduced.get(i, free)) k.set(pivots[i]);
        }
        basis.push_back(std::move(k));
    }
    return basis;
}

std::vector<BitVector> column_space_basis(const BitMatrix& m) {
    const auto pivots = row_reduce(m).pivots;
    std::vector<BitVector> basis;
    basis.reserve(pivots.size());
    for (const auto c : pivots) basis.push_back(m.column(c));
    return basis;
}

bool in_span(std::span<const BitVector> basis, const BitVector& v) {
    SpanBasis span(v.size());
    for (const auto& b : basis) span.insert(b);
    return span.contains(v);
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
    require(b.size() == m.rows(), "solve: right-hand side length must equal row count");
    // Augment with b as the last column; b is in the column space iff that column is not a pivot.
    BitMatrix augmented(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m.get(r, c)) augmented.set(r, c);
        }
        if (b.get(r)) augmented.set(r, m.cols());
    }
    const auto [reduced, pivots] = row_reduce(std::move(augmented));
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    BitVector x(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (reduced.get(i, m.cols())) x.set(pivots[i]);
    }
    return x;
}

std::optional<BitMatrix> inverse(const BitMatrix& m) {
    require(m.rows() == m.cols(), "inverse: matrix must be square");
    const std::size_t n = m.rows();
    BitMatrix augmented(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (m.get(r, c)) augmented.set(r, c);
        }
        augmented.set(r, n + r);
    }
    const auto [reduced, pivots] = row_reduce(std::move(augmented));
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
    BitMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (reduced.get(r, n + c)) inv.set(r, c);
        }
    }
    return inv;
}

// ---------------------------------------------------------------- SpanBasis

BitVector SpanBasis::reduce(BitVector v) const {
    if (v.size() != length_) throw DimensionMismatch("SpanBasis: vector length mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (v.get(leads_[i])) v ^= rows_[i];
    }
    return v;
}

bool SpanBasis::insert(const BitVector& v) {
    auto r = reduce(v);
    const auto lead = r.first_set();
    if (!lead) return false;
    // Keep every lead bit private to its row so reduce() is order independent.
    for (auto& row : rows_) {
        if (row.get(*lead)) row ^= r;
    }
    rows_.push_back(std::move(r));
    leads_.push_back(*lead);
    return true;
}

// ---------------------------------------------------------------- text format

void write_matrix(std::ostream& out, const BitMatrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    if (m.cols() == 0) return;
    out << m.to_string();
}

BitMatrix read_matrix(LineReader& in) {
    const auto header = in.require_tokens("matrix header '<rows> <cols>'");
    if (header.size() != 2) in.fail("matrix header must be '<rows> <cols>'");
    return read_matrix_rows(in, in.to_size(header[0]), in.to_size(header[1]));
}

BitMatrix read_matrix_rows(LineReader& in, std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    if (cols == 0) return m;
    for (std::size_t r = 0; r < rows; ++r) {
        const auto tokens = in.require_tokens("matrix row");
        if (tokens.size() != 1 || tokens[0].size() != cols) {
            in.fail("matrix row must be " + std::to_string(cols) + " characters of '0'/'1'");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            const char ch = tokens[0][c];
            if (ch == '1') {
                m.set(r, c);
            } else if (ch != '0') {
                in.fail("matrix row may only contain '0' and '1'");
            }
        }
    }
    return m;
}

BitMatrix read_matrix(std::istream& in) {
    LineReader reader(in);
    return read_matrix(reader);
}

}  // namespace twistcode
