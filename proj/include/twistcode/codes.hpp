#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <boost/rational.hpp>

#include "twistcode/bitmatrix.hpp"

namespace twistcode {

using Rational = boost::rational<std::int64_t>;

/// "p/q" with q >= 1, the form used in every JSON report.
std::string to_string(const Rational& q);

/// Binary linear code C in F2^N. Both representations are always available:
/// the parity-check matrix is kept exactly as supplied (redundant rows allowed),
/// the generator is a full-row-rank basis.
class LinearCode {
public:
    static LinearCode from_parity_check(BitMatrix parity_check);
    /// Rank-deficient generators are reduced to a basis.
    static LinearCode from_generator(const BitMatrix& generator);

    std::size_t length() const noexcept { return length_; }
    std::size_t dimension() const noexcept { return generator_.rows(); }

    const BitMatrix& parity_check() const noexcept { return parity_check_; }
    const BitMatrix& generator() const noexcept { return generator_; }

    bool contains(const BitVector& word) const;
    /// Same subspace of F2^N, checked by mutual span containment of the generators.
    bool same_subspace(const LinearCode& other) const;

private:
    LinearCode(std::size_t length, BitMatrix parity_check, BitMatrix generator)
        : length_(length), parity_check_(std::move(parity_check)), generator_(std::move(generator)) {}

    std::size_t length_;
    BitMatrix parity_check_;
    BitMatrix generator_;
};

inline bool is_codeword(const LinearCode& code, const BitVector& word) { return code.contains(word); }

/// dim C / N. Throws DomainError when N == 0.
Rational rate(const LinearCode& code);

struct DistanceOptions {
    std::size_t dim_cap = 26;
    /// Message space is split by prefix across this many threads (rounded down
    /// to a power of two). The result does not depend on the value.
    unsigned workers = 1;
};

/// Minimum weight over all nonzero codewords, by Gray-code enumeration of the
/// message space. Throws DomainError for the zero code or when dim > dim_cap.
std::size_t min_distance(const LinearCode& code, const DistanceOptions& options = {});
Rational relative_distance(const LinearCode& code, const DistanceOptions& options = {});

namespace codes {

LinearCode repetition(std::size_t n);
/// Even-weight code of length n.
LinearCode parity(std::size_t n);
/// Parity check whose column j is the binary expansion of j + 1 (least significant bit in row 0).
LinearCode hamming_7_4();
LinearCode full(std::size_t n);
LinearCode zero(std::size_t n);
/// Dimension exactly k; generator rows are redrawn until full rank (at most 1000 tries).
LinearCode random_code(std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace codes

// Code text format: a line "parity" or "generator", then the matrix text format.
void write_code(std::ostream& out, const LinearCode& code);
LinearCode read_code(std::istream& in);

}  // namespace twistcode
