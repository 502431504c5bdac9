#include "twistcode/codes.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <thread>
#include <vector>

#include "twistcode/errors.hpp"
#include "twistcode/random.hpp"
#include "twistcode/text_io.hpp"

namespace twistcode {

std::string to_string(const Rational& q) {
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

LinearCode LinearCode::from_parity_check(BitMatrix parity_check) {
    const std::size_t n = parity_check.cols();
    const auto basis = kernel_basis(parity_check);
    auto generator = BitMatrix::from_rows(basis, n);
    return {n, std::move(parity_check), std::move(generator)};
}

LinearCode LinearCode::from_generator(const BitMatrix& generator) {
    const std::size_t n = generator.cols();
    auto [reduced, pivots] = row_reduce(generator);
    BitMatrix basis(pivots.size(), n);
    for (std::size_t r = 0; r < pivots.size(); ++r) basis.set_row(r, reduced.row(r));
    const auto checks = kernel_basis(basis);
    return {n, BitMatrix::from_rows(checks, n), std::move(basis)};
}

bool LinearCode::contains(const BitVector& word) const { return mat_vec(parity_check_, word).is_zero(); }

bool LinearCode::same_subspace(const LinearCode& other) const {
    if (length_ != other.length_ || dimension() != other.dimension()) return false;
    const auto mine = generator_.row_vectors();
    for (std::size_t r = 0; r < other.generator_.rows(); ++r) {
        if (!in_span(mine, other.generator_.row(r))) return false;
    }
    return true;
}

Rational rate(const LinearCode& code) {
    if (code.length() == 0) throw DomainError("rate is undefined for a code of length 0");
    return {static_cast<std::int64_t>(code.dimension()), static_cast<std::int64_t>(code.length())};
}

namespace {

// Walks all 2^free_bits combinations of rows [0, free_bits) xor'ed onto `base`
// in Gray-code order. Skips the all-zero word.
std::size_t gray_walk(const std::vector<std::vector<std::uint64_t>>& rows, std::size_t free_bits,
                      std::vector<std::uint64_t> word, std::size_t best) {
    auto weight_of = [](const std::vector<std::uint64_t>& w) {
        std::size_t total = 0;
        for (const auto x : w) total += static_cast<std::size_t>(std::popcount(x));
        return total;
    };
    if (const auto w = weight_of(word); w != 0) best = std::min(best, w);
    const std::uint64_t count = std::uint64_t{1} << free_bits;
    for (std::uint64_t i = 1; i < count; ++i) {
        const auto& row = rows[static_cast<std::size_t>(std::countr_zero(i))];
        std::size_t w = 0;
        for (std::size_t j = 0; j < word.size(); ++j) {
            word[j] ^= row[j];
            w += static_cast<std::size_t>(std::popcount(word[j]));
        }
        if (w != 0 && w < best) best = w;
    }
    return best;
}

}  // namespace

std::size_t min_distance(const LinearCode& code, const DistanceOptions& options) {
    const std::size_t k = code.dimension();
    if (k == 0) throw DomainError("minimum distance is undefined for the zero code");
    if (k > options.dim_cap) {
        throw DomainError("code dimension " + std::to_string(k) + " exceeds brute-force cap " +
                          std::to_string(options.dim_cap));
    }
    const auto& g = code.generator();
    std::vector<std::vector<std::uint64_t>> rows(k);
    for (std::size_t r = 0; r < k; ++r) rows[r].assign(g.row_words(r).begin(), g.row_words(r).end());
    const std::size_t stride = rows.front().size();

    // Prefix bits select fixed combinations of the last rows; each worker walks the rest.
    std::size_t prefix_bits = 0;
    while (prefix_bits + 1 < k && (std::size_t{1} << (prefix_bits + 1)) <= options.workers) ++prefix_bits;
    const std::size_t free_bits = k - prefix_bits;
    const std::size_t parts = std::size_t{1} << prefix_bits;

    std::vector<std::size_t> best(parts, code.length() + 1);
    auto run = [&](std::size_t part) {
        std::vector<std::uint64_t> base(stride, 0);
        for (std::size_t b = 0; b < prefix_bits; ++b) {
            if ((part >> b) & 1U) {
                for (std::size_t j = 0; j < stride; ++j) base[j] ^= rows[free_bits + b][j];
            }
        }
        best[part] = gray_walk(rows, free_bits, std::move(base), code.length() + 1);
    };
    if (parts == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(parts);
        for (std::size_t part = 0; part < parts; ++part) pool.emplace_back(run, part);
    }
    return *std::min_element(best.begin(), best.end());
}

Rational relative_distance(const LinearCode& code, const DistanceOptions& options) {
    const auto d = min_distance(code, options);
    return {static_cast<std::int64_t>(d), static_cast<std::int64_t>(code.length())};
}

namespace codes {

LinearCode repetition(std::size_t n) { return LinearCode::from_generator(BitMatrix::ones(n == 0 ? 0 : 1, n)); }

LinearCode parity(std::size_t n) { return LinearCode::from_parity_check(BitMatrix::ones(n == 0 ? 0 : 1, n)); }

LinearCode hamming_7_4() {
    BitMatrix h(3, 7);
    for (std::size_t c = 0; c < 7; ++c) {
        for (std::size_t r = 0; r < 3; ++r) {
            if (((c + 1) >> r) & 1U) h.set(r, c);
        }
    }
    return LinearCode::from_parity_check(std::move(h));
}

LinearCode full(std::size_t n) { return LinearCode::from_parity_check(BitMatrix(0, n)); }

LinearCode zero(std::size_t n) { return LinearCode::from_parity_check(BitMatrix::identity(n)); }

LinearCode random_code(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k > n) throw ValidationError("random_code: need k <= n");
    Rng rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        BitMatrix g(k, n);
        for (std::size_t r = 0; r < k; ++r) {
            for (auto& w : g.row_words(r)) w = rng.bits();
            if (n % 64 != 0) g.row_words(r).back() &= (std::uint64_t{1} << (n % 64)) - 1;
        }
        if (rank(g) == k) return LinearCode::from_generator(g);
    }
    throw DomainError("random_code: no full-rank generator after 1000 draws");
}

}  // namespace codes

void write_code(std::ostream& out, const LinearCode& code) {
    out << "parity\n";
    write_matrix(out, code.parity_check());
}

LinearCode read_code(std::istream& in) {
    LineReader reader(in);
    const auto kind = reader.require_tokens("'parity' or 'generator'");
    if (kind.size() != 1) reader.fail("expected 'parity' or 'generator'");
    if (kind[0] == "parity") return LinearCode::from_parity_check(read_matrix(reader));
    if (kind[0] == "generator") return LinearCode::from_generator(read_matrix(reader));
    reader.fail("expected 'parity' or 'generator', got '" + kind[0] + "'");
}

}  // namespace twistcode
