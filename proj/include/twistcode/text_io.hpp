#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twistcode/errors.hpp"

namespace twistcode {

/// Line-oriented reader shared by the text formats. Blank lines and lines
/// starting with '#' are skipped; line numbers refer to the physical file.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    /// Next meaningful line split on whitespace, or nullopt at end of input.
    std::optional<std::vector<std::string>> next_tokens();

    /// Like next_tokens but end of input is a ParseError mentioning `expected`.
    std::vector<std::string> require_tokens(std::string_view expected);

    std::size_t line() const noexcept { return line_; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }

    /// Parses an unsigned integer token or fails with a ParseError at the current line.
    std::size_t to_size(const std::string& token) const;

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

}  // namespace twistcode
