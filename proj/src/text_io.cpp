#include "twistcode/text_io.hpp"

#include <charconv>
#include <sstream>

namespace twistcode {

std::optional<std::vector<std::string>> LineReader::next_tokens() {
    std::string text;
    while (std::getline(in_, text)) {
        ++line_;
        std::istringstream fields(text);
        std::vector<std::string> tokens;
        for (std::string token; fields >> token;) tokens.push_back(std::move(token));
        if (tokens.empty() || tokens.front().starts_with('#')) continue;
        return tokens;
    }
    return std::nullopt;
}

std::vector<std::string> LineReader::require_tokens(std::string_view expected) {
    auto tokens = next_tokens();
    if (!tokens) throw ParseError(line_ + 1, "unexpected end of input, expected " + std::string(expected));
    return *std::move(tokens);
}

std::size_t LineReader::to_size(const std::string& token) const {
    std::size_t value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) fail("expected a nonnegative integer, got '" + token + "'");
    return value;
}

}  // namespace twistcode
