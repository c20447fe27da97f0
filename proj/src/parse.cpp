#include "braidwrench/parse.hpp"

#include "braidwrench/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace braidwrench {

namespace {

// Expanded words are bounded to keep hostile inputs like (s1^9999)^9999
// from exhausting memory.
constexpr std::size_t kMaxLetters = std::size_t{1} << 26;

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::vector<Letter> parse() {
        std::vector<Letter> word = parse_word();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return word;
    }

  private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what, pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_factor_start() {
        skip_ws();
        if (pos_ >= text_.size()) return false;
        const char c = text_[pos_];
        return c == 's' || c == 'S' || c == '(';
    }

    long long parse_uint() {
        const std::size_t start = pos_;
        long long value = 0;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1'000'000'000) fail("number too large");
            ++pos_;
        }
        if (pos_ == start) fail("expected a number");
        return value;
    }

    long long parse_int() {
        bool negative = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            negative = true;
            ++pos_;
        }
        const long long value = parse_uint();
        return negative ? -value : value;
    }

    std::vector<Letter> parse_factor() {
        skip_ws();
        const char c = text_[pos_];
        if (c == 's' || c == 'S') {
            ++pos_;
            const std::size_t number_at = pos_;
            const long long index = parse_uint();
            if (index == 0)
                throw ParseError("generator index must be positive",
                                 number_at);
            return {static_cast<Letter>(c == 's' ? index : -index)};
        }
        if (c == '(') {
            ++pos_;
            std::vector<Letter> inner = parse_word();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ')')
                fail("expected ')'");
            ++pos_;
            return inner;
        }
        fail("expected generator or '('");
    }

    std::vector<Letter> parse_word() {
        std::vector<Letter> word;
        while (at_factor_start()) {
            std::vector<Letter> factor = parse_factor();
            long long exponent = 1;
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                exponent = parse_int();
            }
            const std::size_t reps =
                static_cast<std::size_t>(std::llabs(exponent));
            if (word.size() + factor.size() * reps > kMaxLetters)
                fail("expanded word too large");
            if (exponent < 0) {
                std::reverse(factor.begin(), factor.end());
                for (Letter& g : factor) g = -g;
            }
            for (std::size_t r = 0; r < reps; ++r)
                word.insert(word.end(), factor.begin(), factor.end());
        }
        return word;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

ParsedInput parse_braid(std::string_view text, std::optional<int> strands) {
    std::vector<Letter> letters = Parser(text).parse();
    int max_index = 0;
    for (Letter g : letters) max_index = std::max(max_index, std::abs(g));
    const int inferred = max_index + 1;
    if (strands && *strands < inferred)
        throw BadParams("explicit strand count " + std::to_string(*strands) +
                        " below required " + std::to_string(inferred));
    return ParsedInput{strands.value_or(inferred),
                       BraidWord(strands.value_or(inferred),
                                 std::move(letters))};
}

std::string print_braid(const BraidWord& w) {
    std::string out;
    for (Letter g : w.letters()) {
        if (!out.empty()) out += ' ';
        out += g > 0 ? 's' : 'S';
        out += std::to_string(std::abs(g));
    }
    return out;
}

}  // namespace braidwrench
