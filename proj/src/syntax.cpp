#include "justfp/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <unordered_map>

namespace justfp {

namespace {

constexpr long long kMaxExponent = 1'000'000;
constexpr std::size_t kMaxWordLength = std::size_t{1} << 22;

bool ident_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

bool ident_char(char c) {
  return ident_start(c) || (c >= '0' && c <= '9') || c == '_';
}

bool digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation presentation() {
    expect('<');
    std::vector<std::string> names;
    do {
      skip_space();
      std::size_t start = pos_;
      std::string name = ident();
      if (index_.contains(name)) {
        fail("duplicate generator '" + name + "'", {start, pos_});
      }
      index_.emplace(name, names.size());
      names.push_back(std::move(name));
    } while (accept(','));
    expect('|');

    std::vector<Word> relators;
    if (!peek_is('>')) {
      do {
        relators.push_back(relator());
      } while (accept(','));
    }
    expect('>');
    skip_space();
    if (pos_ != text_.size()) {
      fail("trailing input after presentation", {pos_, text_.size()});
    }
    return Presentation(std::move(names), std::move(relators));
  }

  Word standalone_word(Presentation const& p) {
    for (std::size_t g = 0; g < p.generator_count(); ++g) {
      index_.emplace(p.name(g), g);
    }
    Word lhs = word();
    Word result = lhs;
    if (accept('=')) {
      result = multiply(lhs, invert(word()));
    }
    skip_space();
    if (pos_ != text_.size()) {
      fail("trailing input after word", {pos_, text_.size()});
    }
    return result;
  }

 private:
  [[noreturn]] void fail(std::string message, SourceSpan span) const {
    throw ParseError(std::move(message), span);
  }

  [[noreturn]] void fail_here(std::string const& expected) const {
    if (pos_ >= text_.size()) {
      fail("expected " + expected + ", found end of input",
           {text_.size(), text_.size()});
    }
    fail("expected " + expected + ", found '" + std::string(1, text_[pos_]) +
             "'",
         {pos_, pos_ + 1});
  }

  // Whitespace and '#' comments running to the end of the line.
  void skip_space() {
    while (pos_ < text_.size()) {
      if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') {
          ++pos_;
        }
      } else if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool peek_is(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (peek_is(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail_here(std::string("'") + c + "'");
    }
  }

  std::string ident() {
    skip_space();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) {
      fail_here("generator name");
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  long long integer() {
    skip_space();
    std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
      skip_space();
    }
    if (pos_ >= text_.size() || !digit(text_[pos_])) {
      fail_here("integer exponent");
    }
    std::size_t digits_start = pos_;
    while (pos_ < text_.size() && digit(text_[pos_])) {
      ++pos_;
    }
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + digits_start,
                                     text_.data() + pos_, value);
    if (ec != std::errc() || value > kMaxExponent) {
      fail("exponent out of range (|n| <= " + std::to_string(kMaxExponent) +
               ")",
           {start, pos_});
    }
    return negative ? -value : value;
  }

  bool at_factor_start() {
    skip_space();
    return pos_ < text_.size() &&
           (ident_start(text_[pos_]) || text_[pos_] == '(');
  }

  Word word() {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '1' &&
        (pos_ + 1 >= text_.size() || !digit(text_[pos_ + 1]))) {
      ++pos_;
      return {};
    }
    if (!at_factor_start()) {
      fail_here("word");
    }
    std::size_t start = pos_;
    Word result = factor();
    for (;;) {
      if (accept('*')) {
        if (!at_factor_start()) {
          fail_here("factor after '*'");
        }
      } else if (!at_factor_start()) {
        break;
      }
      result = multiply(result, factor());
      if (result.size() > kMaxWordLength) {
        fail("word too long", {start, pos_});
      }
    }
    return result;
  }

  Word factor() {
    skip_space();
    std::size_t start = pos_;
    Word base;
    if (accept('(')) {
      base = word();
      expect(')');
    } else {
      std::string name = ident();
      auto it = index_.find(name);
      if (it == index_.end()) {
        fail("undeclared generator '" + name + "'", {start, pos_});
      }
      base = Word::generator(it->second);
    }
    if (accept('^')) {
      long long n = integer();
      if (static_cast<double>(base.size()) * static_cast<double>(n < 0 ? -n : n) >
          static_cast<double>(kMaxWordLength)) {
        fail("word too long", {start, pos_});
      }
      base = power(base, n);
    }
    return base;
  }

  Word relator() {
    skip_space();
    std::size_t start = pos_;
    Word lhs = word();
    Word result = lhs;
    if (accept('=')) {
      result = multiply(lhs, invert(word()));
    }
    if (result.empty()) {
      fail("relation is vacuous (reduces to the empty word)", {start, pos_});
    }
    return result;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace

ParseError::ParseError(std::string message, SourceSpan span)
    : std::runtime_error(message), message_(std::move(message)), span_(span) {}

std::string ParseError::render(std::string_view text) const {
  std::size_t at = std::min(span_.start, text.size());
  std::size_t line_start = 0;
  if (at > 0) {
    std::size_t nl = text.rfind('\n', at - 1);
    line_start = nl == std::string_view::npos ? 0 : nl + 1;
  }
  std::size_t line_end = text.find('\n', at);
  if (line_end == std::string_view::npos) {
    line_end = text.size();
  }
  auto line_no = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(at), '\n');
  std::size_t col = at - line_start + 1;
  std::size_t width = std::max<std::size_t>(1, std::min(span_.end, line_end) - at);

  std::string out = std::to_string(line_no) + ":" + std::to_string(col) +
                    ": " + message_ + "\n";
  out += std::string(text.substr(line_start, line_end - line_start)) + "\n";
  out += std::string(at - line_start, ' ') + std::string(width, '^') + "\n";
  return out;
}

Presentation parse_presentation(std::string_view text) {
  return Parser(text).presentation();
}

Word parse_word(Presentation const& p, std::string_view text) {
  return Parser(text).standalone_word(p);
}

std::string print_presentation(Presentation const& p) {
  std::string out = "< ";
  for (std::size_t g = 0; g < p.generator_count(); ++g) {
    if (g > 0) {
      out += ", ";
    }
    out += p.name(g);
  }
  out += " |";
  for (std::size_t i = 0; i < p.relator_count(); ++i) {
    out += i == 0 ? " " : ", ";
    out += p.format(p.relator(i));
  }
  out += " >";
  return out;
}

}  // namespace justfp
