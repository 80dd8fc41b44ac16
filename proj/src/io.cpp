#include "borel/io.hpp"

#include <charconv>
#include <sstream>

namespace borel {

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, int line, int column_offset = 0)
      : text_(text), line_(line), offset_(column_offset) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  void skip_spaces() {
    while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, static_cast<int>(pos_ + offset_) + 1);
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  int number() {
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    int value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("expected a non-negative integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

 private:
  std::string_view text_;
  int line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

Monomial parse_factors(Cursor& cur, int n) {
  Monomial m(n);
  cur.skip_spaces();
  if (cur.peek() == '1') {
    cur.expect('1');
    cur.skip_spaces();
    if (!cur.done()) cur.fail("unexpected text after '1'");
    return m;
  }
  while (true) {
    cur.skip_spaces();
    cur.expect('x');
    const int var = cur.number();
    if (var < 1 || var > n) cur.fail("variable index outside [1, " + std::to_string(n) + "]");
    int power = 1;
    cur.skip_spaces();
    if (cur.peek() == '^') {
      cur.expect('^');
      power = cur.number();
    }
    m.set(var - 1, m[var - 1] + power);
    cur.skip_spaces();
    if (cur.done()) return m;
    cur.expect('*');
  }
}

int parse_header(std::string_view line, int line_no) {
  Cursor cur(line, line_no);
  cur.skip_spaces();
  cur.expect('n');
  cur.skip_spaces();
  cur.expect('=');
  cur.skip_spaces();
  const int n = cur.number();
  cur.skip_spaces();
  if (!cur.done()) cur.fail("unexpected text after variable count");
  if (n < 1 || n > kMaxVars) cur.fail("variable count outside [1, " + std::to_string(kMaxVars) + "]");
  return n;
}

// Parses lines [first, last) holding one ideal; `first` is the header.
MonomialIdeal parse_ideal_lines(const std::vector<std::string_view>& lines, std::size_t first,
                                std::size_t last) {
  while (first < last && trim(lines[first]).empty()) ++first;
  if (first == last) throw ParseError("missing 'n=<int>' header", static_cast<int>(first) + 1, 1);
  const int n = parse_header(lines[first], static_cast<int>(first) + 1);
  std::vector<Monomial> gens;
  for (std::size_t i = first + 1; i < last; ++i) {
    if (trim(lines[i]).empty()) continue;
    gens.push_back(parse_monomial(lines[i], n, static_cast<int>(i) + 1));
  }
  return minimalize(gens, n);
}

}  // namespace

std::string format_monomial(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (int i = 0; i < m.num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (m[i] > 1) {
      out += '^';
      out += std::to_string(m[i]);
    }
  }
  return out;
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::string out = "n=" + std::to_string(ideal.num_vars()) + "\n";
  for (const Monomial& g : ideal.gens()) out += format_monomial(g) + "\n";
  return out;
}

std::string format_corpus(const std::vector<MonomialIdeal>& ideals) {
  std::string out;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (i > 0) out += "---\n";
    out += format_ideal(ideals[i]);
  }
  return out;
}

Monomial parse_monomial(std::string_view text, int n, int line) {
  Cursor cur(text, line);
  return parse_factors(cur, n);
}

MonomialIdeal parse_ideal(std::string_view text) {
  const auto lines = split_lines(text);
  return parse_ideal_lines(lines, 0, lines.size());
}

std::vector<MonomialIdeal> parse_corpus(std::string_view text) {
  const auto lines = split_lines(text);
  std::vector<MonomialIdeal> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= lines.size(); ++i) {
    if (i == lines.size() || trim(lines[i]) == "---") {
      bool blank = true;
      for (std::size_t k = start; k < i; ++k) blank = blank && trim(lines[k]).empty();
      if (!blank || i < lines.size()) out.push_back(parse_ideal_lines(lines, start, i));
      start = i + 1;
    }
  }
  return out;
}

std::vector<Monomial> parse_monomial_list(std::string_view text, int n) {
  std::vector<Monomial> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view piece = text.substr(start, comma - start);
    if (trim(piece).empty()) {
      if (comma < text.size()) throw ParseError("empty generator", 1, static_cast<int>(start) + 1);
    } else {
      Cursor cur(piece, 1, start);
      out.push_back(parse_factors(cur, n));
    }
    start = comma + 1;
  }
  return out;
}

MonomialIdeal parse_inline_ideal(std::string_view text, int n) {
  return minimalize(parse_monomial_list(text, n), n);
}

}  // namespace borel
