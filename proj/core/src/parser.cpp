#include "mltl/parser.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace mltl {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_keyword(std::string_view w) {
  return w == "true" || w == "false" || w == "F" || w == "G" || w == "U" ||
         w == "R";
}

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  FormulaPtr parse() {
    FormulaPtr f = or_expr();
    skip_ws();
    if (pos_ != text_.size()) {
      fail("expected end of input", pos_, text_.size());
    }
    return f;
  }

private:
  [[noreturn]] void fail(const std::string &msg, std::size_t begin,
                         std::size_t end) {
    throw ParseError(msg + " at offset " + std::to_string(begin),
                     SourceSpan{begin, end});
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }

  char peek() { return text_[pos_]; }

  void expect(char c, const char *what) {
    skip_ws();
    if (pos_ == text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "' (" + what + ")", pos_,
           pos_ + 1);
    }
    ++pos_;
  }

  // Reads an identifier-shaped word, or empty if none starts here.
  std::string_view peek_word() {
    skip_ws();
    if (pos_ == text_.size() || !is_ident_start(text_[pos_])) {
      return {};
    }
    std::size_t end = pos_;
    while (end < text_.size() && is_ident_char(text_[end])) {
      ++end;
    }
    return text_.substr(pos_, end - pos_);
  }

  std::uint64_t natural() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) {
      fail("expected a natural number", start, start + 1);
    }
    std::uint64_t value = 0;
    auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (res.ec != std::errc{}) {
      fail("natural number out of range", start, pos_);
    }
    return value;
  }

  Interval interval() {
    expect('[', "interval");
    std::uint64_t lo = natural();
    expect(',', "interval");
    std::uint64_t hi = natural();
    expect(']', "interval");
    return Interval{lo, hi};
  }

  FormulaPtr or_expr() {
    FormulaPtr f = and_expr();
    while (!at_end() && peek() == '|') {
      ++pos_;
      f = make_or(std::move(f), and_expr());
    }
    return f;
  }

  FormulaPtr and_expr() {
    FormulaPtr f = bin_temp();
    while (!at_end() && peek() == '&') {
      ++pos_;
      f = make_and(std::move(f), bin_temp());
    }
    return f;
  }

  // Right-associative U/R tier.
  FormulaPtr bin_temp() {
    FormulaPtr lhs = unary();
    std::string_view w = peek_word();
    if (w == "U" || w == "R") {
      pos_ += w.size();
      Interval iv = interval();
      FormulaPtr rhs = bin_temp();
      return w == "U" ? make_until(std::move(lhs), std::move(rhs), iv)
                      : make_release(std::move(lhs), std::move(rhs), iv);
    }
    return lhs;
  }

  FormulaPtr unary() {
    skip_ws();
    if (pos_ == text_.size()) {
      fail("unexpected end of input", pos_, pos_);
    }
    if (peek() == '!') {
      ++pos_;
      return make_not(unary());
    }
    if (peek() == '(') {
      ++pos_;
      FormulaPtr f = or_expr();
      expect(')', "closing parenthesis");
      return f;
    }
    std::string_view w = peek_word();
    if (w.empty()) {
      fail("expected a formula", pos_, pos_ + 1);
    }
    if (w == "F" || w == "G") {
      pos_ += w.size();
      Interval iv = interval();
      FormulaPtr child = unary();
      return w == "F" ? make_future(std::move(child), iv)
                      : make_global(std::move(child), iv);
    }
    pos_ += w.size();
    if (w == "true") {
      return make_true();
    }
    if (w == "false") {
      return make_false();
    }
    if (is_keyword(w)) {
      fail("keyword '" + std::string(w) + "' cannot start a formula",
           pos_ - w.size(), pos_);
    }
    return make_prop(std::string(w));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_interval(std::ostream &os, const Interval &iv) {
  os << '[' << iv.lo << ',' << iv.hi << ']';
}

void print(std::ostream &os, const Formula &f) {
  switch (f.kind()) {
  case Kind::True:
    os << "true";
    return;
  case Kind::False:
    os << "false";
    return;
  case Kind::Prop:
    os << f.name();
    return;
  case Kind::Not:
    os << "(! ";
    print(os, *f.left());
    os << ')';
    return;
  case Kind::And:
  case Kind::Or:
    os << '(';
    print(os, *f.left());
    os << (f.kind() == Kind::And ? " & " : " | ");
    print(os, *f.right());
    os << ')';
    return;
  case Kind::Future:
  case Kind::Global:
    os << '(' << (f.kind() == Kind::Future ? 'F' : 'G');
    print_interval(os, f.interval());
    os << ' ';
    print(os, *f.left());
    os << ')';
    return;
  case Kind::Until:
  case Kind::Release:
    os << '(';
    print(os, *f.left());
    os << (f.kind() == Kind::Until ? " U" : " R");
    print_interval(os, f.interval());
    os << ' ';
    print(os, *f.right());
    os << ')';
    return;
  }
}

bool valid_trace_ident(std::string_view w) {
  if (w.empty()) {
    return false;
  }
  for (char c : w) {
    if (!is_ident_char(c)) {
      return false;
    }
  }
  return true;
}

std::string_view trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
    ++b;
  }
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
    --e;
  }
  return s.substr(b, e - b);
}

} // namespace

FormulaPtr parse_formula(std::string_view text) {
  return Parser(text).parse();
}

std::string print_formula(const Formula &f) {
  std::ostringstream os;
  print(os, f);
  return os.str();
}

Trace parse_trace(std::string_view text) {
  Trace trace;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    if (line_start == text.size()) {
      break; // trailing newline already consumed
    }
    std::size_t nl = text.find('\n', line_start);
    std::string_view line = nl == std::string_view::npos
                                ? text.substr(line_start)
                                : text.substr(line_start, nl - line_start);
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    std::string_view body = trim(line);
    State s;
    if (!body.empty() && body != "-") {
      std::size_t tok_start = 0;
      while (tok_start <= body.size()) {
        std::size_t comma = body.find(',', tok_start);
        std::string_view tok =
            comma == std::string_view::npos
                ? body.substr(tok_start)
                : body.substr(tok_start, comma - tok_start);
        std::string_view ident = trim(tok);
        if (!valid_trace_ident(ident)) {
          const std::size_t at = line_start + (tok.data() - line.data());
          throw ParseError("malformed identifier in trace state",
                           SourceSpan{at, at + tok.size()});
        }
        s.insert(std::string(ident)); // duplicates collapse
        if (comma == std::string_view::npos) {
          break;
        }
        tok_start = comma + 1;
      }
    }
    trace.push_back(std::move(s));
    if (nl == std::string_view::npos) {
      break;
    }
    line_start = nl + 1;
  }
  return trace;
}

std::string print_trace(const Trace &t) {
  std::string out;
  for (const State &s : t) {
    if (s.empty()) {
      out += '-';
    } else {
      bool first = true;
      for (const std::string &p : s) {
        if (!first) {
          out += ',';
        }
        out += p;
        first = false;
      }
    }
    out += '\n';
  }
  return out;
}

} // namespace mltl
