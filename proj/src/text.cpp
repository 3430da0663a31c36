#include "purespin/text.hpp"

#include <cctype>
#include <cstdint>
#include <utility>
#include <vector>

namespace purespin {
namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;
  int line = 1, col = 1;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  char get() {
    const char c = s[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) get();
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(line, col, msg);
  }
};

bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

std::string read_digits(Cursor& c) {
  if (!digit(c.peek())) c.fail("expected digits");
  std::string out;
  while (digit(c.peek())) out += c.get();
  return out;
}

int read_index(Cursor& c, int limit, const char* what) {
  const int line = c.line, col = c.col;
  const std::string num = read_digits(c);
  if (num.size() > 2) throw ParseError(line, col, std::string(what) + " out of range");
  const int v = std::stoi(num);
  if (v < 1 || v > limit)
    throw ParseError(line, col, std::string(what) + " out of range");
  return v;
}

Rational read_rational(Cursor& c) {
  std::string text;
  if (c.peek() == '-') text += c.get();
  text += read_digits(c);
  if (c.peek() == '/') {
    c.get();
    const int line = c.line, col = c.col;
    const std::string den = read_digits(c);
    if (den.find_first_not_of('0') == std::string::npos)
      throw ParseError(line, col, "zero denominator");
    text += "/" + den;
  }
  return Rational(text);
}

Scalar read_scalar(Cursor& c) {
  if (c.peek() == '(') {
    c.get();
    c.skip_ws();
    Rational re = read_rational(c);
    c.skip_ws();
    if (c.peek() != ',') c.fail("expected ',' in complex scalar");
    c.get();
    c.skip_ws();
    Rational im = read_rational(c);
    c.skip_ws();
    if (c.peek() != ')') c.fail("expected ')' closing complex scalar");
    c.get();
    return Scalar(std::move(re), std::move(im));
  }
  return Scalar(read_rational(c));
}

// Cursor sits just past 't'. Applies the permutation sign to coeff.
std::uint32_t read_blade(Cursor& c, int n, Scalar& coeff) {
  std::vector<int> idx;
  if (c.peek() == '{') {
    c.get();
    bool has_comma = false;
    for (std::size_t p = c.pos; p < c.s.size() && c.s[p] != '}'; ++p)
      if (c.s[p] == ',') {
        has_comma = true;
        break;
      }
    if (has_comma) {
      for (;;) {
        c.skip_ws();
        idx.push_back(read_index(c, n, "blade index"));
        c.skip_ws();
        if (c.peek() == ',') {
          c.get();
          continue;
        }
        if (c.peek() == '}') {
          c.get();
          break;
        }
        c.fail("expected ',' or '}' in blade");
      }
    } else {
      while (c.peek() != '}') {
        if (c.done()) c.fail("unterminated blade braces");
        if (!digit(c.peek())) c.fail("expected index digit");
        const int v = c.peek() - '0';
        if (v < 1 || v > n) c.fail("blade index out of range");
        idx.push_back(v);
        c.get();
      }
      c.get();
      if (idx.empty()) c.fail("empty blade braces");
    }
  } else {
    idx.push_back(read_index(c, n, "blade index"));
  }

  std::uint32_t mask = 0;
  for (const int v : idx) {
    const std::uint32_t b = 1u << (v - 1);
    if (mask & b) c.fail("repeated blade index");
    mask |= b;
  }
  int inversions = 0;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (idx[i] > idx[j]) ++inversions;
  if (inversions & 1) coeff = -coeff;
  return mask;
}

Scalar read_sign(Cursor& c, bool first) {
  c.skip_ws();
  if (c.peek() == '-') {
    c.get();
    return Scalar(-1);
  }
  if (c.peek() == '+') {
    c.get();
    return Scalar(1);
  }
  if (!first) c.fail("expected '+' or '-' between terms");
  return Scalar(1);
}

bool real_negative(const Scalar& s) { return s.is_real() && s.re() < 0; }

std::string blade_token(std::uint32_t mask) {
  if (mask == 0) return "";
  std::vector<int> idx;
  for (int i = 1; i <= kMaxN; ++i)
    if (mask & (1u << (i - 1))) idx.push_back(i);
  if (idx.size() == 1) return "t" + std::to_string(idx[0]);
  const bool wide = idx.back() > 9;
  std::string out = "t{";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k > 0 && wide) out += ",";
    out += std::to_string(idx[k]);
  }
  return out + "}";
}

}  // namespace

Scalar parse_scalar(const std::string& text) {
  Cursor c{text};
  c.skip_ws();
  if (c.done()) c.fail("empty input");
  Scalar s = read_scalar(c);
  c.skip_ws();
  if (!c.done()) c.fail("trailing characters after scalar");
  return s;
}

Spinor parse_spinor(int n, const std::string& text) {
  Spinor out(n);
  Cursor c{text};
  c.skip_ws();
  if (c.done()) c.fail("empty input");
  bool first = true;
  for (;;) {
    Scalar coeff = read_sign(c, first);
    first = false;
    c.skip_ws();
    std::uint32_t mask = 0;
    if (c.peek() == 't') {
      c.get();
      mask = read_blade(c, n, coeff);
    } else {
      coeff *= read_scalar(c);
      c.skip_ws();
      if (c.peek() == '*') {
        c.get();
        c.skip_ws();
        if (c.peek() != 't') c.fail("expected blade after '*'");
        c.get();
        mask = read_blade(c, n, coeff);
      }
    }
    out.add_term(mask, coeff);
    c.skip_ws();
    if (c.done()) break;
  }
  return out;
}

PhaseVector parse_phase_vector(int n, const std::string& text) {
  PhaseVector out(n);
  Cursor c{text};
  c.skip_ws();
  if (c.done()) c.fail("empty input");
  bool first = true;
  const auto component = [&](Scalar coeff) {
    const char kind = c.get();
    const int i = read_index(c, n, "frame index");
    auto& slot = (kind == 'e') ? out.e[std::size_t(i - 1)]
                               : out.theta[std::size_t(i - 1)];
    slot += coeff;
  };
  for (;;) {
    Scalar coeff = read_sign(c, first);
    first = false;
    c.skip_ws();
    if (c.peek() == 'e' || c.peek() == 't') {
      component(coeff);
    } else {
      coeff *= read_scalar(c);
      c.skip_ws();
      if (c.peek() == '*') {
        c.get();
        c.skip_ws();
        if (c.peek() != 'e' && c.peek() != 't')
          c.fail("expected frame component after '*'");
        component(coeff);
      } else if (!coeff.is_zero()) {
        c.fail("expected '*' and a frame component");
      }
    }
    c.skip_ws();
    if (c.done()) break;
  }
  return out;
}

std::string print_scalar(const Scalar& s) { return s.str(); }

std::string print_spinor(const Spinor& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mask, c0] : s.terms()) {
    const bool neg = real_negative(c0);
    const Scalar shown = neg ? -c0 : c0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const std::string bl = blade_token(mask);
    if (bl.empty())
      out += shown.str();
    else if (shown.is_one())
      out += bl;
    else
      out += shown.str() + "*" + bl;
  }
  return out;
}

std::string print_phase_vector(const PhaseVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  const auto emit = [&](char kind, int i, const Scalar& c0) {
    if (c0.is_zero()) return;
    const bool neg = real_negative(c0);
    const Scalar shown = neg ? -c0 : c0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const std::string tok = std::string(1, kind) + std::to_string(i);
    if (shown.is_one())
      out += tok;
    else
      out += shown.str() + "*" + tok;
  };
  for (int i = 1; i <= v.n; ++i) emit('e', i, v.e[std::size_t(i - 1)]);
  for (int i = 1; i <= v.n; ++i) emit('t', i, v.theta[std::size_t(i - 1)]);
  return out;
}

}  // namespace purespin
