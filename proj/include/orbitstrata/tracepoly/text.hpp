#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "orbitstrata/tracepoly/polynomial.hpp"

namespace orbitstrata::tracepoly {

namespace detail {

/// Recursive-descent reader for
///   poly   := ['+'|'-'] term { ('+'|'-') term }
///   term   := coeff ['*' factor {'*' factor}] | factor {'*' factor}
///   coeff  := digits ['/' digits]
///   factor := 't[' int {',' int} ']' ['^' digits]
class PolyReader {
 public:
  PolyReader(std::string_view text, int n) : s_(text), n_(n) {}

  TracePolynomial parse() {
    skip_ws();
    if (pos_ == s_.size()) throw SyntaxError("empty polynomial", pos_);
    TracePolynomial out;
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw SyntaxError("expected '+' or '-'", pos_);
      }
      first = false;
      out += term() * Rational(sign);
      skip_ws();
      if (pos_ == s_.size()) break;
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) throw SyntaxError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  BigInt digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw SyntaxError("expected digits", start);
    return BigInt(std::string(s_.substr(start, pos_ - start)));
  }

  int small_int() {
    const std::size_t start = pos_;
    const BigInt v = digits();
    if (v > 1000000) throw SyntaxError("integer too large", start);
    return static_cast<int>(v);
  }

  TracePolynomial term() {
    Rational coeff = 1;
    Monomial mono;
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      BigInt num = digits();
      BigInt den = 1;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        den = digits();
        if (den == 0) throw SyntaxError("zero denominator", start);
      }
      coeff = Rational(num) / Rational(den);
      skip_ws();
      if (peek() != '*') return TracePolynomial(coeff);
      ++pos_;
    }
    while (need_factor) {
      mono = mono * factor();
      skip_ws();
      if (peek() == '*') {
        ++pos_;
      } else {
        need_factor = false;
      }
    }
    return TracePolynomial(mono, coeff);
  }

  Monomial factor() {
    skip_ws();
    const std::size_t start = pos_;
    if (peek() != 't') throw SyntaxError("expected a factor t[...]", pos_);
    ++pos_;
    expect('[');
    std::vector<int> idx;
    skip_ws();
    idx.push_back(small_int());
    skip_ws();
    while (peek() == ',') {
      ++pos_;
      idx.push_back(small_int());
      skip_ws();
    }
    expect(']');
    int exponent = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      exponent = small_int();
      if (exponent > 64) throw SyntaxError("exponent too large", start);
    }
    if (idx.size() > 3) throw SyntaxError("at most three indices per factor", start);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      if (idx[k] < 1) throw IndexError("index 0 at offset " + std::to_string(start) + "; indices start at 1");
      if (n_ > 0 && idx[k] > n_)
        throw IndexError("index " + std::to_string(idx[k]) + " exceeds N at offset " + std::to_string(start));
      if (k > 0 && idx[k] <= idx[k - 1])
        throw IndexError("indices must be strictly increasing at offset " + std::to_string(start));
    }
    Monomial one;
    if (idx.size() == 1) one = Monomial({idx[0]});
    if (idx.size() == 2) one = Monomial({}, {Pair{idx[0], idx[1]}});
    if (idx.size() == 3) one = Monomial({}, {}, {Triple{idx[0], idx[1], idx[2]}});
    Monomial out;
    for (int e = 0; e < exponent; ++e) out = out * one;
    return out;
  }

  std::string_view s_;
  int n_;
  std::size_t pos_ = 0;
};

template <class T, class F>
void emit_powers(std::ostringstream& os, const std::vector<T>& xs, bool& first, F&& name) {
  for (std::size_t i = 0; i < xs.size();) {
    std::size_t j = i;
    while (j < xs.size() && xs[j] == xs[i]) ++j;
    if (!first) os << '*';
    first = false;
    os << name(xs[i]);
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
}

}  // namespace detail

/// Parses the textual polynomial grammar. n > 0 additionally bounds indices.
inline TracePolynomial parse_poly(std::string_view text, int n = 0) {
  return detail::PolyReader(text, n).parse();
}

/// Canonical text: terms by decreasing monomial order, factors sorted,
/// repeated factors written with '^'.
inline std::string format_poly(const TracePolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first_term) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first_term = false;
    bool first = true;
    if (m.is_one() || mag != 1) {
      os << mag.str();
      first = false;
    }
    detail::emit_powers(os, m.I, first, [](int i) { return "t[" + std::to_string(i) + "]"; });
    detail::emit_powers(os, m.K, first, [](const Pair& q) {
      return "t[" + std::to_string(q[0]) + "," + std::to_string(q[1]) + "]";
    });
    detail::emit_powers(os, m.L, first, [](const Triple& t) {
      return "t[" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "]";
    });
  }
  return os.str();
}

}  // namespace orbitstrata::tracepoly
