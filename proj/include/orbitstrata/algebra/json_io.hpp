#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "orbitstrata/algebra/lie.hpp"

// JSON encoding of scalars and 2x2 matrices.
//   matrix: {"re": [[..],[..]], "im": [[..],[..]]}, row-major
//   scalar: {"re": x, "im": y}
// Float values are JSON numbers; exact values are strings "p/q".

namespace orbitstrata::json_io {

using Json = nlohmann::json;

inline Json encode(const Complex& z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

inline Json encode(const GaussianRational& z) {
  return Json{{"re", to_string(z.real())}, {"im", to_string(z.imag())}};
}

inline Json encode_rational(const Rational& r) { return to_string(r); }

template <Scalar S>
Json encode(const Matrix2<S>& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (int r = 0; r < 2; ++r) {
    Json rr = Json::array();
    Json ri = Json::array();
    for (int c = 0; c < 2; ++c) {
      const Json z = encode(m(r, c));
      rr.push_back(z["re"]);
      ri.push_back(z["im"]);
    }
    re.push_back(rr);
    im.push_back(ri);
  }
  return Json{{"re", re}, {"im", im}};
}

inline Json encode(const SU2Element& g) { return encode(g.matrix()); }
inline Json encode(const Su2AlgebraElement& a) { return encode(a.matrix()); }
template <Scalar S>
Json encode(const SL2CElement<S>& g) {
  return encode(g.matrix());
}

template <class T>
Json encode_list(const std::vector<T>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(encode(x));
  return out;
}

/// Reads a real number field: JSON number, integer, or "p/q" string.
inline Rational decode_rational(const Json& j) {
  if (j.is_string()) {
    auto r = parse_rational(j.get<std::string>());
    if (!r) throw ParseError("malformed rational '" + j.get<std::string>() + "'");
    return *r;
  }
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number()) return Rational(j.get<double>());  // exact binary value
  throw ParseError("expected a number or a \"p/q\" string");
}

inline double decode_real(const Json& j) {
  if (j.is_number()) return j.get<double>();
  return decode_rational(j).convert_to<double>();
}

template <Scalar S>
S decode_scalar_parts(const Json& re, const Json& im) {
  if constexpr (is_exact_v<S>) {
    return GaussianRational(decode_rational(re), decode_rational(im));
  } else {
    return Complex(decode_real(re), decode_real(im));
  }
}

template <Scalar S>
S decode_scalar(const Json& j) {
  if (j.is_object()) return decode_scalar_parts<S>(j.at("re"), j.value("im", Json(0)));
  return decode_scalar_parts<S>(j, Json(0));
}

template <Scalar S>
Matrix2<S> decode_matrix(const Json& j) {
  if (!j.is_object() || !j.contains("re"))
    throw ParseError("matrix must be an object with \"re\" (and optional \"im\")");
  const Json& re = j.at("re");
  const Json im = j.contains("im") ? j.at("im") : Json{{0, 0}, {0, 0}};
  auto check = [](const Json& a) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_array() || !a[1].is_array() || a[0].size() != 2 ||
        a[1].size() != 2)
      throw ParseError("matrix parts must be 2x2 arrays");
  };
  check(re);
  check(im);
  Matrix2<S> m;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = decode_scalar_parts<S>(re[r][c], im[r][c]);
  return m;
}

template <Scalar S>
std::vector<Matrix2<S>> decode_matrix_list(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of matrices");
  std::vector<Matrix2<S>> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(decode_matrix<S>(x));
  return out;
}

inline SU2Element decode_su2(const Json& j, const Tolerance& tol = {}) {
  try {
    return SU2Element::from_matrix(decode_matrix<Complex>(j), tol);
  } catch (const InvalidElement& e) {
    throw ParseError(e.detail());
  }
}

inline Su2AlgebraElement decode_su2_algebra(const Json& j, const Tolerance& tol = {}) {
  try {
    return Su2AlgebraElement::from_matrix(decode_matrix<Complex>(j), tol);
  } catch (const InvalidElement& e) {
    throw ParseError(e.detail());
  }
}

}  // namespace orbitstrata::json_io
