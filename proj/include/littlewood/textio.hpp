// Text format for polynomials, shared by the CLI and test fixtures.
//
// Univariate: comma-separated coefficients ascending from the constant term
// ("-1,0,1" is X^2 - 1). Bivariate: semicolon-separated rows, row i holding
// the coefficients of X^i over ascending Y powers ("1,1;1,1" is
// (1+X)(1+Y)). Whitespace is ignored; integers are decimal with an optional
// sign.
#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "littlewood/bipoly.hpp"
#include "littlewood/numeric.hpp"
#include "littlewood/unipoly.hpp"

namespace littlewood {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string strip_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

inline Int parse_int_token(const std::string& tok) {
  if (tok.empty()) throw ParseError("malformed integer: empty token");
  size_t i = (tok[0] == '+' || tok[0] == '-') ? 1 : 0;
  if (i == tok.size()) throw ParseError("malformed integer: '" + tok + "'");
  for (; i < tok.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(tok[i])))
      throw ParseError("malformed integer: '" + tok + "'");
  return Int(tok);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace detail

inline UniPoly parse_unipoly(std::string_view text) {
  const std::string s = detail::strip_whitespace(text);
  if (s.empty()) throw ParseError("empty input");
  std::vector<Int> coeffs;
  for (const auto& tok : detail::split(s, ',')) coeffs.push_back(detail::parse_int_token(tok));
  return UniPoly(std::move(coeffs));
}

inline BiPoly parse_bipoly(std::string_view text) {
  const std::string s = detail::strip_whitespace(text);
  if (s.empty()) throw ParseError("empty input");
  std::vector<std::vector<Int>> rows;
  for (const auto& row_text : detail::split(s, ';')) {
    std::vector<Int> row;
    for (const auto& tok : detail::split(row_text, ',')) row.push_back(detail::parse_int_token(tok));
    rows.push_back(std::move(row));
  }
  for (const auto& row : rows)
    if (row.size() != rows.front().size()) throw ParseError("ragged rows in bivariate input");
  return BiPoly::from_rows(rows);
}

inline std::string to_text(const UniPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= f.degree(); ++i) {
    if (i) out.push_back(',');
    out += f.coeff(i).get_str();
  }
  return out;
}

inline std::string to_text(const BiPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= f.deg_x(); ++i) {
    if (i) out.push_back(';');
    for (int j = 0; j <= f.deg_y(); ++j) {
      if (j) out.push_back(',');
      out += f.coeff(i, j).get_str();
    }
  }
  return out;
}

}  // namespace littlewood
