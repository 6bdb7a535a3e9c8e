#ifndef POSKIT_JSON_IO_HPP
#define POSKIT_JSON_IO_HPP

#include "poskit/exactmat.hpp"
#include "poskit/siegel.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>

namespace poskit {

using json = nlohmann::ordered_json;

// Malformed input; the message names the offending field.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline Rational rational_from_json(const json& j, const std::string& field) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
  } catch (const std::invalid_argument& e) {
    throw InputError(field + ": " + e.what());
  }
  throw InputError(field + ": expected a rational as \"p/q\" string or integer");
}

inline json to_json(const Rational& x) { return to_string(x); }

inline RatMatrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) throw InputError(field + ": expected a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array()) throw InputError(field + ": expected an array of arrays");
  const std::size_t cols = j[0].size();
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw InputError(field + ": ragged or malformed row " + std::to_string(i));
    for (std::size_t c = 0; c < cols; ++c)
      m(i, c) = rational_from_json(j[i][c], field + "[" + std::to_string(i) + "][" + std::to_string(c) + "]");
  }
  return m;
}

inline json to_json(const RatMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

inline double real_from_json(const json& j, const std::string& field) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>()).convert_to<double>();
    } catch (const std::invalid_argument& e) {
      throw InputError(field + ": " + e.what());
    }
  }
  throw InputError(field + ": expected a number");
}

inline RMatrix real_matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw InputError(field + ": expected an array of arrays");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  RMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<Eigen::Index>(j[i].size()) != cols)
      throw InputError(field + ": ragged or malformed row " + std::to_string(i));
    for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = real_from_json(j[i][c], field);
  }
  return m;
}

// Complex entries are [re, im] pairs; plain numbers are read as real.
inline CMatrix complex_matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw InputError(field + ": expected an array of arrays");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<Eigen::Index>(j[i].size()) != cols)
      throw InputError(field + ": ragged or malformed row " + std::to_string(i));
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& e = j[i][c];
      if (e.is_array()) {
        if (e.size() != 2) throw InputError(field + ": complex entries are [re, im] pairs");
        m(i, c) = Complex(real_from_json(e[0], field), real_from_json(e[1], field));
      } else {
        m(i, c) = Complex(real_from_json(e, field), 0.0);
      }
    }
  }
  return m;
}

inline json to_json(const CMatrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(json::array({m(i, c).real(), m(i, c).imag()}));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace poskit

#endif  // POSKIT_JSON_IO_HPP
