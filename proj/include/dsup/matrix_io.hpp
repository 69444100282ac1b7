// matrix_io.hpp
// =============
// File formats.
//
// Pair matrix file: a JSON object {"n": int, "p": number, "A": [[..],..]}
// where A is an n x n array of complex entries, each encoded as a
// two-element [re, im] array of decimal numbers, row-major (row j, column
// k, 1-based in the documentation). Ragged rows are rejected. Numbers are
// emitted in shortest round-trip form, so write -> load is bit-exact.
//
// Generalized-permutation spec file: {"n": int, "p": number,
// "perm": [1-based ints], "phases": [[re, im], ...]}.

#pragma once

#include <fstream>
#include <optional>

#include <json.hpp>

#include "dsup/basis.hpp"

namespace dsup {

using json = nlohmann::json;

inline json complex_to_json(const Complex& z) {
  return json::array({z.real(), z.imag()});
}

inline Complex complex_from_json(const json& j, const char* where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw std::runtime_error(std::string("parse error: ") + where +
                             ": complex entries must be [re, im] number pairs");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

inline json matrix_to_json(const Matrix& A) {
  json rows = json::array();
  for (Eigen::Index j = 0; j < A.rows(); ++j) {
    json row = json::array();
    for (Eigen::Index k = 0; k < A.cols(); ++k) {
      row.push_back(complex_to_json(A(j, k)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("file error: cannot open " + path);
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::runtime_error("parse error: " + path + ": " + e.what());
  }
  return j;
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("file error: cannot open " + path + " for writing");
  }
  out << text;
  if (!out) {
    throw std::runtime_error("file error: failed writing " + path);
  }
}

/// Write {n, p, A} for the pair's transition matrix.
inline void save_pair(const BasisPair& pair, const std::string& path) {
  json j;
  j["n"] = pair.n;
  j["p"] = pair.holder.p;
  j["A"] = matrix_to_json(pair.A);
  write_text_file(path, j.dump(2) + "\n");
}

namespace detail {

inline int parse_dimension(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw std::runtime_error("parse error: " + path + ": missing integer field \"n\"");
  }
  const int n = j["n"].get<int>();
  if (n < 1) {
    throw std::runtime_error("parse error: " + path + ": n must be >= 1");
  }
  return n;
}

inline double parse_exponent(const json& j, const std::string& path,
                             std::optional<double> p_override) {
  if (p_override) return *p_override;
  if (!j.contains("p") || !j["p"].is_number()) {
    throw std::runtime_error("parse error: " + path + ": missing number field \"p\"");
  }
  return j["p"].get<double>();
}

}  // namespace detail

/// Load a pair matrix file. B is recomputed as the numerical inverse and the
/// isometry status sampled with default trials. The file's stored p is used
/// unless p_override is given.
inline BasisPair load_pair(const std::string& path,
                           std::optional<double> p_override = std::nullopt) {
  const json j = load_json_file(path);
  const int n = detail::parse_dimension(j, path);
  const double p = detail::parse_exponent(j, path, p_override);
  if (!j.contains("A") || !j["A"].is_array() || static_cast<int>(j["A"].size()) != n) {
    throw std::runtime_error("parse error: " + path + ": \"A\" must be an array of n rows");
  }
  Matrix A(n, n);
  for (int row = 0; row < n; ++row) {
    const json& r = j["A"][static_cast<std::size_t>(row)];
    if (!r.is_array() || static_cast<int>(r.size()) != n) {
      throw std::runtime_error("parse error: " + path + ": ragged row " +
                               std::to_string(row + 1) + " in \"A\"");
    }
    for (int col = 0; col < n; ++col) {
      A(row, col) = complex_from_json(r[static_cast<std::size_t>(col)], path.c_str());
    }
  }
  return make_pair_from_matrix(std::move(A), p);
}

/// Load a generalized-permutation spec file.
inline BasisPair load_genperm_spec(const std::string& path,
                                   std::optional<double> p_override = std::nullopt) {
  const json j = load_json_file(path);
  const int n = detail::parse_dimension(j, path);
  const double p = detail::parse_exponent(j, path, p_override);
  if (!j.contains("perm") || !j["perm"].is_array() ||
      static_cast<int>(j["perm"].size()) != n) {
    throw std::runtime_error("parse error: " + path + ": \"perm\" must be an array of n indices");
  }
  if (!j.contains("phases") || !j["phases"].is_array() ||
      static_cast<int>(j["phases"].size()) != n) {
    throw std::runtime_error("parse error: " + path + ": \"phases\" must be an array of n entries");
  }
  std::vector<int> perm;
  perm.reserve(static_cast<std::size_t>(n));
  for (const json& v : j["perm"]) {
    if (!v.is_number_integer()) {
      throw std::runtime_error("parse error: " + path + ": \"perm\" entries must be integers");
    }
    perm.push_back(v.get<int>());
  }
  std::vector<Complex> phases;
  phases.reserve(static_cast<std::size_t>(n));
  for (const json& v : j["phases"]) {
    phases.push_back(complex_from_json(v, path.c_str()));
  }
  return make_generalized_permutation_pair(n, p, perm, phases);
}

}  // namespace dsup
