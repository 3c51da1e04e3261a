// Copyright 2026 The lvgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LVGAME_IO_HPP_
#define LVGAME_IO_HPP_

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lvgame/errors.hpp"
#include "lvgame/regret.hpp"
#include "lvgame/types.hpp"

namespace lvgame {

// Documents are JSON with row-major nested arrays. Numbers are written with
// 17 significant digits so binary64 values survive a round trip exactly.

inline std::string format_number(double v) {
  if (!std::isfinite(v)) throw DomainError("cannot serialize a non-finite number");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline void write_vector(std::ostream& out, const Vector& v) {
  out << '[';
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out << (i ? ", " : "") << format_number(v[i]);
  }
  out << ']';
}

inline void write_matrix(std::ostream& out, const Matrix& M, const std::string& indent) {
  if (M.rows() == 0) {
    out << "[]";
    return;
  }
  out << "[\n";
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    out << indent << "  ";
    write_vector(out, M.row(i).transpose());
    out << (i + 1 < M.rows() ? ",\n" : "\n");
  }
  out << indent << ']';
}

inline void write_game_body(std::ostream& out, const PayoffMatrix& game,
                            const std::string& indent) {
  out << indent << "  \"m\": " << game.m() << ",\n";
  out << indent << "  \"A\": ";
  write_matrix(out, game.A, indent + "  ");
  out << '\n';
}

inline const nlohmann::json& field(const nlohmann::json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw ParseError(std::string("document is missing key \"") + key + "\"");
  }
  return doc.at(key);
}

inline double number(const nlohmann::json& v) {
  if (!v.is_number()) throw ParseError("expected a number");
  return v.get<double>();
}

inline Vector parse_vector(const nlohmann::json& v) {
  if (!v.is_array()) throw ParseError("expected an array of numbers");
  Vector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[static_cast<Eigen::Index>(i)] = number(v[i]);
  return out;
}

// `cols` disambiguates empty matrices.
inline Matrix parse_matrix(const nlohmann::json& v, Eigen::Index cols = -1) {
  if (!v.is_array()) throw ParseError("expected an array of rows");
  if (v.empty()) return Matrix(0, cols < 0 ? 0 : cols);
  const std::size_t width = v[0].is_array() ? v[0].size() : 0;
  Matrix out(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(width));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_array() || v[i].size() != width) throw ParseError("ragged matrix");
    for (std::size_t j = 0; j < width; ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = number(v[i][j]);
    }
  }
  return out;
}

inline int parse_dim(const nlohmann::json& doc, const char* key) {
  const auto& v = field(doc, key);
  if (!v.is_number_integer() || v.get<long long>() <= 0) {
    throw ParseError(std::string("\"") + key + "\" must be a positive integer");
  }
  return v.get<int>();
}

inline PayoffMatrix game_from(const nlohmann::json& doc) {
  const int m = parse_dim(doc, "m");
  PayoffMatrix game{parse_matrix(field(doc, "A"))};
  if (game.A.rows() != m || game.A.cols() != m) {
    throw ParseError("game: \"A\" must be " + std::to_string(m) + "x" + std::to_string(m));
  }
  return game;
}

}  // namespace detail

inline nlohmann::json parse_document(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
  if (!out) throw Error("failed writing " + path);
}

inline std::string to_document(const GlvSystem& sys) {
  std::ostringstream out;
  out << "{\n  \"n\": " << sys.dim() << ",\n  \"lambda\": ";
  detail::write_vector(out, sys.lambda);
  out << ",\n  \"A\": ";
  detail::write_matrix(out, sys.A, "  ");
  out << ",\n  \"B\": ";
  detail::write_matrix(out, sys.B, "  ");
  out << "\n}\n";
  return out.str();
}

inline std::string to_document(const PayoffMatrix& game) {
  std::ostringstream out;
  out << "{\n";
  detail::write_game_body(out, game, "");
  out << "}\n";
  return out.str();
}

inline std::string to_document(const GameEmbedding& e) {
  std::ostringstream out;
  out << "{\n  \"game\": {\n";
  detail::write_game_body(out, e.game, "  ");
  out << "  },\n  \"n\": " << e.n << ",\n  \"B_bar\": ";
  detail::write_matrix(out, e.B_bar, "  ");
  out << ",\n  \"B_tilde\": ";
  detail::write_matrix(out, e.B_tilde, "  ");
  out << ",\n  \"B_tilde_inv\": ";
  detail::write_matrix(out, e.B_tilde_inv, "  ");
  out << "\n}\n";
  return out.str();
}

inline std::string to_document(const PolynomialField& f) {
  std::ostringstream out;
  out << "{\n  \"coords\": [\n";
  for (std::size_t i = 0; i < f.coords.size(); ++i) {
    out << "    [";
    for (std::size_t j = 0; j < f.coords[i].size(); ++j) {
      const Monomial& mono = f.coords[i][j];
      out << (j ? ", " : "") << "{\"c\": " << format_number(mono.coeff) << ", \"e\": [";
      for (std::size_t k = 0; k < mono.exponents.size(); ++k) {
        out << (k ? ", " : "") << mono.exponents[k];
      }
      out << "]}";
    }
    out << (i + 1 < f.coords.size() ? "],\n" : "]\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

inline GlvSystem glv_from_document(const nlohmann::json& doc) {
  const int n = detail::parse_dim(doc, "n");
  GlvSystem sys;
  sys.lambda = detail::parse_vector(detail::field(doc, "lambda"));
  sys.A = detail::parse_matrix(detail::field(doc, "A"));
  if (sys.A.rows() == 0) sys.A.resize(n, 0);
  sys.B = detail::parse_matrix(detail::field(doc, "B"), n);
  if (sys.lambda.size() != n || sys.A.rows() != n || sys.B.cols() != n ||
      sys.B.rows() != sys.A.cols()) {
    throw ParseError("GLV document: inconsistent dimensions");
  }
  return sys;
}

inline PayoffMatrix game_from_document(const nlohmann::json& doc) {
  return detail::game_from(doc);
}

inline GameEmbedding embedding_from_document(const nlohmann::json& doc) {
  GameEmbedding e;
  e.game = detail::game_from(detail::field(doc, "game"));
  e.n = detail::parse_dim(doc, "n");
  e.B_bar = detail::parse_matrix(detail::field(doc, "B_bar"), e.n);
  e.B_tilde = detail::parse_matrix(detail::field(doc, "B_tilde"));
  e.B_tilde_inv = detail::parse_matrix(detail::field(doc, "B_tilde_inv"));
  const Eigen::Index size = e.game.m() - 1;
  if (e.B_bar.rows() != size || e.B_bar.cols() != e.n || e.B_tilde.rows() != size ||
      e.B_tilde.cols() != size || e.B_tilde_inv.rows() != size ||
      e.B_tilde_inv.cols() != size) {
    throw ParseError("embedding document: inconsistent dimensions");
  }
  return e;
}

inline PolynomialField field_from_document(const nlohmann::json& doc) {
  const auto& coords = detail::field(doc, "coords");
  if (!coords.is_array() || coords.empty()) throw ParseError("\"coords\" must be a non-empty array");
  PolynomialField f;
  f.n = static_cast<int>(coords.size());
  for (const auto& poly : coords) {
    if (!poly.is_array()) throw ParseError("each coordinate must be an array of monomials");
    Polynomial p;
    for (const auto& mono : poly) {
      Monomial m;
      m.coeff = detail::number(detail::field(mono, "c"));
      const auto& e = detail::field(mono, "e");
      if (!e.is_array()) throw ParseError("monomial \"e\" must be an array");
      for (const auto& k : e) {
        if (!k.is_number_integer() || k.get<long long>() < 0) {
          throw ParseError("monomial exponents must be non-negative integers");
        }
        m.exponents.push_back(k.get<int>());
      }
      if (m.exponents.size() != static_cast<std::size_t>(f.n)) {
        throw ParseError("monomial exponent vector has the wrong length");
      }
      p.push_back(std::move(m));
    }
    f.coords.push_back(std::move(p));
  }
  return f;
}

// Trajectory CSV: header t,s1,...,sk then one row per sample.
inline std::string trajectory_csv(const Trajectory& traj) {
  std::ostringstream out;
  out << 't';
  for (Eigen::Index j = 0; j < traj.states.cols(); ++j) out << ",s" << j + 1;
  out << '\n';
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    out << format_number(traj.times[k]);
    for (Eigen::Index j = 0; j < traj.states.cols(); ++j) {
      out << ',' << format_number(traj.states(static_cast<Eigen::Index>(k), j));
    }
    out << '\n';
  }
  return out.str();
}

inline Trajectory trajectory_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("t,", 0) != 0) {
    throw ParseError("trajectory CSV: missing t,s1,... header");
  }
  const auto cols = static_cast<Eigen::Index>(std::count(line.begin(), line.end(), ','));
  std::vector<double> times;
  std::vector<double> values;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string cell;
    Eigen::Index count = 0;
    while (std::getline(row, cell, ',')) {
      double v = 0.0;
      try {
        std::size_t used = 0;
        v = std::stod(cell, &used);
        if (used != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw ParseError("trajectory CSV: bad number on line " + std::to_string(lineno));
      }
      (count == 0 ? times : values).push_back(v);
      ++count;
    }
    if (count != cols + 1) {
      throw ParseError("trajectory CSV: wrong column count on line " + std::to_string(lineno));
    }
  }
  Trajectory traj;
  traj.times = std::move(times);
  traj.states.resize(static_cast<Eigen::Index>(traj.times.size()), cols);
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      traj.states(static_cast<Eigen::Index>(k), j) =
          values[k * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)];
    }
    if (k > 0 && !(traj.times[k] > traj.times[k - 1])) {
      throw ParseError("trajectory CSV: times must be strictly increasing");
    }
  }
  traj.meta.method = "csv";
  return traj;
}

// Regret CSV: t,avg_regret,best_action with 1-based actions.
inline std::string regret_csv(const RegretSeries& series) {
  std::ostringstream out;
  out << "t,avg_regret,best_action\n";
  for (std::size_t k = 0; k < series.times.size(); ++k) {
    out << format_number(series.times[k]) << ',' << format_number(series.avg_regret[k])
        << ',' << series.best_action[k] + 1 << '\n';
  }
  return out.str();
}

}  // namespace lvgame

#endif  // LVGAME_IO_HPP_
