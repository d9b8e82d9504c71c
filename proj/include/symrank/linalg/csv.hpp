#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "symrank/exactfield/scalar.hpp"
#include "symrank/linalg/matrix.hpp"

namespace symrank {

// CSV: one matrix row per line, entries in scalar text form separated by
// commas. Blank lines and lines starting with '#' are ignored.

template <class T>
void write_csv(std::ostream& os, const Matrix<T>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) os << ',';
      os << m(i, j);
    }
    os << '\n';
  }
}

/// Reads a matrix of ExactScalars; callers pick the field afterwards.
inline Matrix<ExactScalar> read_csv_scalars(std::istream& is) {
  std::vector<ExactScalar> entries;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') continue;
    std::size_t count = 0;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      entries.push_back(parse_scalar(cell));
      ++count;
    }
    if (rows == 0) {
      cols = count;
    } else if (count != cols) {
      throw ParseError("csv row " + std::to_string(rows + 1) + " has " + std::to_string(count) +
                       " entries, expected " + std::to_string(cols));
    }
    ++rows;
  }
  return Matrix<ExactScalar>(rows, cols, std::move(entries));
}

inline bool has_irrational_entry(const Matrix<ExactScalar>& m) {
  for (const auto& e : m.entries())
    if (std::holds_alternative<QuadExt>(e) && !std::get<QuadExt>(e).is_rational()) return true;
  return false;
}

template <class F>
Matrix<F> read_csv(std::istream& is) {
  return read_csv_scalars(is).template map<F>([](const ExactScalar& s) { return scalar_cast<F>(s); });
}

}  // namespace symrank
