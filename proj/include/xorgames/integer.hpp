// Copyright 2026 The xorgames Authors
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

#pragma once

// Exact integer and rational linear algebra: column-style Hermite normal
// form, saturated integer kernel lattices and exact rational solves.
//
// All arithmetic is arbitrary precision. HNF intermediates grow quickly and
// fixed-width integers would silently overflow on modest inputs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "xorgames/error.hpp"
#include "xorgames/game.hpp"

namespace xorgames {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<BigInt>;
using RationalVector = std::vector<BigRational>;

inline std::string to_string(const BigRational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

/// Parses "p/q" or "p". Throws InvalidParameter on malformed text or q = 0.
inline BigRational parse_rational(const std::string& text) {
  auto parse_int = [&](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw InvalidParameter("malformed rational '" + text + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') throw InvalidParameter("malformed rational '" + text + "'");
    }
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return BigRational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InvalidParameter("zero denominator in '" + text + "'");
  return BigRational(num, den);
}

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw DimensionMismatch("ragged rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  static IntMatrix from_vectors(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw DimensionMismatch("ragged rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  static IntMatrix from_game_matrix(const GameMatrix& a) {
    IntMatrix m(a.rows, a.cols);
    for (std::size_t i = 0; i < a.entries.size(); ++i) m.data_[i] = a.entries[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  IntVector column(std::size_t c) const {
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  IntVector multiply(const IntVector& x) const {
    if (x.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    IntVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (!x[c].is_zero()) y[r] += (*this)(r, c) * x[c];
      }
    }
    return y;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    IntMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const BigInt& v = a(i, l);
        if (v.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += v * b(l, j);
      }
    }
    return p;
  }

  std::string debug_string() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out << (c ? " " : "") << (*this)(r, c);
      out << '\n';
    }
    return out.str();
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

struct HermiteResult {
  IntMatrix h;  // H = M * U
  IntMatrix u;  // unimodular
  /// Row index of each pivot; pivot i sits in column i of H. Columns past
  /// rank() are zero.
  std::vector<std::size_t> pivot_rows;

  std::size_t rank() const noexcept { return pivot_rows.size(); }
};

namespace detail {

/// Quotient of a / b rounded to the nearest integer.
inline BigInt nearest_quotient(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  BigInt r = a - q * b;
  if (2 * abs(r) > abs(b)) q += (r.sign() == b.sign()) ? 1 : -1;
  return q;
}

/// floor(a / b) for b > 0.
inline BigInt floor_quotient(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (q * b > a) --q;
  return q;
}

/// Column store used during elimination: mcol[c] is column c of M, ucol[c]
/// the matching column of U.
struct ColumnPair {
  std::vector<IntVector> mcol;
  std::vector<IntVector> ucol;

  void axpy(std::size_t dst, const BigInt& factor, std::size_t src) {
    if (factor.is_zero()) return;
    for (std::size_t r = 0; r < mcol[dst].size(); ++r) {
      if (!mcol[src][r].is_zero()) mcol[dst][r] -= factor * mcol[src][r];
    }
    for (std::size_t r = 0; r < ucol[dst].size(); ++r) {
      if (!ucol[src][r].is_zero()) ucol[dst][r] -= factor * ucol[src][r];
    }
  }

  void swap(std::size_t a, std::size_t b) {
    std::swap(mcol[a], mcol[b]);
    std::swap(ucol[a], ucol[b]);
  }

  void negate(std::size_t c) {
    for (BigInt& v : mcol[c]) v = -v;
    for (BigInt& v : ucol[c]) v = -v;
  }
};

}  // namespace detail

/// Column-style Hermite normal form: H = M U with U unimodular, H in column
/// echelon form (pivot i in column i at row pivot_rows[i], strictly below the
/// previous pivot), positive pivots, and entries left of each pivot reduced
/// into [0, pivot).
inline HermiteResult hnf(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  detail::ColumnPair w;
  w.mcol.resize(cols);
  w.ucol.assign(cols, IntVector(cols));
  for (std::size_t c = 0; c < cols; ++c) {
    w.mcol[c] = m.column(c);
    w.ucol[c][c] = 1;
  }

  HermiteResult result;
  std::size_t p = 0;
  for (std::size_t r = 0; r < rows && p < cols; ++r) {
    bool has_pivot = false;
    for (;;) {
      // Euclid across the row: the smallest nonzero entry becomes the pivot
      // and reduces every other entry.
      std::size_t best = cols;
      for (std::size_t c = p; c < cols; ++c) {
        if (w.mcol[c][r].is_zero()) continue;
        if (best == cols || abs(w.mcol[c][r]) < abs(w.mcol[best][r])) best = c;
      }
      if (best == cols) break;
      has_pivot = true;
      w.swap(p, best);
      bool done = true;
      for (std::size_t c = p + 1; c < cols; ++c) {
        if (w.mcol[c][r].is_zero()) continue;
        w.axpy(c, detail::nearest_quotient(w.mcol[c][r], w.mcol[p][r]), p);
        if (!w.mcol[c][r].is_zero()) done = false;
      }
      if (done) break;
    }
    if (!has_pivot) continue;
    if (w.mcol[p][r].sign() < 0) w.negate(p);
    for (std::size_t c = 0; c < p; ++c) {
      w.axpy(c, detail::floor_quotient(w.mcol[c][r], w.mcol[p][r]), p);
    }
    result.pivot_rows.push_back(r);
    ++p;
  }

  result.h = IntMatrix(rows, cols);
  result.u = IntMatrix(cols, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < rows; ++r) result.h(r, c) = w.mcol[c][r];
    for (std::size_t r = 0; r < cols; ++r) result.u(r, c) = w.ucol[c][r];
  }
  return result;
}

/// Lattice basis of {z in Z^cols : M z = 0}, read off the columns of U that
/// map to zero columns of H. Because U is unimodular the basis is saturated.
inline std::vector<IntVector> integer_kernel_basis(const IntMatrix& m) {
  HermiteResult r = hnf(m);
  std::vector<IntVector> basis;
  for (std::size_t c = r.rank(); c < m.cols(); ++c) basis.push_back(r.u.column(c));
  return basis;
}

/// Exact solution of M x = b over Q (free variables set to zero), or nullopt
/// when the system is inconsistent.
inline std::optional<RationalVector> rational_solve(const IntMatrix& m, const IntVector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("rational_solve: rhs length differs from rows");
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<RationalVector> aug(rows, RationalVector(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug[r][c] = BigRational(m(r, c));
    aug[r][cols] = BigRational(b[r]);
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t r = next; r < rows; ++r) {
      if (aug[r][c].is_zero()) continue;
      if (best == rows || abs(boost::multiprecision::numerator(aug[r][c])) >
                              abs(boost::multiprecision::numerator(aug[best][c]))) {
        best = r;
      }
    }
    if (best == rows) continue;
    std::swap(aug[best], aug[next]);
    const BigRational inv = 1 / aug[next][c];
    for (std::size_t j = c; j <= cols; ++j) aug[next][j] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == next || aug[r][c].is_zero()) continue;
      const BigRational f = aug[r][c];
      for (std::size_t j = c; j <= cols; ++j) {
        if (!aug[next][j].is_zero()) aug[r][j] -= f * aug[next][j];
      }
    }
    pivot_cols.push_back(c);
    ++next;
  }
  for (std::size_t r = next; r < rows; ++r) {
    if (!aug[r][cols].is_zero()) return std::nullopt;
  }
  RationalVector x(cols);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = aug[i][cols];
  return x;
}

}  // namespace xorgames
