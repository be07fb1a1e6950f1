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

// Bit-packed linear algebra over F2.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "xorgames/error.hpp"

namespace xorgames {

class F2Vector {
 public:
  F2Vector() = default;
  explicit F2Vector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static F2Vector from_bits(const std::vector<std::uint8_t>& bits) {
    F2Vector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) v.set(i, bits[i] & 1u);
    return v;
  }

  std::size_t size() const noexcept { return size_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }

  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  F2Vector& operator^=(const F2Vector& other) {
    if (other.size_ != size_) throw DimensionMismatch("F2 vector sizes differ");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
  }

  friend F2Vector operator^(F2Vector a, const F2Vector& b) { return a ^= b; }

  std::size_t popcount() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  bool is_zero() const {
    for (std::uint64_t w : words_) {
      if (w) return false;
    }
    return true;
  }

  /// Inner product over F2.
  bool dot(const F2Vector& other) const {
    if (other.size_ != size_) throw DimensionMismatch("F2 vector sizes differ");
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
  }

  std::vector<std::uint8_t> to_bits() const {
    std::vector<std::uint8_t> bits(size_);
    for (std::size_t i = 0; i < size_; ++i) bits[i] = get(i) ? 1 : 0;
    return bits;
  }

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const F2Vector&, const F2Vector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, F2Vector(cols)) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return data_.at(r).get(c); }
  void set(std::size_t r, std::size_t c, bool v) { data_.at(r).set(c, v); }

  const F2Vector& row(std::size_t r) const { return data_.at(r); }
  F2Vector& row(std::size_t r) { return data_.at(r); }

  F2Matrix transpose() const {
    F2Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (get(r, c)) t.set(c, r, true);
      }
    }
    return t;
  }

  F2Vector multiply(const F2Vector& x) const {
    if (x.size() != cols_) throw DimensionMismatch("F2 matrix-vector shape mismatch");
    F2Vector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) y.set(r, data_[r].dot(x));
    return y;
  }

  /// Row-major, space-separated; one row per line.
  std::string debug_string() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out << (c ? " " : "") << (get(r, c) ? 1 : 0);
      out << '\n';
    }
    return out.str();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F2Vector> data_;
};

/// Reduced row echelon form of a matrix, with the pivot column of each
/// nonzero row. Rows past `pivots.size()` are zero.
struct F2Echelon {
  F2Matrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
};

inline F2Echelon f2_echelon(F2Matrix m) {
  F2Echelon e;
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < m.cols() && next_row < m.rows(); ++c) {
    std::size_t pivot = next_row;
    while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(m.row(pivot), m.row(next_row));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != next_row && m.get(r, c)) m.row(r) ^= m.row(next_row);
    }
    e.pivots.push_back(c);
    ++next_row;
  }
  e.reduced = std::move(m);
  return e;
}

inline std::size_t f2_rank(const F2Matrix& m) { return f2_echelon(m).rank(); }

/// Some x with M x = b, or nullopt when the system is inconsistent.
inline std::optional<F2Vector> f2_solve(const F2Matrix& m, const F2Vector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("f2_solve: rhs length differs from rows");
  F2Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.get(r, c)) aug.set(r, c, true);
    }
    if (b.get(r)) aug.set(r, m.cols(), true);
  }
  F2Echelon e = f2_echelon(std::move(aug));
  F2Vector x(m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == m.cols()) return std::nullopt;
    if (e.reduced.get(i, m.cols())) x.set(e.pivots[i], true);
  }
  return x;
}

/// Basis of {x : M x = 0}; one vector per free column.
inline std::vector<F2Vector> f2_kernel_basis(const F2Matrix& m) {
  F2Echelon e = f2_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<F2Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    F2Vector v(m.cols());
    v.set(f, true);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      if (e.reduced.get(i, f)) v.set(e.pivots[i], true);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Basis of the column space of M, in reduced echelon form: each vector has
/// its leading (lowest-index) one at a distinct position that is zero in all
/// other basis vectors.
inline F2Echelon f2_column_space(const F2Matrix& m) {
  F2Echelon e = f2_echelon(m.transpose());
  F2Matrix rows(e.rank(), m.rows());
  for (std::size_t i = 0; i < e.rank(); ++i) rows.row(i) = e.reduced.row(i);
  e.reduced = std::move(rows);
  return e;
}

}  // namespace xorgames
