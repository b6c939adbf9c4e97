// Copyright 2026 The rookcodes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rookcodes/field.hpp"
#include "rookcodes/random.hpp"

namespace rookcodes {

/// Dense row-major matrix over a prime field. The field is not stored;
/// every arithmetic helper takes it explicitly.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t rows, std::size_t cols);
  /// Throws Error(kDimensionMismatch) if entries.size() != rows * cols.
  FieldMatrix(std::size_t rows, std::size_t cols, std::vector<Fe> entries);

  static FieldMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Fe& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  Fe operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<Fe> entries() { return entries_; }
  std::span<const Fe> entries() const { return entries_; }

  bool same_shape(const FieldMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fe> entries_;
};

/// Schoolbook product; counts rows*inner*cols multiplications.
FieldMatrix mat_mul(const PrimeField& field, const FieldMatrix& a,
                    const FieldMatrix& b, OpCounter& counter);

FieldMatrix mat_add(const PrimeField& field, const FieldMatrix& a,
                    const FieldMatrix& b, OpCounter& counter);

FieldMatrix mat_scale(const PrimeField& field, Fe s, const FieldMatrix& a,
                      OpCounter& counter);

/// acc += s * a
void mat_axpy(const PrimeField& field, Fe s, const FieldMatrix& a,
              FieldMatrix& acc, OpCounter& counter);

/// Solves V * C = rhs where C and rhs are columns of equally shaped matrix
/// blocks. Gaussian elimination taking the first nonzero pivot in each
/// column. Throws Error(kSingularMatrix) if V is singular and
/// Error(kDimensionMismatch) on shape problems. counter.invs gets one per
/// pivot.
std::vector<FieldMatrix> solve_linear(const PrimeField& field,
                                      const FieldMatrix& v,
                                      std::span<const FieldMatrix> rhs,
                                      OpCounter& counter);

/// Entries uniform in [0, p), drawn from `stream`.
FieldMatrix mat_random(const PrimeField& field, std::size_t rows,
                       std::size_t cols, RandomStream& stream);

}  // namespace rookcodes
