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

#include "rookcodes/matrix.hpp"

#include <cstdint>
#include <string>
#include <utility>

#include "kernels.hpp"
#include "rookcodes/errors.hpp"

namespace rookcodes {
namespace {

std::string shape(const FieldMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols,
                         std::vector<Fe> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    fail(ErrorCode::kDimensionMismatch,
         "matrix " + std::to_string(rows) + "x" + std::to_string(cols) +
             " needs " + std::to_string(rows * cols) + " entries, got " +
             std::to_string(entries_.size()));
  }
}

FieldMatrix FieldMatrix::identity(std::size_t n) {
  FieldMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Fe{1};
  return m;
}

FieldMatrix mat_mul(const PrimeField& field, const FieldMatrix& a,
                    const FieldMatrix& b, OpCounter& counter) {
  if (a.cols() != b.rows()) {
    fail(ErrorCode::kDimensionMismatch,
         "cannot multiply " + shape(a) + " by " + shape(b));
  }
  FieldMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Fe aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c(i, j) = field.add(c(i, j), field.mul(aik, b(k, j)));
      }
    }
  }
  const std::uint64_t work = a.rows() * a.cols() * b.cols();
  counter.muls += work;
  counter.adds += work;
  return c;
}

FieldMatrix mat_add(const PrimeField& field, const FieldMatrix& a,
                    const FieldMatrix& b, OpCounter& counter) {
  if (!a.same_shape(b)) {
    fail(ErrorCode::kDimensionMismatch,
         "cannot add " + shape(a) + " and " + shape(b));
  }
  FieldMatrix c(a.rows(), a.cols());
  auto ca = a.entries();
  auto cb = b.entries();
  auto cc = c.entries();
  for (std::size_t i = 0; i < cc.size(); ++i) cc[i] = field.add(ca[i], cb[i]);
  counter.adds += cc.size();
  return c;
}

FieldMatrix mat_scale(const PrimeField& field, Fe s, const FieldMatrix& a,
                      OpCounter& counter) {
  FieldMatrix c(a.rows(), a.cols());
  auto ca = a.entries();
  auto cc = c.entries();
  for (std::size_t i = 0; i < cc.size(); ++i) cc[i] = field.mul(s, ca[i]);
  counter.muls += cc.size();
  return c;
}

void mat_axpy(const PrimeField& field, Fe s, const FieldMatrix& a,
              FieldMatrix& acc, OpCounter& counter) {
  if (!a.same_shape(acc)) {
    fail(ErrorCode::kDimensionMismatch,
         "cannot accumulate " + shape(a) + " into " + shape(acc));
  }
  auto ca = a.entries();
  auto cc = acc.entries();
  for (std::size_t i = 0; i < cc.size(); ++i) {
    cc[i] = field.add(cc[i], field.mul(s, ca[i]));
  }
  counter.muls += cc.size();
  counter.adds += cc.size();
}

std::vector<FieldMatrix> solve_linear(const PrimeField& field,
                                      const FieldMatrix& v,
                                      std::span<const FieldMatrix> rhs,
                                      OpCounter& counter) {
  const std::size_t n = v.rows();
  if (v.cols() != n) {
    fail(ErrorCode::kDimensionMismatch, "system matrix " + shape(v) + " is not square");
  }
  if (rhs.size() != n) {
    fail(ErrorCode::kDimensionMismatch,
         "system of size " + std::to_string(n) + " given " +
             std::to_string(rhs.size()) + " right-hand blocks");
  }
  if (n == 0) return {};
  const std::size_t block_rows = rhs[0].rows();
  const std::size_t block_cols = rhs[0].cols();
  for (const auto& block : rhs) {
    if (block.rows() != block_rows || block.cols() != block_cols) {
      fail(ErrorCode::kDimensionMismatch, "right-hand blocks differ in shape");
    }
  }

  // Augmented rows [V | vec(rhs_i)].
  const std::size_t w = block_rows * block_cols;
  const std::size_t stride = n + w;
  std::vector<Fe> storage(n * stride);
  Fe* m = storage.data();
  for (std::size_t i = 0; i < n; ++i) {
    Fe* row = m + i * stride;
    for (std::size_t j = 0; j < n; ++j) row[j] = v(i, j);
    auto e = rhs[i].entries();
    for (std::size_t j = 0; j < w; ++j) row[n + j] = e[j];
  }

  // Forward elimination. Entries below the diagonal are left stale; they
  // are never read again.
  std::vector<Fe> pivot_inv(n);
  std::vector<Fe> factors(n);
  std::uint64_t muls = 0;
  std::uint64_t adds = 0;
  kernels::PendingInverse next_inv;
  Fe next_pivot{0};
  bool next_started = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && kernels::canonical(field, m[pivot * stride + k]).v == 0) {
      ++pivot;
    }
    if (pivot == n) {
      counter.muls += muls;
      counter.adds += adds;
      fail(ErrorCode::kSingularMatrix,
           "singular system: no pivot in column " + std::to_string(k));
    }
    if (pivot != k) {
      std::swap_ranges(m + pivot * stride, m + (pivot + 1) * stride, m + k * stride);
    }
    const Fe* prow = m + k * stride;
    const Fe lead = kernels::canonical(field, prow[k]);
    if (next_started && lead == next_pivot) {
      ++counter.invs;
      pivot_inv[k] = next_inv.finish();
    } else {
      pivot_inv[k] = field.inv(lead, counter);
    }
    next_started = false;
    const std::size_t below = n - k - 1;
    if (below == 0) continue;
    for (std::size_t i = k + 1; i < n; ++i) {
      factors[i] = kernels::canonical(field, m[i * stride + k]);
    }
    kernels::scale(field, &factors[k + 1], below, field.neg(pivot_inv[k]));
    // The next diagonal entry is known before the update runs, so its
    // inverse can proceed alongside it. A row swap discards it.
    const Fe* next_row = prow + stride;
    next_pivot = field.add(kernels::canonical(field, next_row[k + 1]),
                           field.mul(kernels::canonical(field, factors[k + 1]),
                                     kernels::canonical(field, prow[k + 1])));
    if (next_pivot.v != 0) {
      next_inv.start(field, next_pivot);
      next_started = true;
    }
    kernels::add_scaled_rows(field, m + (k + 1) * stride + k + 1, stride, below,
                             &factors[k + 1], prow + k + 1, stride - k - 1,
                             next_started ? &next_inv : nullptr);
    muls += below * (stride - k);
    adds += below * (stride - k - 1);
  }

  // Back substitution, one row at a time, on the transposed solution so
  // each entry is a single dot product with the row of U.
  std::vector<Fe> x(w * n);
  for (std::size_t k = n; k-- > 0;) {
    const Fe* row = m + k * stride;
    const std::size_t tail = n - k - 1;
    for (std::size_t t = 0; t < w; ++t) {
      Fe* xt = &x[t * n];
      const Fe known = kernels::dot(field, row + k + 1, xt + k + 1, tail);
      xt[k] = field.mul(field.sub(kernels::canonical(field, row[n + t]), known),
                        pivot_inv[k]);
    }
    muls += w + tail * w;
    adds += tail * w;
  }
  counter.muls += muls;
  counter.adds += adds;

  std::vector<FieldMatrix> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Fe> block(w);
    for (std::size_t t = 0; t < w; ++t) block[t] = x[t * n + i];
    out.emplace_back(block_rows, block_cols, std::move(block));
  }
  return out;
}

FieldMatrix mat_random(const PrimeField& field, std::size_t rows,
                       std::size_t cols, RandomStream& stream) {
  FieldMatrix m(rows, cols);
  for (Fe& e : m.entries()) e = Fe{stream.below(field.modulus())};
  return m;
}

}  // namespace rookcodes
