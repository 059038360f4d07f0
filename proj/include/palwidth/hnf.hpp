// Copyright 2026 The palwidth Authors
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

#ifndef PALWIDTH_HNF_HPP
#define PALWIDTH_HNF_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "integer.hpp"

namespace palwidth {

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  BigInt const& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) {
      std::swap((*this)(i, a), (*this)(i, b));
    }
  }

  // col[dst] -= q * col[src]
  void sub_col(std::size_t dst, std::size_t src, BigInt const& q) {
    for (std::size_t i = 0; i < rows_; ++i) {
      if ((*this)(i, src) != 0) {
        (*this)(i, dst) -= q * (*this)(i, src);
      }
    }
  }

  void negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) {
      (*this)(i, j) = -(*this)(i, j);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInt> data_;
};

// Column echelon form H = A U with U unimodular. Pivots are positive and
// the pivot of column p sits in row pivot_rows[p]; columns past
// pivot_rows.size() are zero.
struct ColumnEchelon {
  IntMatrix h;
  IntMatrix u;
  std::vector<std::size_t> pivot_rows;
};

inline ColumnEchelon column_echelon(IntMatrix const& a) {
  ColumnEchelon e{a, IntMatrix::identity(a.cols()), {}};
  auto& h = e.h;
  auto& u = e.u;
  std::size_t p = 0;
  for (std::size_t i = 0; i < h.rows() && p < h.cols(); ++i) {
    while (true) {
      // Smallest nonzero magnitude in row i among columns p.., earliest wins.
      std::size_t best = h.cols();
      for (std::size_t j = p; j < h.cols(); ++j) {
        if (h(i, j) != 0 && (best == h.cols() || abs(h(i, j)) < abs(h(i, best)))) {
          best = j;
        }
      }
      if (best == h.cols()) {
        break;
      }
      if (best != p) {
        h.swap_cols(p, best);
        u.swap_cols(p, best);
      }
      bool done = true;
      for (std::size_t j = p + 1; j < h.cols(); ++j) {
        if (h(i, j) != 0) {
          BigInt q = h(i, j) / h(i, p);
          h.sub_col(j, p, q);
          u.sub_col(j, p, q);
          if (h(i, j) != 0) {
            done = false;
          }
        }
      }
      if (done) {
        if (h(i, p) < 0) {
          h.negate_col(p);
          u.negate_col(p);
        }
        e.pivot_rows.push_back(i);
        ++p;
        break;
      }
    }
  }
  return e;
}

// An integer solution of A x = b, or nothing if none exists. Free
// variables of the echelon form are set to zero.
inline std::optional<std::vector<BigInt>> solve_integer_system(
    IntMatrix const& a, std::vector<BigInt> const& b) {
  if (b.size() != a.rows()) {
    throw domain_error("right-hand side length does not match the matrix");
  }
  auto e = column_echelon(a);
  std::vector<BigInt> y(a.cols());
  for (std::size_t p = 0; p < e.pivot_rows.size(); ++p) {
    std::size_t i = e.pivot_rows[p];
    BigInt residual = b[i];
    for (std::size_t q = 0; q < p; ++q) {
      residual -= e.h(i, q) * y[q];
    }
    if (residual % e.h(i, p) != 0) {
      return std::nullopt;
    }
    y[p] = residual / e.h(i, p);
  }
  std::vector<BigInt> x(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t p = 0; p < e.pivot_rows.size(); ++p) {
      if (e.u(j, p) != 0 && y[p] != 0) {
        x[j] += e.u(j, p) * y[p];
      }
    }
  }
  // Rows without a pivot are only checked here.
  for (std::size_t i = 0; i < a.rows(); ++i) {
    BigInt s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0 && x[j] != 0) {
        s += a(i, j) * x[j];
      }
    }
    if (s != b[i]) {
      return std::nullopt;
    }
  }
  return x;
}

}  // namespace palwidth

#endif  // PALWIDTH_HNF_HPP
