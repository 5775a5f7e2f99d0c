/*
 * Copyright 2026 The xgab Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Dense linear algebra over F_q and F_{q^m}.

#ifndef XGAB_MATQ_HPP_
#define XGAB_MATQ_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "xgab/gf.hpp"
#include "xgab/rng.hpp"

namespace xgab {

/// Row-major matrix over F_q.
class MatrixQ {
 public:
  MatrixQ() = default;
  /// Zero matrix.
  MatrixQ(std::uint32_t q, std::size_t rows, std::size_t cols)
      : q_(q), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  /// Entries are reduced mod q.
  MatrixQ(std::uint32_t q, std::size_t rows, std::size_t cols,
          std::vector<Fq> data);
  MatrixQ(std::uint32_t q,
          std::initializer_list<std::initializer_list<int>> rows);

  static MatrixQ identity(std::uint32_t q, std::size_t n);

  std::uint32_t q() const { return q_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Fq operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Fq& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Fq> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<Fq> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  std::span<const Fq> data() const { return data_; }
  std::span<Fq> data() { return data_; }

  friend bool operator==(const MatrixQ&, const MatrixQ&) = default;

 private:
  std::uint32_t q_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fq> data_;
};

struct RrefResult {
  MatrixQ reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Pivot search takes the leftmost nonzero column
/// and, within it, the first nonzero row at or below the current one.
RrefResult rref(const MatrixQ& m);
std::size_t rank(const MatrixQ& m);

/// Rows spanning {x : M x^T = 0}, one per free column of rref(M), with a 1 in
/// that free column and zeros in the other free columns.
MatrixQ right_kernel(const MatrixQ& m);

MatrixQ transpose(const MatrixQ& m);
MatrixQ multiply(const MatrixQ& a, const MatrixQ& b);
MatrixQ add(const MatrixQ& a, const MatrixQ& b);
/// Row vector times matrix.
std::vector<Fq> multiply(std::span<const Fq> x, const MatrixQ& m);
std::optional<MatrixQ> inverse(const MatrixQ& m);

MatrixQ select_columns(const MatrixQ& m, std::span<const std::size_t> cols);
MatrixQ select_rows(const MatrixQ& m, std::span<const std::size_t> rows);
/// Rows [r0, r0 + nr) and columns [c0, c0 + nc).
MatrixQ submatrix(const MatrixQ& m, std::size_t r0, std::size_t c0,
                  std::size_t nr, std::size_t nc);
MatrixQ vstack(const MatrixQ& top, const MatrixQ& bottom);
/// diag(a, b)
MatrixQ block_diagonal(const MatrixQ& a, const MatrixQ& b);
/// I_n (x) A: n copies of A on the diagonal.
MatrixQ kron_identity(std::size_t n, const MatrixQ& a);
/// a^e for square a.
MatrixQ power(const MatrixQ& a, std::uint64_t e);

struct SystematicForm {
  /// Inverse of the leading K x K block of G.
  MatrixQ transform;
  /// transform * G = [I_K | *]
  MatrixQ generator;
};

/// Systematic form of a full-row-rank G, or nullopt when its leading block is
/// singular. Throws InvalidArgument when G is rank deficient.
std::optional<SystematicForm> systematic_form(const MatrixQ& g);

MatrixQ random_matrix(std::uint32_t q, std::size_t rows, std::size_t cols,
                      Rng& rng);
/// Uniform over GL_n(F_q), by rejection.
MatrixQ random_invertible(std::uint32_t q, std::size_t n, Rng& rng);
/// U * V with U rows x t and V t x cols, each resampled until of rank t.
MatrixQ random_rank_t(std::uint32_t q, std::size_t rows, std::size_t cols,
                      std::size_t t, Rng& rng);

using BigInt = boost::multiprecision::cpp_int;

/// Number of v-dimensional subspaces of F_q^u.
BigInt gaussian_binomial(std::uint32_t u, std::uint32_t v, std::uint32_t q);
/// log2 of a positive integer, accurate to double precision.
double log2_big(const BigInt& x);
/// log2 of the probability that a random v-dimensional subspace of F_q^u
/// contains a fixed w-dimensional one. Requires w <= v <= u.
double subspace_prob_log2(std::uint32_t u, std::uint32_t v, std::uint32_t w,
                          std::uint32_t q);

/// Row-major matrix over F_{q^m}. Operations take the field explicitly.
class MatrixQm {
 public:
  MatrixQm() = default;
  MatrixQm(const ExtField& field, std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}
  MatrixQm(std::size_t rows, std::size_t cols, std::vector<ExtElem> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const ExtElem& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  ExtElem& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  std::span<const ExtElem> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<ExtElem> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }

  friend bool operator==(const MatrixQm&, const MatrixQm&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExtElem> data_;
};

struct RrefResultQm {
  MatrixQm reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResultQm rref(const ExtField& field, const MatrixQm& m);
std::size_t rank(const ExtField& field, const MatrixQm& m);
MatrixQm right_kernel(const ExtField& field, const MatrixQm& m);
MatrixQm transpose(const MatrixQm& m);
MatrixQm multiply(const ExtField& field, const MatrixQm& a, const MatrixQm& b);
MatrixQm vstack(const MatrixQm& top, const MatrixQm& bottom);
/// Entrywise a^{q^i}.
MatrixQm frobenius(const ExtField& field, const MatrixQm& m, long i);
/// Row vector times matrix.
std::vector<ExtElem> multiply(const ExtField& field, std::span<const ExtElem> x,
                              const MatrixQm& m);

/// The m x n matrix over F_q whose column j holds the power-basis
/// coordinates of v_j.
MatrixQ coordinate_matrix(const ExtField& field, std::span<const ExtElem> v);

}  // namespace xgab

#endif  // XGAB_MATQ_HPP_
