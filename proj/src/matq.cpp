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

#include "xgab/matq.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "xgab/error.hpp"
#include "xgab/kernels.hpp"

namespace xgab {

MatrixQ::MatrixQ(std::uint32_t q, std::size_t rows, std::size_t cols,
                 std::vector<Fq> data)
    : q_(q), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    throw InvalidArgument("matrix storage does not match its dimensions");
  }
  for (auto& v : data_) v = static_cast<Fq>(v % q);
}

MatrixQ::MatrixQ(std::uint32_t q,
                 std::initializer_list<std::initializer_list<int>> rows)
    : q_(q), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  const PrimeField f(q);
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
    for (const int v : r) data_.push_back(f.reduce(v));
  }
}

MatrixQ MatrixQ::identity(std::uint32_t q, std::size_t n) {
  MatrixQ out(q, n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

RrefResult rref(const MatrixQ& m) {
  RrefResult out;
  out.reduced = m;
  out.pivots = kernels::parallel::rref_inplace(m.q(), m.rows(), m.cols(),
                                               out.reduced.data());
  out.rank = out.pivots.size();
  return out;
}

std::size_t rank(const MatrixQ& m) { return rref(m).rank; }

MatrixQ right_kernel(const MatrixQ& m) {
  const auto r = rref(m);
  const std::uint32_t q = m.q();
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto p : r.pivots) is_pivot[p] = true;
  MatrixQ out(q, m.cols() - r.rank, m.cols());
  std::size_t k = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    out(k, c) = 1;
    for (std::size_t i = 0; i < r.rank; ++i) {
      const Fq v = r.reduced(i, c);
      out(k, r.pivots[i]) = static_cast<Fq>(v == 0 ? 0 : q - v);
    }
    ++k;
  }
  return out;
}

MatrixQ transpose(const MatrixQ& m) {
  MatrixQ out(m.q(), m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  }
  return out;
}

MatrixQ multiply(const MatrixQ& a, const MatrixQ& b) {
  if (a.cols() != b.rows() || a.q() != b.q()) {
    throw InvalidArgument("matrix product shape mismatch");
  }
  MatrixQ out(a.q(), a.rows(), b.cols());
  kernels::parallel::matmul(a.q(), a.rows(), a.cols(), b.cols(), a.data(),
                            b.data(), out.data());
  return out;
}

MatrixQ add(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.q() != b.q()) {
    throw InvalidArgument("matrix sum shape mismatch");
  }
  const PrimeField f(a.q());
  MatrixQ out = a;
  for (std::size_t i = 0; i < out.data().size(); ++i) {
    out.data()[i] = f.add(a.data()[i], b.data()[i]);
  }
  return out;
}

std::vector<Fq> multiply(std::span<const Fq> x, const MatrixQ& m) {
  if (x.size() != m.rows()) {
    throw InvalidArgument("vector-matrix product shape mismatch");
  }
  std::vector<std::uint64_t> acc(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const std::uint64_t c = x[i];
    if (c == 0) continue;
    const auto row = m.row(i);
    for (std::size_t j = 0; j < m.cols(); ++j) acc[j] += c * row[j];
  }
  std::vector<Fq> out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    out[j] = static_cast<Fq>(acc[j] % m.q());
  }
  return out;
}

std::optional<MatrixQ> inverse(const MatrixQ& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  MatrixQ aug(m.q(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::copy(m.row(i).begin(), m.row(i).end(), aug.row(i).begin());
    aug(i, n + i) = 1;
  }
  const auto r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  return submatrix(r.reduced, 0, n, n, n);
}

MatrixQ select_columns(const MatrixQ& m, std::span<const std::size_t> cols) {
  MatrixQ out(m.q(), m.rows(), cols.size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(i, cols[j]);
  }
  return out;
}

MatrixQ select_rows(const MatrixQ& m, std::span<const std::size_t> rows) {
  MatrixQ out(m.q(), rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::copy(m.row(rows[i]).begin(), m.row(rows[i]).end(), out.row(i).begin());
  }
  return out;
}

MatrixQ submatrix(const MatrixQ& m, std::size_t r0, std::size_t c0,
                  std::size_t nr, std::size_t nc) {
  if (r0 + nr > m.rows() || c0 + nc > m.cols()) {
    throw InvalidArgument("submatrix out of range");
  }
  MatrixQ out(m.q(), nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    const auto src = m.row(r0 + i).subspan(c0, nc);
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }
  return out;
}

MatrixQ vstack(const MatrixQ& top, const MatrixQ& bottom) {
  if (top.cols() != bottom.cols()) throw InvalidArgument("vstack width mismatch");
  std::vector<Fq> data(top.data().begin(), top.data().end());
  data.insert(data.end(), bottom.data().begin(), bottom.data().end());
  return MatrixQ(top.q(), top.rows() + bottom.rows(), top.cols(), std::move(data));
}

MatrixQ block_diagonal(const MatrixQ& a, const MatrixQ& b) {
  MatrixQ out(a.q(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::copy(a.row(i).begin(), a.row(i).end(), out.row(i).begin());
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    std::copy(b.row(i).begin(), b.row(i).end(),
              out.row(a.rows() + i).begin() + static_cast<std::ptrdiff_t>(a.cols()));
  }
  return out;
}

MatrixQ kron_identity(std::size_t n, const MatrixQ& a) {
  MatrixQ out(a.q(), n * a.rows(), n * a.cols());
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      std::copy(a.row(i).begin(), a.row(i).end(),
                out.row(b * a.rows() + i).begin() +
                    static_cast<std::ptrdiff_t>(b * a.cols()));
    }
  }
  return out;
}

MatrixQ power(const MatrixQ& a, std::uint64_t e) {
  if (a.rows() != a.cols()) throw InvalidArgument("power of a non-square matrix");
  MatrixQ result = MatrixQ::identity(a.q(), a.rows());
  MatrixQ base = a;
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

std::optional<SystematicForm> systematic_form(const MatrixQ& g) {
  const std::size_t k = g.rows();
  if (k > g.cols() || rank(g) < k) {
    throw InvalidArgument("systematic_form: generator is rank deficient");
  }
  auto transform = inverse(submatrix(g, 0, 0, k, k));
  if (!transform) return std::nullopt;
  MatrixQ generator = multiply(*transform, g);
  return SystematicForm{std::move(*transform), std::move(generator)};
}

MatrixQ random_matrix(std::uint32_t q, std::size_t rows, std::size_t cols,
                      Rng& rng) {
  MatrixQ out(q, rows, cols);
  for (auto& v : out.data()) v = static_cast<Fq>(rng.uniform(q));
  return out;
}

MatrixQ random_invertible(std::uint32_t q, std::size_t n, Rng& rng) {
  if (n == 0) throw InvalidArgument("random_invertible: empty matrix");
  for (;;) {
    MatrixQ a = random_matrix(q, n, n, rng);
    if (rank(a) == n) return a;
  }
}

MatrixQ random_rank_t(std::uint32_t q, std::size_t rows, std::size_t cols,
                      std::size_t t, Rng& rng) {
  if (t > std::min(rows, cols)) {
    throw InvalidArgument("random_rank_t: rank exceeds matrix dimensions");
  }
  if (t == 0) return MatrixQ(q, rows, cols);
  MatrixQ u, v;
  do {
    u = random_matrix(q, rows, t, rng);
  } while (rank(u) < t);
  do {
    v = random_matrix(q, t, cols, rng);
  } while (rank(v) < t);
  return multiply(u, v);
}

BigInt gaussian_binomial(std::uint32_t u, std::uint32_t v, std::uint32_t q) {
  if (v > u) throw InvalidArgument("gaussian_binomial: v > u");
  BigInt num = 1, den = 1;
  const BigInt bq = q;
  for (std::uint32_t i = 0; i < v; ++i) {
    num *= boost::multiprecision::pow(bq, u - i) - 1;
    den *= boost::multiprecision::pow(bq, i + 1) - 1;
  }
  return num / den;
}

double log2_big(const BigInt& x) {
  if (x <= 0) throw InvalidArgument("log2_big of a non-positive value");
  const std::size_t msb = boost::multiprecision::msb(x);
  if (msb < 53) return std::log2(x.convert_to<double>());
  const std::size_t shift = msb - 52;
  const BigInt top = x >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

double subspace_prob_log2(std::uint32_t u, std::uint32_t v, std::uint32_t w,
                          std::uint32_t q) {
  if (!(w <= v && v <= u)) {
    throw InvalidArgument("subspace_prob_log2 requires w <= v <= u");
  }
  return log2_big(gaussian_binomial(u - w, v - w, q)) -
         log2_big(gaussian_binomial(u, v, q));
}

// ---------------------------------------------------------------------------
// Matrices over F_{q^m}.

RrefResultQm rref(const ExtField& field, const MatrixQm& m) {
  RrefResultQm out;
  out.reduced = m;
  MatrixQm& a = out.reduced;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    }
    const ExtElem inv = field.inv(a(r, c));
    for (std::size_t j = c; j < cols; ++j) a(r, j) = field.mul(a(r, j), inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const ExtElem f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        a(i, j) = field.sub(a(i, j), field.mul(f, a(r, j)));
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const ExtField& field, const MatrixQm& m) {
  return rref(field, m).rank;
}

MatrixQm right_kernel(const ExtField& field, const MatrixQm& m) {
  const auto r = rref(field, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (const auto p : r.pivots) is_pivot[p] = true;
  MatrixQm out(field, m.cols() - r.rank, m.cols());
  std::size_t k = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    out(k, c) = field.one();
    for (std::size_t i = 0; i < r.rank; ++i) {
      out(k, r.pivots[i]) = field.neg(r.reduced(i, c));
    }
    ++k;
  }
  return out;
}

MatrixQm transpose(const MatrixQm& m) {
  std::vector<ExtElem> data;
  data.reserve(m.rows() * m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) data.push_back(m(i, j));
  }
  return MatrixQm(m.cols(), m.rows(), std::move(data));
}

MatrixQm multiply(const ExtField& field, const MatrixQm& a, const MatrixQm& b) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix product shape mismatch");
  MatrixQm out(field, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (a(i, l).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = field.add(out(i, j), field.mul(a(i, l), b(l, j)));
      }
    }
  }
  return out;
}

MatrixQm vstack(const MatrixQm& top, const MatrixQm& bottom) {
  if (top.cols() != bottom.cols()) throw InvalidArgument("vstack width mismatch");
  std::vector<ExtElem> data;
  data.reserve((top.rows() + bottom.rows()) * top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i) {
    data.insert(data.end(), top.row(i).begin(), top.row(i).end());
  }
  for (std::size_t i = 0; i < bottom.rows(); ++i) {
    data.insert(data.end(), bottom.row(i).begin(), bottom.row(i).end());
  }
  return MatrixQm(top.rows() + bottom.rows(), top.cols(), std::move(data));
}

MatrixQm frobenius(const ExtField& field, const MatrixQm& m, long i) {
  MatrixQm out = m;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out(r, c) = field.frobenius(m(r, c), i);
    }
  }
  return out;
}

std::vector<ExtElem> multiply(const ExtField& field, std::span<const ExtElem> x,
                              const MatrixQm& m) {
  if (x.size() != m.rows()) {
    throw InvalidArgument("vector-matrix product shape mismatch");
  }
  std::vector<ExtElem> out(m.cols(), field.zero());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[j] = field.add(out[j], field.mul(x[i], m(i, j)));
    }
  }
  return out;
}

MatrixQ coordinate_matrix(const ExtField& field, std::span<const ExtElem> v) {
  MatrixQ out(field.q(), field.m(), v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    for (std::size_t l = 0; l < field.m(); ++l) out(l, j) = v[j][l];
  }
  return out;
}

}  // namespace xgab
