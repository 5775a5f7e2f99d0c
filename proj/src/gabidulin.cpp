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

#include "xgab/gabidulin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "xgab/error.hpp"

namespace xgab {

namespace {

// Linearized polynomial L(x) = sum_j coeffs[j] x^{q^j} evaluated at a.
ExtElem evaluate_linearized(const ExtField& field, std::span<const ExtElem> coeffs,
                            const ExtElem& a) {
  ExtElem acc = field.zero();
  ExtElem power = a;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (!coeffs[j].is_zero()) acc = field.add(acc, field.mul(coeffs[j], power));
    if (j + 1 < coeffs.size()) power = field.frobenius(power, 1);
  }
  return acc;
}

// Index of the highest nonzero coefficient, or -1.
long q_degree(std::span<const ExtElem> p) {
  for (std::size_t j = p.size(); j-- > 0;) {
    if (!p[j].is_zero()) return static_cast<long>(j);
  }
  return -1;
}

// Coefficients of the composition a(b(x)): sum_{i+j=l} a_j b_i^{q^j}.
std::vector<ExtElem> compose(const ExtField& field, std::span<const ExtElem> a,
                             std::span<const ExtElem> b) {
  std::vector<ExtElem> out(a.size() + b.size() - 1, field.zero());
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j].is_zero()) continue;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i].is_zero()) continue;
      out[i + j] = field.add(out[i + j],
                             field.mul(a[j], field.frobenius(b[i], static_cast<long>(j))));
    }
  }
  return out;
}

// Solves n = v o f for f, or nullopt when v does not left-divide n.
std::optional<std::vector<ExtElem>> left_divide(const ExtField& field,
                                                std::span<const ExtElem> n,
                                                std::span<const ExtElem> v) {
  const long dv = q_degree(v);
  const long dn = q_degree(n);
  if (dv < 0) return std::nullopt;
  if (dn < 0) return std::vector<ExtElem>{field.zero()};
  if (dn < dv) return std::nullopt;
  const auto df = static_cast<std::size_t>(dn - dv);
  std::vector<ExtElem> f(df + 1, field.zero());
  const ExtElem lead_inv = field.inv(v[static_cast<std::size_t>(dv)]);
  for (std::size_t i = df + 1; i-- > 0;) {
    const std::size_t l = i + static_cast<std::size_t>(dv);
    ExtElem acc = n[l];
    for (long j = 0; j < dv; ++j) {
      const std::size_t idx = l - static_cast<std::size_t>(j);
      if (idx > df || v[static_cast<std::size_t>(j)].is_zero()) continue;
      acc = field.sub(acc, field.mul(v[static_cast<std::size_t>(j)],
                                     field.frobenius(f[idx], j)));
    }
    f[i] = field.frobenius(field.mul(acc, lead_inv), -dv);
  }
  auto check = compose(field, v.first(static_cast<std::size_t>(dv) + 1), f);
  const std::size_t len = std::max(check.size(), n.size());
  check.resize(len, field.zero());
  for (std::size_t l = 0; l < len; ++l) {
    const ExtElem expected = l < n.size() ? n[l] : field.zero();
    if (!(check[l] == expected)) return std::nullopt;
  }
  return f;
}

// Calls visit(message) for every message in F_{q^m}^k.
template <class Visit>
void for_each_message(const GabidulinCode& code, Visit&& visit) {
  const ExtField& field = code.field();
  const std::size_t digits = code.k() * field.m();
  const double total = std::pow(static_cast<double>(field.q()),
                                static_cast<double>(digits));
  if (total > static_cast<double>(1u << 24)) {
    throw InvalidArgument("brute force limited to q^{km} <= 2^24");
  }
  std::vector<Fq> counter(digits, 0);
  std::vector<ExtElem> message(code.k(), field.zero());
  for (;;) {
    for (std::size_t i = 0; i < code.k(); ++i) {
      for (std::size_t l = 0; l < field.m(); ++l) {
        message[i][l] = counter[i * field.m() + l];
      }
    }
    visit(std::span<const ExtElem>(message));
    std::size_t pos = 0;
    while (pos < digits && ++counter[pos] == field.q()) counter[pos++] = 0;
    if (pos == digits) break;
  }
}

}  // namespace

std::size_t rank_weight(const ExtField& field, std::span<const ExtElem> v) {
  if (v.empty()) return 0;
  return rank(coordinate_matrix(field, v));
}

GabidulinCode::GabidulinCode(std::shared_ptr<const ExtField> field,
                             std::vector<ExtElem> g, std::size_t k)
    : field_(std::move(field)), g_(std::move(g)), k_(k) {
  const ExtField& f = *field_;
  const std::size_t n = g_.size();
  if (!(k_ >= 1 && k_ <= n && n <= f.m())) {
    throw InvalidArgument("Gabidulin code requires 1 <= k <= n <= m");
  }
  for (const auto& e : g_) {
    if (e.size() != f.m()) throw InvalidArgument("generator vector element size");
  }
  if (rank_weight(f, g_) != n) {
    throw InvalidArgument("generator vector must have rank weight n");
  }
  generator_ = MatrixQm(f, k_, n);
  for (std::size_t j = 0; j < n; ++j) {
    ExtElem power = g_[j];
    for (std::size_t i = 0; i < k_; ++i) {
      generator_(i, j) = power;
      power = f.frobenius(power, 1);
    }
  }
  const auto reduced = rref(f, generator_);
  std::vector<bool> is_pivot(n, false);
  for (const auto p : reduced.pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) free_columns_.push_back(c);
  }
  parity_check_ = right_kernel(f, generator_);
}

std::vector<ExtElem> GabidulinCode::encode(std::span<const ExtElem> message) const {
  if (message.size() != k_) throw InvalidArgument("message length must be k");
  return multiply(*field_, message, generator_);
}

std::vector<ExtElem> GabidulinCode::syndrome(std::span<const ExtElem> word) const {
  if (word.size() != n()) throw InvalidArgument("word length must be n");
  return multiply(*field_, word, transpose(parity_check_));
}

std::vector<ExtElem> GabidulinCode::lift_syndrome(std::span<const ExtElem> s) const {
  if (s.size() != free_columns_.size()) {
    throw InvalidArgument("syndrome length must be n - k");
  }
  std::vector<ExtElem> y(n(), field_->zero());
  for (std::size_t r = 0; r < s.size(); ++r) y[free_columns_[r]] = s[r];
  return y;
}

std::vector<ExtElem> random_full_rank_vector(const ExtField& field,
                                             std::size_t n, Rng& rng) {
  if (n > field.m()) throw InvalidArgument("rank-n vector needs n <= m");
  for (;;) {
    std::vector<ExtElem> g;
    g.reserve(n);
    for (std::size_t i = 0; i < n; ++i) g.push_back(field.random(rng));
    if (rank_weight(field, g) == n) return g;
  }
}

std::optional<std::vector<ExtElem>> decode_syndrome(const GabidulinCode& code,
                                                    std::span<const ExtElem> s,
                                                    std::size_t t) {
  if (t > code.radius()) {
    throw InvalidArgument("decoding radius exceeds floor((n - k) / 2)");
  }
  const ExtField& field = code.field();
  const std::size_t n = code.n(), k = code.k();
  if (std::all_of(s.begin(), s.end(), [](const ExtElem& e) { return e.is_zero(); })) {
    if (s.size() != n - k) throw InvalidArgument("syndrome length must be n - k");
    return std::vector<ExtElem>(n, field.zero());
  }
  const std::vector<ExtElem> y = code.lift_syndrome(s);

  // Find V (q-degree <= t) and N (q-degree <= k + t - 1), not both zero,
  // with V(y_i) = N(g_i) for every position i.
  const std::size_t nv = t + 1, nn = k + t;
  MatrixQm system(field, n, nv + nn);
  for (std::size_t i = 0; i < n; ++i) {
    ExtElem yp = y[i];
    for (std::size_t j = 0; j < nv; ++j) {
      system(i, j) = yp;
      yp = field.frobenius(yp, 1);
    }
    ExtElem gp = code.g()[i];
    for (std::size_t j = 0; j < nn; ++j) {
      system(i, nv + j) = field.neg(gp);
      gp = field.frobenius(gp, 1);
    }
  }
  const MatrixQm kernel = right_kernel(field, system);
  if (kernel.rows() == 0) return std::nullopt;
  const auto sol = kernel.row(0);
  const auto v = sol.first(nv);
  const auto numer = sol.subspan(nv, nn);

  const auto f = left_divide(field, numer, v);
  if (!f || f->size() > k) return std::nullopt;

  std::vector<ExtElem> e(n, field.zero());
  for (std::size_t i = 0; i < n; ++i) {
    e[i] = field.sub(y[i], evaluate_linearized(field, *f, code.g()[i]));
  }
  if (rank_weight(field, e) > t) return std::nullopt;
  return e;
}

std::size_t min_rank_distance_bruteforce(const GabidulinCode& code) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const ExtField& field = code.field();
  for_each_message(code, [&](std::span<const ExtElem> msg) {
    if (std::all_of(msg.begin(), msg.end(), [](const ExtElem& e) { return e.is_zero(); })) {
      return;
    }
    best = std::min(best, rank_weight(field, code.encode(msg)));
  });
  return best;
}

std::size_t min_hamming_distance_bruteforce(const GabidulinCode& code) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for_each_message(code, [&](std::span<const ExtElem> msg) {
    if (std::all_of(msg.begin(), msg.end(), [](const ExtElem& e) { return e.is_zero(); })) {
      return;
    }
    const auto c = code.encode(msg);
    const auto w = static_cast<std::size_t>(std::count_if(
        c.begin(), c.end(), [](const ExtElem& e) { return !e.is_zero(); }));
    best = std::min(best, w);
  });
  return best;
}

}  // namespace xgab
