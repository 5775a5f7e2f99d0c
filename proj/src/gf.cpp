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

#include "xgab/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "xgab/error.hpp"
#include "xgab/matq.hpp"

namespace xgab {

namespace {

// Polynomials over F_q, coefficients low-to-high, no trailing zeros.
using Poly = std::vector<Fq>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_sub(const PrimeField& f, Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(a);
  return a;
}

Poly poly_mul(const PrimeField& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] += std::uint64_t{a[i]} * b[j];
    }
  }
  Poly out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) {
    out[i] = static_cast<Fq>(acc[i] % f.q());
  }
  trim(out);
  return out;
}

// Quotient and remainder of a by a nonzero b.
std::pair<Poly, Poly> poly_divmod(const PrimeField& f, Poly a, const Poly& b) {
  trim(a);
  const int db = degree(b);
  if (degree(a) < db) return {Poly{}, a};
  Poly quot(static_cast<std::size_t>(degree(a) - db + 1), 0);
  const Fq lead_inv = f.inv(b.back());
  for (int d = degree(a); d >= db; --d) {
    const Fq c = f.mul(a[static_cast<std::size_t>(d)], lead_inv);
    if (c == 0) continue;
    const std::size_t shift = static_cast<std::size_t>(d - db);
    quot[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    }
  }
  trim(a);
  trim(quot);
  return {quot, a};
}

Poly poly_mod(const PrimeField& f, const Poly& a, const Poly& b) {
  return poly_divmod(f, a, b).second;
}

Poly poly_gcd(const PrimeField& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_powmod(const PrimeField& f, Poly base, std::uint64_t e,
                 const Poly& mod) {
  Poly result{1};
  base = poly_mod(f, base, mod);
  while (e > 0) {
    if (e & 1) result = poly_mod(f, poly_mul(f, result, base), mod);
    e >>= 1;
    if (e > 0) base = poly_mod(f, poly_mul(f, base, base), mod);
  }
  return result;
}

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Fq inverse_mod(Fq a, std::uint32_t q) {
  // Extended Euclid on (a, q).
  std::int64_t r0 = q, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t t = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - t * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - t * s1);
  }
  std::int64_t inv = s0 % static_cast<std::int64_t>(q);
  if (inv < 0) inv += q;
  return static_cast<Fq>(inv);
}

PrimeField::PrimeField(std::uint32_t q) : q_(q) {
  if (q >= (1u << 16) || !is_prime(q)) {
    throw InvalidArgument("field order " + std::to_string(q) +
                          " is not a prime below 2^16");
  }
}

Fq PrimeField::reduce(std::int64_t a) const {
  std::int64_t r = a % static_cast<std::int64_t>(q_);
  if (r < 0) r += q_;
  return static_cast<Fq>(r);
}

Fq PrimeField::inv(Fq a) const {
  if (a == 0) throw InvalidArgument("inverse of zero in F_q");
  return inverse_mod(a, q_);
}

bool ExtElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](Fq c) { return c == 0; });
}

bool is_irreducible(const PrimeField& base, std::span<const Fq> poly) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  const int d = degree(f);
  if (d < 1 || f.back() != 1) return false;
  if (d == 1) return true;
  // Ben-Or: f is irreducible iff gcd(x^{q^i} - x, f) = 1 for i <= d/2.
  const Poly x{0, 1};
  Poly h = x;
  for (int i = 1; i <= d / 2; ++i) {
    h = poly_powmod(base, h, base.q(), f);
    const Poly g = poly_gcd(base, poly_sub(base, h, x), f);
    if (degree(g) > 0) return false;
  }
  return true;
}

ExtField::ExtField(PrimeField base, std::vector<Fq> modulus)
    : base_(base), m_(modulus.empty() ? 0 : modulus.size() - 1),
      modulus_(std::move(modulus)) {
  for (const Fq c : modulus_) {
    if (c >= base_.q()) throw InvalidArgument("modulus coefficient out of range");
  }
  if (m_ < 1 || !is_irreducible(base_, modulus_)) {
    throw InvalidArgument("modulus is not a monic irreducible polynomial");
  }
  const std::size_t m = m_;
  const Poly f(modulus_.begin(), modulus_.end());

  // Frobenius table: (x^j)^q = (x^q)^j.
  const Poly xq = poly_powmod(base_, Poly{0, 1}, base_.q(), f);
  frob_.assign(m * m, 0);
  Poly power{1};
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t l = 0; l < power.size(); ++l) frob_[j * m + l] = power[l];
    power = poly_mod(base_, poly_mul(base_, power, xq), f);
  }

  // Tr(x^s) is the trace of multiplication by x^s, i.e.
  // sum_l [x^l] (x^{s+l} mod f).
  std::vector<Poly> powers(2 * m);
  powers[0] = Poly{1};
  for (std::size_t s = 1; s < powers.size(); ++s) {
    Poly next(powers[s - 1].size() + 1, 0);
    std::copy(powers[s - 1].begin(), powers[s - 1].end(), next.begin() + 1);
    powers[s] = poly_mod(base_, next, f);
  }
  trace_.assign(m, 0);
  for (std::size_t s = 0; s < trace_.size(); ++s) {
    Fq acc = 0;
    for (std::size_t l = 0; l < m; ++l) {
      const Poly& p = powers[s + l];
      if (l < p.size()) acc = base_.add(acc, p[l]);
    }
    trace_[s] = acc;
  }
}

ExtElem ExtField::one() const { return from_base(1); }

ExtElem ExtField::from_base(Fq a) const {
  ExtElem e = zero();
  e[0] = static_cast<Fq>(a % q());
  return e;
}

ExtElem ExtField::generator() const {
  if (m_ == 1) return from_base(base_.neg(modulus_[0]));
  ExtElem e = zero();
  e[1] = 1;
  return e;
}

ExtElem ExtField::element(std::vector<Fq> coeffs) const {
  if (coeffs.size() != m_) {
    throw InvalidArgument("extension element must have exactly m coordinates");
  }
  for (const Fq c : coeffs) {
    if (c >= q()) throw InvalidArgument("coordinate out of range");
  }
  return ExtElem(std::move(coeffs));
}

ExtElem ExtField::random(Rng& rng) const {
  std::vector<Fq> c(m_);
  for (auto& v : c) v = base_.random(rng);
  return ExtElem(std::move(c));
}

ExtElem ExtField::add(const ExtElem& a, const ExtElem& b) const {
  ExtElem r = a;
  for (std::size_t i = 0; i < m_; ++i) r[i] = base_.add(a[i], b[i]);
  return r;
}

ExtElem ExtField::sub(const ExtElem& a, const ExtElem& b) const {
  ExtElem r = a;
  for (std::size_t i = 0; i < m_; ++i) r[i] = base_.sub(a[i], b[i]);
  return r;
}

ExtElem ExtField::neg(const ExtElem& a) const {
  ExtElem r = a;
  for (std::size_t i = 0; i < m_; ++i) r[i] = base_.neg(a[i]);
  return r;
}

ExtElem ExtField::scale(const ExtElem& a, Fq c) const {
  ExtElem r = a;
  for (std::size_t i = 0; i < m_; ++i) r[i] = base_.mul(a[i], c);
  return r;
}

ExtElem ExtField::mul(const ExtElem& a, const ExtElem& b) const {
  const std::size_t m = m_;
  const std::uint64_t q = base_.q();
  thread_local std::vector<std::uint64_t> acc;
  acc.assign(2 * m - 1, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint64_t ai = a[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; j < m; ++j) acc[i + j] += ai * b[j];
  }
  // x^m = -sum_{l<m} f_l x^l
  for (std::size_t d = 2 * m - 1; d-- > m;) {
    const std::uint64_t c = acc[d] % q;
    if (c == 0) continue;
    const std::size_t shift = d - m;
    for (std::size_t l = 0; l < m; ++l) {
      acc[shift + l] += (q - modulus_[l]) * c;
    }
  }
  ExtElem r = zero();
  for (std::size_t i = 0; i < m; ++i) r[i] = static_cast<Fq>(acc[i] % q);
  return r;
}

ExtElem ExtField::mul_add(const ExtElem& a, const ExtElem& b,
                          const ExtElem& c) const {
  return add(a, mul(b, c));
}

ExtElem ExtField::inv(const ExtElem& a) const {
  if (a.is_zero()) throw InvalidArgument("inverse of zero in F_{q^m}");
  Poly r0(modulus_.begin(), modulus_.end());
  Poly r1(a.coeffs().begin(), a.coeffs().end());
  trim(r1);
  Poly s0, s1{1};
  while (!r1.empty()) {
    auto [quot, rem] = poly_divmod(base_, r0, r1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    Poly next = poly_sub(base_, s0, poly_mul(base_, quot, s1));
    s0 = std::move(s1);
    s1 = std::move(next);
  }
  // r0 is a nonzero constant c with s0 * a = c mod f.
  const Fq c_inv = base_.inv(r0[0]);
  ExtElem out = zero();
  const Poly s = poly_mod(base_, s0, Poly(modulus_.begin(), modulus_.end()));
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = base_.mul(s[i], c_inv);
  return out;
}

ExtElem ExtField::pow(const ExtElem& a, std::uint64_t e) const {
  ExtElem result = one();
  ExtElem base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

ExtElem ExtField::frobenius_once(const ExtElem& a) const {
  const std::size_t m = m_;
  thread_local std::vector<std::uint64_t> acc;
  acc.assign(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    const std::uint64_t aj = a[j];
    if (aj == 0) continue;
    const Fq* row = frob_.data() + j * m;
    for (std::size_t l = 0; l < m; ++l) acc[l] += aj * row[l];
  }
  ExtElem r = zero();
  for (std::size_t l = 0; l < m; ++l) r[l] = static_cast<Fq>(acc[l] % q());
  return r;
}

ExtElem ExtField::frobenius(const ExtElem& a, long i) const {
  const long m = static_cast<long>(m_);
  long steps = i % m;
  if (steps < 0) steps += m;
  ExtElem r = a;
  for (long s = 0; s < steps; ++s) r = frobenius_once(r);
  return r;
}

Fq ExtField::trace(const ExtElem& a) const {
  std::uint64_t acc = 0;
  for (std::size_t j = 0; j < m_; ++j) acc += std::uint64_t{a[j]} * trace_[j];
  return static_cast<Fq>(acc % q());
}

std::shared_ptr<const ExtField> make_ext_field(std::uint32_t q, std::size_t m) {
  const PrimeField base(q);
  if (m < 1 || m > 128) {
    throw InvalidArgument("extension degree must lie in [1, 128]");
  }
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::size_t>,
                  std::shared_ptr<const ExtField>>
      cache;
  {
    const std::lock_guard lock(mutex);
    if (auto it = cache.find({q, m}); it != cache.end()) return it->second;
  }
  // Odometer over (c_0, ..., c_{m-1}) with c_0 most significant, so the
  // candidates come out in lexicographic order from the constant term up.
  std::vector<Fq> modulus(m + 1, 0);
  modulus[m] = 1;
  // For m > 1 a zero constant term means divisibility by x.
  if (m > 1) modulus[0] = 1;
  while (!is_irreducible(base, modulus)) {
    std::size_t pos = m;
    while (pos > 0) {
      --pos;
      if (++modulus[pos] < q) break;
      modulus[pos] = 0;
    }
  }
  auto field = std::make_shared<const ExtField>(base, std::move(modulus));
  const std::lock_guard lock(mutex);
  return cache.try_emplace({q, m}, std::move(field)).first->second;
}

BasisPair dual_basis(const ExtField& field, std::vector<ExtElem> primal) {
  const std::size_t m = field.m();
  const std::uint32_t q = field.q();
  if (primal.size() != m) {
    throw InvalidArgument("a basis of F_{q^m} must have m elements");
  }
  MatrixQ p(q, m, m);
  for (std::size_t i = 0; i < m; ++i) {
    if (primal[i].size() != m) throw InvalidArgument("basis element size");
    for (std::size_t l = 0; l < m; ++l) p(i, l) = primal[i][l];
  }
  const auto p_inv = inverse(p);
  if (!p_inv) throw InvalidArgument("basis elements are linearly dependent");

  // Gram matrix of the trace form on the power basis: Tr(x^l x^l').
  MatrixQ gram(q, m, m);
  for (std::size_t l = 0; l < m; ++l) {
    for (std::size_t k = 0; k < m; ++k) {
      ExtElem xs = field.zero();
      // Tr(x^{l+k}); trace() only covers exponents < m, so go through mul.
      if (l + k < m) {
        xs[l + k] = 1;
      } else {
        ExtElem xl = field.zero(), xk = field.zero();
        xl[l] = 1;
        xk[k] = 1;
        xs = field.mul(xl, xk);
      }
      gram(l, k) = field.trace(xs);
    }
  }
  const auto gram_inv = inverse(gram);
  if (!gram_inv) throw InvalidArgument("degenerate trace form");

  // P * Gram * D^T = I  =>  D = (P^{-1})^T * Gram^{-1}.
  const MatrixQ d = multiply(transpose(*p_inv), *gram_inv);

  BasisPair out;
  out.primal_ = std::move(primal);
  out.dual_.reserve(m);
  for (std::size_t j = 0; j < m; ++j) {
    out.dual_.push_back(ExtElem(std::vector<Fq>(d.row(j).begin(), d.row(j).end())));
  }
  // coord(l, j) = Tr(x^l * dual_j) = (Gram * D^T)(l, j).
  const MatrixQ coord = multiply(gram, transpose(d));
  out.coord_.assign(coord.data().begin(), coord.data().end());
  return out;
}

BasisPair random_basis(const ExtField& field, Rng& rng) {
  const MatrixQ a = random_invertible(field.q(), field.m(), rng);
  std::vector<ExtElem> primal;
  primal.reserve(field.m());
  for (std::size_t i = 0; i < field.m(); ++i) {
    primal.push_back(ExtElem(std::vector<Fq>(a.row(i).begin(), a.row(i).end())));
  }
  return dual_basis(field, std::move(primal));
}

std::vector<Fq> phi(const ExtField& field, const BasisPair& basis,
                    const ExtElem& a) {
  const std::size_t m = field.m();
  const auto coord = basis.coordinate_table();
  std::vector<std::uint64_t> acc(m, 0);
  for (std::size_t l = 0; l < m; ++l) {
    const std::uint64_t al = a[l];
    if (al == 0) continue;
    for (std::size_t j = 0; j < m; ++j) acc[j] += al * coord[l * m + j];
  }
  std::vector<Fq> out(m);
  for (std::size_t j = 0; j < m; ++j) out[j] = static_cast<Fq>(acc[j] % field.q());
  return out;
}

std::vector<Fq> phi(const ExtField& field, const BasisPair& basis,
                    std::span<const ExtElem> v) {
  std::vector<Fq> out;
  out.reserve(v.size() * field.m());
  for (const auto& a : v) {
    const auto block = phi(field, basis, a);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

std::vector<ExtElem> phi_inv(const ExtField& field, const BasisPair& basis,
                             std::span<const Fq> w) {
  const std::size_t m = field.m();
  if (w.size() % m != 0) {
    throw InvalidArgument("phi_inv: length is not a multiple of m");
  }
  std::vector<ExtElem> out;
  out.reserve(w.size() / m);
  std::vector<std::uint64_t> acc(m);
  for (std::size_t b = 0; b < w.size() / m; ++b) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      const std::uint64_t c = w[b * m + i];
      if (c == 0) continue;
      const auto& alpha = basis.primal()[i];
      for (std::size_t l = 0; l < m; ++l) acc[l] += c * alpha[l];
    }
    ExtElem e = field.zero();
    for (std::size_t l = 0; l < m; ++l) e[l] = static_cast<Fq>(acc[l] % field.q());
    out.push_back(std::move(e));
  }
  return out;
}

MatrixQ phi_matrix(const ExtField& field, const BasisPair& basis,
                   const ExtElem& a) {
  const std::size_t m = field.m();
  MatrixQ out(field.q(), m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto row = phi(field, basis, field.mul(a, basis.primal()[i]));
    std::copy(row.begin(), row.end(), out.row(i).begin());
  }
  return out;
}

MatrixQ phi_matrix(const ExtField& field, const BasisPair& basis,
                   const MatrixQm& mat, ExpandMode mode) {
  const std::size_t m = field.m();
  if (mode == ExpandMode::kRowExpand) {
    MatrixQ out(field.q(), mat.rows(), mat.cols() * m);
    for (std::size_t r = 0; r < mat.rows(); ++r) {
      const auto row = phi(field, basis, mat.row(r));
      std::copy(row.begin(), row.end(), out.row(r).begin());
    }
    return out;
  }
  MatrixQ out(field.q(), mat.rows() * m, mat.cols() * m);
  for (std::size_t r = 0; r < mat.rows(); ++r) {
    for (std::size_t c = 0; c < mat.cols(); ++c) {
      const MatrixQ block = phi_matrix(field, basis, mat(r, c));
      for (std::size_t i = 0; i < m; ++i) {
        std::copy(block.row(i).begin(), block.row(i).end(),
                  out.row(r * m + i).begin() + static_cast<std::ptrdiff_t>(c * m));
      }
    }
  }
  return out;
}

}  // namespace xgab
