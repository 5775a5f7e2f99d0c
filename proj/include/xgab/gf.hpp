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

// Arithmetic in a prime field F_q and in its degree-m extension F_{q^m}:
// Frobenius powers, the trace, dual bases, and the coordinate maps between
// F_{q^m}^n and F_q^{nm} induced by a basis.

#ifndef XGAB_GF_HPP_
#define XGAB_GF_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "xgab/rng.hpp"

namespace xgab {

class MatrixQ;
class MatrixQm;

/// An element of F_q, always stored as its canonical representative in [0, q).
using Fq = std::uint16_t;

bool is_prime(std::uint32_t n);

/// The prime field F_q, q < 2^16.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t q);

  std::uint32_t q() const { return q_; }

  Fq reduce(std::int64_t a) const;
  Fq add(Fq a, Fq b) const {
    const std::uint32_t s = std::uint32_t{a} + b;
    return static_cast<Fq>(s >= q_ ? s - q_ : s);
  }
  Fq sub(Fq a, Fq b) const {
    return static_cast<Fq>(a >= b ? a - b : a + q_ - b);
  }
  Fq neg(Fq a) const { return static_cast<Fq>(a == 0 ? 0 : q_ - a); }
  Fq mul(Fq a, Fq b) const {
    return static_cast<Fq>((std::uint32_t{a} * b) % q_);
  }
  /// Throws InvalidArgument on zero.
  Fq inv(Fq a) const;
  Fq random(Rng& rng) const { return static_cast<Fq>(rng.uniform(q_)); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t q_;
};

/// Modular inverse of a nonzero a modulo prime q.
Fq inverse_mod(Fq a, std::uint32_t q);

/// An element of F_{q^m}: coordinates with respect to the power basis
/// 1, x, ..., x^{m-1} of the defining modulus.
class ExtElem {
 public:
  ExtElem() = default;
  explicit ExtElem(std::vector<Fq> coeffs) : coeffs_(std::move(coeffs)) {}

  std::span<const Fq> coeffs() const { return coeffs_; }
  std::span<Fq> coeffs() { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  Fq operator[](std::size_t i) const { return coeffs_[i]; }
  Fq& operator[](std::size_t i) { return coeffs_[i]; }
  bool is_zero() const;

  friend bool operator==(const ExtElem&, const ExtElem&) = default;

 private:
  std::vector<Fq> coeffs_;
};

/// The extension F_{q^m} = F_q[x]/(f) for a monic irreducible f of degree m.
///
/// Instances are immutable. Frobenius and trace are evaluated through
/// precomputed F_q-linear tables.
class ExtField {
 public:
  /// modulus: monic, low-to-high coefficients, length m + 1. Throws
  /// InvalidArgument when the polynomial is not monic irreducible.
  ExtField(PrimeField base, std::vector<Fq> modulus);

  const PrimeField& base() const { return base_; }
  std::uint32_t q() const { return base_.q(); }
  std::size_t m() const { return m_; }
  std::span<const Fq> modulus() const { return modulus_; }

  ExtElem zero() const { return ExtElem(std::vector<Fq>(m_, 0)); }
  ExtElem one() const;
  ExtElem from_base(Fq a) const;
  /// The class of x (the power-basis generator).
  ExtElem generator() const;
  /// Validates length and range of the coordinates.
  ExtElem element(std::vector<Fq> coeffs) const;
  ExtElem random(Rng& rng) const;

  ExtElem add(const ExtElem& a, const ExtElem& b) const;
  ExtElem sub(const ExtElem& a, const ExtElem& b) const;
  ExtElem neg(const ExtElem& a) const;
  ExtElem scale(const ExtElem& a, Fq c) const;
  ExtElem mul(const ExtElem& a, const ExtElem& b) const;
  /// a + b * c
  ExtElem mul_add(const ExtElem& a, const ExtElem& b, const ExtElem& c) const;
  /// Throws InvalidArgument on zero.
  ExtElem inv(const ExtElem& a) const;
  ExtElem pow(const ExtElem& a, std::uint64_t e) const;

  /// a^{q^i}; i is reduced mod m, so negative i is the inverse map.
  ExtElem frobenius(const ExtElem& a, long i) const;
  /// Tr(a) = sum_{i<m} a^{q^i}, an element of F_q.
  Fq trace(const ExtElem& a) const;

  friend bool operator==(const ExtField& a, const ExtField& b) {
    return a.base_ == b.base_ && a.modulus_ == b.modulus_;
  }

 private:
  ExtElem frobenius_once(const ExtElem& a) const;

  PrimeField base_;
  std::size_t m_;
  std::vector<Fq> modulus_;
  // frob_[j*m + l]: coordinate l of (x^j)^q.
  std::vector<Fq> frob_;
  // trace_[j] = Tr(x^j).
  std::vector<Fq> trace_;
};

/// Monic irreducibility test over F_q (Ben-Or).
bool is_irreducible(const PrimeField& base, std::span<const Fq> poly);

/// Builds F_{q^m} with the lexicographically smallest monic irreducible
/// modulus, comparing coefficients from the constant term upward. Requires
/// q prime and 1 <= m <= 128.
std::shared_ptr<const ExtField> make_ext_field(std::uint32_t q, std::size_t m);

/// A basis of F_{q^m} over F_q together with its trace-dual basis.
class BasisPair {
 public:
  const std::vector<ExtElem>& primal() const { return primal_; }
  const std::vector<ExtElem>& dual() const { return dual_; }
  std::size_t size() const { return primal_.size(); }

  /// coord_[l*m + j] = Tr(x^l * dual_j): the linear form giving coordinate j
  /// of an element from its power-basis coefficients.
  std::span<const Fq> coordinate_table() const { return coord_; }

 private:
  friend BasisPair dual_basis(const ExtField&, std::vector<ExtElem>);
  std::vector<ExtElem> primal_;
  std::vector<ExtElem> dual_;
  std::vector<Fq> coord_;
};

/// Computes the dual basis of primal. Throws InvalidArgument when primal is
/// not a basis.
BasisPair dual_basis(const ExtField& field, std::vector<ExtElem> primal);

/// A uniformly random basis: a random invertible matrix applied to the
/// power basis.
BasisPair random_basis(const ExtField& field, Rng& rng);

/// phi_B: F_{q^m}^n -> F_q^{nm}; block i, component j is Tr(v_i * dual_j).
std::vector<Fq> phi(const ExtField& field, const BasisPair& basis,
                    std::span<const ExtElem> v);
std::vector<Fq> phi(const ExtField& field, const BasisPair& basis,
                    const ExtElem& a);

/// Inverse of phi; block j maps to sum_i w_{ji} * primal_i. Throws
/// InvalidArgument when the length is not a multiple of m.
std::vector<ExtElem> phi_inv(const ExtField& field, const BasisPair& basis,
                             std::span<const Fq> w);

enum class ExpandMode {
  // Each row v of M becomes the row phi_B(v).
  kRowExpand,
  // Each entry a of M becomes the m x m block Phi_B(a), whose row i is
  // phi_B(a * primal_i).
  kFullExpand,
};

/// Phi_B(a): the m x m matrix of multiplication by a in the basis B. Row
/// vector times matrix: phi(b) * Phi_B(a) = phi(a * b).
MatrixQ phi_matrix(const ExtField& field, const BasisPair& basis,
                   const ExtElem& a);
MatrixQ phi_matrix(const ExtField& field, const BasisPair& basis,
                   const MatrixQm& m, ExpandMode mode);

}  // namespace xgab

#endif  // XGAB_GF_HPP_
