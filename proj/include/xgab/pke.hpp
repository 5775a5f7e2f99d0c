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

// McEliece-type encryption with expanded Gabidulin codes: Proposal I hides
// the code by column selection and a per-block mixing matrix, Proposal II by
// a block-diagonal mixing of groups of lambda blocks.

#ifndef XGAB_PKE_HPP_
#define XGAB_PKE_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "xgab/expand.hpp"
#include "xgab/gf.hpp"
#include "xgab/matq.hpp"
#include "xgab/rng.hpp"

namespace xgab {

enum class Proposal : std::uint8_t { kI = 1, kII = 2 };

struct Params {
  Proposal proposal = Proposal::kI;
  std::uint32_t q = 2;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t lambda = 0;

  /// Throws InvalidArgument when the parameters violate the proposal's
  /// constraints.
  ///   I:  q prime, k < n <= m, n - k >= 2, m(n - k) < lambda * n, lambda < m
  ///   II: q prime, lambda < k < n <= m, floor((n - k) / (2 lambda)) >= 1
  void validate() const;

  /// Plaintext length: lambda n - m(n - k) for I, km for II.
  std::size_t plaintext_length() const;
  /// Ciphertext length: lambda n for I, nm for II.
  std::size_t ciphertext_length() const;
  /// floor((n - k) / 2) for I, floor((n - k) / (2 lambda)) for II.
  std::size_t error_rank() const;

  /// Proposal II block grouping: u_f = floor(n / lambda),
  /// u_c = ceil(n / lambda), v = n - lambda u_f.
  std::size_t u_f() const { return n / lambda; }
  std::size_t u_c() const { return (n + lambda - 1) / lambda; }
  std::size_t v() const { return n - lambda * u_f(); }

  friend bool operator==(const Params&, const Params&) = default;
};

struct PublicKey {
  Params params;
  /// K x N, systematic.
  MatrixQ g_pub;
  std::size_t t = 0;

  friend bool operator==(const PublicKey&, const PublicKey&) = default;
};

/// The secret (B, g, A) and the matrices derived from it.
class PrivateKey {
 public:
  /// Derives the cached matrices. Throws InvalidArgument when B is not a
  /// basis, g is not of rank n, or A (or, for II, its leading mv x mv
  /// block) is singular.
  PrivateKey(const Params& params, BasisPair basis, std::vector<ExtElem> g,
             MatrixQ a);

  const Params& params() const { return params_; }
  const BasisPair& basis() const { return code_->basis(); }
  const std::vector<ExtElem>& g() const { return code_->parent().g(); }
  const MatrixQ& a() const { return a_; }
  const ExtField& field() const { return code_->field(); }
  const ExpandedCode& code() const { return *code_; }

  /// I_n (x) A for I; diag(I_{u_f} (x) A, A_sub) for II.
  const MatrixQ& t_matrix() const { return t_; }
  const MatrixQ& t_inverse() const { return t_inv_; }
  /// The hidden generator before mixing: the kernel of the S-columns of
  /// Hhat for I, Ghat for II.
  const MatrixQ& hidden_generator() const { return hidden_generator_; }
  /// y -> s: T * Hhat_S^T for I, T * Hhat^T for II.
  const MatrixQ& syndrome_map() const { return syndrome_map_; }
  /// Proposal I column set S: the first lambda positions of each m-block.
  const std::vector<std::size_t>& selected_columns() const { return selected_; }

 private:
  Params params_;
  std::shared_ptr<const ExpandedCode> code_;
  MatrixQ a_;
  MatrixQ t_;
  MatrixQ t_inv_;
  MatrixQ hidden_generator_;
  MatrixQ syndrome_map_;
  std::vector<std::size_t> selected_;
};

/// Public key of sk, or nullopt when the leading K columns of the mixed
/// hidden generator are dependent (or, for I, the hidden generator has the
/// wrong dimension).
std::optional<PublicKey> derive_public_key(const PrivateKey& sk);

struct KeyPair {
  PublicKey pk;
  PrivateKey sk;
};

/// Samples (g, B), then up to 100 mixing matrices A until the public key is
/// systematic, resampling (g, B) otherwise. Throws KeygenError after 100
/// outer attempts.
KeyPair keygen(const Params& params, Rng& rng);
KeyPair keygen_i(const Params& params, Rng& rng);
KeyPair keygen_ii(const Params& params, Rng& rng);

/// Proposal I error: row-major flattening of a random n x lambda matrix of
/// rank exactly t.
std::vector<Fq> sample_error_i(const Params& params, Rng& rng);
/// Proposal II error: E = U V of shape u_c x m lambda and rank exactly t,
/// with the last row of E vanishing beyond its first mv columns when v > 0;
/// e is the first nm entries of E in row-major order.
std::vector<Fq> sample_error_ii(const Params& params, Rng& rng);

/// Lays e (length nm) out as the u_c x m lambda matrix, zero-padded.
MatrixQ error_layout_ii(const Params& params, std::span<const Fq> e);

/// x * G_pub + e with a freshly sampled error. Throws InvalidArgument when
/// x does not have length K.
std::vector<Fq> encrypt(const PublicKey& pk, std::span<const Fq> x, Rng& rng);
/// x * G_pub + e for a caller-chosen error.
std::vector<Fq> encrypt_with_error(const PublicKey& pk, std::span<const Fq> x,
                                   std::span<const Fq> e);

/// Intermediate quantities of one decryption.
struct DecryptTrace {
  /// The error found by the expanded decoder, of length nm.
  std::vector<Fq> decoded_error;
  /// Rank of the n x m block matrix of decoded_error.
  std::size_t decoded_rank = 0;
  /// The recovered error e of length N.
  std::vector<Fq> error;
  /// n x lambda rank (I) or u_c x m lambda rank (II) of error.
  std::size_t error_rank = 0;
};

/// The plaintext, or nullopt when decoding fails or the recovered error does
/// not have the required shape and rank.
std::optional<std::vector<Fq>> decrypt(const PrivateKey& sk,
                                       std::span<const Fq> y,
                                       DecryptTrace* trace = nullptr);

/// Binary format, little-endian: "XGAB", version 1, object tag, then q, m,
/// n, k, lambda as u16, then one byte per F_q element.
namespace format {

inline constexpr std::uint8_t kVersion = 1;
inline constexpr std::size_t kHeaderSize = 16;

enum class Tag : std::uint8_t {
  kPublicKeyI = 1,
  kPrivateKeyI = 2,
  kPublicKeyII = 3,
  kPrivateKeyII = 4,
  kCiphertext = 5,
};

struct Ciphertext {
  Params params;
  std::vector<Fq> y;

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;
};

/// Serializers throw InvalidArgument when q >= 256 or a dimension does not
/// fit in 16 bits; parsers throw FormatError on any malformed input.
std::vector<std::uint8_t> encode_public_key(const PublicKey& pk);
PublicKey decode_public_key(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_private_key(const PrivateKey& sk);
PrivateKey decode_private_key(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_ciphertext(const Ciphertext& ct);
Ciphertext decode_ciphertext(std::span<const std::uint8_t> bytes);

/// Reads the header only.
struct Header {
  Tag tag;
  Params params;
};
Header decode_header(std::span<const std::uint8_t> bytes);

}  // namespace format

}  // namespace xgab

#endif  // XGAB_PKE_HPP_
