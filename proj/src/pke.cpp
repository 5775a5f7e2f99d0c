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

#include "xgab/pke.hpp"

#include <algorithm>
#include <cstring>
#include <limits>

#include "xgab/error.hpp"

namespace xgab {

namespace {

constexpr int kMixingAttempts = 100;
constexpr int kCodeAttempts = 100;

std::vector<std::size_t> block_prefix_columns(std::size_t n, std::size_t m,
                                              std::size_t lambda) {
  std::vector<std::size_t> cols;
  cols.reserve(n * lambda);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < lambda; ++i) cols.push_back(j * m + i);
  }
  return cols;
}

MatrixQ mixing_matrix_ii(const Params& p, const MatrixQ& a) {
  MatrixQ t = kron_identity(p.u_f(), a);
  if (p.v() == 0) return t;
  return block_diagonal(t, submatrix(a, 0, 0, p.m * p.v(), p.m * p.v()));
}

std::vector<Fq> subtract(std::uint32_t q, std::span<const Fq> a,
                         std::span<const Fq> b) {
  std::vector<Fq> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = static_cast<Fq>((a[i] + q - b[i]) % q);
  }
  return out;
}

std::size_t mixing_size(const Params& p) {
  return p.proposal == Proposal::kI ? p.lambda : p.m * p.lambda;
}

}  // namespace

void Params::validate() const {
  if (q < 2 || q > std::numeric_limits<Fq>::max() || !is_prime(q)) {
    throw InvalidArgument("q must be a prime below 2^16");
  }
  if (m < 1 || m > 128) throw InvalidArgument("m must lie in [1, 128]");
  if (!(k >= 1 && k < n && n <= m)) {
    throw InvalidArgument("parameters require 1 <= k < n <= m");
  }
  if (lambda < 1) throw InvalidArgument("lambda must be positive");
  if (proposal == Proposal::kI) {
    if (n - k < 2) throw InvalidArgument("Proposal I requires n - k >= 2");
    if (!(lambda < m)) throw InvalidArgument("Proposal I requires lambda < m");
    if (!(m * (n - k) < lambda * n)) {
      throw InvalidArgument("Proposal I requires m(n - k) < lambda n");
    }
  } else if (proposal == Proposal::kII) {
    if (!(lambda < k)) throw InvalidArgument("Proposal II requires lambda < k");
    if ((n - k) / (2 * lambda) < 1) {
      throw InvalidArgument("Proposal II requires floor((n - k) / (2 lambda)) >= 1");
    }
  } else {
    throw InvalidArgument("unknown proposal");
  }
}

std::size_t Params::plaintext_length() const {
  return proposal == Proposal::kI ? lambda * n - m * (n - k) : k * m;
}

std::size_t Params::ciphertext_length() const {
  return proposal == Proposal::kI ? lambda * n : n * m;
}

std::size_t Params::error_rank() const {
  return proposal == Proposal::kI ? (n - k) / 2 : (n - k) / (2 * lambda);
}

PrivateKey::PrivateKey(const Params& params, BasisPair basis,
                       std::vector<ExtElem> g, MatrixQ a)
    : params_(params), a_(std::move(a)) {
  params_.validate();
  auto field = make_ext_field(params_.q, params_.m);
  code_ = std::make_shared<const ExpandedCode>(
      GabidulinCode(field, std::move(g), params_.k), std::move(basis));
  const std::size_t size = mixing_size(params_);
  if (a_.rows() != size || a_.cols() != size || a_.q() != params_.q) {
    throw InvalidArgument("mixing matrix has the wrong shape");
  }
  const auto a_inv = inverse(a_);
  if (!a_inv) throw InvalidArgument("mixing matrix is singular");
  const MatrixQ& hhat = code_->parity_check();
  if (params_.proposal == Proposal::kI) {
    t_ = kron_identity(params_.n, a_);
    t_inv_ = kron_identity(params_.n, *a_inv);
    selected_ = block_prefix_columns(params_.n, params_.m, params_.lambda);
    const MatrixQ hhat_s = select_columns(hhat, selected_);
    hidden_generator_ = right_kernel(hhat_s);
    syndrome_map_ = multiply(t_, transpose(hhat_s));
  } else {
    t_ = mixing_matrix_ii(params_, a_);
    auto t_inv = inverse(t_);
    if (!t_inv) throw InvalidArgument("leading block of the mixing matrix is singular");
    t_inv_ = std::move(*t_inv);
    hidden_generator_ = code_->generator();
    syndrome_map_ = multiply(t_, transpose(hhat));
  }
}

std::optional<PublicKey> derive_public_key(const PrivateKey& sk) {
  const Params& p = sk.params();
  if (sk.hidden_generator().rows() != p.plaintext_length()) return std::nullopt;
  auto sf = systematic_form(multiply(sk.hidden_generator(), sk.t_inverse()));
  if (!sf) return std::nullopt;
  return PublicKey{p, std::move(sf->generator), p.error_rank()};
}

KeyPair keygen(const Params& params, Rng& rng) {
  params.validate();
  auto field = make_ext_field(params.q, params.m);
  const std::size_t size = mixing_size(params);
  const std::size_t sub = params.m * params.v();
  for (int outer = 0; outer < kCodeAttempts; ++outer) {
    auto g = random_full_rank_vector(*field, params.n, rng);
    auto basis = random_basis(*field, rng);
    for (int inner = 0; inner < kMixingAttempts; ++inner) {
      MatrixQ a = random_invertible(params.q, size, rng);
      if (params.proposal == Proposal::kII && sub > 0 &&
          rank(submatrix(a, 0, 0, sub, sub)) < sub) {
        continue;
      }
      PrivateKey sk(params, basis, g, std::move(a));
      if (sk.hidden_generator().rows() != params.plaintext_length()) break;
      if (auto pk = derive_public_key(sk)) return KeyPair{std::move(*pk), std::move(sk)};
    }
  }
  throw KeygenError("no systematic public key found; parameters look pathological");
}

KeyPair keygen_i(const Params& params, Rng& rng) {
  if (params.proposal != Proposal::kI) throw InvalidArgument("expected Proposal I");
  return keygen(params, rng);
}

KeyPair keygen_ii(const Params& params, Rng& rng) {
  if (params.proposal != Proposal::kII) throw InvalidArgument("expected Proposal II");
  return keygen(params, rng);
}

std::vector<Fq> sample_error_i(const Params& params, Rng& rng) {
  const MatrixQ e =
      random_rank_t(params.q, params.n, params.lambda, params.error_rank(), rng);
  return {e.data().begin(), e.data().end()};
}

std::vector<Fq> sample_error_ii(const Params& params, Rng& rng) {
  const std::size_t t = params.error_rank();
  if (t == 0) throw InvalidArgument("error rank must be positive");
  const std::size_t rows = params.u_c();
  const std::size_t cols = params.m * params.lambda;
  const std::size_t v = params.v();
  for (;;) {
    MatrixQ u = random_matrix(params.q, rows, t, rng);
    MatrixQ w = random_matrix(params.q, t, cols, rng);
    if (v > 0) {
      for (std::size_t j = 1; j < t; ++j) u(rows - 1, j) = 0;
      for (std::size_t c = params.m * v; c < cols; ++c) w(0, c) = 0;
    }
    const MatrixQ e = multiply(u, w);
    if (rank(e) != t) continue;
    const auto d = e.data();
    return {d.begin(), d.begin() + static_cast<std::ptrdiff_t>(params.n * params.m)};
  }
}

MatrixQ error_layout_ii(const Params& params, std::span<const Fq> e) {
  if (e.size() != params.n * params.m) throw InvalidArgument("error length must be nm");
  std::vector<Fq> padded(params.u_c() * params.m * params.lambda, 0);
  std::copy(e.begin(), e.end(), padded.begin());
  return MatrixQ(params.q, params.u_c(), params.m * params.lambda, std::move(padded));
}

std::vector<Fq> encrypt_with_error(const PublicKey& pk, std::span<const Fq> x,
                                   std::span<const Fq> e) {
  if (x.size() != pk.g_pub.rows()) throw InvalidArgument("plaintext length must be K");
  if (e.size() != pk.g_pub.cols()) throw InvalidArgument("error length must be N");
  auto y = multiply(x, pk.g_pub);
  const std::uint32_t q = pk.params.q;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = static_cast<Fq>((y[i] + e[i]) % q);
  return y;
}

std::vector<Fq> encrypt(const PublicKey& pk, std::span<const Fq> x, Rng& rng) {
  if (x.size() != pk.g_pub.rows()) throw InvalidArgument("plaintext length must be K");
  const auto e = pk.params.proposal == Proposal::kI ? sample_error_i(pk.params, rng)
                                                    : sample_error_ii(pk.params, rng);
  return encrypt_with_error(pk, x, e);
}

std::optional<std::vector<Fq>> decrypt(const PrivateKey& sk, std::span<const Fq> y,
                                       DecryptTrace* trace) {
  const Params& p = sk.params();
  if (y.size() != p.ciphertext_length()) {
    throw InvalidArgument("ciphertext length must be N");
  }
  const auto s = multiply(y, sk.syndrome_map());
  auto decoded = decode_expanded_syndrome(sk.code(), s);
  if (!decoded) return std::nullopt;

  std::vector<Fq> mixed;
  if (p.proposal == Proposal::kI) {
    std::vector<bool> in_s(decoded->size(), false);
    for (const auto c : sk.selected_columns()) in_s[c] = true;
    for (std::size_t i = 0; i < decoded->size(); ++i) {
      if (!in_s[i] && (*decoded)[i] != 0) return std::nullopt;
    }
    mixed.reserve(sk.selected_columns().size());
    for (const auto c : sk.selected_columns()) mixed.push_back((*decoded)[c]);
  } else {
    mixed = *decoded;
  }
  const auto e = multiply(mixed, sk.t_inverse());
  const std::size_t e_rank =
      p.proposal == Proposal::kI
          ? rank(MatrixQ(p.q, p.n, p.lambda, e))
          : rank(error_layout_ii(p, e));
  if (trace) {
    trace->decoded_rank = rank(error_matrix(p.q, *decoded, p.m));
    trace->decoded_error = std::move(*decoded);
    trace->error = e;
    trace->error_rank = e_rank;
  }
  if (e_rank > p.error_rank()) return std::nullopt;
  auto codeword = subtract(p.q, y, e);
  codeword.resize(p.plaintext_length());
  return codeword;
}

namespace format {

namespace {

void put_u16(std::vector<std::uint8_t>& out, std::size_t v) {
  if (v > 0xffff) throw InvalidArgument("dimension does not fit in 16 bits");
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

std::size_t get_u16(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::size_t>(b[at]) | (static_cast<std::size_t>(b[at + 1]) << 8);
}

std::vector<std::uint8_t> header(Tag tag, const Params& p) {
  if (p.q >= 256) throw InvalidArgument("serialization requires q < 256");
  std::vector<std::uint8_t> out = {'X', 'G', 'A', 'B', kVersion,
                                   static_cast<std::uint8_t>(tag)};
  put_u16(out, p.q);
  put_u16(out, p.m);
  put_u16(out, p.n);
  put_u16(out, p.k);
  put_u16(out, p.lambda);
  return out;
}

void put_elements(std::vector<std::uint8_t>& out, std::span<const Fq> xs) {
  for (const auto x : xs) out.push_back(static_cast<std::uint8_t>(x));
}

void put_ext(std::vector<std::uint8_t>& out, const ExtElem& a) {
  put_elements(out, a.coeffs());
}

// Sequential reader over the payload.
class Reader {
 public:
  Reader(std::span<const std::uint8_t> bytes, std::uint32_t q)
      : bytes_(bytes), q_(q) {}

  std::vector<Fq> elements(std::size_t count) {
    if (bytes_.size() - pos_ < count) throw FormatError("payload is truncated");
    std::vector<Fq> out(count);
    for (std::size_t i = 0; i < count; ++i) {
      const auto b = bytes_[pos_ + i];
      if (b >= q_) throw FormatError("element out of range for F_q");
      out[i] = b;
    }
    pos_ += count;
    return out;
  }

  void finish() const {
    if (pos_ != bytes_.size()) throw FormatError("trailing bytes after payload");
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::uint32_t q_;
  std::size_t pos_ = 0;
};

Proposal proposal_of(Tag tag) {
  switch (tag) {
    case Tag::kPublicKeyI:
    case Tag::kPrivateKeyI:
      return Proposal::kI;
    case Tag::kPublicKeyII:
    case Tag::kPrivateKeyII:
      return Proposal::kII;
    case Tag::kCiphertext:
      break;
  }
  return Proposal::kI;
}

Header expect(std::span<const std::uint8_t> bytes, Tag a, Tag b) {
  Header h = decode_header(bytes);
  if (h.tag != a && h.tag != b) throw FormatError("unexpected object tag");
  try {
    h.params.validate();
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("invalid parameters: ") + e.what());
  }
  if (h.params.q >= 256) throw FormatError("q must be below 256");
  return h;
}

}  // namespace

Header decode_header(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderSize) throw FormatError("input shorter than the header");
  if (std::memcmp(bytes.data(), "XGAB", 4) != 0) throw FormatError("bad magic");
  if (bytes[4] != kVersion) throw FormatError("unsupported version");
  if (bytes[5] < 1 || bytes[5] > 5) throw FormatError("unknown object tag");
  Header h;
  h.tag = static_cast<Tag>(bytes[5]);
  h.params.proposal = proposal_of(h.tag);
  h.params.q = static_cast<std::uint32_t>(get_u16(bytes, 6));
  h.params.m = get_u16(bytes, 8);
  h.params.n = get_u16(bytes, 10);
  h.params.k = get_u16(bytes, 12);
  h.params.lambda = get_u16(bytes, 14);
  return h;
}

std::vector<std::uint8_t> encode_public_key(const PublicKey& pk) {
  const Params& p = pk.params;
  auto out = header(p.proposal == Proposal::kI ? Tag::kPublicKeyI : Tag::kPublicKeyII, p);
  const std::size_t kk = pk.g_pub.rows();
  for (std::size_t r = 0; r < kk; ++r) put_elements(out, pk.g_pub.row(r).subspan(kk));
  return out;
}

PublicKey decode_public_key(std::span<const std::uint8_t> bytes) {
  const Header h = expect(bytes, Tag::kPublicKeyI, Tag::kPublicKeyII);
  const Params& p = h.params;
  const std::size_t kk = p.plaintext_length(), nn = p.ciphertext_length();
  Reader reader(bytes.subspan(kHeaderSize), p.q);
  const auto rest = reader.elements(kk * (nn - kk));
  reader.finish();
  PublicKey pk{p, MatrixQ(p.q, kk, nn), p.error_rank()};
  for (std::size_t r = 0; r < kk; ++r) {
    pk.g_pub(r, r) = 1;
    std::copy_n(rest.begin() + static_cast<std::ptrdiff_t>(r * (nn - kk)), nn - kk,
                pk.g_pub.row(r).begin() + static_cast<std::ptrdiff_t>(kk));
  }
  return pk;
}

std::vector<std::uint8_t> encode_private_key(const PrivateKey& sk) {
  const Params& p = sk.params();
  auto out = header(p.proposal == Proposal::kI ? Tag::kPrivateKeyI : Tag::kPrivateKeyII, p);
  for (const auto& b : sk.basis().primal()) put_ext(out, b);
  for (const auto& g : sk.g()) put_ext(out, g);
  put_elements(out, sk.a().data());
  return out;
}

PrivateKey decode_private_key(std::span<const std::uint8_t> bytes) {
  const Header h = expect(bytes, Tag::kPrivateKeyI, Tag::kPrivateKeyII);
  const Params& p = h.params;
  const auto field = make_ext_field(p.q, p.m);
  Reader reader(bytes.subspan(kHeaderSize), p.q);
  auto read_ext = [&](std::size_t count) {
    std::vector<ExtElem> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(field->element(reader.elements(p.m)));
    return out;
  };
  auto primal = read_ext(p.m);
  auto g = read_ext(p.n);
  const std::size_t size = mixing_size(p);
  MatrixQ a(p.q, size, size, reader.elements(size * size));
  reader.finish();
  try {
    return PrivateKey(p, dual_basis(*field, std::move(primal)), std::move(g), std::move(a));
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("inconsistent private key: ") + e.what());
  }
}

std::vector<std::uint8_t> encode_ciphertext(const Ciphertext& ct) {
  if (ct.y.size() != ct.params.ciphertext_length()) {
    throw InvalidArgument("ciphertext length does not match its parameters");
  }
  auto out = header(Tag::kCiphertext, ct.params);
  put_elements(out, ct.y);
  return out;
}

Ciphertext decode_ciphertext(std::span<const std::uint8_t> bytes) {
  Header h = decode_header(bytes);
  if (h.tag != Tag::kCiphertext) throw FormatError("unexpected object tag");
  // The payload length tells the proposals apart: lambda n < nm for I.
  const std::size_t payload = bytes.size() - kHeaderSize;
  Params& p = h.params;
  if (payload == p.lambda * p.n) {
    p.proposal = Proposal::kI;
  } else if (payload == p.n * p.m) {
    p.proposal = Proposal::kII;
  } else {
    throw FormatError("ciphertext length matches neither proposal");
  }
  try {
    p.validate();
  } catch (const InvalidArgument& e) {
    throw FormatError(std::string("invalid parameters: ") + e.what());
  }
  if (p.q >= 256) throw FormatError("q must be below 256");
  Reader reader(bytes.subspan(kHeaderSize), p.q);
  Ciphertext ct{p, reader.elements(payload)};
  reader.finish();
  return ct;
}

}  // namespace format

}  // namespace xgab
