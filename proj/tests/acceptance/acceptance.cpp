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

// Acceptance checks: one PASS/FAIL line per criterion; exit status 1 when any
// criterion fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "xgab/analysis.hpp"
#include "xgab/error.hpp"
#include "xgab/estimate.hpp"
#include "xgab/expand.hpp"
#include "xgab/pke.hpp"

namespace {

using namespace xgab;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string params_str(const Params& p) {
  std::ostringstream os;
  os << (p.proposal == Proposal::kI ? "I" : "II") << "(" << p.q << "," << p.m << "," << p.n
     << "," << p.k << "," << p.lambda << ")";
  return os.str();
}

std::vector<Fq> random_vector(std::uint32_t q, std::size_t len, Rng& rng) {
  std::vector<Fq> v(len);
  for (auto& x : v) x = static_cast<Fq>(rng.uniform(q));
  return v;
}

std::vector<Fq> add(std::uint32_t q, std::span<const Fq> a, std::span<const Fq> b) {
  std::vector<Fq> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<Fq>((a[i] + b[i]) % q);
  return out;
}

Outcome table_reproduction() {
  Outcome out;
  int bytes_ok = 0, rate_ok = 0;
  std::string mismatches;
  for (const auto& row : reference_rows()) {
    const KeySize ks = key_size_and_rate(row.params);
    bytes_ok += ks.bytes == row.key_bytes;
    rate_ok += ks.rate_hundredths == row.rate_hundredths;
    if (ks.bytes != row.key_bytes || ks.rate_hundredths != row.rate_hundredths) {
      std::ostringstream os;
      os << " " << params_str(row.params) << ": " << ks.bytes << " B rate 0."
         << ks.rate_hundredths << " vs printed " << row.key_bytes << " B rate 0."
         << row.rate_hundredths << ";";
      mismatches += os.str();
    }
  }
  const auto n = reference_rows().size();
  out.pass = bytes_ok == static_cast<int>(n) && rate_ok == static_cast<int>(n);
  out.detail = "bytes (ceil of bits/8) " + std::to_string(bytes_ok) + "/" + std::to_string(n) + ", rates " +
               std::to_string(rate_ok) + "/" + std::to_string(n) + mismatches;
  return out;
}

Outcome security_targets() {
  Outcome out;
  int ok = 0;
  std::string misses;
  for (const auto& row : reference_rows()) {
    const CostReport r = security_report(row.params);
    if (r.security_bits + 4 >= row.target_bits) {
      ++ok;
    } else {
      misses += " " + params_str(row.params) + ": " + std::to_string(r.security_bits) +
                " < " + std::to_string(row.target_bits) + " - 4;";
    }
  }
  out.pass = ok == static_cast<int>(reference_rows().size());
  out.detail = std::to_string(ok) + "/" + std::to_string(reference_rows().size()) +
               " rows within tolerance" + misses;
  return out;
}

Outcome end_to_end() {
  Outcome out;
  const std::vector<Params> sets = {{Proposal::kI, 2, 8, 8, 4, 7},
                                    {Proposal::kI, 13, 18, 18, 12, 16},
                                    {Proposal::kII, 2, 8, 8, 4, 2},
                                    {Proposal::kII, 7, 35, 35, 23, 2}};
  for (const auto& p : sets) {
    Rng rng(1000 + p.q);
    const KeyPair kp = keygen(p, rng);
    int failures = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const auto x = random_vector(p.q, p.plaintext_length(), rng);
      const auto got = decrypt(kp.sk, encrypt(kp.pk, x, rng));
      failures += !got || *got != x;
    }
    out.pass = out.pass && failures == 0;
    out.detail += params_str(p) + " " + std::to_string(200 - failures) + "/200; ";
  }
  return out;
}

ExpandedCode random_expanded(std::uint32_t q, std::size_t m, std::size_t n, std::size_t k,
                             Rng& rng) {
  auto f = make_ext_field(q, m);
  auto g = random_full_rank_vector(*f, n, rng);
  auto b = random_basis(*f, rng);
  return expand_code(GabidulinCode(f, std::move(g), k), std::move(b));
}

std::vector<Fq> random_codeword(const ExpandedCode& ec, Rng& rng) {
  std::vector<ExtElem> msg;
  for (std::size_t i = 0; i < ec.parent().k(); ++i) msg.push_back(ec.field().random(rng));
  return phi(ec.field(), ec.basis(), ec.parent().encode(msg));
}

Outcome decoder_suite() {
  Outcome out;
  struct Shape {
    std::uint32_t q;
    std::size_t m, n, k;
  };
  for (const Shape s : {Shape{2, 8, 8, 4}, Shape{3, 6, 6, 2}}) {
    Rng rng(2000 + s.q);
    const ExpandedCode ec = random_expanded(s.q, s.m, s.n, s.k, rng);
    const std::size_t t = (s.n - s.k) / 2;
    int ok = 0;
    for (int trial = 0; trial < 500; ++trial) {
      const MatrixQ e = random_rank_t(s.q, s.n, s.m, trial % (t + 1), rng);
      const auto c = random_codeword(ec, rng);
      const auto d = decode_expanded(ec, add(s.q, c, e.data()));
      ok += d && d->codeword == c && d->error == std::vector<Fq>(e.data().begin(), e.data().end());
    }
    out.pass = out.pass && ok == 500;
    out.detail += "(" + std::to_string(s.q) + "," + std::to_string(s.m) + "," +
                  std::to_string(s.n) + "," + std::to_string(s.k) + ") " +
                  std::to_string(ok) + "/500; ";
  }

  // Exhaustive coset search at (2,4,4,2): every word of F_2^16, grouped by
  // syndrome, keeping those of block rank <= 1.
  Rng rng(2100);
  const ExpandedCode ec = random_expanded(2, 4, 4, 2, rng);
  std::map<std::vector<Fq>, std::vector<std::vector<Fq>>> leaders;
  std::map<std::vector<Fq>, bool> seen;
  for (std::uint32_t w = 0; w < (1u << 16); ++w) {
    std::vector<Fq> e(16);
    for (std::size_t i = 0; i < 16; ++i) e[i] = (w >> i) & 1;
    const auto s = syndrome_expanded(ec, e);
    seen[s] = true;
    if (rank(error_matrix(2, e, 4)) <= 1) leaders[s].push_back(e);
  }
  int agree = 0;
  for (const auto& [s, unused] : seen) {
    const auto got = decode_expanded_syndrome(ec, s);
    const auto it = leaders.find(s);
    if (it == leaders.end()) {
      agree += !got.has_value();
    } else {
      agree += it->second.size() == 1 && got && *got == it->second.front();
    }
  }
  out.pass = out.pass && seen.size() == 256 && agree == 256;
  out.detail += "coset oracle " + std::to_string(agree) + "/" + std::to_string(seen.size()) +
                " syndromes";
  return out;
}

Outcome mrd_mds() {
  Outcome out;
  Rng rng(3000);
  for (std::size_t k = 1; k <= 3; ++k) {
    auto f = make_ext_field(2, 4);
    GabidulinCode code(f, random_full_rank_vector(*f, 4, rng), k);
    const std::size_t dr = min_rank_distance_bruteforce(code);
    const ExpandedCode ec = expand_code(code, random_basis(*f, rng));
    const auto h = hamming_distance_bounds_check(ec);
    const bool ok = dr == 4 - k + 1 && h.within_bounds;
    out.pass = out.pass && ok;
    out.detail += "k=" + std::to_string(k) + ": d_R " + std::to_string(dr) + ", d_H " +
                  std::to_string(h.distance) + " in [" + std::to_string(4 - k + 1) + "," +
                  std::to_string(4 * (4 - k) + 1) + "]; ";
  }
  return out;
}

bool same_row_space(const MatrixQ& a, const MatrixQ& b) {
  const std::size_t r = rank(a);
  return r == rank(b) && rank(vstack(a, b)) == r;
}

Outcome distinguisher_laws() {
  Outcome out;
  Rng rng(4000);
  int gab12 = 0, twisted_ok = 0;
  for (int trial = 0; trial < 50; ++trial) {
    auto f = make_ext_field(3, 4);
    const auto g = random_full_rank_vector(*f, 4, rng);
    const BasisPair basis = random_basis(*f, rng);
    const ExpandedCode ec = expand_code(GabidulinCode(f, g, 2), basis);
    const BlockCode bc = make_block_code(ec.generator(), 4);
    gab12 += sum_of_powers_dim(bc, 1) == 12;
    std::vector<ExtElem> g1;
    for (const auto& a : g) g1.push_back(f->frobenius(a, 1));
    const ExpandedCode ec1 = expand_code(GabidulinCode(f, g1, 2), basis);
    twisted_ok += same_row_space(twisted_power(bc, 1).g, ec1.generator());
  }
  int exp16 = 0, plain16 = 0;
  for (int trial = 0; trial < 200; ++trial) {
    exp16 += sum_of_powers_dim(random_expanded_code(3, 4, 4, 2, rng), 1) == 16;
    plain16 += sum_of_powers_dim(random_plain_code(3, 4, 4, 2, rng), 1) == 16;
  }
  out.pass = gab12 == 50 && exp16 >= 190 && plain16 >= 190 && twisted_ok == 50;
  out.detail = "expanded-Gabidulin 12 on " + std::to_string(gab12) +
               "/50; expanded-random 16 on " + std::to_string(exp16) +
               "/200; plain-random 16 on " + std::to_string(plain16) +
               "/200 (need 190); twisted power exact on " + std::to_string(twisted_ok) + "/50";
  return out;
}

Outcome minrank_oracle() {
  Outcome out;
  const Params p{Proposal::kI, 2, 4, 4, 2, 3};
  Rng rng(5000);
  int ok = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const KeyPair kp = keygen(p, rng);
    const auto x = random_vector(2, p.plaintext_length(), rng);
    const auto inst = minrank_from_ciphertext(kp.pk, encrypt(kp.pk, x, rng));
    const auto a = minrank_bruteforce(inst, true);
    if (!a) continue;
    // Over F_2, -a_i = a_i.
    ok += std::vector<Fq>(a->begin() + 1, a->end()) == x;
  }
  out.pass = ok == 20;
  out.detail = std::to_string(ok) + "/20 plaintexts recovered";
  return out;
}

Outcome dual_basis_law() {
  Outcome out;
  for (const auto& [q, m] : std::vector<std::pair<std::uint32_t, std::size_t>>{{2, 8}, {13, 6}}) {
    const auto f = make_ext_field(q, m);
    Rng rng(6000 + q);
    int ok = 0;
    for (int trial = 0; trial < 100; ++trial) {
      const BasisPair b = random_basis(*f, rng);
      bool identity = true;
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          identity = identity && f->trace(f->mul(b.primal()[i], b.dual()[j])) == (i == j ? 1 : 0);
        }
      }
      ok += identity;
    }
    out.pass = out.pass && ok == 100;
    out.detail += "(" + std::to_string(q) + "," + std::to_string(m) + ") " +
                  std::to_string(ok) + "/100; ";
  }
  return out;
}

template <typename F>
bool rejects(F&& f) {
  try {
    f();
  } catch (const FormatError&) {
    return true;
  } catch (...) {
    return false;
  }
  return false;
}

Outcome serialization() {
  Outcome out;
  int round_trips = 0, rejected = 0, mutations = 0;
  for (const Params& p : {Params{Proposal::kI, 2, 8, 8, 4, 7}, Params{Proposal::kII, 3, 7, 7, 3, 2}}) {
    Rng rng(7000 + p.q);
    const KeyPair kp = keygen(p, rng);
    const auto pk = format::encode_public_key(kp.pk);
    const auto sk = format::encode_private_key(kp.sk);
    const format::Ciphertext ct{p, encrypt(kp.pk, random_vector(p.q, p.plaintext_length(), rng), rng)};
    const auto cb = format::encode_ciphertext(ct);
    round_trips += format::encode_public_key(format::decode_public_key(pk)) == pk;
    round_trips += format::encode_private_key(format::decode_private_key(sk)) == sk;
    round_trips += format::encode_ciphertext(format::decode_ciphertext(cb)) == cb;

    // Header mutations: magic, version, tag, q, and truncation or extension.
    const std::vector<std::pair<std::size_t, std::uint8_t>> edits = {
        {0, 'Q'}, {3, 0}, {4, 0}, {4, 9}, {5, 0}, {5, 6}, {6, 4}, {7, 1}};
    for (const auto& bytes : {pk, sk, cb}) {
      for (const auto& [at, v] : edits) {
        auto b = bytes;
        b[at] = v;
        ++mutations;
        rejected += rejects([&] {
          if (&bytes == &pk) {
            format::decode_public_key(b);
          } else if (&bytes == &sk) {
            format::decode_private_key(b);
          } else {
            format::decode_ciphertext(b);
          }
        });
      }
    }
    ++mutations;
    rejected += rejects([&] { format::decode_public_key(std::span(pk).first(pk.size() - 1)); });
    ++mutations;
    rejected += rejects([&] { format::decode_ciphertext(std::span(cb).first(cb.size() - 1)); });
    ++mutations;
    rejected += rejects([&] { format::decode_private_key(pk); });
  }
  out.pass = round_trips == 6 && rejected == mutations;
  out.detail = "round trips " + std::to_string(round_trips) + "/6, mutations rejected " +
               std::to_string(rejected) + "/" + std::to_string(mutations);
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"table reproduction", table_reproduction},
      {"security targets", security_targets},
      {"end-to-end correctness", end_to_end},
      {"decoder suite", decoder_suite},
      {"MRD/MDS oracle", mrd_mds},
      {"distinguisher laws", distinguisher_laws},
      {"MinRank reduction oracle", minrank_oracle},
      {"dual-basis law", dual_basis_law},
      {"serialization", serialization},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu (%s): %s  [%.2fs] %s\n", i + 1, criteria[i].first,
                o.pass ? "PASS" : "FAIL", secs, o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
