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

// Command-line front end.
//
// Exit codes: 0 success, 1 internal error, 2 invalid arguments, 3 I/O
// failure, 4 decryption failure, 5 malformed input file.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xgab/analysis.hpp"
#include "xgab/error.hpp"
#include "xgab/estimate.hpp"
#include "xgab/pke.hpp"

namespace {

using namespace xgab;

constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitDecrypt = 4;
constexpr int kExitFormat = 5;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("cannot read " + path);
  return bytes;
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("cannot write " + path);
}

struct ParamFlags {
  int proposal = 1;
  std::uint32_t q = 0;
  std::size_t m = 0, n = 0, k = 0, lambda = 0;

  Params params() const {
    if (proposal != 1 && proposal != 2) throw InvalidArgument("--proposal must be 1 or 2");
    Params p{proposal == 1 ? Proposal::kI : Proposal::kII, q, m, n, k, lambda};
    p.validate();
    return p;
  }
};

void add_param_flags(CLI::App* app, ParamFlags& f, bool required) {
  app->add_option("--proposal", f.proposal, "Proposal 1 or 2")->check(CLI::IsMember({1, 2}));
  auto* q = app->add_option("--q", f.q, "Base field size (prime)");
  auto* m = app->add_option("--m", f.m, "Extension degree");
  auto* n = app->add_option("--n", f.n, "Code length over F_{q^m}");
  auto* k = app->add_option("--k", f.k, "Code dimension over F_{q^m}");
  auto* l = app->add_option("--lambda", f.lambda, "Masking parameter lambda");
  if (required) {
    for (auto* o : {q, m, n, k, l}) o->required();
  }
}

int cmd_keygen(const ParamFlags& flags, std::uint64_t seed, const std::string& pk_path,
               const std::string& sk_path) {
  const Params p = flags.params();
  Rng rng(seed);
  const KeyPair kp = keygen(p, rng);
  write_file(pk_path, format::encode_public_key(kp.pk));
  write_file(sk_path, format::encode_private_key(kp.sk));
  std::cout << "K=" << p.plaintext_length() << " N=" << p.ciphertext_length()
            << " t=" << kp.pk.t << "\n";
  return 0;
}

int cmd_encrypt(const std::string& pk_path, const std::string& in, const std::string& out,
                std::uint64_t seed) {
  const PublicKey pk = format::decode_public_key(read_file(pk_path));
  const auto bytes = read_file(in);
  if (bytes.size() != pk.g_pub.rows()) {
    throw InvalidArgument("plaintext must be exactly K = " +
                          std::to_string(pk.g_pub.rows()) + " bytes");
  }
  std::vector<Fq> x(bytes.begin(), bytes.end());
  for (const auto v : x) {
    if (v >= pk.params.q) throw InvalidArgument("plaintext byte not in F_q");
  }
  Rng rng(seed);
  format::Ciphertext ct{pk.params, encrypt(pk, x, rng)};
  write_file(out, format::encode_ciphertext(ct));
  return 0;
}

int cmd_decrypt(const std::string& sk_path, const std::string& in, const std::string& out) {
  const PrivateKey sk = format::decode_private_key(read_file(sk_path));
  const format::Ciphertext ct = format::decode_ciphertext(read_file(in));
  if (!(ct.params == sk.params())) {
    throw FormatError("ciphertext parameters do not match the private key");
  }
  const auto x = decrypt(sk, ct.y);
  if (!x) {
    std::cerr << "decryption failed: no error of admissible rank\n";
    return kExitDecrypt;
  }
  write_file(out, std::vector<std::uint8_t>(x->begin(), x->end()));
  return 0;
}

int cmd_estimate(const ParamFlags& flags, bool tables, bool csv) {
  if (tables) {
    std::cout << csv_header() << "\n";
    for (const auto& row : reference_rows()) {
      std::cout << render_csv(security_report(row.params)) << "\n";
    }
    return 0;
  }
  const CostReport report = security_report(flags.params());
  if (csv) {
    std::cout << csv_header() << "\n" << render_csv(report) << "\n";
  } else {
    std::cout << render_text(report);
  }
  return 0;
}

const char* verdict_name(Verdict v) {
  return v == Verdict::kExpandedGabidulinLike ? "expanded-gabidulin" : "random";
}

int cmd_distinguish(const ParamFlags& flags, std::uint64_t seed, std::size_t trials,
                    bool csv) {
  const std::uint32_t q = flags.q;
  const std::size_t m = flags.m, n = flags.n, k = flags.k;
  if (!is_prime(q) || q > 255) throw InvalidArgument("--q must be a prime below 256");
  if (!(m >= 2 && k >= 1 && k < n && n <= m)) {
    throw InvalidArgument("distinguish requires m >= 2 and 1 <= k < n <= m");
  }
  std::optional<Params> pk_params;
  if (flags.lambda > 0) {
    try {
      pk_params = flags.params();
    } catch (const InvalidArgument& e) {
      std::cerr << "note: skipping public-key inputs: " << e.what() << "\n";
    }
  }

  struct Family {
    std::string name;
    std::size_t expected;
    std::map<std::size_t, std::size_t> dims;
    std::size_t gabidulin_like = 0;
    std::size_t dual_gabidulin_like = 0;
    std::size_t runs = 0;
  };
  std::vector<Family> families = {
      {"expanded-gabidulin", std::min(n * m, (k + 1) * m), {}},
      {"expanded-random", std::min(n * m, 2 * k * m), {}},
      {"plain-random", std::min(n * m, 2 * k * m), {}},
  };
  if (pk_params) families.push_back({"public-key", 0, {}});

  Rng rng(seed);
  if (csv) std::cout << "trial,family,dim,verdict,dual_dim,dual_verdict\n";
  for (std::size_t trial = 0; trial < trials; ++trial) {
    for (auto& fam : families) {
      std::optional<BlockCode> bc;
      if (fam.name == "expanded-gabidulin") {
        bc = random_expanded_gabidulin(q, m, n, k, rng);
      } else if (fam.name == "expanded-random") {
        bc = random_expanded_code(q, m, n, k, rng);
      } else if (fam.name == "plain-random") {
        bc = random_plain_code(q, m, n, k, rng);
      } else {
        bc = public_key_code(keygen(*pk_params, rng).pk);
        if (!bc || bc->k >= bc->n || bc->m < 2) continue;
      }
      const Distinguished d = distinguish(*bc);
      ++fam.runs;
      ++fam.dims[d.dim];
      fam.gabidulin_like += d.verdict == Verdict::kExpandedGabidulinLike;
      fam.dual_gabidulin_like += d.dual_verdict == Verdict::kExpandedGabidulinLike;
      if (csv) {
        std::cout << trial << ',' << fam.name << ',' << d.dim << ',' << verdict_name(d.verdict)
                  << ',' << d.dual_dim << ',' << verdict_name(d.dual_verdict) << "\n";
      }
    }
  }
  if (csv) return 0;
  std::cout << "dim(C + C^(1)) over " << trials << " trials, (q,m,n,k) = (" << q << ","
            << m << "," << n << "," << k << ")\n";
  for (const auto& fam : families) {
    std::cout << "  " << fam.name << ":";
    if (fam.runs == 0) {
      std::cout << " not applicable (block size does not divide K)\n";
      continue;
    }
    for (const auto& [dim, count] : fam.dims) std::cout << " " << dim << "x" << count;
    if (fam.expected > 0) {
      const auto it = fam.dims.find(fam.expected);
      std::cout << "  [" << (it == fam.dims.end() ? 0 : it->second) << "/" << fam.runs
                << " at " << fam.expected << "]";
    }
    std::cout << "  gabidulin-like " << fam.gabidulin_like << "/" << fam.runs
              << ", dual " << fam.dual_gabidulin_like << "/" << fam.runs << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Expanded Gabidulin code encryption toolkit"};
  app.require_subcommand(1);

  ParamFlags keygen_flags, estimate_flags, distinguish_flags;
  std::uint64_t seed = 1;
  std::string pk_path = "xgab.pk", sk_path = "xgab.sk", in, out;
  bool csv = false, tables = false;
  std::size_t trials = 50;

  auto* kg = app.add_subcommand("keygen", "Generate a key pair");
  add_param_flags(kg, keygen_flags, true);
  kg->add_option("--seed", seed, "Randomness seed");
  kg->add_option("--pk", pk_path, "Public key output file");
  kg->add_option("--sk", sk_path, "Private key output file");

  auto* enc = app.add_subcommand("encrypt", "Encrypt a raw F_q plaintext");
  enc->add_option("--pk", pk_path, "Public key file")->required();
  enc->add_option("--in", in, "Plaintext file, one byte per element")->required();
  enc->add_option("--out", out, "Ciphertext output file")->required();
  enc->add_option("--seed", seed, "Randomness seed");

  auto* dec = app.add_subcommand("decrypt", "Decrypt a ciphertext");
  dec->add_option("--sk", sk_path, "Private key file")->required();
  dec->add_option("--in", in, "Ciphertext file")->required();
  dec->add_option("--out", out, "Plaintext output file")->required();

  auto* est = app.add_subcommand("estimate", "Attack costs, key size and rate");
  add_param_flags(est, estimate_flags, false);
  est->add_flag("--csv", csv, "Single-line CSV record");
  est->add_flag("--tables", tables, "All published parameter sets as CSV");

  auto* dis = app.add_subcommand("distinguish", "Twisted Frobenius distinguisher experiment");
  distinguish_flags.proposal = 2;
  distinguish_flags.q = 3;
  distinguish_flags.m = 4;
  distinguish_flags.n = 4;
  distinguish_flags.k = 2;
  distinguish_flags.lambda = 1;
  add_param_flags(dis, distinguish_flags, false);
  dis->add_option("--trials", trials, "Number of seeded trials");
  dis->add_option("--seed", seed, "Randomness seed");
  dis->add_flag("--csv", csv, "Per-trial CSV output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (kg->parsed()) return cmd_keygen(keygen_flags, seed, pk_path, sk_path);
    if (enc->parsed()) return cmd_encrypt(pk_path, in, out, seed);
    if (dec->parsed()) return cmd_decrypt(sk_path, in, out);
    if (est->parsed()) {
      if (!tables) {
        for (const char* flag : {"--q", "--m", "--n", "--k", "--lambda"}) {
          if (est->count(flag) == 0) {
            throw InvalidArgument(std::string(flag) + " is required without --tables");
          }
        }
      }
      return cmd_estimate(estimate_flags, tables, csv);
    }
    if (dis->parsed()) return cmd_distinguish(distinguish_flags, seed, trials, csv);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kExitFormat;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
