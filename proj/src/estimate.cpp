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

#include "xgab/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "xgab/error.hpp"
#include "xgab/matq.hpp"

namespace xgab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

BigInt binomial(long n, long r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  BigInt out = 1;
  for (long i = 1; i <= r; ++i) {
    out *= n - r + i;
    out /= i;
  }
  return out;
}

double log2_pos(const BigInt& x) { return x > 0 ? log2_big(x) : -kInf; }

double polynomial_factor(std::size_t m, std::size_t n, std::size_t k) {
  return 3.0 * std::log2(static_cast<double>(m)) +
         3.0 * std::log2(static_cast<double>(n - k));
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

double exponent_cost(long exponent, std::uint32_t q) {
  return static_cast<double>(std::max(exponent, 0L)) * std::log2(static_cast<double>(q));
}

std::string cost_field(double c, bool applicable) {
  if (!applicable || !std::isfinite(c)) return "NA";
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << c;
  return os.str();
}

}  // namespace

double cost_rsd_combinatorial(std::uint32_t q, std::size_t m, std::size_t n,
                              std::size_t k, std::size_t t) {
  if (!(k < n) || t > n - k || m == 0) {
    throw InvalidArgument("combinatorial cost requires k < n and t <= n - k");
  }
  std::size_t u, tp;
  if (n > m) {
    u = m;
    const std::size_t c = ceil_div(k * m, n);
    tp = m - c;
  } else {
    u = n;
    tp = n - k;
  }
  if (t > tp) return kInf;
  const double logp = subspace_prob_log2(static_cast<std::uint32_t>(u),
                                         static_cast<std::uint32_t>(tp),
                                         static_cast<std::uint32_t>(t), q);
  return polynomial_factor(m, n, k) - logp;
}

double CombinatorialCosts::best() const {
  double b = kInf;
  for (std::size_t i = 0; i < cost.size(); ++i) {
    if (applicable[i]) b = std::min(b, cost[i]);
  }
  return b;
}

CombinatorialCosts combinatorial_costs(const Params& p, std::optional<std::size_t> t_opt) {
  p.validate();
  const long t = static_cast<long>(t_opt.value_or(p.error_rank()));
  const long m = static_cast<long>(p.m), n = static_cast<long>(p.n),
             k = static_cast<long>(p.k), lambda = static_cast<long>(p.lambda);
  const double poly = polynomial_factor(p.m, p.n, p.k);
  CombinatorialCosts out;
  if (p.proposal == Proposal::kI) {
    const long c = static_cast<long>(ceil_div(p.k * p.m, p.n));
    out.cost[0] = poly + exponent_cost(t * (lambda - m + c), p.q);
    out.applicable[0] = n > lambda;
    out.cost[1] = poly + exponent_cost(t * (n - (m * (n - k)) / lambda), p.q);
    out.applicable[1] = n <= lambda;
  } else {
    const long uc = static_cast<long>(p.u_c());
    out.cost[0] = poly + exponent_cost(lambda * t * k, p.q);
    out.cost[1] = poly + exponent_cost(t * (uc - (n - k) / lambda), p.q);
    out.applicable = {true, true};
  }
  return out;
}

double cost_proposal_i(const Params& params) {
  if (params.proposal != Proposal::kI) throw InvalidArgument("expected Proposal I");
  return combinatorial_costs(params).best();
}

double cost_proposal_ii(const Params& params) {
  if (params.proposal != Proposal::kII) throw InvalidArgument("expected Proposal II");
  return combinatorial_costs(params).best();
}

double AlgebraicCosts::best() const {
  double b = kInf;
  for (std::size_t i = 0; i < cost.size(); ++i) {
    if (applicable[i]) b = std::min(b, cost[i]);
  }
  return b;
}

AlgebraicCosts cost_minrank_algebraic(std::uint32_t q, std::size_t rows,
                                      std::size_t cols, std::size_t num_mat,
                                      std::size_t r) {
  // Symbols of the attack formulas: matrices are m x n, k of them, rank t.
  const long m = static_cast<long>(rows), n = static_cast<long>(cols),
             k = static_cast<long>(num_mat), t = static_cast<long>(r);
  AlgebraicCosts out;
  out.cost.fill(kInf);

  const BigInt a = k * binomial(n, t);
  const BigInt b = m * binomial(n, t + 1);
  if (a - 1 <= b) {
    out.applicable[0] = true;
    out.cost[0] = log2_pos(b) + (kOmega - 1.0) * log2_pos(a);
  }

  const double lead = std::log2(static_cast<double>(k) * static_cast<double>(t + 1));
  for (long deg = 1; deg < t + 2; ++deg) {
    const BigInt ab = binomial(n, t) * binomial(k + deg - 1, deg);
    BigInt bb = 0;
    for (long i = 1; i <= deg; ++i) {
      const BigInt term =
          binomial(n, t + i) * binomial(m + i - 1, i) * binomial(k + deg - i - 1, deg - i);
      bb += (i % 2 == 1) ? term : BigInt(-term);
    }
    if (ab - 1 <= bb) {
      if (static_cast<long>(q) > deg) {
        out.applicable[1] = true;
        out.degree[1] = static_cast<std::size_t>(deg);
        out.cost[1] = lead + 2.0 * log2_pos(ab);
      }
      break;
    }
  }

  if (q == 2) {
    BigInt ab = 0, bb = 0;
    for (long deg = 1; deg < t + 2; ++deg) {
      ab += binomial(n, t) * binomial(k, deg);
      for (long i = 1; i <= deg; ++i) {
        const BigInt term =
            binomial(n, t + i) * binomial(m + i - 1, i) * binomial(k, deg - i);
        bb += (i % 2 == 1) ? term : BigInt(-term);
      }
      if (ab - 1 <= bb) {
        out.applicable[2] = true;
        out.degree[2] = static_cast<std::size_t>(deg);
        out.cost[2] = lead + 2.0 * log2_pos(ab);
        break;
      }
    }
  }
  return out;
}

KeySize key_size_and_rate(const Params& p) {
  p.validate();
  const std::uint64_t m = p.m, n = p.n, k = p.k, lambda = p.lambda, r = p.n - p.k;
  std::uint64_t factor, num, den;
  if (p.proposal == Proposal::kI) {
    factor = m * r * (n * lambda - m * r);
    num = n * lambda - m * r;
    den = n * lambda;
  } else {
    factor = r * k * m * m;
    num = k;
    den = n;
  }
  KeySize out;
  if (p.q == 2) {
    out.bits = static_cast<double>(factor);
    out.bytes = (factor + 7) / 8;
  } else {
    const long double bits =
        static_cast<long double>(factor) * std::log2(static_cast<long double>(p.q));
    out.bits = static_cast<double>(bits);
    out.bytes = static_cast<std::uint64_t>(std::ceil(bits / 8.0L));
  }
  out.rate_hundredths = static_cast<unsigned>((200 * num + den) / (2 * den));
  return out;
}

CostReport security_report(const Params& p, std::optional<std::size_t> t_opt) {
  p.validate();
  CostReport out;
  out.params = p;
  out.t = t_opt.value_or(p.error_rank());
  out.combinatorial = combinatorial_costs(p, out.t);
  const std::size_t num_mat = p.plaintext_length() + 1;
  out.algebraic = p.proposal == Proposal::kI
                      ? cost_minrank_algebraic(p.q, p.n, p.lambda, num_mat, out.t)
                      : cost_minrank_algebraic(p.q, p.n, p.m, num_mat, p.lambda * out.t);
  out.rsd_parent = cost_rsd_combinatorial(p.q, p.m, p.n, p.k, p.error_rank());
  const double best = std::min(out.combinatorial.best(), out.algebraic.best());
  out.security_bits = static_cast<unsigned>(std::floor(best));
  out.key = key_size_and_rate(p);
  return out;
}

std::string render_text(const CostReport& r) {
  const Params& p = r.params;
  std::ostringstream os;
  os << "Proposal " << (p.proposal == Proposal::kI ? "I" : "II") << " (q=" << p.q
     << ", m=" << p.m << ", n=" << p.n << ", k=" << p.k << ", lambda=" << p.lambda
     << ", t=" << r.t << ")\n";
  os << "  K = " << p.plaintext_length() << ", N = " << p.ciphertext_length() << "\n";
  os << "  public key      " << r.key.bytes << " bytes\n";
  os << "  rate            " << std::fixed << std::setprecision(2) << r.key.rate() << "\n";
  for (std::size_t i = 0; i < 2; ++i) {
    os << "  combinatorial " << i + 1 << " " << cost_field(r.combinatorial.cost[i],
                                                          r.combinatorial.applicable[i])
       << "\n";
  }
  for (std::size_t i = 0; i < 3; ++i) {
    os << "  algebraic " << i + 1 << "     "
       << cost_field(r.algebraic.cost[i], r.algebraic.applicable[i]);
    if (r.algebraic.applicable[i] && i > 0) os << " (b=" << r.algebraic.degree[i] << ")";
    os << "\n";
  }
  os << "  parent RSD      " << cost_field(r.rsd_parent, true) << " (not counted)\n";
  os << "  security        " << r.security_bits << " bits\n";
  return os.str();
}

std::string csv_header() {
  return "q,m,n,k,lambda,proposal,keybytes,rate,security_bits,"
         "comb_1,comb_2,alg_1,alg_2,alg_3,rsd_parent";
}

std::string render_csv(const CostReport& r) {
  const Params& p = r.params;
  std::ostringstream os;
  os << p.q << ',' << p.m << ',' << p.n << ',' << p.k << ',' << p.lambda << ','
     << (p.proposal == Proposal::kI ? "I" : "II") << ',' << r.key.bytes << ','
     << std::fixed << std::setprecision(2) << r.key.rate() << ',' << r.security_bits;
  for (std::size_t i = 0; i < 2; ++i) {
    os << ',' << cost_field(r.combinatorial.cost[i], r.combinatorial.applicable[i]);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    os << ',' << cost_field(r.algebraic.cost[i], r.algebraic.applicable[i]);
  }
  os << ',' << cost_field(r.rsd_parent, true);
  return os.str();
}

const std::vector<ReferenceRow>& reference_rows() {
  using P = Proposal;
  static const std::vector<ReferenceRow> rows = {
      {{P::kI, 2, 31, 31, 19, 29}, 128, 24506, 59},
      {{P::kI, 2, 38, 38, 20, 36}, 192, 58482, 50},
      {{P::kI, 2, 45, 45, 25, 43}, 256, 116438, 53},
      {{P::kII, 2, 56, 56, 28, 2}, 128, 307328, 49},
      {{P::kII, 2, 72, 72, 32, 2}, 192, 829440, 44},
      {{P::kII, 2, 84, 84, 40, 2}, 256, 1552320, 48},
      {{P::kI, 7, 20, 20, 12, 18}, 128, 11230, 56},
      {{P::kI, 7, 24, 24, 14, 22}, 192, 24256, 55},
      {{P::kI, 7, 28, 28, 16, 26}, 256, 46221, 54},
      {{P::kII, 7, 35, 35, 23, 2}, 128, 118646, 66},
      {{P::kII, 7, 45, 45, 29, 2}, 192, 329724, 64},
      {{P::kII, 7, 51, 51, 31, 2}, 256, 565900, 61},
      {{P::kI, 13, 18, 18, 12, 16}, 128, 8993, 63},
      {{P::kI, 13, 21, 21, 11, 19}, 192, 18359, 47},
      {{P::kI, 13, 25, 25, 15, 23}, 256, 37583, 57},
      {{P::kII, 13, 29, 29, 17, 2}, 128, 79358, 59},
      {{P::kII, 13, 37, 37, 21, 2}, 192, 212768, 57},
      {{P::kII, 13, 43, 43, 23, 2}, 256, 393422, 53},
  };
  return rows;
}

}  // namespace xgab
