#include "detgb/analytics.hpp"

#include <cmath>
#include <stdexcept>

namespace detgb::analytics {

using ring::binom;

long long hf_ideal(int n, int D, int d) {
  if (n < 3 || D < 1 || d < 0) throw std::out_of_range("analytics: hf_ideal needs n>=3, D>=1, d>=0");
  long long n2 = static_cast<long long>(n) * n;
  return n2 * binom(3 + d - D * (n - 1), 3) - (2 * n2 - 2) * binom(3 + d - D * n, 3) +
         n2 * binom(3 + d - D * (n + 1), 3) - binom(3 + d - 2 * D * n, 3);
}

long long hf_quotient(int n, int D, int d) { return binom(d + 3, 3) - hf_ideal(n, D, d); }

long long hf_closed_form(int n, int d) {
  if (d < n - 1 || d > 2 * n - 3)
    throw std::out_of_range("analytics: closed form only valid for n-1 <= d <= 2n-3");
  long long dd = d, nn = n;
  return (2 + dd - nn) * (dd * dd + (-2 * nn + 4) * dd + 4 * nn * nn - 4 * nn + 3) / 3;
}

long long staircase_growth_general(int k, long long h_d, long long h_d1, int d) {
  if (h_d < 1) throw std::invalid_argument("analytics: staircase growth needs h_d >= 1");
  // Largest ell >= 0 with C(ell+d-1, ell-1) < h_d; ell = 0 covers h_d = 1.
  int ell = 0;
  while (ell + 1 <= k && binom(ell + d, ell) < h_d) ++ell;
  long long sum = 0;
  for (int j = 1; j <= ell; ++j) sum += binom(j + d - 2, j - 1) * (j - 1);
  return h_d1 + (ell - static_cast<long long>(k)) * h_d + sum - ell * binom(ell + d - 1, ell - 1);
}

long long gb_new_lm_count(int n, int d) {
  if (d < n - 1 || d >= 2 * n - 3)
    throw std::out_of_range("analytics: new-LM count only valid for n-1 <= d < 2n-3");
  long long a = d - 2 * static_cast<long long>(n) + 3, b = a - 1;
  return a * b / 2;
}

long long gb_total(int n) { return static_cast<long long>(n) * (n + 1) * (n + 2) / 6; }

BlockDims block_dims(int n, int d) {
  BlockDims b;
  b.alpha = gb_new_lm_count(n, d);
  b.beta = hf_ideal(n, 1, d + 1) - b.alpha;
  // gamma is the measured complement of the triangular block in the column
  // count C(4+d,3) of the degree-(d+1) matrix.
  b.gamma = binom(4 + d, 3) - b.beta;
  return b;
}

CostModel cost_model(int n, double omega) {
  if (n < 3 || omega < 2.0 || omega > 3.0)
    throw std::out_of_range("analytics: cost model needs n >= 3, 2 <= omega <= 3");
  CostModel cm;
  cm.omega = omega;
  for (int d = n - 1; d <= 2 * n - 4; ++d) {
    auto b = block_dims(n, d);
    double ap = std::pow(static_cast<double>(b.alpha), omega - 2.0);
    double term = ap * static_cast<double>(b.beta) *
                  (static_cast<double>(b.beta) + static_cast<double>(b.gamma));
    cm.terms.push_back({d, term});
    cm.total += term;
  }
  return cm;
}

long long cost_sum_omega2_exact(int n) {
  long long total = 0;
  for (int d = n - 1; d <= 2 * n - 4; ++d) {
    auto b = block_dims(n, d);
    total += b.beta * b.gamma + b.beta * b.beta;
  }
  return total;
}

long long cost_sum_omega3_exact(int n) {
  long long total = 0;
  for (int d = n - 1; d <= 2 * n - 4; ++d) {
    auto b = block_dims(n, d);
    total += b.beta * b.beta * b.alpha + b.alpha * b.beta * b.gamma;
  }
  return total;
}

long long cost_poly_omega2_times2520(int n) {
  // 2520 * (619/1260 n^7 - 341/360 n^6 - 7/360 n^5 + 7/36 n^4 - 169/360 n^3
  //         - 89/360 n^2 - 1/420 n)
  long long x = n;
  long long x2 = x * x, x3 = x2 * x, x4 = x3 * x;
  long long x5 = x4 * x, x6 = x5 * x, x7 = x6 * x;
  return 1238 * x7 - 2387 * x6 - 49 * x5 + 490 * x4 - 1183 * x3 - 623 * x2 - 6 * x;
}

long long dense_coeff_count(int n, DenseCountMode mode) {
  if (n < 3) throw std::out_of_range("analytics: dense count needs n >= 3");
  if (mode == DenseCountMode::Paper) {
    // (5 n^6 + 39 n^5 - 160 n^4 + 195 n^3 + 155 n^2 + 126 n) / 360
    long long x = n;
    long long x2 = x * x, x3 = x2 * x;
    long long x4 = x3 * x, x5 = x4 * x, x6 = x5 * x;
    return (5 * x6 + 39 * x5 - 160 * x4 + 195 * x3 + 155 * x2 + 126 * x) / 360;
  }
  long long n2 = static_cast<long long>(n) * n;
  long long total = n2 * (binom(n + 2, 3) - n2 + 1);
  for (int e = n; e <= 2 * n - 3; ++e)
    total += gb_new_lm_count(n, e - 1) * (binom(3 + e, 3) - hf_ideal(n, 1, e) + 1);
  return total;
}

bool revlex_check(const std::vector<std::uint32_t>& pivot_cols, long long h_d) {
  if (static_cast<long long>(pivot_cols.size()) != h_d) return false;
  for (std::size_t i = 0; i < pivot_cols.size(); ++i)
    if (pivot_cols[i] != i) return false;
  return true;
}

namespace {

// Standard monomials (outside the leading-term staircase) of one degree.
std::vector<ring::Monomial> standard_monomials(const engine::GroebnerBasis& gb, int d) {
  std::vector<ring::Monomial> out;
  for (const auto& m : ring::enumerate_degree(d, 4)) {
    bool in_lt = false;
    for (const auto& b : gb.polys)
      if (ring::divides(b.lm(), m)) {
        in_lt = true;
        break;
      }
    if (!in_lt) out.push_back(m);
  }
  return out;
}

}  // namespace

LefschetzReport lefschetz_check(const Field& F, const engine::GroebnerBasis& gb, int n,
                                const std::array<Fel, 4>& ell, int smax) {
  LefschetzReport rep;
  const int socle = 2 * n - 4;

  std::vector<std::vector<ring::Monomial>> basis(socle + 1);
  for (int d = 0; d <= socle; ++d) basis[d] = standard_monomials(gb, d);

  ring::Polynomial lin;
  {
    std::vector<ring::Term> ts;
    for (int v = 0; v < 4; ++v)
      if (ell[v] != 0) ts.push_back({ring::Monomial::var(4, v + 1), ell[v]});
    lin = ring::poly_from_terms(std::move(ts), F);
  }

  ring::Polynomial lpow;  // ell^s
  for (int s = 1; s <= smax; ++s) {
    if (lin.is_zero())
      lpow = ring::Polynomial{};
    else
      lpow = (s == 1) ? lin : ring::mul(lpow, lin, F);
    for (int d = 0; d + s <= socle; ++d) {
      long long qd = static_cast<long long>(basis[d].size());
      long long qds = static_cast<long long>(basis[d + s].size());
      if (qd == 0) continue;
      exactla::DenseMatrix mat(basis[d].size(), basis[d + s].size());
      for (std::size_t r = 0; r < basis[d].size(); ++r) {
        ring::Polynomial img = lpow.is_zero()
                                   ? ring::Polynomial{}
                                   : engine::normal_form(F, ring::mul_monomial(lpow, basis[d][r]), gb);
        for (const auto& t : img.terms) {
          for (std::size_t c = 0; c < basis[d + s].size(); ++c)
            if (basis[d + s][c] == t.mon) {
              mat.at(r, c) = t.coeff;
              break;
            }
        }
      }
      exactla::OpCounters ops;
      long long rank = static_cast<long long>(exactla::rref(mat, F, ops).m.rows());
      LefschetzEntry e;
      e.s = s;
      e.d = d;
      e.rank = rank;
      e.expected = std::min(qd, qds);
      e.pass = rank == e.expected;
      if (s == 1 && !e.pass) rep.s1_pass = false;
      rep.entries.push_back(e);
    }
  }
  return rep;
}

}  // namespace detgb::analytics
