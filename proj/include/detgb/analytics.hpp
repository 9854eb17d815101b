#ifndef DETGB_ANALYTICS_HPP
#define DETGB_ANALYTICS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "detgb/engine.hpp"

namespace detgb::analytics {

using ff::Fel;
using ff::Field;

/// Hilbert function of the determinantal ideal from the Gulliksen-Negard
/// resolution, with shifts D(n-1), Dn, D(n+1), 2Dn:
/// n^2 C(3+d-D(n-1),3) - (2n^2-2) C(3+d-Dn,3) + n^2 C(3+d-D(n+1),3) - C(3+d-2Dn,3).
long long hf_ideal(int n, int D, int d);
long long hf_quotient(int n, int D, int d);

struct HilbertData {
  int n = 3;
  int D = 1;
  long long ideal(int d) const { return hf_ideal(n, D, d); }
  long long quotient(int d) const { return hf_quotient(n, D, d); }
};

/// Closed form h_d = (2+d-n)(d^2+(-2n+4)d+4n^2-4n+3)/3, valid for D = 1 and
/// n-1 <= d <= 2n-3 only.
long long hf_closed_form(int n, int d);

/// Number of new degree-(d+1) leading monomials of a reverse lexicographic
/// ideal in k variables with Hilbert values h_d, h_{d+1}.
long long staircase_growth_general(int k, long long h_d, long long h_d1, int d);

/// (d-2n+3)(d-2n+2)/2 on n-1 <= d < 2n-3.
long long gb_new_lm_count(int n, int d);

/// n(n+1)(n+2)/6.
long long gb_total(int n);

struct BlockDims {
  long long alpha = 0, beta = 0, gamma = 0;
};

/// Block sizes of the degree-(d+1) Macaulay matrix: alpha new rows,
/// beta = h_{d+1} - alpha triangular rows, gamma = C(4+d,3) - beta columns
/// beside the triangle. Valid on n-1 <= d < 2n-3.
BlockDims block_dims(int n, int d);

struct CostTerm {
  int d = 0;  // matrix degree d+1 is reduced
  double value = 0.0;
};

struct CostModel {
  double omega = 2.0;
  std::vector<CostTerm> terms;  // beta^2 alpha^(w-2) + alpha^(w-2) beta gamma
  double total = 0.0;
};

CostModel cost_model(int n, double omega);
long long cost_sum_omega2_exact(int n);  // sum of beta*gamma + beta^2
long long cost_sum_omega3_exact(int n);  // sum of beta^2*alpha + alpha*beta*gamma
/// The printed degree-7 polynomial for omega = 2, times 2520 (its common
/// denominator), for exact comparisons.
long long cost_poly_omega2_times2520(int n);

enum class DenseCountMode { Paper, Direct };

/// Coefficients stored by the dense representation of the reduced basis.
/// Paper mode evaluates the printed sextic; Direct mode pairs each element
/// count with the monomial count of its own degree.
long long dense_coeff_count(int n, DenseCountMode mode);

/// Pivot columns are exactly 0..h_d-1.
bool revlex_check(const std::vector<std::uint32_t>& pivot_cols, long long h_d);

struct LefschetzEntry {
  int s = 1;
  int d = 0;
  long long rank = 0;
  long long expected = 0;
  bool pass = false;
};

struct LefschetzReport {
  std::vector<LefschetzEntry> entries;
  bool s1_pass = true;
};

/// Rank of multiplication by ell^s from the degree-d slice of R/I, for
/// s = 1..smax, compared against the full-rank value min(q_d, q_{d+s}).
LefschetzReport lefschetz_check(const Field& F, const engine::GroebnerBasis& gb, int n,
                                const std::array<Fel, 4>& ell, int smax);

}  // namespace detgb::analytics

#endif
