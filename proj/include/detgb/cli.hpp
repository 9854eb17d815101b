#ifndef DETGB_CLI_HPP
#define DETGB_CLI_HPP

#include <string>
#include <vector>

#include "detgb/analytics.hpp"
#include "detgb/engine.hpp"
#include "detgb/io.hpp"

namespace detgb::cli {

using ff::Field;

/// Monomials of degree d outside the basis staircase.
long long standard_monomial_count(const engine::GroebnerBasis& gb, int d);

/// Degree-d leading-term membership forms a grevlex top segment.
bool revlex_segment_at_degree(const engine::GroebnerBasis& gb, int d);

struct VerifyReport {
  bool ok = true;                       // checks (a)-(c)
  std::vector<std::string> failures;    // diagnostics for (a)-(c)
  std::vector<std::pair<int, bool>> revlex_by_degree;  // conjecture-tagged, non-fatal
  bool revlex_all = true;
  bool spairs_checked = false;
};

/// Hilbert-driven certification of a basis file against its instance:
/// (a) every cofactor reduces to zero, (b) staircase counts match the
/// Gulliksen-Negard Hilbert function, (c) the basis is reduced and monic,
/// (d) reverse-lexicographic segments per degree, reported only.
VerifyReport verify_gb(const Field& F, const gncomplex::LinearMatrix& m,
                       const engine::GroebnerBasis& gb, bool check_spairs);

/// log-log least-squares slope of y against x.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

int run_main(int argc, char** argv);

}  // namespace detgb::cli

#endif
