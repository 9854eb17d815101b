#ifndef DETGB_RING_HPP
#define DETGB_RING_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "detgb/ff.hpp"

namespace detgb::ring {

using ff::Fel;
using ff::Field;

/// Binomial coefficient with the convention C(n, k) = 0 for n < k or k < 0.
long long binom(long long n, int k);

/// Number of monomials of degree d in k variables: C(k+d-1, k-1).
long long monomial_count(int k, int d);

/// Exponent vector of a monomial in k variables; variables are x1..xk with
/// x1 the grevlex-largest.
struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

  int k() const { return static_cast<int>(exps.size()); }
  int deg() const;
  bool is_one() const;
  /// Largest index (1-based) of a variable dividing this monomial; 0 for 1.
  int max_var() const;

  static Monomial one(int k);
  static Monomial var(int k, int i);  // x_i, 1-based

  bool operator==(const Monomial& o) const { return exps == o.exps; }
};

/// -1, 0, +1 for a ≺ b, a = b, a ≻ b in graded reverse lexicographic order.
int grevlex_cmp(const Monomial& a, const Monomial& b);
inline bool grevlex_greater(const Monomial& a, const Monomial& b) { return grevlex_cmp(a, b) > 0; }

bool divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mul(const Monomial& a, const Monomial& b);
Monomial div(const Monomial& a, const Monomial& b);  // exact quotient a / b

/// Monomial of the free module R^m: x^alpha e_pos with pos in [1, m].
struct ModuleMonomial {
  int pos = 1;
  Monomial mon;

  bool operator==(const ModuleMonomial& o) const { return pos == o.pos && mon == o.mon; }
};

/// Term-over-position order: monomial comparison first, larger position
/// breaks ties. Returns -1, 0, +1 as grevlex_cmp does.
int top_cmp(const ModuleMonomial& a, const ModuleMonomial& b);

/// All monomials of degree d in k variables, grevlex-descending.
std::vector<Monomial> enumerate_degree(int d, int k);

/// 0-based position of m within enumerate_degree(m.deg(), m.k()).
long long rank_in_degree(const Monomial& m);
Monomial unrank_in_degree(int d, int k, long long rank);

struct Term {
  Monomial mon;
  Fel coeff = 0;

  bool operator==(const Term& o) const { return mon == o.mon && coeff == o.coeff; }
};

/// Homogeneous polynomial: terms strictly grevlex-descending, no zero
/// coefficients. The zero polynomial has no terms.
struct Polynomial {
  std::vector<Term> terms;

  bool is_zero() const { return terms.empty(); }
  int degree() const { return terms.empty() ? -1 : terms.front().mon.deg(); }
  const Term& lt() const { return terms.front(); }
  const Monomial& lm() const { return terms.front().mon; }

  bool operator==(const Polynomial& o) const { return terms == o.terms; }
};

/// Sorts, merges duplicates, drops zeros; rejects mixed degrees.
Polynomial poly_from_terms(std::vector<Term> terms, const Field& F);

Polynomial add(const Polynomial& a, const Polynomial& b, const Field& F);
Polynomial scale(const Polynomial& a, Fel c, const Field& F);
/// a - c * b
Polynomial sub_scaled(const Polynomial& a, Fel c, const Polynomial& b, const Field& F);
Polynomial mul_monomial(const Polynomial& a, const Monomial& t);
Polynomial mul(const Polynomial& a, const Polynomial& b, const Field& F);
Polynomial make_monic(const Polynomial& a, const Field& F);

struct ModuleTerm {
  ModuleMonomial mm;
  Fel coeff = 0;

  bool operator==(const ModuleTerm& o) const { return mm == o.mm && coeff == o.coeff; }
};

/// Homogeneous element of R^m: terms strictly TOP-descending, no zeros.
struct ModuleElement {
  std::vector<ModuleTerm> terms;

  bool is_zero() const { return terms.empty(); }
  int degree() const { return terms.empty() ? -1 : terms.front().mm.mon.deg(); }
  const ModuleTerm& lt() const { return terms.front(); }

  bool operator==(const ModuleElement& o) const { return terms == o.terms; }
};

ModuleElement elem_from_terms(std::vector<ModuleTerm> terms, const Field& F);
ModuleElement add(const ModuleElement& a, const ModuleElement& b, const Field& F);
ModuleElement scale(const ModuleElement& a, Fel c, const Field& F);
ModuleElement mul_monomial(const ModuleElement& a, const Monomial& t);

std::string to_string(const Monomial& m);
std::string to_string(const Polynomial& p);

/// Rank tables for multiplication by a single variable, k = 4 only:
/// next(d, v, r) is the degree-(d+1) rank of x_v times the degree-d monomial
/// of rank r. Degrees 0..dmax.
class VarMultTable {
public:
  explicit VarMultTable(int dmax);

  int dmax() const { return dmax_; }
  std::uint32_t next(int d, int v, std::uint32_t r) const {
    return tab_[d][v - 1][r];
  }
  /// Exponents of the degree-d monomial of rank r.
  const std::array<std::uint8_t, 4>& exps(int d, std::uint32_t r) const { return mons_[d][r]; }
  std::uint32_t count(int d) const { return static_cast<std::uint32_t>(mons_[d].size()); }

private:
  int dmax_;
  std::vector<std::vector<std::array<std::uint8_t, 4>>> mons_;
  std::vector<std::array<std::vector<std::uint32_t>, 4>> tab_;
};

}  // namespace detgb::ring

#endif
