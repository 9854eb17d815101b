#include "detgb/ring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace detgb::ring {

long long binom(long long n, int k) {
  if (k < 0 || n < k) return 0;
  if (k > n - k) k = static_cast<int>(n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact at each step
  }
  return r;
}

long long monomial_count(int k, int d) {
  if (d < 0) return 0;
  return binom(k + d - 1, k - 1);
}

int Monomial::deg() const { return std::accumulate(exps.begin(), exps.end(), 0); }

bool Monomial::is_one() const {
  for (int e : exps)
    if (e != 0) return false;
  return true;
}

int Monomial::max_var() const {
  for (int i = k(); i >= 1; --i)
    if (exps[i - 1] > 0) return i;
  return 0;
}

Monomial Monomial::one(int k) { return Monomial(std::vector<int>(k, 0)); }

Monomial Monomial::var(int k, int i) {
  Monomial m = one(k);
  m.exps[i - 1] = 1;
  return m;
}

int grevlex_cmp(const Monomial& a, const Monomial& b) {
  int da = a.deg(), db = b.deg();
  if (da != db) return da < db ? -1 : 1;
  // Equal degree: the last index where they differ decides, reversed.
  for (int i = a.k() - 1; i >= 0; --i) {
    if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? -1 : 1;
  }
  return 0;
}

bool divides(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.k(); ++i)
    if (a.exps[i] > b.exps[i]) return false;
  return true;
}

Monomial mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (int i = 0; i < a.k(); ++i) r.exps[i] += b.exps[i];
  return r;
}

Monomial div(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (int i = 0; i < a.k(); ++i) {
    r.exps[i] -= b.exps[i];
    if (r.exps[i] < 0) throw std::invalid_argument("ring: inexact monomial division");
  }
  return r;
}

int top_cmp(const ModuleMonomial& a, const ModuleMonomial& b) {
  int c = grevlex_cmp(a.mon, b.mon);
  if (c != 0) return c;
  if (a.pos != b.pos) return a.pos > b.pos ? 1 : -1;
  return 0;
}

std::vector<Monomial> enumerate_degree(int d, int k) {
  if (d < 0 || k < 1) throw std::invalid_argument("ring: enumerate_degree needs d >= 0, k >= 1");
  std::vector<Monomial> out;
  out.reserve(static_cast<size_t>(monomial_count(k, d)));
  // Descending grevlex = ascending lexicographic order on (e_k, ..., e_2).
  std::vector<int> e(k, 0);
  e[0] = d;
  while (true) {
    out.push_back(Monomial(e));
    // Successor: bump the least significant slot (e_2 first) that has pool
    // available strictly left of it, resetting everything below.
    int i = 0;
    int left = 0;
    for (i = 1; i <= k - 1; ++i) {
      left = 0;
      for (int j = 0; j < i; ++j) left += e[j];
      if (left > 0) break;
    }
    if (i > k - 1) break;
    ++e[i];
    for (int j = 0; j < i; ++j) e[j] = 0;
    e[0] = left - 1;
  }
  return out;
}

long long rank_in_degree(const Monomial& m) {
  const int k = m.k();
  const int d = m.deg();
  long long rank = 0;
  int used = 0;  // exponents fixed at positions > t so far
  for (int t = k; t >= 2; --t) {
    int rem = d - used;
    int et = m.exps[t - 1];
    // Tuples smaller at position t: e_t = 0..et-1, anything left of it.
    for (int f = 0; f < et; ++f) rank += monomial_count(t - 1, rem - f);
    used += et;
  }
  return rank;
}

Monomial unrank_in_degree(int d, int k, long long rank) {
  Monomial m = Monomial::one(k);
  int used = 0;
  for (int t = k; t >= 2; --t) {
    int rem = d - used;
    int f = 0;
    while (true) {
      long long block = monomial_count(t - 1, rem - f);
      if (rank < block) break;
      rank -= block;
      ++f;
    }
    m.exps[t - 1] = f;
    used += f;
  }
  m.exps[0] = d - used;
  return m;
}

Polynomial poly_from_terms(std::vector<Term> terms, const Field& F) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grevlex_cmp(a.mon, b.mon) > 0; });
  Polynomial p;
  for (auto& t : terms) {
    Fel c = t.coeff % F.p();
    if (c == 0) continue;
    if (!p.terms.empty() && p.terms.back().mon == t.mon) {
      p.terms.back().coeff = F.add(p.terms.back().coeff, c);
      if (p.terms.back().coeff == 0) p.terms.pop_back();
    } else {
      p.terms.push_back({t.mon, c});
    }
  }
  for (const auto& t : p.terms) {
    if (t.mon.deg() != p.terms.front().mon.deg())
      throw std::invalid_argument("ring: polynomial is not homogeneous");
  }
  return p;
}

Polynomial add(const Polynomial& a, const Polynomial& b, const Field& F) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() != b.degree()) throw std::invalid_argument("ring: degree mismatch in add");
  Polynomial r;
  size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    int c = grevlex_cmp(a.terms[i].mon, b.terms[j].mon);
    if (c > 0) {
      r.terms.push_back(a.terms[i++]);
    } else if (c < 0) {
      r.terms.push_back(b.terms[j++]);
    } else {
      Fel s = F.add(a.terms[i].coeff, b.terms[j].coeff);
      if (s != 0) r.terms.push_back({a.terms[i].mon, s});
      ++i, ++j;
    }
  }
  while (i < a.terms.size()) r.terms.push_back(a.terms[i++]);
  while (j < b.terms.size()) r.terms.push_back(b.terms[j++]);
  return r;
}

Polynomial scale(const Polynomial& a, Fel c, const Field& F) {
  Polynomial r;
  if (c == 0) return r;
  r.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) r.terms.push_back({t.mon, F.mul(t.coeff, c)});
  return r;
}

Polynomial sub_scaled(const Polynomial& a, Fel c, const Polynomial& b, const Field& F) {
  return add(a, scale(b, F.neg(c), F), F);
}

Polynomial mul_monomial(const Polynomial& a, const Monomial& t) {
  Polynomial r = a;
  for (auto& term : r.terms) term.mon = mul(term.mon, t);
  return r;
}

Polynomial mul(const Polynomial& a, const Polynomial& b, const Field& F) {
  std::vector<Term> acc;
  acc.reserve(a.terms.size() * b.terms.size());
  for (const auto& ta : a.terms)
    for (const auto& tb : b.terms) acc.push_back({mul(ta.mon, tb.mon), F.mul(ta.coeff, tb.coeff)});
  return poly_from_terms(std::move(acc), F);
}

Polynomial make_monic(const Polynomial& a, const Field& F) {
  if (a.is_zero() || a.lt().coeff == 1) return a;
  return scale(a, F.inv(a.lt().coeff), F);
}

ModuleElement elem_from_terms(std::vector<ModuleTerm> terms, const Field& F) {
  std::sort(terms.begin(), terms.end(),
            [](const ModuleTerm& a, const ModuleTerm& b) { return top_cmp(a.mm, b.mm) > 0; });
  ModuleElement e;
  for (auto& t : terms) {
    Fel c = t.coeff % F.p();
    if (c == 0) continue;
    if (!e.terms.empty() && e.terms.back().mm == t.mm) {
      e.terms.back().coeff = F.add(e.terms.back().coeff, c);
      if (e.terms.back().coeff == 0) e.terms.pop_back();
    } else {
      e.terms.push_back({t.mm, c});
    }
  }
  for (const auto& t : e.terms) {
    if (t.mm.mon.deg() != e.terms.front().mm.mon.deg())
      throw std::invalid_argument("ring: module element is not homogeneous");
  }
  return e;
}

ModuleElement add(const ModuleElement& a, const ModuleElement& b, const Field& F) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  ModuleElement r;
  size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    int c = top_cmp(a.terms[i].mm, b.terms[j].mm);
    if (c > 0) {
      r.terms.push_back(a.terms[i++]);
    } else if (c < 0) {
      r.terms.push_back(b.terms[j++]);
    } else {
      Fel s = F.add(a.terms[i].coeff, b.terms[j].coeff);
      if (s != 0) r.terms.push_back({a.terms[i].mm, s});
      ++i, ++j;
    }
  }
  while (i < a.terms.size()) r.terms.push_back(a.terms[i++]);
  while (j < b.terms.size()) r.terms.push_back(b.terms[j++]);
  return r;
}

ModuleElement scale(const ModuleElement& a, Fel c, const Field& F) {
  ModuleElement r;
  if (c == 0) return r;
  r.terms.reserve(a.terms.size());
  for (const auto& t : a.terms) r.terms.push_back({t.mm, F.mul(t.coeff, c)});
  return r;
}

ModuleElement mul_monomial(const ModuleElement& a, const Monomial& t) {
  ModuleElement r = a;
  for (auto& term : r.terms) term.mm.mon = mul(term.mm.mon, t);
  return r;
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < m.k(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!first) os << "*";
    os << "x" << (i + 1);
    if (m.exps[i] > 1) os << "^" << m.exps[i];
    first = false;
  }
  return os.str();
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < p.terms.size(); ++i) {
    if (i) os << " + ";
    os << p.terms[i].coeff << "*" << to_string(p.terms[i].mon);
  }
  return os.str();
}

VarMultTable::VarMultTable(int dmax) : dmax_(dmax) {
  mons_.resize(dmax + 1);
  tab_.resize(dmax + 1);
  for (int d = 0; d <= dmax; ++d) {
    auto mons = enumerate_degree(d, 4);
    mons_[d].resize(mons.size());
    for (size_t r = 0; r < mons.size(); ++r)
      for (int i = 0; i < 4; ++i) mons_[d][r][i] = static_cast<std::uint8_t>(mons[r].exps[i]);
    if (d == dmax) break;
    for (int v = 1; v <= 4; ++v) {
      tab_[d][v - 1].resize(mons.size());
      for (size_t r = 0; r < mons.size(); ++r) {
        Monomial m = mons[r];
        m.exps[v - 1] += 1;
        tab_[d][v - 1][r] = static_cast<std::uint32_t>(rank_in_degree(m));
      }
    }
  }
}

}  // namespace detgb::ring
