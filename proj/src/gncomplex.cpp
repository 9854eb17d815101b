#include "detgb/gncomplex.hpp"

#include <stdexcept>

namespace detgb::gncomplex {

namespace {

using ring::ModuleTerm;
using ring::Monomial;
using ring::Term;
using ring::VarMultTable;

// Dense coefficient vector of one homogeneous degree, indexed by grevlex rank.
struct Slice {
  int deg = 0;
  std::vector<Fel> c;

  static Slice zero(int d) {
    Slice s;
    s.deg = d;
    s.c.assign(static_cast<size_t>(ring::monomial_count(4, d)), 0);
    return s;
  }
};

Slice mul_linear(const std::array<Fel, 4>& lin, const Slice& s, const VarMultTable& tab,
                 const Field& F) {
  Slice r = Slice::zero(s.deg + 1);
  for (std::uint32_t idx = 0; idx < s.c.size(); ++idx) {
    Fel sv = s.c[idx];
    if (sv == 0) continue;
    for (int v = 1; v <= 4; ++v) {
      if (lin[v - 1] == 0) continue;
      std::uint32_t t = tab.next(s.deg, v, idx);
      r.c[t] = F.add(r.c[t], F.mul(lin[v - 1], sv));
    }
  }
  return r;
}

void add_in(Slice& a, const Slice& b, const Field& F) {
  for (size_t i = 0; i < a.c.size(); ++i) a.c[i] = F.add(a.c[i], b.c[i]);
}

Polynomial slice_to_poly(const Slice& s, const Field& F) {
  std::vector<Term> terms;
  for (std::uint32_t r = 0; r < s.c.size(); ++r) {
    if (s.c[r] == 0) continue;
    terms.push_back({ring::unrank_in_degree(s.deg, 4, r), s.c[r]});
  }
  return ring::poly_from_terms(std::move(terms), F);
}

Polynomial trace_of(const std::vector<std::vector<Polynomial>>& m, const Field& F) {
  Polynomial t;
  for (size_t i = 0; i < m.size(); ++i) t = ring::add(t, m[i][i], F);
  return t;
}

// M * E_{uv}: column v is column u of M (1-based u, v).
std::vector<std::vector<Polynomial>> mat_times_elementary(const LinearMatrix& m, int u, int v,
                                                          const Field& F) {
  std::vector<std::vector<Polynomial>> r(m.n, std::vector<Polynomial>(m.n));
  for (int a = 0; a < m.n; ++a) r[a][v - 1] = entry_poly(m, a, u - 1, F);
  return r;
}

// E_{uv} * M: row u is row v of M.
std::vector<std::vector<Polynomial>> elementary_times_mat(const LinearMatrix& m, int u, int v,
                                                          const Field& F) {
  std::vector<std::vector<Polynomial>> r(m.n, std::vector<Polynomial>(m.n));
  for (int b = 0; b < m.n; ++b) r[u - 1][b] = entry_poly(m, v - 1, b, F);
  return r;
}

ModuleElement flatten(const std::vector<std::vector<Polynomial>>& mat, int n, const Field& F) {
  std::vector<ModuleTerm> terms;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int pos = a * n + b + 1;
      for (const auto& t : mat[a][b].terms) terms.push_back({{pos, t.mon}, t.coeff});
    }
  return ring::elem_from_terms(std::move(terms), F);
}

}  // namespace

Polynomial entry_poly(const LinearMatrix& m, int i, int j, const Field& F) {
  std::vector<Term> terms;
  const auto& e = m.at(i, j);
  for (int v = 0; v < 4; ++v)
    if (e[v] != 0) terms.push_back({Monomial::var(4, v + 1), e[v]});
  return ring::poly_from_terms(std::move(terms), F);
}

std::vector<std::vector<Polynomial>> adjugate(const LinearMatrix& m, const Field& F) {
  const int n = m.n;
  if (n < 2) throw std::invalid_argument("gncomplex: adjugate needs n >= 2");
  if (F.p() <= static_cast<std::uint64_t>(n))
    throw std::invalid_argument("gncomplex: adjugate needs p > n");
  VarMultTable tab(n);

  // Faddeev-LeVerrier: N_1 = I, M_k = M N_k, c_k = -tr(M_k)/k,
  // N_{k+1} = M_k + c_k I; adj(M) = (-1)^{n-1} N_n.
  std::vector<std::vector<Slice>> nk(n, std::vector<Slice>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      nk[i][j] = Slice::zero(0);
      if (i == j) nk[i][j].c[0] = 1;
    }

  for (int k = 1; k <= n - 1; ++k) {
    std::vector<std::vector<Slice>> mk(n, std::vector<Slice>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        mk[i][j] = Slice::zero(k);
        for (int l = 0; l < n; ++l) add_in(mk[i][j], mul_linear(m.at(i, l), nk[l][j], tab, F), F);
      }
    Slice tr = Slice::zero(k);
    for (int i = 0; i < n; ++i) add_in(tr, mk[i][i], F);
    Fel invk = F.inv(F.reduce(k));
    for (auto& cv : tr.c) cv = F.neg(F.mul(cv, invk));  // c_k
    for (int i = 0; i < n; ++i) add_in(mk[i][i], tr, F);
    nk = std::move(mk);
  }

  Fel sign = (n % 2 == 1) ? 1 : F.p() - 1;  // (-1)^{n-1}
  std::vector<std::vector<Polynomial>> adj(n, std::vector<Polynomial>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (sign != 1)
        for (auto& cv : nk[i][j].c) cv = F.neg(cv);
      adj[i][j] = slice_to_poly(nk[i][j], F);
    }
  return adj;
}

std::vector<Polynomial> cofactor_system(const LinearMatrix& m, const Field& F) {
  auto adj = adjugate(m, F);
  const int n = m.n;
  std::vector<Polynomial> gens(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gens[static_cast<size_t>(i) * n + j] = adj[j][i];
  return gens;
}

std::vector<E1Basis::Element> E1Basis::enumerate(int n) {
  std::vector<Element> out;
  out.reserve(static_cast<size_t>(2 * n * n - 2));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) out.push_back({Kind::LeftOffDiag, i, j});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) out.push_back({Kind::RightOffDiag, i, j});
  for (int i = 1; i <= n; ++i) out.push_back({Kind::DiagPair, i, 0});
  for (int i = 2; i <= n - 1; ++i) out.push_back({Kind::RightDiagDiff, i, 0});
  return out;
}

std::vector<Polynomial> e1_coordinates(const std::vector<std::vector<Polynomial>>& u,
                                       const std::vector<std::vector<Polynomial>>& v,
                                       const Field& F) {
  const int n = static_cast<int>(u.size());
  Polynomial tu = trace_of(u, F), tv = trace_of(v, F);
  if (!ring::add(tu, ring::scale(tv, F.p() - 1, F), F).is_zero())
    throw std::invalid_argument("gncomplex: e1_coordinates needs trace(u) = trace(v)");

  // Shift by c(I, I) with c = -v[n][n] to kill the (0, E_nn - E_11) slot.
  Polynomial neg_vnn = ring::scale(v[n - 1][n - 1], F.p() - 1, F);
  std::vector<Polynomial> coords;
  coords.reserve(static_cast<size_t>(2 * n * n - 2));
  for (const auto& b : E1Basis::enumerate(n)) {
    switch (b.kind) {
      case E1Basis::Kind::LeftOffDiag:
        coords.push_back(u[b.i - 1][b.j - 1]);
        break;
      case E1Basis::Kind::RightOffDiag:
        coords.push_back(v[b.i - 1][b.j - 1]);
        break;
      case E1Basis::Kind::DiagPair:
        coords.push_back(ring::add(u[b.i - 1][b.i - 1], neg_vnn, F));
        break;
      case E1Basis::Kind::RightDiagDiff:
        coords.push_back(ring::add(v[b.i - 1][b.i - 1], neg_vnn, F));
        break;
    }
  }
  return coords;
}

std::vector<ModuleElement> syz1_generators(const LinearMatrix& m, const Field& F) {
  const int n = m.n;
  std::vector<ModuleElement> out;
  out.reserve(static_cast<size_t>(2 * n * n - 2));
  for (const auto& b : E1Basis::enumerate(n)) {
    // d1(N1, N2) = N1 M - M N2
    std::vector<std::vector<Polynomial>> mat(n, std::vector<Polynomial>(n));
    auto sub_entry = [&](int a, int c, const Polynomial& p) {
      mat[a][c] = ring::add(mat[a][c], ring::scale(p, F.p() - 1, F), F);
    };
    auto add_entry = [&](int a, int c, const Polynomial& p) {
      mat[a][c] = ring::add(mat[a][c], p, F);
    };
    switch (b.kind) {
      case E1Basis::Kind::LeftOffDiag:
        // E_ij M: row i gets row j of M
        for (int c = 0; c < n; ++c) add_entry(b.i - 1, c, entry_poly(m, b.j - 1, c, F));
        break;
      case E1Basis::Kind::RightOffDiag:
        // -(M E_ij): column j gets -column i of M
        for (int a = 0; a < n; ++a) sub_entry(a, b.j - 1, entry_poly(m, a, b.i - 1, F));
        break;
      case E1Basis::Kind::DiagPair:
        // E_ii M - M E_11
        for (int c = 0; c < n; ++c) add_entry(b.i - 1, c, entry_poly(m, b.i - 1, c, F));
        for (int a = 0; a < n; ++a) sub_entry(a, 0, entry_poly(m, a, 0, F));
        break;
      case E1Basis::Kind::RightDiagDiff:
        // -M (E_ii - E_11)
        for (int a = 0; a < n; ++a) sub_entry(a, b.i - 1, entry_poly(m, a, b.i - 1, F));
        for (int a = 0; a < n; ++a) add_entry(a, 0, entry_poly(m, a, 0, F));
        break;
    }
    out.push_back(flatten(mat, n, F));
  }
  return out;
}

std::vector<ModuleElement> syz2_generators(const LinearMatrix& m, const Field& F) {
  const int n = m.n;
  std::vector<ModuleElement> out;
  out.reserve(static_cast<size_t>(n) * n);
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v) {
      auto mn = mat_times_elementary(m, u, v, F);
      auto nm = elementary_times_mat(m, u, v, F);
      auto coords = e1_coordinates(mn, nm, F);
      std::vector<ModuleTerm> terms;
      for (size_t l = 0; l < coords.size(); ++l)
        for (const auto& t : coords[l].terms)
          terms.push_back({{static_cast<int>(l) + 1, t.mon}, t.coeff});
      out.push_back(ring::elem_from_terms(std::move(terms), F));
    }
  return out;
}

GNData build(const LinearMatrix& m, const Field& F) {
  GNData gn;
  gn.matrix = m;
  gn.adjugate = adjugate(m, F);
  const int n = m.n;
  gn.generators.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gn.generators[static_cast<size_t>(i) * n + j] = gn.adjugate[j][i];
  gn.syz1 = syz1_generators(m, F);
  gn.syz2 = syz2_generators(m, F);
  return gn;
}

}  // namespace detgb::gncomplex
