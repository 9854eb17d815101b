#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "detgb/gncomplex.hpp"
#include "detgb/io.hpp"

#include <vector>

using namespace detgb;
using namespace detgb::gncomplex;
using ff::Fel;
using ff::Field;
using ring::ModuleElement;
using ring::Monomial;
using ring::Polynomial;

namespace {

Polynomial var_poly(int v, const Field& F) {
  return ring::poly_from_terms({{Monomial::var(4, v), 1}}, F);
}

// [[x1, x2], [x3, x4]]
LinearMatrix symbolic2() {
  LinearMatrix m;
  m.n = 2;
  m.entries.resize(4);
  m.at(0, 0) = {1, 0, 0, 0};
  m.at(0, 1) = {0, 1, 0, 0};
  m.at(1, 0) = {0, 0, 1, 0};
  m.at(1, 1) = {0, 0, 0, 1};
  return m;
}

using PolyMatrix = std::vector<std::vector<Polynomial>>;

PolyMatrix to_polys(const LinearMatrix& m, const Field& F) {
  PolyMatrix r(m.n, std::vector<Polynomial>(m.n));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) r[i][j] = entry_poly(m, i, j, F);
  return r;
}

// Laplace expansion along the first row; the independent determinant oracle.
Polynomial det_oracle(const PolyMatrix& m, const Field& F) {
  const int n = static_cast<int>(m.size());
  if (n == 1) return m[0][0];
  Polynomial det;
  for (int j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMatrix sub(n - 1, std::vector<Polynomial>(n - 1));
    for (int a = 1; a < n; ++a) {
      int cc = 0;
      for (int b = 0; b < n; ++b) {
        if (b == j) continue;
        sub[a - 1][cc++] = m[a][b];
      }
    }
    Polynomial contrib = ring::mul(m[0][j], det_oracle(sub, F), F);
    if (j % 2 == 1) contrib = ring::scale(contrib, F.p() - 1, F);
    det = ring::add(det, contrib, F);
  }
  return det;
}

Polynomial minor_oracle(const PolyMatrix& m, int di, int dj, const Field& F) {
  const int n = static_cast<int>(m.size());
  PolyMatrix sub(n - 1, std::vector<Polynomial>(n - 1));
  int ra = 0;
  for (int a = 0; a < n; ++a) {
    if (a == di) continue;
    int cb = 0;
    for (int b = 0; b < n; ++b) {
      if (b == dj) continue;
      sub[ra][cb++] = m[a][b];
    }
    ++ra;
  }
  return det_oracle(sub, F);
}

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b, const Field& F) {
  const int n = static_cast<int>(a.size());
  PolyMatrix c(n, std::vector<Polynomial>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l)
        c[i][j] = ring::add(c[i][j], ring::mul(a[i][l], b[l][j], F), F);
  return c;
}

Polynomial entry_of(const ModuleElement& e, int pos, const Field& F) {
  std::vector<ring::Term> ts;
  for (const auto& t : e.terms)
    if (t.mm.pos == pos) ts.push_back({t.mm.mon, t.coeff});
  return ring::poly_from_terms(std::move(ts), F);
}

// sum over positions of entry * gens[pos-1]
Polynomial pair_against(const ModuleElement& v, const std::vector<Polynomial>& gens,
                        const Field& F) {
  Polynomial acc;
  for (std::size_t pos = 1; pos <= gens.size(); ++pos) {
    Polynomial e = entry_of(v, static_cast<int>(pos), F);
    if (e.is_zero() || gens[pos - 1].is_zero()) continue;
    acc = ring::add(acc, ring::mul(e, gens[pos - 1], F), F);
  }
  return acc;
}

}  // namespace

TEST_CASE("2x2 symbolic adjugate and cofactors") {
  Field F(ff::kDefaultPrime);
  auto m = symbolic2();
  auto adj = adjugate(m, F);
  Fel neg1 = F.p() - 1;
  CHECK(adj[0][0] == var_poly(4, F));
  CHECK(adj[0][1] == ring::scale(var_poly(2, F), neg1, F));
  CHECK(adj[1][0] == ring::scale(var_poly(3, F), neg1, F));
  CHECK(adj[1][1] == var_poly(1, F));

  auto cofs = cofactor_system(m, F);
  REQUIRE(cofs.size() == 4);
  CHECK(cofs[0] == var_poly(4, F));                          // C_{1,1}
  CHECK(cofs[1] == ring::scale(var_poly(3, F), neg1, F));    // C_{1,2}
  CHECK(cofs[2] == ring::scale(var_poly(2, F), neg1, F));    // C_{2,1}
  CHECK(cofs[3] == var_poly(1, F));                          // C_{2,2}
}

TEST_CASE("adjugate identity and cofactor oracle on random instances") {
  Field F(ff::kDefaultPrime);
  for (int n = 2; n <= 5; ++n) {
    auto m = io::random_instance(F.p(), n, 100 + n);
    auto polys = to_polys(m, F);
    auto adj = adjugate(m, F);
    Polynomial det = det_oracle(polys, F);

    PolyMatrix adjm(n, std::vector<Polynomial>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) adjm[i][j] = adj[i][j];
    auto prod = matmul(polys, adjm, F);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j)
          CHECK(prod[i][j] == det);
        else
          CHECK(prod[i][j].is_zero());
      }

    auto cofs = cofactor_system(m, F);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Polynomial mo = minor_oracle(polys, i, j, F);
        if ((i + j) % 2 == 1) mo = ring::scale(mo, F.p() - 1, F);
        CHECK(cofs[static_cast<std::size_t>(i) * n + j] == mo);
      }
  }
}

TEST_CASE("cofactors of c*M are c^{n-1} times cofactors of M") {
  Field F(ff::kDefaultPrime);
  int n = 3;
  auto m = io::random_instance(F.p(), n, 7);
  Fel c = 12345;
  LinearMatrix cm = m;
  for (auto& e : cm.entries)
    for (auto& v : e) v = F.mul(v, c);
  auto cof = cofactor_system(m, F);
  auto cofc = cofactor_system(cm, F);
  Fel scale = F.pow(c, n - 1);
  for (std::size_t i = 0; i < cof.size(); ++i) CHECK(cofc[i] == ring::scale(cof[i], scale, F));
}

TEST_CASE("syz1 on the 2x2 symbolic matrix") {
  Field F(ff::kDefaultPrime);
  auto m = symbolic2();
  auto syz = syz1_generators(m, F);
  REQUIRE(syz.size() == 6);  // 2n^2 - 2

  // First basis element is (E_{1,2}, 0): x3 at position (1,1), x4 at (1,2).
  const auto& v = syz[0];
  CHECK(entry_of(v, 1, F) == var_poly(3, F));
  CHECK(entry_of(v, 2, F) == var_poly(4, F));
  CHECK(entry_of(v, 3, F).is_zero());
  CHECK(entry_of(v, 4, F).is_zero());

  auto cofs = cofactor_system(m, F);
  CHECK(pair_against(v, cofs, F).is_zero());  // x3*x4 + x4*(-x3) = 0
}

TEST_CASE("syzygy counts and the zero matrix") {
  Field F(ff::kDefaultPrime);
  auto m3 = io::random_instance(F.p(), 3, 1);
  CHECK(syz1_generators(m3, F).size() == 16);
  CHECK(syz2_generators(m3, F).size() == 9);

  LinearMatrix z;
  z.n = 3;
  z.entries.assign(9, {0, 0, 0, 0});
  for (const auto& v : syz1_generators(z, F)) CHECK(v.is_zero());
}

TEST_CASE("complex identities on random instances") {
  Field F(ff::kDefaultPrime);
  for (int n = 3; n <= 5; ++n) {
    auto m = io::random_instance(F.p(), n, 200 + n);
    auto gn = build(m, F);

    // eps o d1 = 0: each syz1 vector annihilates the cofactors
    for (const auto& v : gn.syz1) CHECK(pair_against(v, gn.generators, F).is_zero());

    // d1 o d2 = 0: each syz2 vector annihilates the syz1 rows
    const int n2 = n * n;
    for (const auto& w : gn.syz2) {
      for (int pos = 1; pos <= n2; ++pos) {
        Polynomial acc;
        for (std::size_t l = 0; l < gn.syz1.size(); ++l) {
          Polynomial wl = entry_of(w, static_cast<int>(l) + 1, F);
          Polynomial sl = entry_of(gn.syz1[l], pos, F);
          if (wl.is_zero() || sl.is_zero()) continue;
          acc = ring::add(acc, ring::mul(wl, sl, F), F);
        }
        CHECK(acc.is_zero());
      }
    }

    // d2 o d3 = 0: (M adj, adj M) has zero E1 coordinates
    auto polys = to_polys(m, F);
    PolyMatrix adjm(n, std::vector<Polynomial>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) adjm[i][j] = gn.adjugate[i][j];
    auto madj = matmul(polys, adjm, F);
    auto adjm2 = matmul(adjm, polys, F);
    for (const auto& c : e1_coordinates(madj, adjm2, F)) CHECK(c.is_zero());
  }
}

TEST_CASE("e1_coordinates basics") {
  Field F(7);
  int n = 3;
  auto zero = [&] { return PolyMatrix(n, std::vector<Polynomial>(n)); };
  auto one = ring::poly_from_terms({{Monomial::one(4), 1}}, F);

  // (E_{1,2}, 0) -> unit coordinate on the first basis slot
  auto u = zero();
  u[0][1] = one;
  auto coords = e1_coordinates(u, zero(), F);
  REQUIRE(coords.size() == 16);
  CHECK(coords[0] == one);
  for (std::size_t i = 1; i < coords.size(); ++i) CHECK(coords[i].is_zero());

  // (I, I) -> 0
  auto id = zero();
  for (int i = 0; i < n; ++i) id[i][i] = one;
  for (const auto& c : e1_coordinates(id, id, F)) CHECK(c.is_zero());

  // (E_{1,1}, E_{1,1}) -> unit coordinate on the (E_11, E_11) slot
  auto e11 = zero();
  e11[0][0] = one;
  auto c2 = e1_coordinates(e11, e11, F);
  int diag_slot = 2 * (n * n - n);  // after both off-diagonal families
  for (std::size_t i = 0; i < c2.size(); ++i) {
    if (static_cast<int>(i) == diag_slot)
      CHECK(c2[i] == one);
    else
      CHECK(c2[i].is_zero());
  }

  // trace mismatch is rejected
  auto bad = zero();
  bad[0][0] = one;
  CHECK_THROWS_AS(e1_coordinates(bad, zero(), F), std::invalid_argument);
}
