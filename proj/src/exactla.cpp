#include "detgb/exactla.hpp"

#include <algorithm>
#include <stdexcept>

// All dense kernels execute and count operations in the dense arithmetic
// model: updates run over the full trailing width whether or not individual
// entries vanish, so the counters depend only on the dimensions and the rank
// profile of the input. The one value-dependent economy kept is skipping the
// normalization of a row whose leading coefficient is already 1.

namespace detgb::exactla {

std::size_t default_strassen_threshold() { return 64; }

DenseMatrix mul_classical(const DenseMatrix& a, const DenseMatrix& b, const Field& F,
                          OpCounters& ops) {
  if (a.cols() != b.rows()) throw std::invalid_argument("exactla: dimension mismatch in mul");
  DenseMatrix c(a.rows(), b.cols());
  const std::size_t n = b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Fel* ci = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Fel f = a.at(i, k);
      const Fel* bk = b.row(k);
      for (std::size_t j = 0; j < n; ++j) {
        ci[j] = F.add(ci[j], F.mul(f, bk[j]));
        ++ops.mul;
        ++ops.add;
      }
    }
  }
  return c;
}

namespace {

DenseMatrix block(const DenseMatrix& m, std::size_t r0, std::size_t c0, std::size_t rows,
                  std::size_t cols) {
  DenseMatrix b(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      b.at(i, j) = (r0 + i < m.rows() && c0 + j < m.cols()) ? m.at(r0 + i, c0 + j) : 0;
  return b;
}

void add_into(DenseMatrix& dst, std::size_t r0, std::size_t c0, const DenseMatrix& src,
              const Field& F, int sign, OpCounters& ops) {
  for (std::size_t i = 0; i < src.rows(); ++i)
    for (std::size_t j = 0; j < src.cols(); ++j) {
      if (r0 + i >= dst.rows() || c0 + j >= dst.cols()) continue;
      Fel v = src.at(i, j);
      Fel& d = dst.at(r0 + i, c0 + j);
      d = sign > 0 ? F.add(d, v) : F.sub(d, v);
      ++ops.add;
    }
}

DenseMatrix mat_add(const DenseMatrix& a, const DenseMatrix& b, const Field& F, int sign,
                    OpCounters& ops) {
  DenseMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      c.at(i, j) = sign > 0 ? F.add(a.at(i, j), b.at(i, j)) : F.sub(a.at(i, j), b.at(i, j));
      ++ops.add;
    }
  return c;
}

DenseMatrix strassen(const DenseMatrix& a, const DenseMatrix& b, const Field& F, OpCounters& ops,
                     std::size_t threshold) {
  std::size_t n = std::max({a.rows(), a.cols(), b.cols()});
  if (n <= threshold) return mul_classical(a, b, F, ops);
  std::size_t h = (n + 1) / 2;

  DenseMatrix a11 = block(a, 0, 0, h, h), a12 = block(a, 0, h, h, h);
  DenseMatrix a21 = block(a, h, 0, h, h), a22 = block(a, h, h, h, h);
  DenseMatrix b11 = block(b, 0, 0, h, h), b12 = block(b, 0, h, h, h);
  DenseMatrix b21 = block(b, h, 0, h, h), b22 = block(b, h, h, h, h);

  DenseMatrix m1 =
      strassen(mat_add(a11, a22, F, 1, ops), mat_add(b11, b22, F, 1, ops), F, ops, threshold);
  DenseMatrix m2 = strassen(mat_add(a21, a22, F, 1, ops), b11, F, ops, threshold);
  DenseMatrix m3 = strassen(a11, mat_add(b12, b22, F, -1, ops), F, ops, threshold);
  DenseMatrix m4 = strassen(a22, mat_add(b21, b11, F, -1, ops), F, ops, threshold);
  DenseMatrix m5 = strassen(mat_add(a11, a12, F, 1, ops), b22, F, ops, threshold);
  DenseMatrix m6 =
      strassen(mat_add(a21, a11, F, -1, ops), mat_add(b11, b12, F, 1, ops), F, ops, threshold);
  DenseMatrix m7 =
      strassen(mat_add(a12, a22, F, -1, ops), mat_add(b21, b22, F, 1, ops), F, ops, threshold);

  DenseMatrix c(a.rows(), b.cols());
  // c11 = m1 + m4 - m5 + m7, c12 = m3 + m5, c21 = m2 + m4, c22 = m1 - m2 + m3 + m6
  add_into(c, 0, 0, m1, F, 1, ops);
  add_into(c, 0, 0, m4, F, 1, ops);
  add_into(c, 0, 0, m5, F, -1, ops);
  add_into(c, 0, 0, m7, F, 1, ops);
  add_into(c, 0, h, m3, F, 1, ops);
  add_into(c, 0, h, m5, F, 1, ops);
  add_into(c, h, 0, m2, F, 1, ops);
  add_into(c, h, 0, m4, F, 1, ops);
  add_into(c, h, h, m1, F, 1, ops);
  add_into(c, h, h, m2, F, -1, ops);
  add_into(c, h, h, m3, F, 1, ops);
  add_into(c, h, h, m6, F, 1, ops);
  return c;
}

}  // namespace

DenseMatrix mul(const DenseMatrix& a, const DenseMatrix& b, const Field& F, OpCounters& ops,
                std::size_t strassen_threshold) {
  if (a.cols() != b.rows()) throw std::invalid_argument("exactla: dimension mismatch in mul");
  // Strassen only pays off on square-ish blocks; thin products stay classical.
  std::size_t mn = std::min({a.rows(), a.cols(), b.cols()});
  if (mn <= strassen_threshold) return mul_classical(a, b, F, ops);
  return strassen(a, b, F, ops, strassen_threshold);
}

EchelonResult rref(const DenseMatrix& a, const Field& F, OpCounters& ops) {
  const std::size_t cols = a.cols();
  const std::size_t nrows = a.rows();
  EchelonResult res;

  DenseMatrix w = a;
  std::vector<char> pivoted(nrows, 0);
  std::vector<std::size_t> pcol, prow;

  // Column-major Gauss-Jordan: the pivot is the first unpivoted row with a
  // nonzero entry, and every other row takes the full-width update.
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t r = nrows;
    for (std::size_t i = 0; i < nrows; ++i) {
      if (!pivoted[i] && w.at(i, c) != 0) {
        r = i;
        break;
      }
    }
    if (r == nrows) continue;
    pivoted[r] = 1;
    Fel lead = w.at(r, c);
    if (lead != 1) {
      Fel il = F.inv(lead);
      ++ops.mul;
      w.at(r, c) = 1;
      for (std::size_t j = c + 1; j < cols; ++j) {
        w.at(r, j) = F.mul(w.at(r, j), il);
        ++ops.mul;
      }
    }
    const Fel* pr = w.row(r);
    for (std::size_t i = 0; i < nrows; ++i) {
      if (i == r) continue;
      Fel f = w.at(i, c);
      w.at(i, c) = 0;
      Fel* ri = w.row(i);
      for (std::size_t j = c + 1; j < cols; ++j) {
        ri[j] = F.sub(ri[j], F.mul(f, pr[j]));
        ++ops.mul;
        ++ops.add;
      }
    }
    pcol.push_back(c);
    prow.push_back(r);
  }

  res.zero_rows = nrows - pcol.size();
  res.m = DenseMatrix(pcol.size(), cols);
  res.pivots = pcol;
  res.row_origin = prow;
  for (std::size_t i = 0; i < pcol.size(); ++i)
    std::copy(w.row(prow[i]), w.row(prow[i]) + cols, res.m.row(i));
  return res;
}

namespace {

// Back-substitution base case: solves the p x p triangular system in
// u[u0..u0+p) against w rows [r0..r0+p), columns [c0..c0+q).
void trsm_base(const DenseMatrix& u, std::size_t u0, std::size_t p, DenseMatrix& w, std::size_t r0,
               std::size_t c0, std::size_t q, const Field& F, OpCounters& ops) {
  for (std::size_t i = p; i-- > 0;) {
    Fel d = u.at(u0 + i, u0 + i);
    if (d == 0) throw std::domain_error("exactla: trsm on singular triangular matrix");
    for (std::size_t j = i + 1; j < p; ++j) {
      Fel f = u.at(u0 + i, u0 + j);
      for (std::size_t col = 0; col < q; ++col) {
        w.at(r0 + i, c0 + col) = F.sub(w.at(r0 + i, c0 + col), F.mul(f, w.at(r0 + j, c0 + col)));
        ++ops.mul;
        ++ops.add;
      }
    }
    if (d != 1) {
      Fel id = F.inv(d);
      ++ops.mul;
      for (std::size_t col = 0; col < q; ++col) {
        Fel& wv = w.at(r0 + i, c0 + col);
        wv = F.mul(wv, id);
        ++ops.mul;
      }
    }
  }
}

void trsm_recurse(const DenseMatrix& u, std::size_t u0, std::size_t p, DenseMatrix& w,
                  std::size_t r0, std::size_t c0, std::size_t q, const Field& F, OpCounters& ops) {
  constexpr std::size_t kBase = 16;
  if (p <= kBase && q <= kBase) {
    trsm_base(u, u0, p, w, r0, c0, q, F, ops);
    return;
  }
  if (p >= q) {
    // Split rows: [U00 U01; 0 U11]. Solve the bottom, update, solve the top.
    std::size_t p1 = p / 2, p2 = p - p1;
    trsm_recurse(u, u0 + p1, p2, w, r0 + p1, c0, q, F, ops);
    // W0 -= U01 * W1
    DenseMatrix u01(p1, p2), w1(p2, q);
    for (std::size_t i = 0; i < p1; ++i)
      for (std::size_t j = 0; j < p2; ++j) u01.at(i, j) = u.at(u0 + i, u0 + p1 + j);
    for (std::size_t i = 0; i < p2; ++i)
      for (std::size_t j = 0; j < q; ++j) w1.at(i, j) = w.at(r0 + p1 + i, c0 + j);
    DenseMatrix upd = mul(u01, w1, F, ops);
    for (std::size_t i = 0; i < p1; ++i)
      for (std::size_t j = 0; j < q; ++j) {
        w.at(r0 + i, c0 + j) = F.sub(w.at(r0 + i, c0 + j), upd.at(i, j));
        ++ops.add;
      }
    trsm_recurse(u, u0, p1, w, r0, c0, q, F, ops);
  } else {
    std::size_t q1 = q / 2;
    trsm_recurse(u, u0, p, w, r0, c0, q1, F, ops);
    trsm_recurse(u, u0, p, w, r0, c0 + q1, q - q1, F, ops);
  }
}

}  // namespace

DenseMatrix trsm(const DenseMatrix& u, const DenseMatrix& v, const Field& F, OpCounters& ops) {
  if (u.rows() != u.cols()) throw std::invalid_argument("exactla: trsm needs a square matrix");
  if (u.rows() != v.rows()) throw std::invalid_argument("exactla: dimension mismatch in trsm");
  for (std::size_t i = 0; i < u.rows(); ++i)
    if (u.at(i, i) == 0) throw std::domain_error("exactla: trsm on singular triangular matrix");
  DenseMatrix w = v;
  if (u.rows() > 0 && v.cols() > 0) trsm_recurse(u, 0, u.rows(), w, 0, 0, v.cols(), F, ops);
  return w;
}

StructuredResult structured_rref(const DenseMatrix& m, const BlockSplit& split, const Field& F,
                                 OpCounters& ops) {
  const std::size_t alpha = split.alpha, beta = split.beta;
  const std::size_t cols = m.cols();
  StructuredResult res;

  bool ok = (alpha + beta == m.rows()) && (beta <= cols) && (split.gamma == cols - beta);
  for (std::size_t i = 0; ok && i < beta; ++i) {
    if (m.at(i, i) == 0) ok = false;
    for (std::size_t j = 0; ok && j < i; ++j)
      if (m.at(i, j) != 0) ok = false;
  }
  if (!ok) {
    // Non-generic arrangement: plain rref is the safe path.
    EchelonResult plain = rref(m, F, ops);
    static_cast<EchelonResult&>(res) = std::move(plain);
    res.fallback_used = true;
    return res;
  }

  const std::size_t gamma = cols - beta;

  // Step 1: W = T^{-1} X.
  DenseMatrix t(beta, beta), x(beta, gamma);
  for (std::size_t i = 0; i < beta; ++i) {
    for (std::size_t j = 0; j < beta; ++j) t.at(i, j) = m.at(i, j);
    for (std::size_t j = 0; j < gamma; ++j) x.at(i, j) = m.at(i, beta + j);
  }
  DenseMatrix w = (gamma > 0) ? trsm(t, x, F, ops) : DenseMatrix(beta, 0);

  // Step 2: Schur update Y - A W.
  DenseMatrix abl(alpha, beta), y(alpha, gamma);
  for (std::size_t i = 0; i < alpha; ++i) {
    for (std::size_t j = 0; j < beta; ++j) abl.at(i, j) = m.at(beta + i, j);
    for (std::size_t j = 0; j < gamma; ++j) y.at(i, j) = m.at(beta + i, beta + j);
  }
  DenseMatrix schur(alpha, gamma);
  if (alpha > 0 && gamma > 0) {
    DenseMatrix aw = mul(abl, w, F, ops);
    for (std::size_t i = 0; i < alpha; ++i)
      for (std::size_t j = 0; j < gamma; ++j) {
        schur.at(i, j) = F.sub(y.at(i, j), aw.at(i, j));
        ++ops.add;
      }
  }

  // Step 3: rref of the Schur block.
  EchelonResult se;
  if (alpha > 0) {
    se = rref(schur, F, ops);
    res.zero_rows = se.zero_rows;
    res.schur_nonzero_rows = se.m.rows();
  }

  // Step 4: clear the new pivot columns out of W.
  for (std::size_t s = 0; s < se.m.rows(); ++s) {
    std::size_t c = se.pivots[s];
    for (std::size_t i = 0; i < beta; ++i) {
      Fel f = w.at(i, c);
      w.at(i, c) = 0;
      for (std::size_t j = c + 1; j < gamma; ++j) {
        w.at(i, j) = F.sub(w.at(i, j), F.mul(f, se.m.at(s, j)));
        ++ops.mul;
        ++ops.add;
      }
    }
  }

  // Assemble rows sorted by pivot column: the beta unit rows first (pivots
  // 0..beta-1), then the Schur pivots shifted by beta.
  std::size_t out_rows = beta + se.m.rows();
  res.m = DenseMatrix(out_rows, cols);
  res.pivots.reserve(out_rows);
  res.row_origin.reserve(out_rows);
  for (std::size_t i = 0; i < beta; ++i) {
    res.m.at(i, i) = 1;
    for (std::size_t j = 0; j < gamma; ++j) res.m.at(i, beta + j) = w.at(i, j);
    res.pivots.push_back(i);
    res.row_origin.push_back(i);
  }
  for (std::size_t s = 0; s < se.m.rows(); ++s) {
    for (std::size_t j = 0; j < gamma; ++j) res.m.at(beta + s, beta + j) = se.m.at(s, j);
    res.pivots.push_back(beta + se.pivots[s]);
    res.row_origin.push_back(beta + se.row_origin[s]);
  }
  return res;
}

}  // namespace detgb::exactla
