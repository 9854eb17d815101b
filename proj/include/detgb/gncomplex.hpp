#ifndef DETGB_GNCOMPLEX_HPP
#define DETGB_GNCOMPLEX_HPP

#include <array>
#include <vector>

#include "detgb/ring.hpp"

namespace detgb::gncomplex {

using ff::Fel;
using ff::Field;
using ring::ModuleElement;
using ring::Polynomial;

/// n x n matrix of linear forms in x1..x4; entry (i,j) holds the four
/// coefficients of x1..x4.
struct LinearMatrix {
  int n = 0;
  std::vector<std::array<Fel, 4>> entries;  // row-major, n*n

  std::array<Fel, 4>& at(int i, int j) { return entries[static_cast<size_t>(i) * n + j]; }
  const std::array<Fel, 4>& at(int i, int j) const {
    return entries[static_cast<size_t>(i) * n + j];
  }
};

Polynomial entry_poly(const LinearMatrix& m, int i, int j, const Field& F);

/// Adjugate: adj(m)[i][j] are homogeneous of degree n-1 and
/// m * adj(m) = det(m) * I exactly.
std::vector<std::vector<Polynomial>> adjugate(const LinearMatrix& m, const Field& F);

/// The cofactor generators: position (i-1)n + j holds the (i,j) cofactor
/// (-1)^{i+j} minor_{i,j}, read off the adjugate.
std::vector<Polynomial> cofactor_system(const LinearMatrix& m, const Field& F);

/// Basis of the rank 2n^2-2 middle module: off-diagonals of the left factor,
/// off-diagonals of the right factor, (E_ii, E_11) for all i, and
/// (0, E_ii - E_11) for 2 <= i <= n-1.
struct E1Basis {
  enum class Kind { LeftOffDiag, RightOffDiag, DiagPair, RightDiagDiff };
  struct Element {
    Kind kind;
    int i, j;  // 1-based indices; j unused for the diagonal families
  };
  static std::vector<Element> enumerate(int n);
};

/// Coordinates of a trace-balanced pair (u, v) of polynomial matrices in the
/// E1 basis; the representative is shifted by a multiple of (I, I).
/// Throws when trace(u) != trace(v).
std::vector<Polynomial> e1_coordinates(const std::vector<std::vector<Polynomial>>& u,
                                       const std::vector<std::vector<Polynomial>>& v,
                                       const Field& F);

/// Images of the E1 basis under (N1, N2) -> N1 M - M N2, flattened row-major
/// over R^{n^2}. Entries are linear forms and each vector annihilates the
/// cofactor system.
std::vector<ModuleElement> syz1_generators(const LinearMatrix& m, const Field& F);

/// Images of the elementary matrices under N -> (M N, N M) in E1 coordinates,
/// over R^{2n^2-2}. Each vector annihilates the syz1 generators.
std::vector<ModuleElement> syz2_generators(const LinearMatrix& m, const Field& F);

struct GNData {
  LinearMatrix matrix;
  std::vector<std::vector<Polynomial>> adjugate;
  std::vector<Polynomial> generators;
  std::vector<ModuleElement> syz1;
  std::vector<ModuleElement> syz2;
};

GNData build(const LinearMatrix& m, const Field& F);

}  // namespace detgb::gncomplex

#endif
