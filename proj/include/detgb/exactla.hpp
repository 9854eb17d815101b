#ifndef DETGB_EXACTLA_HPP
#define DETGB_EXACTLA_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "detgb/ff.hpp"

namespace detgb::exactla {

using ff::Fel;
using ff::Field;

/// Scalar multiplication / addition tallies. A field inversion counts as one
/// multiplication.
struct OpCounters {
  std::uint64_t mul = 0;
  std::uint64_t add = 0;

  OpCounters& operator+=(const OpCounters& o) {
    mul += o.mul;
    add += o.add;
    return *this;
  }
};

class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Fel& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  Fel at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Fel* row(std::size_t r) { return a_.data() + r * cols_; }
  const Fel* row(std::size_t r) const { return a_.data() + r * cols_; }

  bool operator==(const DenseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Fel> a_;
};

/// Row split of a Macaulay-shaped matrix [T X; A Y]: beta rows of (T|X) with
/// T upper triangular in the leftmost beta columns, alpha rows of (A|Y),
/// gamma = cols - beta.
struct BlockSplit {
  std::size_t alpha = 0;
  std::size_t beta = 0;
  std::size_t gamma = 0;
};

struct EchelonResult {
  DenseMatrix m;                        // nonzero rows only, sorted by pivot column
  std::vector<std::size_t> pivots;      // strictly increasing
  std::size_t zero_rows = 0;
  std::vector<std::size_t> row_origin;  // input row each output row descends from
};

struct StructuredResult : EchelonResult {
  bool fallback_used = false;
  std::size_t schur_nonzero_rows = 0;
};

std::size_t default_strassen_threshold();

/// Exact product over F_p. Classical multiplication, with Strassen recursion
/// above the threshold.
DenseMatrix mul(const DenseMatrix& a, const DenseMatrix& b, const Field& F, OpCounters& ops,
                std::size_t strassen_threshold = default_strassen_threshold());
DenseMatrix mul_classical(const DenseMatrix& a, const DenseMatrix& b, const Field& F,
                          OpCounters& ops);

/// Reduced row echelon form. Pivot selection is the first row, in the given
/// order, with a nonzero entry in the current column; zero rows are dropped
/// and counted.
EchelonResult rref(const DenseMatrix& a, const Field& F, OpCounters& ops);

/// Solve u^{-1} v for an invertible upper triangular u. Blocked recursion on
/// the larger dimension, back-substitution at the base.
DenseMatrix trsm(const DenseMatrix& u, const DenseMatrix& v, const Field& F, OpCounters& ops);

/// The four-step echelonization of [T X; A Y]: TRSM on the top block, Schur
/// update of the bottom, rref of the Schur block, back-substitution into the
/// top. Falls back to plain rref when the triangularity precondition on T
/// fails (non-generic input).
StructuredResult structured_rref(const DenseMatrix& m, const BlockSplit& split, const Field& F,
                                 OpCounters& ops);

}  // namespace detgb::exactla

#endif
