#ifndef DETGB_ENGINE_HPP
#define DETGB_ENGINE_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "detgb/exactla.hpp"
#include "detgb/gncomplex.hpp"
#include "detgb/ring.hpp"

namespace detgb::engine {

using ff::Fel;
using ff::Field;
using ring::ModuleElement;
using ring::ModuleMonomial;
using ring::Monomial;
using ring::Polynomial;

/// F5 signature: generator index (1-based) and multiplier monomial.
struct Signature {
  int gen = 1;
  Monomial mult;
};

/// Leading monomials of known syzygies, bucketed by module position for
/// divisibility queries.
class ZSet {
public:
  ZSet() = default;
  explicit ZSet(int m) : by_pos_(m) {}

  int rank() const { return static_cast<int>(by_pos_.size()); }
  std::size_t size() const { return count_; }
  void insert(const ModuleMonomial& mm);
  /// True when some recorded sigma e_pos divides mult e_pos.
  bool prunes(int pos, const std::array<std::uint8_t, 4>& mult) const;

private:
  std::vector<std::vector<std::array<std::uint8_t, 4>>> by_pos_;
  std::size_t count_ = 0;
};

/// Per-degree instrumentation of one Macaulay echelonization.
struct DegreeStats {
  int degree = 0;
  std::uint64_t rows = 0, cols = 0;
  std::uint64_t alpha = 0, beta = 0, gamma = 0;
  std::uint64_t mul_count = 0, add_count = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t redundant_skipped = 0;  // candidate rows pruned by the Z test
  std::uint64_t collisions = 0;         // rows whose leading column duplicates an earlier one
  std::uint64_t new_pivots = 0;         // pivots outside the older leading-monomial module
  double a_block_density = 0.0;
  std::uint64_t wall_ns = 0;
  bool structured_used = false;
  bool fallback = false;
  std::vector<std::uint32_t> pivot_cols;
};

/// Reduced Groebner basis of an ideal: monic polynomials sorted by degree,
/// then by leading monomial descending.
struct GroebnerBasis {
  std::vector<Polynomial> polys;
};

/// Reduced Groebner basis of a submodule of R^m.
struct ModuleGroebnerBasis {
  int rank = 1;
  std::vector<ModuleElement> elements;
};

enum class EchelonMode {
  Full,         // dense reduced row echelon forms, basis elements materialized
  LeadingOnly,  // sparse row echelon, only leading monomials and stats
};

struct ModgbOptions {
  EchelonMode mode = EchelonMode::Full;
  bool structured = false;  // four-step echelonization on rank-1 runs
};

struct ModgbResult {
  ModuleGroebnerBasis basis;              // filled in Full mode
  std::vector<ModuleMonomial> basis_lms;  // always filled
  std::vector<DegreeStats> stats;
  std::uint64_t structured_fallbacks = 0;
};

/// Signature-based degree-by-degree Groebner basis computation for a graded
/// submodule of R^m, pruning rows whose signature is divisible by an element
/// of z. Generators must share one degree; dmax below that degree yields an
/// empty basis.
ModgbResult modgb(const Field& F, int m, const std::vector<ModuleElement>& gens, const ZSet& z,
                  int dmax, const ModgbOptions& opt = {});

/// Pruning-free Lazard-style computation: every monomial multiple of every
/// generator, plain rref per degree. The oracle for detgb.
GroebnerBasis lazard_oracle(const Field& F, const std::vector<Polynomial>& gens, int dmax);

/// Remainder of multivariate division by a reduced basis.
Polynomial normal_form(const Field& F, const Polynomial& g, const GroebnerBasis& basis);

struct StageDegreeStats {
  std::string stage;  // syz2 | syz1 | ideal
  DegreeStats stats;
};

struct DetgbOptions {
  bool structured = true;
};

struct DetgbResult {
  GroebnerBasis gb;
  std::vector<StageDegreeStats> stats;
  std::uint64_t structured_fallbacks = 0;
};

/// The full pipeline: syzygy bases from the Gulliksen-Negard complex prune
/// the cofactor-system run up to degree 2n-3.
DetgbResult detgb(const Field& F, const gncomplex::LinearMatrix& m, const DetgbOptions& opt = {});

/// Helpers shared with verification code.
std::vector<Polynomial> sorted_basis(std::vector<Polynomial> polys);

}  // namespace detgb::engine

#endif
