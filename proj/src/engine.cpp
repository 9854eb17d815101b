#include "detgb/engine.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace detgb::engine {

namespace {

using exactla::DenseMatrix;
using exactla::OpCounters;
using ring::ModuleTerm;
using ring::VarMultTable;

inline std::uint8_t exp_sum(const std::array<std::uint8_t, 4>& e) {
  return static_cast<std::uint8_t>(e[0] + e[1] + e[2] + e[3]);
}

inline bool exps_divide(const std::array<std::uint8_t, 4>& a, const std::array<std::uint8_t, 4>& b) {
  return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2] && a[3] <= b[3];
}

int cmp_exps_grevlex(const std::array<std::uint8_t, 4>& a, const std::array<std::uint8_t, 4>& b) {
  int da = exp_sum(a), db = exp_sum(b);
  if (da != db) return da < db ? -1 : 1;
  for (int i = 3; i >= 0; --i)
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  return 0;
}

struct SigKey {
  std::uint32_t gen = 1;  // 1-based generator index
  std::array<std::uint8_t, 4> mexp{0, 0, 0, 0};

  int max_var() const {
    for (int i = 4; i >= 1; --i)
      if (mexp[i - 1] > 0) return i;
    return 1;  // tau = 1 extends by every variable
  }
};

bool sig_less(const SigKey& x, const SigKey& y) {
  int c = cmp_exps_grevlex(x.mexp, y.mexp);
  if (c != 0) return c < 0;
  return x.gen < y.gen;
}

Monomial mexp_to_monomial(const std::array<std::uint8_t, 4>& e) {
  return Monomial({e[0], e[1], e[2], e[3]});
}

// Column layout of a degree slice of R^m in TOP-descending order:
// col = monomial_rank * m + (m - pos).
inline std::uint32_t col_id(std::uint32_t mon_rank, int pos, int m) {
  return mon_rank * static_cast<std::uint32_t>(m) + static_cast<std::uint32_t>(m - pos);
}
inline std::uint32_t col_mon_rank(std::uint32_t col, int m) { return col / m; }
inline int col_pos(std::uint32_t col, int m) { return m - static_cast<int>(col % m); }

// Accumulated leading monomials (the staircase built so far), bucketed by
// position for divisibility tests.
class LmAccumulator {
public:
  explicit LmAccumulator(int m) : by_pos_(m) {}

  bool divisible(int pos, const std::array<std::uint8_t, 4>& e) const {
    for (const auto& s : by_pos_[pos - 1])
      if (exps_divide(s, e)) return true;
    return false;
  }
  void add(int pos, const std::array<std::uint8_t, 4>& e) { by_pos_[pos - 1].push_back(e); }

private:
  std::vector<std::vector<std::array<std::uint8_t, 4>>> by_pos_;
};

struct DenseRow {
  SigKey sig;
  std::uint32_t lm = 0;
  std::vector<Fel> v;
};

struct SparseRow {
  SigKey sig;
  std::vector<std::pair<std::uint32_t, Fel>> v;  // sorted by column, front is the lead

  std::uint32_t lm() const { return v.front().first; }
};

struct Arranged {
  // T rows first (one per distinct leading column, smallest signature), then
  // the colliding rows, both ordered by (leading column, signature).
  std::vector<std::size_t> order;
  std::size_t beta = 0;
  std::size_t alpha = 0;
};

template <typename Row, typename LmOf>
Arranged arrange(const std::vector<Row>& rows, LmOf lm_of) {
  std::vector<std::size_t> idx(rows.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    std::uint32_t la = lm_of(rows[a]), lb = lm_of(rows[b]);
    if (la != lb) return la < lb;
    return sig_less(rows[a].sig, rows[b].sig);
  });
  Arranged ar;
  ar.order.reserve(idx.size());
  std::vector<std::size_t> dup;
  std::uint32_t prev = 0;
  bool have_prev = false;
  for (std::size_t i : idx) {
    std::uint32_t lm = lm_of(rows[i]);
    if (!have_prev || lm != prev) {
      ar.order.push_back(i);
      prev = lm;
      have_prev = true;
    } else {
      dup.push_back(i);
    }
  }
  ar.beta = ar.order.size();
  ar.alpha = dup.size();
  ar.order.insert(ar.order.end(), dup.begin(), dup.end());
  return ar;
}

class Run {
public:
  Run(const Field& F, int m, const ZSet& z, int d0, int dmax, const ModgbOptions& opt)
      : F_(F), m_(m), z_(z), d0_(d0), dmax_(dmax), opt_(opt), tab_(std::max(dmax, 1)), lms_(m) {}

  ModgbResult run(const std::vector<ModuleElement>& gens);

private:
  void step_full(int d, ModgbResult& out);
  void step_sparse(int d, ModgbResult& out);

  template <typename Row>
  std::vector<Row> build_rows(int d, const std::vector<Row>& prev, DegreeStats& st);

  void note_pivot(int d, std::uint32_t col, ModgbResult& out, DegreeStats& st,
                  const ModuleElement* elem);

  const Field& F_;
  int m_;
  const ZSet& z_;
  int d0_, dmax_;
  ModgbOptions opt_;
  VarMultTable tab_;
  LmAccumulator lms_;

  std::vector<DenseRow> dense_rows_;
  std::vector<SparseRow> sparse_rows_;
};

// Candidate extension shared by both representations: the admissible
// variables of a signature are those at or above its largest variable.
template <typename Row>
std::vector<Row> Run::build_rows(int d, const std::vector<Row>& prev, DegreeStats& st) {
  std::vector<Row> built;
  for (const Row& r : prev) {
    for (int v = r.sig.max_var(); v <= 4; ++v) {
      SigKey s2 = r.sig;
      s2.mexp[v - 1] += 1;
      if (z_.prunes(static_cast<int>(s2.gen), s2.mexp)) {
        ++st.redundant_skipped;
        continue;
      }
      Row nr;
      nr.sig = s2;
      if constexpr (std::is_same_v<Row, DenseRow>) {
        nr.v.assign(static_cast<std::size_t>(ring::monomial_count(4, d)) * m_, 0);
        const std::uint32_t wprev = static_cast<std::uint32_t>(r.v.size());
        for (std::uint32_t c = 0; c < wprev; ++c) {
          if (r.v[c] == 0) continue;
          std::uint32_t nrank = tab_.next(d - 1, v, col_mon_rank(c, m_));
          nr.v[col_id(nrank, col_pos(c, m_), m_)] = r.v[c];
        }
        nr.lm = 0;
        while (nr.v[nr.lm] == 0) ++nr.lm;
      } else {
        nr.v.reserve(r.v.size());
        for (const auto& [c, val] : r.v)
          nr.v.emplace_back(col_id(tab_.next(d - 1, v, col_mon_rank(c, m_)), col_pos(c, m_), m_),
                            val);
      }
      built.push_back(std::move(nr));
    }
  }
  return built;
}

void Run::note_pivot(int d, std::uint32_t col, ModgbResult& out, DegreeStats& st,
                     const ModuleElement* elem) {
  int pos = col_pos(col, m_);
  std::uint32_t r = col_mon_rank(col, m_);
  const auto& e = tab_.exps(d, r);
  if (!lms_.divisible(pos, e)) {
    ++st.new_pivots;
    out.basis_lms.push_back({pos, mexp_to_monomial(e)});
    if (elem != nullptr) out.basis.elements.push_back(*elem);
  }
}

void Run::step_full(int d, ModgbResult& out) {
  auto t0 = std::chrono::steady_clock::now();
  DegreeStats st;
  st.degree = d;
  const std::size_t cols = static_cast<std::size_t>(ring::monomial_count(4, d)) * m_;
  st.cols = cols;

  std::vector<DenseRow> rows;
  if (d == d0_) {
    rows = std::move(dense_rows_);
  } else {
    rows = build_rows<DenseRow>(d, dense_rows_, st);
  }
  st.rows = rows.size();

  auto ar = arrange(rows, [](const DenseRow& r) { return r.lm; });
  st.beta = ar.beta;
  st.alpha = ar.alpha;
  st.gamma = cols - ar.beta;
  st.collisions = ar.alpha;

  // A-block density over the T-pivot columns.
  if (ar.alpha > 0) {
    std::vector<char> is_t_lm(cols, 0);
    for (std::size_t i = 0; i < ar.beta; ++i) is_t_lm[rows[ar.order[i]].lm] = 1;
    std::uint64_t nnz = 0;
    for (std::size_t i = ar.beta; i < ar.order.size(); ++i) {
      const auto& v = rows[ar.order[i]].v;
      for (std::size_t c = 0; c < cols; ++c)
        if (v[c] != 0 && is_t_lm[c]) ++nnz;
    }
    st.a_block_density = static_cast<double>(nnz) / (static_cast<double>(ar.alpha) * ar.beta);
  }

  DenseMatrix mat(rows.size(), cols);
  for (std::size_t i = 0; i < ar.order.size(); ++i)
    std::copy(rows[ar.order[i]].v.begin(), rows[ar.order[i]].v.end(), mat.row(i));

  bool structured_ok = opt_.structured && m_ == 1 && d > d0_ && ar.beta <= cols;
  for (std::size_t i = 0; structured_ok && i < ar.beta; ++i)
    if (rows[ar.order[i]].lm != i) structured_ok = false;
  for (std::size_t i = ar.beta; structured_ok && i < ar.order.size(); ++i)
    if (rows[ar.order[i]].lm >= ar.beta) structured_ok = false;

  OpCounters ops;
  exactla::EchelonResult ech;
  if (structured_ok) {
    st.structured_used = true;
    auto sr = exactla::structured_rref(
        mat, {ar.alpha, ar.beta, cols - ar.beta}, F_, ops);
    if (sr.fallback_used) {
      st.fallback = true;
      ++out.structured_fallbacks;
    }
    ech = std::move(sr);
  } else {
    if (opt_.structured && m_ == 1 && d > d0_) {
      st.fallback = true;
      ++out.structured_fallbacks;
    }
    ech = exactla::rref(mat, F_, ops);
  }
  st.mul_count = ops.mul;
  st.add_count = ops.add;
  st.zero_reductions = rows.size() - ech.m.rows();

  std::vector<DenseRow> survivors;
  survivors.reserve(ech.m.rows());
  for (std::size_t i = 0; i < ech.m.rows(); ++i) {
    DenseRow nr;
    nr.sig = rows[ar.order[ech.row_origin[i]]].sig;
    nr.lm = static_cast<std::uint32_t>(ech.pivots[i]);
    nr.v.assign(ech.m.row(i), ech.m.row(i) + cols);
    st.pivot_cols.push_back(nr.lm);
    survivors.push_back(std::move(nr));
  }

  // Reduced basis elements fall straight out of the reduced rows.
  for (const auto& r : survivors) {
    std::vector<ModuleTerm> terms;
    for (std::uint32_t c = r.lm; c < cols; ++c) {
      if (r.v[c] == 0) continue;
      terms.push_back(
          {{col_pos(c, m_), mexp_to_monomial(tab_.exps(d, col_mon_rank(c, m_)))}, r.v[c]});
    }
    ModuleElement elem;
    elem.terms = std::move(terms);  // already TOP-descending by column order
    note_pivot(d, r.lm, out, st, &elem);
  }
  for (std::uint64_t i = st.new_pivots; i > 0; --i) {
    const auto& mm = out.basis_lms[out.basis_lms.size() - i];
    lms_.add(mm.pos, {static_cast<std::uint8_t>(mm.mon.exps[0]), static_cast<std::uint8_t>(mm.mon.exps[1]),
                      static_cast<std::uint8_t>(mm.mon.exps[2]), static_cast<std::uint8_t>(mm.mon.exps[3])});
  }

  dense_rows_ = std::move(survivors);
  st.wall_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0)
          .count());
  out.stats.push_back(std::move(st));
}

// Signature-ordered row echelon step. Rows are processed by ascending
// signature and reduced only against pivots installed earlier, so a row
// labeled sigma stays equal to sigma times its generator plus strictly
// smaller-signature content. That invariant is what makes the Z pruning of
// the next shallower stage sound, and it pins the blame for a reduction to
// zero on the row's own signature.
void Run::step_sparse(int d, ModgbResult& out) {
  auto t0 = std::chrono::steady_clock::now();
  DegreeStats st;
  st.degree = d;
  const std::size_t cols = static_cast<std::size_t>(ring::monomial_count(4, d)) * m_;
  st.cols = cols;

  std::vector<SparseRow> rows;
  if (d == d0_) {
    rows = std::move(sparse_rows_);
  } else {
    rows = build_rows<SparseRow>(d, sparse_rows_, st);
  }
  st.rows = rows.size();

  // T/A split of the unreduced matrix, for the statistics only.
  {
    std::vector<char> seen(cols, 0), is_t_lm(cols, 0);
    std::size_t beta = 0;
    for (const auto& r : rows) {
      if (!seen[r.lm()]) {
        seen[r.lm()] = 1;
        is_t_lm[r.lm()] = 1;
        ++beta;
      }
    }
    st.beta = beta;
    st.alpha = rows.size() - beta;
    st.gamma = cols - beta;
    if (st.alpha > 0) {
      std::uint64_t nnz = 0;
      std::fill(seen.begin(), seen.end(), 0);
      for (const auto& r : rows) {
        if (!seen[r.lm()]) {
          seen[r.lm()] = 1;
          continue;
        }
        for (const auto& [c, val] : r.v)
          if (is_t_lm[c]) ++nnz;
      }
      st.a_block_density = static_cast<double>(nnz) / (static_cast<double>(st.alpha) * st.beta);
    }
  }

  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return sig_less(rows[a].sig, rows[b].sig); });

  OpCounters ops;
  std::vector<SparseRow> survivors;
  survivors.reserve(rows.size());
  std::vector<long long> pivot_of_col(cols, -1);

  auto normalize = [&](SparseRow& r) {
    Fel lead = r.v.front().second;
    if (lead == 1) return;
    Fel il = F_.inv(lead);
    ++ops.mul;
    for (auto& [c, val] : r.v) {
      val = F_.mul(val, il);
      ++ops.mul;
    }
  };

  auto install = [&](SparseRow&& r) {
    normalize(r);
    std::uint32_t lm = r.lm();
    pivot_of_col[lm] = static_cast<long long>(survivors.size());
    st.pivot_cols.push_back(lm);
    note_pivot(d, lm, out, st, nullptr);
    survivors.push_back(std::move(r));
  };

  std::vector<Fel> acc(cols, 0);
  std::vector<std::uint32_t> touched;
  for (std::size_t oi = 0; oi < order.size(); ++oi) {
    SparseRow& row = rows[order[oi]];
    if (pivot_of_col[row.lm()] < 0) {
      install(std::move(row));
      continue;
    }
    ++st.collisions;
    touched.clear();
    for (const auto& [c, val] : row.v) {
      acc[c] = val;
      touched.push_back(c);
    }
    std::uint32_t c = row.lm();
    bool placed = false;
    while (c < cols) {
      if (acc[c] == 0) {
        ++c;
        continue;
      }
      long long p = pivot_of_col[c];
      if (p < 0) {
        // New pivot: harvest the remainder of the accumulator.
        SparseRow nr;
        nr.sig = row.sig;
        for (std::uint32_t j = c; j < cols; ++j)
          if (acc[j] != 0) nr.v.emplace_back(j, acc[j]);
        install(std::move(nr));
        placed = true;
        break;
      }
      Fel f = acc[c];
      acc[c] = 0;
      const SparseRow& pr = survivors[static_cast<std::size_t>(p)];
      for (std::size_t t = 1; t < pr.v.size(); ++t) {
        auto [pc, pv] = pr.v[t];
        acc[pc] = F_.sub(acc[pc], F_.mul(f, pv));
        touched.push_back(pc);
        ++ops.mul;
        ++ops.add;
      }
      ++c;
    }
    if (!placed) ++st.zero_reductions;
    for (std::uint32_t tc : touched) acc[tc] = 0;
  }

  // Reduced basis elements on demand: back-substitute copies of the pivot
  // rows, right to left, and materialize the new pivots. The rows carried to
  // the next degree stay in their signature-pure echelon form.
  if (opt_.mode == EchelonMode::Full && st.new_pivots > 0) {
    std::vector<std::size_t> by_col(survivors.size());
    for (std::size_t i = 0; i < by_col.size(); ++i) by_col[i] = i;
    std::sort(by_col.begin(), by_col.end(),
              [&](std::size_t a, std::size_t b) { return survivors[a].lm() < survivors[b].lm(); });
    std::vector<std::vector<std::pair<std::uint32_t, Fel>>> reduced(survivors.size());
    for (std::size_t bi = by_col.size(); bi-- > 0;) {
      std::size_t i = by_col[bi];
      touched.clear();
      for (const auto& [c, val] : survivors[i].v) {
        acc[c] = val;
        touched.push_back(c);
      }
      std::uint32_t lm = survivors[i].lm();
      for (std::uint32_t c = lm + 1; c < cols; ++c) {
        if (acc[c] == 0) continue;
        long long p = pivot_of_col[c];
        if (p < 0) continue;
        Fel f = acc[c];
        acc[c] = 0;
        for (const auto& [pc, pv] : reduced[static_cast<std::size_t>(p)]) {
          if (pc == c) continue;
          acc[pc] = F_.sub(acc[pc], F_.mul(f, pv));
          touched.push_back(pc);
        }
      }
      auto& rv = reduced[i];
      for (std::uint32_t c = lm; c < cols; ++c)
        if (acc[c] != 0) rv.emplace_back(c, acc[c]);
      for (std::uint32_t tc : touched) acc[tc] = 0;
      acc[lm] = 0;
    }
    // Collect the new pivots in leading-column order and rewrite this
    // degree's tail of basis_lms in the same order, so the two arrays stay
    // parallel.
    std::vector<ModuleMonomial> degree_lms;
    for (std::size_t bi = 0; bi < by_col.size(); ++bi) {
      std::size_t i = by_col[bi];
      std::uint32_t lm = survivors[i].lm();
      int pos = col_pos(lm, m_);
      const auto& e = tab_.exps(d, col_mon_rank(lm, m_));
      bool fresh = false;
      for (std::uint64_t k = st.new_pivots; k > 0 && !fresh; --k) {
        const auto& mm = out.basis_lms[out.basis_lms.size() - k];
        fresh = mm.pos == pos && mm.mon == mexp_to_monomial(e);
      }
      if (!fresh) continue;
      degree_lms.push_back({pos, mexp_to_monomial(e)});
      ModuleElement elem;
      for (const auto& [c, val] : reduced[i])
        elem.terms.push_back(
            {{col_pos(c, m_), mexp_to_monomial(tab_.exps(d, col_mon_rank(c, m_)))}, val});
      out.basis.elements.push_back(std::move(elem));
    }
    std::copy(degree_lms.begin(), degree_lms.end(),
              out.basis_lms.end() - static_cast<std::ptrdiff_t>(st.new_pivots));
  }

  std::sort(st.pivot_cols.begin(), st.pivot_cols.end());
  for (std::uint64_t i = st.new_pivots; i > 0; --i) {
    const auto& mm = out.basis_lms[out.basis_lms.size() - i];
    lms_.add(mm.pos, {static_cast<std::uint8_t>(mm.mon.exps[0]), static_cast<std::uint8_t>(mm.mon.exps[1]),
                      static_cast<std::uint8_t>(mm.mon.exps[2]), static_cast<std::uint8_t>(mm.mon.exps[3])});
  }

  st.mul_count = ops.mul;
  st.add_count = ops.add;
  sparse_rows_ = std::move(survivors);
  st.wall_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - t0)
          .count());
  out.stats.push_back(std::move(st));
}

ModgbResult Run::run(const std::vector<ModuleElement>& gens) {
  ModgbResult out;
  out.basis.rank = m_;
  if (dmax_ < d0_) return out;  // degenerate bound

  // The dense degree-step with the block echelonization serves the rank-1
  // (ideal) runs; module runs go through the signature-ordered sparse step.
  if (opt_.mode == EchelonMode::Full && m_ == 1) {
    dense_rows_.reserve(gens.size());
    std::uint32_t g = 0;
    const std::size_t cols = static_cast<std::size_t>(ring::monomial_count(4, d0_)) * m_;
    for (const auto& e : gens) {
      ++g;
      if (e.is_zero()) continue;
      DenseRow r;
      r.sig.gen = g;
      r.v.assign(cols, 0);
      for (const auto& t : e.terms)
        r.v[col_id(static_cast<std::uint32_t>(ring::rank_in_degree(t.mm.mon)), t.mm.pos, m_)] =
            t.coeff;
      r.lm = 0;
      while (r.v[r.lm] == 0) ++r.lm;
      dense_rows_.push_back(std::move(r));
    }
    for (int d = d0_; d <= dmax_; ++d) step_full(d, out);
  } else {
    sparse_rows_.reserve(gens.size());
    std::uint32_t g = 0;
    for (const auto& e : gens) {
      ++g;
      if (e.is_zero()) continue;
      SparseRow r;
      r.sig.gen = g;
      r.v.reserve(e.terms.size());
      for (const auto& t : e.terms)
        r.v.emplace_back(col_id(static_cast<std::uint32_t>(ring::rank_in_degree(t.mm.mon)),
                                t.mm.pos, m_),
                         t.coeff);
      std::sort(r.v.begin(), r.v.end());
      sparse_rows_.push_back(std::move(r));
    }
    for (int d = d0_; d <= dmax_; ++d) step_sparse(d, out);
  }
  return out;
}

int common_degree(const std::vector<ModuleElement>& gens) {
  int d0 = -1;
  for (const auto& e : gens) {
    if (e.is_zero()) continue;
    for (const auto& t : e.terms)
      if (t.mm.mon.k() != 4) throw std::invalid_argument("engine: monomials must have 4 variables");
    if (d0 < 0)
      d0 = e.degree();
    else if (e.degree() != d0)
      throw std::invalid_argument("engine: generators of mixed degrees");
  }
  return d0;
}

}  // namespace

void ZSet::insert(const ModuleMonomial& mm) {
  auto& bucket = by_pos_.at(static_cast<std::size_t>(mm.pos - 1));
  bucket.push_back({static_cast<std::uint8_t>(mm.mon.exps[0]), static_cast<std::uint8_t>(mm.mon.exps[1]),
                    static_cast<std::uint8_t>(mm.mon.exps[2]), static_cast<std::uint8_t>(mm.mon.exps[3])});
  ++count_;
}

bool ZSet::prunes(int pos, const std::array<std::uint8_t, 4>& mult) const {
  if (by_pos_.empty()) return false;
  for (const auto& s : by_pos_[pos - 1])
    if (exps_divide(s, mult)) return true;
  return false;
}

ModgbResult modgb(const Field& F, int m, const std::vector<ModuleElement>& gens, const ZSet& z,
                  int dmax, const ModgbOptions& opt) {
  if (m < 1) throw std::invalid_argument("engine: module rank must be positive");
  if (z.rank() != 0 && z.rank() < static_cast<int>(gens.size()))
    throw std::invalid_argument("engine: Z set rank below generator count");
  int d0 = common_degree(gens);
  if (d0 < 0) {
    ModgbResult out;
    out.basis.rank = m;
    return out;  // no nonzero generators
  }
  Run run(F, m, z, d0, dmax, opt);
  return run.run(gens);
}

GroebnerBasis lazard_oracle(const Field& F, const std::vector<Polynomial>& gens, int dmax) {
  GroebnerBasis gb;
  std::vector<Polynomial> live;
  for (const auto& g : gens)
    if (!g.is_zero()) live.push_back(g);
  if (live.empty()) return gb;
  int d0 = live.front().degree();
  for (const auto& g : live)
    if (g.degree() != d0) throw std::invalid_argument("engine: generators of mixed degrees");

  std::vector<Polynomial> basis;
  for (int d = d0; d <= dmax; ++d) {
    const std::size_t cols = static_cast<std::size_t>(ring::monomial_count(4, d));
    auto mults = ring::enumerate_degree(d - d0, 4);
    DenseMatrix mat(live.size() * mults.size(), cols);
    std::size_t r = 0;
    for (const auto& g : live)
      for (const auto& t : mults) {
        Polynomial gm = ring::mul_monomial(g, t);
        for (const auto& term : gm.terms)
          mat.at(r, static_cast<std::size_t>(ring::rank_in_degree(term.mon))) = term.coeff;
        ++r;
      }
    OpCounters ops;
    auto ech = exactla::rref(mat, F, ops);
    for (std::size_t i = 0; i < ech.m.rows(); ++i) {
      Monomial lm = ring::unrank_in_degree(d, 4, static_cast<long long>(ech.pivots[i]));
      bool redundant = false;
      for (const auto& b : basis)
        if (ring::divides(b.lm(), lm)) {
          redundant = true;
          break;
        }
      if (redundant) continue;
      std::vector<ring::Term> terms;
      for (std::size_t c = ech.pivots[i]; c < cols; ++c)
        if (ech.m.at(i, c) != 0)
          terms.push_back({ring::unrank_in_degree(d, 4, static_cast<long long>(c)), ech.m.at(i, c)});
      Polynomial p;
      p.terms = std::move(terms);
      basis.push_back(std::move(p));
    }
  }
  gb.polys = sorted_basis(std::move(basis));
  return gb;
}

Polynomial normal_form(const Field& F, const Polynomial& g, const GroebnerBasis& basis) {
  Polynomial r = g;
  bool changed = true;
  while (changed && !r.is_zero()) {
    changed = false;
    for (std::size_t ti = 0; ti < r.terms.size() && !changed; ++ti) {
      const auto& t = r.terms[ti];
      for (const auto& b : basis.polys) {
        if (b.is_zero() || !ring::divides(b.lm(), t.mon)) continue;
        Monomial q = ring::div(t.mon, b.lm());
        r = ring::sub_scaled(r, t.coeff, ring::mul_monomial(b, q), F);
        changed = true;
        break;
      }
    }
  }
  return r;
}

std::vector<Polynomial> sorted_basis(std::vector<Polynomial> polys) {
  std::sort(polys.begin(), polys.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return ring::grevlex_cmp(a.lm(), b.lm()) > 0;
  });
  return polys;
}

DetgbResult detgb(const Field& F, const gncomplex::LinearMatrix& m, const DetgbOptions& opt) {
  const int n = m.n;
  if (n < 3) throw std::invalid_argument("engine: detgb needs n >= 3");
  auto gn = gncomplex::build(m, F);

  DetgbResult res;

  // Syzygy stages carry only leading-monomial information downstream.
  ModgbOptions syz_opt;
  syz_opt.mode = EchelonMode::LeadingOnly;

  ZSet z_empty(static_cast<int>(gn.syz2.size()));
  auto l2 = modgb(F, 2 * n * n - 2, gn.syz2, z_empty, n - 3, syz_opt);
  for (auto& st : l2.stats) res.stats.push_back({"syz2", std::move(st)});

  ZSet z1(2 * n * n - 2);
  for (const auto& mm : l2.basis_lms) z1.insert(mm);
  auto l1 = modgb(F, n * n, gn.syz1, z1, n - 2, syz_opt);
  for (auto& st : l1.stats) res.stats.push_back({"syz1", std::move(st)});

  ZSet ztop(n * n);
  for (const auto& mm : l1.basis_lms) ztop.insert(mm);

  std::vector<ModuleElement> top_gens;
  top_gens.reserve(gn.generators.size());
  for (const auto& p : gn.generators) {
    ModuleElement e;
    for (const auto& t : p.terms) e.terms.push_back({{1, t.mon}, t.coeff});
    top_gens.push_back(std::move(e));
  }
  ModgbOptions top_opt;
  top_opt.mode = EchelonMode::Full;
  top_opt.structured = opt.structured;
  auto top = modgb(F, 1, top_gens, ztop, 2 * n - 3, top_opt);
  res.structured_fallbacks = top.structured_fallbacks;
  for (auto& st : top.stats) res.stats.push_back({"ideal", std::move(st)});

  res.gb.polys.reserve(top.basis.elements.size());
  for (const auto& e : top.basis.elements) {
    Polynomial p;
    p.terms.reserve(e.terms.size());
    for (const auto& t : e.terms) p.terms.push_back({t.mm.mon, t.coeff});
    res.gb.polys.push_back(std::move(p));
  }
  res.gb.polys = sorted_basis(std::move(res.gb.polys));
  return res;
}

}  // namespace detgb::engine
