#include "detgb/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace detgb::io {

using nlohmann::json;

gncomplex::LinearMatrix random_instance(std::uint64_t p, int n, std::uint64_t seed) {
  gncomplex::LinearMatrix m;
  m.n = n;
  m.entries.resize(static_cast<std::size_t>(n) * n);
  SplitMix64 rng(seed);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int v = 0; v < 4; ++v) m.at(i, j)[v] = rng.uniform_mod(p);
  return m;
}

std::string instance_to_json(const InstanceFile& inst) {
  json j;
  j["p"] = inst.p;
  j["n"] = inst.n;
  if (inst.seed != 0) j["seed"] = inst.seed;
  json rows = json::array();
  for (int i = 0; i < inst.n; ++i) {
    json row = json::array();
    for (int jj = 0; jj < inst.n; ++jj) {
      const auto& e = inst.matrix.at(i, jj);
      row.push_back(json::array({e[0], e[1], e[2], e[3]}));
    }
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j.dump(1) + "\n";
}

InstanceFile instance_from_json(const std::string& text) {
  json j = json::parse(text);
  InstanceFile f;
  f.p = j.at("p").get<std::uint64_t>();
  f.n = j.at("n").get<int>();
  f.seed = j.value("seed", 0ULL);
  if (f.n < 2) throw std::invalid_argument("instance: n must be >= 2");
  const auto& rows = j.at("entries");
  if (rows.size() != static_cast<std::size_t>(f.n))
    throw std::invalid_argument("instance: entry rows do not match n");
  f.matrix.n = f.n;
  f.matrix.entries.resize(static_cast<std::size_t>(f.n) * f.n);
  for (int i = 0; i < f.n; ++i) {
    if (rows[i].size() != static_cast<std::size_t>(f.n))
      throw std::invalid_argument("instance: entry columns do not match n");
    for (int jj = 0; jj < f.n; ++jj) {
      const auto& e = rows[i][jj];
      if (e.size() != 4) throw std::invalid_argument("instance: entries need 4 coefficients");
      for (int v = 0; v < 4; ++v) {
        std::uint64_t c = e[v].get<std::uint64_t>();
        if (c >= f.p) throw std::invalid_argument("instance: coefficient out of range");
        f.matrix.at(i, jj)[v] = c;
      }
    }
  }
  return f;
}

namespace {

json poly_to_json(const ring::Polynomial& p) {
  json jp;
  jp["degree"] = p.degree();
  json terms = json::array();
  for (const auto& t : p.terms) {
    json jt;
    jt["exp"] = json::array({t.mon.exps[0], t.mon.exps[1], t.mon.exps[2], t.mon.exps[3]});
    jt["coeff"] = t.coeff;
    terms.push_back(std::move(jt));
  }
  jp["terms"] = std::move(terms);
  return jp;
}

ring::Polynomial poly_from_json(const json& jp, std::uint64_t p) {
  ring::Polynomial out;
  for (const auto& jt : jp.at("terms")) {
    const auto& je = jt.at("exp");
    if (je.size() != 4) throw std::invalid_argument("gb: exponent vectors must have 4 entries");
    ring::Monomial m({je[0].get<int>(), je[1].get<int>(), je[2].get<int>(), je[3].get<int>()});
    std::uint64_t c = jt.at("coeff").get<std::uint64_t>();
    if (c == 0 || c >= p) throw std::invalid_argument("gb: coefficient out of range");
    out.terms.push_back({m, c});
  }
  for (std::size_t i = 0; i < out.terms.size(); ++i) {
    if (out.terms[i].mon.deg() != jp.at("degree").get<int>())
      throw std::invalid_argument("gb: term degree differs from the polynomial degree");
    if (i > 0 && ring::grevlex_cmp(out.terms[i - 1].mon, out.terms[i].mon) <= 0)
      throw std::invalid_argument("gb: terms are not strictly grevlex-descending");
  }
  return out;
}

}  // namespace

std::string gb_to_json(const GbFile& f) {
  json j;
  j["p"] = f.p;
  j["n"] = f.n;
  j["maxdeg"] = f.maxdeg;
  json polys = json::array();
  for (const auto& p : f.gb.polys) polys.push_back(poly_to_json(p));
  j["polys"] = std::move(polys);
  return j.dump(1) + "\n";
}

GbFile gb_from_json(const std::string& text) {
  json j = json::parse(text);
  GbFile f;
  f.p = j.at("p").get<std::uint64_t>();
  f.n = j.at("n").get<int>();
  f.maxdeg = j.at("maxdeg").get<int>();
  for (const auto& jp : j.at("polys")) f.gb.polys.push_back(poly_from_json(jp, f.p));
  return f;
}

const char* const kStatsCsvHeader =
    "run_id,n,p,seed,stage,degree,rows,cols,alpha,beta,gamma,mul_count,add_count,"
    "zero_reductions,redundant_skipped,collisions,new_pivots,a_block_density,wall_ns";

std::string stats_to_csv(const std::vector<StatsRow>& rows) {
  std::ostringstream os;
  os << kStatsCsvHeader << "\n";
  char dens[32];
  for (const auto& r : rows) {
    std::snprintf(dens, sizeof(dens), "%.6f", r.a_block_density);
    os << r.run_id << "," << r.n << "," << r.p << "," << r.seed << "," << r.stage << ","
       << r.degree << "," << r.rows << "," << r.cols << "," << r.alpha << "," << r.beta << ","
       << r.gamma << "," << r.mul_count << "," << r.add_count << "," << r.zero_reductions << ","
       << r.redundant_skipped << "," << r.collisions << "," << r.new_pivots << "," << dens << ","
       << r.wall_ns << "\n";
  }
  return os.str();
}

std::vector<StatsRow> stats_rows(const std::string& run_id, int n, std::uint64_t p,
                                 std::uint64_t seed,
                                 const std::vector<engine::StageDegreeStats>& stats) {
  std::vector<StatsRow> rows;
  rows.reserve(stats.size());
  for (const auto& s : stats) {
    StatsRow r;
    r.run_id = run_id;
    r.n = n;
    r.p = p;
    r.seed = seed;
    r.stage = s.stage;
    r.degree = s.stats.degree;
    r.rows = s.stats.rows;
    r.cols = s.stats.cols;
    r.alpha = s.stats.alpha;
    r.beta = s.stats.beta;
    r.gamma = s.stats.gamma;
    r.mul_count = s.stats.mul_count;
    r.add_count = s.stats.add_count;
    r.zero_reductions = s.stats.zero_reductions;
    r.redundant_skipped = s.stats.redundant_skipped;
    r.collisions = s.stats.collisions;
    r.new_pivots = s.stats.new_pivots;
    r.a_block_density = s.stats.a_block_density;
    r.wall_ns = s.stats.wall_ns;
    rows.push_back(std::move(r));
  }
  return rows;
}

void atomic_write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("io: cannot write " + tmp.string());
    out << content;
    if (!out.flush()) throw std::runtime_error("io: short write to " + tmp.string());
  }
  fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("io: cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace detgb::io
