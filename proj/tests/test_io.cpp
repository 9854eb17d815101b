#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "detgb/cli.hpp"
#include "detgb/io.hpp"

using namespace detgb;
using ff::Field;

TEST_CASE("instance generation is deterministic and seed-sensitive") {
  auto a = io::random_instance(ff::kDefaultPrime, 3, 1);
  auto b = io::random_instance(ff::kDefaultPrime, 3, 1);
  auto c = io::random_instance(ff::kDefaultPrime, 3, 2);
  CHECK(a.entries == b.entries);
  CHECK(a.entries != c.entries);
  CHECK(a.entries.size() == 9);
  for (const auto& e : a.entries)
    for (auto v : e) CHECK(v < ff::kDefaultPrime);
}

TEST_CASE("instance json round trip") {
  io::InstanceFile f;
  f.p = ff::kDefaultPrime;
  f.n = 3;
  f.seed = 42;
  f.matrix = io::random_instance(f.p, f.n, f.seed);
  auto text = io::instance_to_json(f);
  auto g = io::instance_from_json(text);
  CHECK(g.p == f.p);
  CHECK(g.n == f.n);
  CHECK(g.seed == f.seed);
  CHECK(g.matrix.entries == f.matrix.entries);
  // serialization is byte-stable
  CHECK(io::instance_to_json(g) == text);
}

TEST_CASE("gb json round trip keeps term order") {
  Field F(ff::kDefaultPrime);
  auto mat = io::random_instance(F.p(), 3, 7);
  auto res = engine::detgb(F, mat);

  io::GbFile f;
  f.p = F.p();
  f.n = 3;
  f.maxdeg = 3;
  f.gb = res.gb;
  auto text = io::gb_to_json(f);
  auto g = io::gb_from_json(text);
  REQUIRE(g.gb.polys.size() == f.gb.polys.size());
  for (std::size_t i = 0; i < g.gb.polys.size(); ++i)
    CHECK(ring::to_string(g.gb.polys[i]) == ring::to_string(f.gb.polys[i]));
  CHECK(io::gb_to_json(g) == text);
}

TEST_CASE("rejects malformed inputs") {
  CHECK_THROWS(io::instance_from_json("{\"p\": 7, \"n\": 2}"));
  CHECK_THROWS(io::instance_from_json("{\"p\": 7, \"n\": 2, \"entries\": [[[1,0,0]]]}"));
  CHECK_THROWS(io::gb_from_json("{\"p\": 7, \"n\": 3}"));
  // non-descending terms are rejected
  CHECK_THROWS(io::gb_from_json(
      "{\"p\":7,\"n\":3,\"maxdeg\":3,\"polys\":[{\"degree\":1,\"terms\":["
      "{\"exp\":[0,1,0,0],\"coeff\":1},{\"exp\":[1,0,0,0],\"coeff\":1}]}]}"));
}

TEST_CASE("csv header is pinned") {
  CHECK(std::string(io::kStatsCsvHeader) ==
        "run_id,n,p,seed,stage,degree,rows,cols,alpha,beta,gamma,mul_count,add_count,"
        "zero_reductions,redundant_skipped,collisions,new_pivots,a_block_density,wall_ns");
  io::StatsRow r;
  r.run_id = "x";
  r.stage = "ideal";
  auto text = io::stats_to_csv({r});
  CHECK(text.find("run_id,n,p") == 0);
  CHECK(text.find("x,0,0,0,ideal,0,") != std::string::npos);
}

TEST_CASE("verification logic catches corruption") {
  Field F(ff::kDefaultPrime);
  auto mat = io::random_instance(F.p(), 3, 1);
  auto res = engine::detgb(F, mat);

  auto good = cli::verify_gb(F, mat, res.gb, /*check_spairs=*/true);
  CHECK(good.ok);
  CHECK(good.revlex_all);

  // corrupt one tail coefficient
  auto bad = res.gb;
  for (auto& p : bad.polys)
    if (p.terms.size() > 1) {
      p.terms[1].coeff = F.add(p.terms[1].coeff, 1);
      break;
    }
  auto r2 = cli::verify_gb(F, mat, bad, false);
  CHECK(!r2.ok);

  // drop one element: staircase counts break
  auto missing = res.gb;
  missing.polys.pop_back();
  auto r3 = cli::verify_gb(F, mat, missing, false);
  CHECK(!r3.ok);
}

TEST_CASE("repeated runs give identical counters and output bytes") {
  Field F(ff::kDefaultPrime);
  auto mat = io::random_instance(F.p(), 4, 9);
  auto r1 = engine::detgb(F, mat);
  auto r2 = engine::detgb(F, mat);
  auto rows1 = io::stats_rows("x", 4, F.p(), 9, r1.stats);
  auto rows2 = io::stats_rows("x", 4, F.p(), 9, r2.stats);
  REQUIRE(rows1.size() == rows2.size());
  for (std::size_t i = 0; i < rows1.size(); ++i) {
    // every column except the informational wall_ns
    CHECK(rows1[i].stage == rows2[i].stage);
    CHECK(rows1[i].degree == rows2[i].degree);
    CHECK(rows1[i].rows == rows2[i].rows);
    CHECK(rows1[i].cols == rows2[i].cols);
    CHECK(rows1[i].alpha == rows2[i].alpha);
    CHECK(rows1[i].beta == rows2[i].beta);
    CHECK(rows1[i].gamma == rows2[i].gamma);
    CHECK(rows1[i].mul_count == rows2[i].mul_count);
    CHECK(rows1[i].add_count == rows2[i].add_count);
    CHECK(rows1[i].zero_reductions == rows2[i].zero_reductions);
    CHECK(rows1[i].redundant_skipped == rows2[i].redundant_skipped);
    CHECK(rows1[i].collisions == rows2[i].collisions);
    CHECK(rows1[i].new_pivots == rows2[i].new_pivots);
    CHECK(rows1[i].a_block_density == rows2[i].a_block_density);
  }
  io::GbFile f1{F.p(), 4, 5, r1.gb}, f2{F.p(), 4, 5, r2.gb};
  CHECK(io::gb_to_json(f1) == io::gb_to_json(f2));
}

TEST_CASE("loglog slope of an exact power law") {
  std::vector<double> x = {6, 7, 8, 9, 10, 11, 12}, y;
  for (double v : x) y.push_back(3.0 * std::pow(v, 9.0));
  CHECK(cli::loglog_slope(x, y) == doctest::Approx(9.0).epsilon(1e-9));
}

TEST_CASE("results are invariant under the thread cap") {
  Field F(ff::kDefaultPrime);
  auto mat = io::random_instance(F.p(), 3, 13);
  setenv("DETGB_THREADS", "1", 1);
  auto a = engine::detgb(F, mat);
  setenv("DETGB_THREADS", "8", 1);
  auto b = engine::detgb(F, mat);
  unsetenv("DETGB_THREADS");
  io::GbFile fa{F.p(), 3, 3, a.gb}, fb{F.p(), 3, 3, b.gb};
  CHECK(io::gb_to_json(fa) == io::gb_to_json(fb));
  REQUIRE(a.stats.size() == b.stats.size());
  for (std::size_t i = 0; i < a.stats.size(); ++i)
    CHECK(a.stats[i].stats.mul_count == b.stats[i].stats.mul_count);
}
