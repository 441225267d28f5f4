#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pzeta/error.hpp"
#include "pzeta/json_io.hpp"
#include "support/oracles.hpp"

using namespace pzeta;
using namespace pzeta::testing;

TEST_CASE("series JSON round-trips bit-exactly") {
  const auto a5 = DirichletSeries::make(
      {{1, 1}, {5, -5}, {6, -6}, {10, -10}, {20, 20}, {30, 60}, {60, -60}}, 60);
  const std::string text = series_to_json(a5);
  CHECK(text ==
        R"({"bound":60,"terms":[[1,"1"],[5,"-5"],[6,"-6"],[10,"-10"],[20,"20"],[30,"60"],[60,"-60"]]})");
  CHECK(series_from_json(text) == a5);
  CHECK(series_to_json(series_from_json(text)) == text);

  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = random_unital_series(rng, 4096);
    CHECK(series_from_json(series_to_json(s)) == s);
  }
}

TEST_CASE("series JSON survives huge coefficients") {
  const Integer big = parse_integer("-123456789012345678901234567890123456789");
  const auto s = DirichletSeries::make({{1, 1}, {7, big}}, 10);
  const auto back = series_from_json(series_to_json(s));
  CHECK(back.coeff(7) == big);
}

TEST_CASE("series JSON accepts numeric coefficients and rejects junk") {
  const auto s = series_from_json(R"({"bound": 10, "terms": [[1, 1], [2, "-3"]]})");
  CHECK(s == DirichletSeries::make({{1, 1}, {2, -3}}, 10));

  CHECK_THROWS_AS(series_from_json("not json"), Error);
  CHECK_THROWS_AS(series_from_json(R"({"terms": []})"), Error);
  CHECK_THROWS_AS(series_from_json(R"({"bound": 10, "terms": [[1]]})"), Error);
  CHECK_THROWS_AS(series_from_json(R"({"bound": 10, "terms": [[1, "x"]]})"), Error);
  CHECK_THROWS_AS(series_from_json(R"({"bound": 0, "terms": []})"), Error);
  CHECK_THROWS_AS(series_from_json(R"({"bound": 5, "terms": [[7, "1"]]})"), Error);
}

TEST_CASE("recipe JSON round-trips") {
  const auto recipe = example_50000_recipe();
  const std::string text = recipe_to_json(recipe);
  CHECK(recipe_to_json(recipe_from_json(text)) == text);
  CHECK(recipe_series(recipe_from_json(text), 100) == recipe_series(recipe, 100));

  BostonPowerRecipe boston;
  boston.base = std::make_shared<SeriesRecipe>(SeriesRecipe{AlternatingTruncatedRecipe{20}});
  boston.f = parse_integer("340282366920938463463374607431768211456");
  boston.aut_order = factorial(20);
  boston.group_order = factorial(20) / 2;
  const std::string nested = recipe_to_json(SeriesRecipe{std::move(boston)});
  CHECK(recipe_to_json(recipe_from_json(nested)) == nested);

  CHECK_THROWS_AS(recipe_from_json(R"({"variant": "mystery"})"), Error);
  CHECK_THROWS_AS(recipe_from_json(R"({"variant": "boston"})"), Error);
  CHECK_THROWS_AS(recipe_from_json("[1,2]"), Error);
}

TEST_CASE("recipe JSON parses inline lattice specs") {
  const auto recipe = recipe_from_json(
      R"json({"variant":"lattice","generators":["(1 2 3 4 5)","(1 2 3)"],"degree":5})json");
  const auto series = recipe_series(recipe, 60);
  CHECK(series.coeff(30) == 60);
}

TEST_CASE("lattice cache round-trips byte for byte") {
  const auto g = group_from(kA5);
  const auto lattice = enumerate_subgroups(g);
  const auto table = moebius_table(lattice);

  const std::string text = moebius_cache_to_json(g, lattice, table);
  const LatticeData reloaded = moebius_cache_from_json(text, g);

  CHECK(moebius_cache_to_json(g, reloaded.lattice, reloaded.table) == text);
  CHECK(reloaded.lattice.size() == lattice.size());
  CHECK(group_series(reloaded.table, 60) == group_series(table, 60));
  for (std::uint32_t i = 0; i < lattice.size(); ++i)
    CHECK(reloaded.lattice.subgroups()[i].members == lattice.subgroups()[i].members);
  CHECK(reloaded.lattice.leq() == lattice.leq());
}

TEST_CASE("lattice cache rejects mismatches") {
  const auto g = group_from(kA5);
  const auto lattice = enumerate_subgroups(g);
  const auto table = moebius_table(lattice);
  const std::string text = moebius_cache_to_json(g, lattice, table);

  CHECK_THROWS_AS(moebius_cache_from_json(text, group_from(kS3)), Error);

  std::string wrong_version = text;
  const auto pos = wrong_version.find("\"version\":1");
  REQUIRE(pos != std::string::npos);
  wrong_version.replace(pos, 11, "\"version\":9");
  CHECK_THROWS_AS(moebius_cache_from_json(wrong_version, g), Error);

  CHECK_THROWS_AS(moebius_cache_from_json("{}", g), Error);
}
