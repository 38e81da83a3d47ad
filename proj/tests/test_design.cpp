#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "qsdl/design.hpp"
#include "qsdl/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>

using namespace qsdl;

namespace {

std::string path_of(const std::string &sub) { return (data_dir() / sub).string(); }

// Counts by direct pair and block-pair loops.
std::map<std::pair<Point, Point>, int> brute_pairs(const Design &d) {
  std::map<std::pair<Point, Point>, int> m;
  for (Point a = 0; a < d.v; ++a)
    for (Point b = a + 1; b < d.v; ++b) m[{a, b}] = 0;
  for (const auto &blk : d.blocks)
    for (std::size_t i = 0; i < blk.size(); ++i)
      for (std::size_t j = i + 1; j < blk.size(); ++j) ++m[{blk[i], blk[j]}];
  return m;
}

std::set<std::size_t> brute_intersections(const Design &d) {
  std::set<std::size_t> s;
  for (std::size_t i = 0; i < d.b(); ++i)
    for (std::size_t j = i + 1; j < d.b(); ++j) {
      PointSet out;
      std::set_intersection(d.blocks[i].begin(), d.blocks[i].end(), d.blocks[j].begin(),
                            d.blocks[j].end(), std::back_inserter(out));
      s.insert(out.size());
    }
  return s;
}

Design random_design(std::mt19937 &rng) {
  std::size_t v = 4 + rng() % 8, k = 2 + rng() % (v - 3), b = 2 + rng() % 12;
  std::vector<PointSet> blocks;
  for (std::size_t i = 0; i < b; ++i) {
    std::vector<Point> pts(v);
    std::iota(pts.begin(), pts.end(), 0u);
    std::shuffle(pts.begin(), pts.end(), rng);
    blocks.emplace_back(pts.begin(), pts.begin() + k);
  }
  return make_design(v, blocks);
}

Group psl2_7() {
  // x -> x+1 and x -> -1/x on GF(7) u {inf}, inf = 7
  std::vector<Point> t(8), s(8);
  const Point inv[7] = {0, 1, 4, 5, 2, 3, 6};
  for (Point x = 0; x < 8; ++x) {
    t[x] = x == 7 ? 7 : (x + 1) % 7;
    s[x] = x == 7 ? 0 : x == 0 ? 7 : (7 - inv[x]) % 7;
  }
  return Group(8, {Permutation::from_images(t), Permutation::from_images(s)});
}

}  // namespace

TEST_CASE("pair coverage examples") {
  // all 3-subsets of 4 points
  auto k4 = make_design(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  auto pc = pair_coverage(k4);
  CHECK(pc.is_2_design);
  CHECK(pc.lambda == 2u);
  CHECK(design_params(k4) == DesignParams{4, 4, 3, 3, 2});
  CHECK(intersection_numbers(k4).str() == "{2}");

  auto two = make_design(6, {{0, 1, 2}, {3, 4, 5}});
  CHECK(intersection_numbers(two).str() == "{0}");
  auto bad = pair_coverage(two);
  CHECK_FALSE(bad.is_2_design);
  REQUIRE(bad.violation);
  CHECK(*bad.violation == std::pair<Point, Point>{0, 3});
  CHECK(bad.expected == 1);
  CHECK(bad.found == 0);

  auto fano = make_design(7, {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 0}, {5, 6, 1}, {6, 0, 2}});
  CHECK(design_params(fano) == DesignParams{7, 7, 3, 3, 1});
  CHECK_FALSE(intersection_numbers(fano).quasi_symmetric());
}

TEST_CASE("coverage and intersections match brute force") {
  std::mt19937 rng(7);
  for (int t = 0; t < 300; ++t) {
    auto d = random_design(rng);
    auto pairs = brute_pairs(d);
    std::set<int> counts;
    for (auto &[p, c] : pairs) counts.insert(c);
    auto pc = pair_coverage(d);
    CHECK(pc.is_2_design == (counts.size() == 1));
    if (pc.is_2_design) {
      CHECK(*pc.lambda == static_cast<std::uint64_t>(*counts.begin()));
    } else {
      REQUIRE(pc.violation);
      CHECK(pairs[*pc.violation] == static_cast<int>(pc.found));
      CHECK(pairs[{0, 1}] == static_cast<int>(pc.expected));
    }
    CHECK(intersection_numbers(d).values == brute_intersections(d));
  }
}

TEST_CASE("design invariants and errors") {
  CHECK_THROWS_AS(make_design(3, {{0, 3}}), DomainError);
  CHECK_THROWS_AS(make_design(3, {}).k(), DomainError);
  CHECK_THROWS_AS(make_design(5, {{0, 1}, {0, 1, 2}}).k(), DomainError);
  CHECK_THROWS_AS(intersection_numbers(make_design(3, {{0, 1}})), DomainError);
  auto dup = make_design(4, {{1, 2}, {0, 3}, {2, 1}});
  CHECK(duplicate_block(dup) == 2u);
  CHECK_FALSE(duplicate_block(make_design(4, {{1, 2}, {0, 3}})));
  CHECK_FALSE(constant_replication(make_design(4, {{0, 1}, {0, 2}})));
}

TEST_CASE("searches over the stored groups") {
  auto m11 = load_generators(path_of("groups/m11.gens"));
  auto hits = base_block_search(m11, 6);
  REQUIRE(hits.size() == 1);
  CHECK(design_params(hits[0].design) == DesignParams{12, 22, 11, 6, 5});
  CHECK(hits[0].profile.str() == "{0,3}");
  auto f = verify_flag_transitive(m11, hits[0].design);
  CHECK(f.flag_transitive);
  CHECK(f.orbit_size == 132);

  auto m22 = load_generators(path_of("groups/m22.gens"));
  auto h22 = base_block_search(m22, 6);
  REQUIRE(h22.size() == 1);
  CHECK(design_params(h22[0].design) == DesignParams{22, 77, 21, 6, 5});
  CHECK(h22[0].profile.str() == "{0,2}");
  CHECK(verify_flag_transitive(m22, h22[0].design).orbit_size == 462);

  auto m22_2 = load_generators(path_of("groups/m22_2.gens"));
  auto h2 = base_block_search(m22_2, 6);
  REQUIRE(h2.size() == 1);
  CHECK(design_params(h2[0].design) == DesignParams{22, 77, 21, 6, 5});
  CHECK(verify_flag_transitive(m22_2, h2[0].design).flag_transitive);

  // stored fixtures equal the search output
  CHECK(load_design(path_of("designs/m11-design.blk")).blocks == hits[0].design.blocks);
  CHECK(load_design(path_of("designs/m22-design.blk")).blocks == h22[0].design.blocks);
}

TEST_CASE("small searches agree with a brute-force orbit split") {
  auto g = psl2_7();
  auto elts = oracle::elements(g);
  for (std::size_t k = 3; k <= 5; ++k) {
    auto hits = base_block_search(g, k);
    // every hit is an orbit, a 2-design, and has two intersection sizes {0,y}
    for (const auto &h : hits) {
      std::set<PointSet> orb;
      for (const auto &e : elts) {
        PointSet img;
        for (auto x : h.design.blocks[0]) img.push_back(e[x]);
        std::sort(img.begin(), img.end());
        orb.insert(img);
      }
      CHECK(std::vector<PointSet>(orb.begin(), orb.end()) == h.design.blocks);
      auto pairs = brute_pairs(h.design);
      CHECK(std::all_of(pairs.begin(), pairs.end(),
                        [&](auto &pc) { return pc.second == static_cast<int>(h.lambda); }));
      auto iv = brute_intersections(h.design);
      CHECK(iv.size() == 2);
      CHECK(*iv.begin() == 0);
      CHECK(*iv.rbegin() >= 2);
    }
    // generator order does not matter
    auto gens = g.generators();
    std::reverse(gens.begin(), gens.end());
    auto again = base_block_search(Group(8, gens), k);
    REQUIRE(again.size() == hits.size());
    for (std::size_t i = 0; i < hits.size(); ++i) CHECK(again[i].design.blocks == hits[i].design.blocks);
  }
  // the 14 planes of AG(3,2) form one orbit: 2-(8,4,3), intersections {0,2}
  auto h4 = base_block_search(g, 4);
  REQUIRE_FALSE(h4.empty());
  CHECK(design_params(h4[0].design) == DesignParams{8, 14, 7, 4, 3});
}

TEST_CASE("identity group finds nothing") {
  Group id(8, {});
  CHECK(base_block_search(id, 3).empty());
}

TEST_CASE("cap refusal names the needed cap") {
  auto m22 = load_generators(path_of("groups/m22.gens"));
  try {
    base_block_search(m22, 6, {1000, 10});
    FAIL("expected refusal");
  } catch (const DomainError &e) {
    CHECK(std::string(e.what()).find("cap >= 74613") != std::string::npos);
  }
}

TEST_CASE("flag checks") {
  auto m11 = load_generators(path_of("groups/m11.gens"));
  auto d = load_design(path_of("designs/m11-design.blk"));
  auto f = verify_flag_transitive(m11, d);
  CHECK(f.flags == 132);
  // a block set that is not invariant
  auto part = make_design(12, {d.blocks.begin(), d.blocks.begin() + 3});
  CHECK_THROWS_AS(verify_flag_transitive(m11, part), DomainError);
  CHECK_THROWS_AS(verify_flag_transitive(Group(13, {}), d), DomainError);
  // invariant but not flag-transitive: trivial group on one block
  auto one = make_design(4, {{0, 1}});
  CHECK_FALSE(verify_flag_transitive(Group(4, {}), one).flag_transitive);
}

TEST_CASE("design files") {
  auto d = load_design(path_of("designs/m22-design.blk"));
  CHECK(parse_design(format_design(d, "round trip")).blocks == d.blocks);
  auto line_of = [](const std::string &text) -> std::size_t {
    try {
      parse_design(text);
    } catch (const ParseError &e) {
      return e.line;
    }
    return 0;
  };
  CHECK(line_of("4 2 2\n1 2\n3 5\n") == 3);
  CHECK(line_of("4 2 2\n1 2\n3\n") == 3);
  CHECK(line_of("4 2 2\n# c\n1 x\n3 4\n") == 3);
  CHECK(line_of("4 3 2\n1 2\n3 4\n") != 0);
  CHECK(line_of("4 2\n") == 1);
  CHECK_THROWS_AS(load_design("/nonexistent.blk"), ParseError);
}
