#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "qsdl/core.hpp"

#include <random>

using namespace qsdl;

namespace {

Candidate cand(int y, long v, long b, long r, long k, long lam) {
  return make_candidate(y, v, b, r, k, lam);
}

std::vector<Candidate> sieve(long v, int lo = 2, int hi = 10) {
  return enumerate_for_v({v, lo, hi, std::nullopt, true});
}

}  // namespace

TEST_CASE("gcd_ratio") {
  CHECK(gcd_ratio(11, 5) == 11);
  CHECK(gcd_ratio(46, 10) == 23);
  CHECK(gcd_ratio(17, 17) == 1);
  CHECK_THROWS_AS(gcd_ratio(0, 3), DomainError);
  CHECK_THROWS_AS(gcd_ratio(4, -1), DomainError);
}

TEST_CASE("check_admissible on published tuples") {
  CHECK(check_admissible(cand(3, 12, 22, 11, 6, 5)).pass());
  CHECK(check_admissible(cand(2, 22, 77, 21, 6, 5)).pass());

  auto rep = check_admissible(cand(4, 12, 22, 11, 6, 5));
  REQUIRE_FALSE(rep.pass());
  bool saw = false;
  for (const auto &c : rep.checks)
    if (c.name == "y|k") saw = !c.pass;
  CHECK(saw);
}

TEST_CASE("symmetric tuples are named, not silently failed") {
  auto rep = check_admissible(cand(3, 45, 45, 12, 12, 3));
  CHECK_FALSE(rep.pass());
  CHECK(rep.symmetric);
  bool named = false;
  for (const auto &c : rep.checks)
    if (c.name == "b>v") named = c.detail == "symmetric - rejected";
  CHECK(named);
  // an ordinary failure is not symmetric
  CHECK_FALSE(check_admissible(cand(4, 12, 22, 11, 6, 5)).symmetric);
}

TEST_CASE("enumerate_for_v published examples") {
  auto v12 = sieve(12);
  REQUIRE(v12.size() == 1);
  CHECK(tuple_str(v12[0]) == "(3,12,22,11,6,5)");

  auto v45 = sieve(45);
  REQUIRE(v45.size() == 1);
  CHECK(tuple_str(v45[0]) == "(5,45,66,22,15,7)");

  auto v36 = sieve(36);
  REQUIRE(v36.size() == 1);
  CHECK(tuple_str(v36[0]) == "(9,36,70,35,18,17)");

  for (long v : {15L, 3600L, 10L, 216000L, 168L, 360L, 504L}) CHECK(sieve(v).empty());
}

TEST_CASE("enumerate_for_v domain errors") {
  CHECK_THROWS_AS(sieve(4), DomainError);
  CHECK_THROWS_AS(sieve(12, 5, 4), DomainError);
  CHECK_THROWS_AS(sieve(12, 1, 4), DomainError);
}

TEST_CASE("relaxed sieve admits lambda above k") {
  auto strict = enumerate_for_v({24, 2, 10, std::nullopt, true});
  auto relaxed = enumerate_for_v({24, 2, 10, std::nullopt, false});
  CHECK(oracle::as_tuples(relaxed) == oracle::sieve(24, 2, 10, 0, true));
  bool found = false;
  for (const auto &c : relaxed) found |= tuple_str(c) == "(2,24,184,46,6,10)";
  CHECK(found);
  for (const auto &c : strict) CHECK(c.params.lambda < c.params.k);
}

TEST_CASE("ratio constraint") {
  auto with = enumerate_for_v({12, 2, 10, BigInt(11), true});
  CHECK(with.size() == 1);
  CHECK(enumerate_for_v({12, 2, 10, BigInt(5), true}).empty());
  CHECK(oracle::as_tuples(enumerate_for_v({45, 2, 10, BigInt(11), true})) ==
        oracle::sieve(45, 2, 10, 11));
}

TEST_CASE("big integer path agrees with the machine-word path") {
  // y_hi >= 1024 forces the BigInt instantiation.
  for (long v : {12L, 45L, 100L, 441L, 5929L}) {
    auto small = enumerate_for_v({v, 2, 10, std::nullopt, true});
    auto big = enumerate_for_v({v, 2, 1100, std::nullopt, true});
    std::vector<Candidate> big_cut;
    for (const auto &c : big)
      if (c.profile.y <= 10) big_cut.push_back(c);
    CHECK(oracle::as_tuples(small) == oracle::as_tuples(big_cut));
  }
}

TEST_CASE("sieve matches the oracle for every v below 400") {
  for (long v = 5; v < 400; ++v) {
    INFO("v=" << v);
    CHECK(oracle::as_tuples(sieve(v)) == oracle::sieve(v, 2, 10));
  }
}

TEST_CASE("property: emitted candidates satisfy all invariants") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> pick(5, 20000);
  int seen = 0;
  for (int i = 0; i < 400; ++i) {
    long v = pick(rng);
    for (const auto &c : sieve(v)) {
      ++seen;
      const auto &p = c.params;
      INFO(tuple_str(c));
      CHECK(check_admissible(c).pass());
      CHECK((p.lambda * (p.v - 1)) % (p.k - 1) == 0);
      CHECK(p.b * p.k == p.v * p.r);
      CHECK((p.v - 1) % c.ratio() == 0);
    }
  }
  // also cover the known hits so the loop body is exercised
  for (long v : {12L, 22L, 45L, 56L, 100L})
    for (const auto &c : sieve(v)) CHECK((c.params.v - 1) % c.ratio() == 0);
  MESSAGE("random candidates checked: " << seen);
}

TEST_CASE("property: adding constraints only removes candidates") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> pick(5, 5000);
  std::vector<long> vs{12, 22, 24, 45, 36, 56, 100};
  for (int i = 0; i < 100; ++i) vs.push_back(pick(rng));
  for (long v : vs) {
    auto all = oracle::as_tuples(enumerate_for_v({v, 2, 10, std::nullopt, false}));
    auto strict = oracle::as_tuples(sieve(v));
    auto narrow = oracle::as_tuples(sieve(v, 3, 6));
    auto ratio = oracle::as_tuples(enumerate_for_v({v, 2, 10, BigInt(v - 1), true}));
    CHECK(std::includes(all.begin(), all.end(), strict.begin(), strict.end()));
    CHECK(std::includes(strict.begin(), strict.end(), narrow.begin(), narrow.end()));
    CHECK(std::includes(strict.begin(), strict.end(), ratio.begin(), ratio.end()));
  }
}

TEST_CASE("subdegree_filter") {
  CHECK(subdegree_filter(cand(3, 56, 210, 45, 12, 9), {10, 30, 15}));
  CHECK(subdegree_filter(cand(3, 12, 22, 11, 6, 5), {11}));
  CHECK_FALSE(subdegree_filter(cand(3, 12, 22, 11, 6, 5), {1}));
  CHECK(subdegree_filter(cand(2, 10, 15, 6, 4, 2), {1}) == (gcd_ratio(6, 2) == 1));
  CHECK_THROWS_AS(subdegree_filter(cand(3, 12, 22, 11, 6, 5), {}), DomainError);
}

TEST_CASE("stabilizer_filter") {
  auto a = stabilizer_filter(cand(5, 45, 66, 22, 15, 7), 16);
  CHECK_FALSE(a.pass());
  auto b = stabilizer_filter(cand(9, 36, 70, 35, 18, 17), 20);
  CHECK_FALSE(b.pass());
  auto c = stabilizer_filter(cand(3, 12, 22, 11, 6, 5), 660, BigInt(7920));
  CHECK(c.pass());
  CHECK(c.checks.size() == 3);
}

TEST_CASE("TSV serialization") {
  CHECK(tsv_header() == "y\tv\tb\tr\tk\tlambda\tratio\tstatus\treason");
  CHECK(tsv_row(cand(3, 12, 22, 11, 6, 5)) == "3\t12\t22\t11\t6\t5\t11\tadmissible\t-");
}
