#pragma once
// Almost simple groups with sporadic socle: the r_max screen over maximal
// subgroups, the parameter table it leaves, and the Monster order check.

#include "qsdl/core.hpp"
#include "qsdl/report.hpp"

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace qsdl {

struct AtlasSubgroup {
  std::string name;
  BigInt order;
  std::string source;
  std::vector<BigInt> subdegrees;  // nontrivial ones; empty when unknown
  std::size_t line = 0;
};

struct AtlasRecord {
  std::string name;
  BigInt order;
  std::string socle;
  BigInt out_order;
  std::vector<AtlasSubgroup> maximals;
};

// TSV: group group_order socle out_order subgroup subgroup_order source
// [subdegrees]. Rows of one group must agree on order, socle and out order.
// Errors carry the line number.
std::vector<AtlasRecord> load_atlas(std::istream &in);
std::vector<AtlasRecord> load_atlas(const std::filesystem::path &p);

struct SporadicCandidate {
  std::string group;
  BigInt group_order;
  AtlasSubgroup subgroup;
  BigInt v;
  BigInt r_max;  // gcd(v-1, |H|)
};

// Keeps (G,H) with |H|^3 > 2|G| and v <= 2(y_max-1) r_max^2.
std::vector<SporadicCandidate> sporadic_screen(const std::vector<AtlasRecord> &records,
                                               int y_max = 10);

struct GroupPair {
  std::string group, subgroup;
  int classes = 1;
};

struct SporadicRow {
  Candidate cand;
  BigInt r_max;
  std::vector<GroupPair> pairs;
};

struct SporadicRun {
  std::vector<SporadicRow> rows;
  EliminationReport report;
};

// Sieves each screened v with r/(r,lambda) | r_max and r | lambda r_max,
// then drops tuples with r not dividing |H|, |H|^3 <= lambda|G|, or
// r/(r,lambda) not dividing a known subdegree. The k > lambda inequality is
// not imposed here. Rows settled by published results carry a status.
SporadicRun sporadic_parameters(const std::vector<SporadicCandidate> &cands, int y_max = 10);

std::string sporadic_markdown(const std::vector<SporadicRow> &rows);
std::string sporadic_tsv(const std::vector<SporadicRow> &rows);

struct MonsterData {
  BigInt monster_order;
  std::vector<std::pair<std::string, BigInt>> aut_orders;  // socle N, |Aut(N)|
};
// First data row is "M <order>", then "N |Aut(N)|" rows.
MonsterData load_monster_candidates(std::istream &in);
MonsterData load_monster_candidates(const std::filesystem::path &p);

struct MonsterVerdict {
  std::string name;
  BigInt aut_order;
  bool excluded = false;  // |Aut(N)|^3 < |M|
};
std::vector<MonsterVerdict> monster_check(const std::vector<std::pair<std::string, BigInt>> &cands,
                                          const BigInt &monster_order);

}  // namespace qsdl
