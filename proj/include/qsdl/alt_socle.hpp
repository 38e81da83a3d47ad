#pragma once
// Almost simple groups with alternating socle A_n: point stabilizers that are
// primitive, transitive imprimitive, or intransitive on {1..n}.

#include "qsdl/core.hpp"
#include "qsdl/report.hpp"

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

namespace qsdl {

// [d_1, ..., d_l] with d_{i+1} = C(l,i) C(n-l,l-i).
std::vector<BigInt> subset_subdegrees(unsigned n, unsigned l);

struct PrimitiveCaseRecord {
  unsigned n = 0;
  std::string g_kind;  // "A", "S", or "Name/order" for the n = 6 exceptions
  std::string h_name;
  BigInt h_order;

  BigInt group_order() const;
  bool special() const { return g_kind != "A" && g_kind != "S"; }
  std::string group_name() const;  // A9, S7, M10, ...
};

// TSV: n g_kind h_name h_order. h_order must divide the ambient order.
std::vector<PrimitiveCaseRecord> load_primitive_catalog(std::istream &in);
std::vector<PrimitiveCaseRecord> load_primitive_catalog(const std::filesystem::path &p);

struct PrimitiveRow {
  BigInt v;
  unsigned n = 0;
  std::vector<BigInt> divisors;  // admissible values of r/(r,lambda)
  std::string g_kind;
  std::string h_name;
};

// Odd primes among n-2, n-1, n, plus (n-2)n when both are prime.
std::vector<BigInt> primitive_ratio_set(unsigned n);

std::vector<PrimitiveRow> primitive_candidates(const std::vector<PrimitiveCaseRecord> &catalog,
                                            int y_max, EliminationReport *trace = nullptr);
// The candidate rows plus the sieve over their v values (expected empty).
EliminationReport primitive_report(const std::vector<PrimitiveCaseRecord> &catalog, int y_max);
std::string primitive_markdown(const std::vector<PrimitiveRow> &rows);

// v = prod_{j=2..t} C(js-1, s-1)
BigInt partition_count(unsigned t, unsigned s);

struct PartitionPair {
  unsigned t, s;
};
struct ImprimitiveScan {
  std::vector<BigInt> s2_values;         // v for s = 2 that pass the bound
  std::vector<PartitionPair> first;      // (t!)^(s-1) < (y-1) s^4 t^2 (t-1)^2 / 2
  std::vector<PartitionPair> second;     // exact v satisfies the same bound
  EliminationReport report;
};
ImprimitiveScan imprimitive_partition_scan(int y_max);

struct L2Outcome {
  int u = 0, y = 0;
  std::string subcase;  // "(a)".."(d)" for the four published subcases
  bool wholesale = false;
  BigInt n;
  BigInt v, k;
  Rational b, r, lambda;
  std::string verdict;
};

struct IntransitiveScan {
  bool l1_impossible = false;
  std::vector<L2Outcome> l2;
  std::vector<Candidate> l_ge3;  // survivors for 3 <= l <= 9
  EliminationReport report;
};
IntransitiveScan intransitive_scan(int y_max);

struct N6Outcome {
  Candidate tuple;
  std::string group;
  BigInt stab_order;
  CheckReport check;
};
struct N6Scan {
  std::vector<BigInt> indices;
  std::vector<N6Outcome> outcomes;
  EliminationReport report;
};
N6Scan n6_special_case(const std::vector<PrimitiveCaseRecord> &catalog);

}  // namespace qsdl
