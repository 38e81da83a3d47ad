#pragma once
// Parameter tuples of quasi-symmetric 2-designs with intersection numbers
// {0, y}, their admissibility checks and the per-v parameter sieve.

#include "qsdl/arith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qsdl {

struct DesignParams {
  BigInt v, b, r, k, lambda;
  bool operator==(const DesignParams &) const = default;
};

struct QsProfile {
  int x = 0;
  int y = 2;
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<Check> checks;
  bool symmetric = false;  // b = v and only the checks a symmetric design must fail

  bool pass() const;
  const Check *first_failure() const;
  void add(std::string name, bool ok, std::string detail = {});
};

struct Candidate {
  DesignParams params;
  QsProfile profile;
  std::vector<Check> ledger;
  std::string status = "admissible";
  std::string reason;

  BigInt ratio() const;  // r / (r, lambda)
  void note(std::string name, bool ok, std::string detail = {});
};

struct SearchBox {
  BigInt v;
  int y_lo = 2;
  int y_hi = 10;
  // Keep only tuples whose r/(r,lambda) divides this number.
  std::optional<BigInt> ratio_divides;
  // The sieve enforces r > k > lambda > 1. The sporadic tables contain a
  // tuple with lambda > k, so that pipeline relaxes the middle inequality.
  bool lambda_below_k = true;
};

BigInt gcd_ratio(const BigInt &r, const BigInt &lambda);

CheckReport check_admissible(const Candidate &c);

std::vector<Candidate> enumerate_for_v(const SearchBox &box);

bool subdegree_filter(const Candidate &c, const std::vector<BigInt> &subdegrees);

CheckReport stabilizer_filter(const Candidate &c, const BigInt &stab_order,
                              const std::optional<BigInt> &group_order = std::nullopt);

Candidate make_candidate(int y, const BigInt &v, const BigInt &b, const BigInt &r,
                         const BigInt &k, const BigInt &lambda);

// TSV row: y v b r k lambda ratio status reason
std::string tsv_row(const Candidate &c);
std::string tsv_header();
std::string tuple_str(const Candidate &c);  // "(y,v,b,r,k,lambda)"

}  // namespace qsdl
