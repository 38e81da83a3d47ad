#pragma once
// Eliminators for the twisted wreath, simple diagonal and product action
// types of primitive groups.

#include "qsdl/core.hpp"
#include "qsdl/report.hpp"

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

namespace qsdl {

struct SimpleGroupRecord {
  std::string name;
  std::vector<std::string> aliases;
  BigInt order;
  BigInt out_order;
};

// Catalog TSV: name order out_order. A name may carry aliases joined by '='
// (e.g. PSL(2,5)=A5). PSL(2,q) orders are checked against q(q^2-1)/(2,q-1).
std::vector<SimpleGroupRecord> load_simple_groups(std::istream &in);
std::vector<SimpleGroupRecord> load_simple_groups(const std::filesystem::path &p);

Rational twisted_wreath_y_min(const BigInt &t_order, int m);

struct DiagonalHit {
  SimpleGroupRecord group;
  int m;
  BigInt v;  // |T|^(m-1)
};

std::vector<DiagonalHit> diagonal_feasible(int y_max, const std::vector<SimpleGroupRecord> &catalog);
// |T| <= 400 |Out(T)|^2
std::vector<SimpleGroupRecord> diagonal_catalog_filter(const std::vector<SimpleGroupRecord> &catalog);
EliminationReport diagonal_report(int y_max, const std::vector<SimpleGroupRecord> &catalog);

EliminationReport twisted_report(int y_max);

// Largest omega >= 5 with a^2 omega^m <= 2(y-1) m^2 (omega-1)^2, or 4 when
// even omega = 5 fails. m outside 3..5 is a domain error.
long omega_upper_bound(int m, int a, int y);
EliminationReport product_action_high_m(int y_max, long omega_cap = 1000000);

struct ProductActionRow {
  int y = 0;
  int a1 = 0;
  BigInt omega;
  DesignParams params;
  std::vector<std::string> soc_names;
};

std::vector<ProductActionRow> product_action_m2(int y, EliminationReport *trace = nullptr);

bool tian_divisor_filter(const BigInt &t_order, const BigInt &out_order, const BigInt &omega,
                         const BigInt &r);
bool alt_product_exclusion(const BigInt &a1, const BigInt &omega, const BigInt &lambda);

// Primitive groups of degree omega that can be Soc(H) for a product-action
// row. TSV: omega socle order out_order kind, kind = natural | other.
struct SocleEntry {
  BigInt omega;
  std::string socle;
  BigInt order;
  BigInt out_order;
  bool natural = false;  // A_omega in its natural action
};
std::vector<SocleEntry> load_product_socles(const std::filesystem::path &p);
std::vector<SocleEntry> load_product_socles(std::istream &in);

struct SocleVerdict {
  std::string socle;
  std::string rule;     // which test decided
  std::string outcome;  // "excluded" or "excluded-by-reference"
  std::string detail;
};

// Union of product_action_m2 over 2..y_max with socle names attached.
std::vector<ProductActionRow> product_action_table(int y_max, const std::vector<SocleEntry> &socles);
std::vector<SocleVerdict> product_socle_verdicts(const ProductActionRow &row,
                                                 const std::vector<SocleEntry> &socles);

}  // namespace qsdl
