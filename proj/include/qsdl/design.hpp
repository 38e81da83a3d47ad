#pragma once
// Block designs as explicit block lists: pair coverage, intersection sizes,
// flag-transitivity, and the orbit search that builds designs from a group.

#include "qsdl/core.hpp"
#include "qsdl/permgroup.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qsdl {

struct Design {
  std::size_t v = 0;
  std::vector<PointSet> blocks;  // each sorted; list sorted once normalized

  std::size_t b() const { return blocks.size(); }
  // Common block size; DomainError if blocks are empty or sizes differ.
  std::size_t k() const;
};

// Sorts every block and the block list. Points must be < v.
Design make_design(std::size_t v, std::vector<PointSet> blocks);

// Index of the first block equal to its predecessor (after normalizing).
std::optional<std::size_t> duplicate_block(const Design &d);

struct PairCoverage {
  bool is_2_design = false;
  std::optional<std::uint64_t> lambda;
  // First pair whose count differs from that of {0,1}, with both counts.
  std::optional<std::pair<Point, Point>> violation;
  std::uint64_t expected = 0, found = 0;
};
PairCoverage pair_coverage(const Design &d);

struct IntersectionProfile {
  std::set<std::size_t> values;
  bool quasi_symmetric() const { return values.size() == 2; }
  std::string str() const;  // "{0,3}"
};
IntersectionProfile intersection_numbers(const Design &d);

// Replication numbers per point; constant r is required for the parameters.
std::optional<std::uint64_t> constant_replication(const Design &d);

// (v,b,r,k,lambda) when d is a 2-design with constant r.
std::optional<DesignParams> design_params(const Design &d);

struct FlagCheck {
  bool flag_transitive = false;
  std::size_t orbit_size = 0;
  std::size_t flags = 0;  // b*k
};
// DomainError unless every generator maps the block set to itself.
FlagCheck verify_flag_transitive(const Group &g, const Design &d);

struct SearchHit {
  Design design;
  std::uint64_t lambda = 0;
  IntersectionProfile profile;
};
struct SearchOptions {
  std::uint64_t cap = 1000000;
  int y_max = 10;
};
// Splits all k-subsets into orbits and keeps the orbits that are 2-designs
// with intersection sizes {0,y}, 2 <= y <= y_max. Sorted by first block.
// Throws DomainError naming the needed cap when C(degree,k) exceeds it.
std::vector<SearchHit> base_block_search(const Group &g, std::size_t k,
                                         const SearchOptions &opt = {});

// "v b k" header, then one block per line as 1-based points; '#' comments.
Design parse_design(const std::string &text);
Design load_design(const std::string &path);
// header is written as comment lines above the "v b k" line.
std::string format_design(const Design &d, const std::string &header = {});

}  // namespace qsdl
