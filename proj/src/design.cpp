#include "qsdl/design.hpp"

#include "qsdl/io.hpp"
#include "qsdl/kernels.hpp"

#include <algorithm>
#include <sstream>

namespace qsdl {

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

// col[p] has bit i set when point p lies in block i.
std::vector<Bits> point_columns(const Design &d) {
  std::vector<Bits> col(d.v, Bits(words_for(d.b()), 0));
  for (std::size_t i = 0; i < d.b(); ++i)
    for (Point p : d.blocks[i]) col[p][i / 64] |= std::uint64_t{1} << (i % 64);
  return col;
}

Bits block_row(const PointSet &blk, std::size_t v) {
  Bits row(words_for(v), 0);
  for (Point p : blk) row[p / 64] |= std::uint64_t{1} << (p % 64);
  return row;
}

}  // namespace

std::size_t Design::k() const {
  if (blocks.empty()) throw DomainError("design has no blocks");
  std::size_t k = blocks.front().size();
  for (const auto &blk : blocks)
    if (blk.size() != k) throw DomainError("blocks have different sizes");
  return k;
}

Design make_design(std::size_t v, std::vector<PointSet> blocks) {
  for (auto &blk : blocks) {
    std::sort(blk.begin(), blk.end());
    if (std::adjacent_find(blk.begin(), blk.end()) != blk.end())
      throw DomainError("block repeats a point");
    if (!blk.empty() && blk.back() >= v) throw DomainError("block point out of range");
  }
  std::sort(blocks.begin(), blocks.end());
  return {v, std::move(blocks)};
}

std::optional<std::size_t> duplicate_block(const Design &d) {
  for (std::size_t i = 1; i < d.b(); ++i)
    if (d.blocks[i] == d.blocks[i - 1]) return i;
  return std::nullopt;
}

PairCoverage pair_coverage(const Design &d) {
  d.k();
  PairCoverage out;
  if (d.v < 2) return out;
  auto col = point_columns(d);
  std::size_t w = words_for(d.b());
  out.expected = kernels::popcount_and(col[0].data(), col[1].data(), w);
  for (Point p = 0; p < d.v; ++p)
    for (Point q = p + 1; q < d.v; ++q) {
      auto c = kernels::popcount_and(col[p].data(), col[q].data(), w);
      if (c != out.expected) {
        out.violation = {p, q};
        out.found = c;
        return out;
      }
    }
  out.is_2_design = true;
  out.lambda = out.expected;
  out.found = out.expected;
  return out;
}

std::string IntersectionProfile::str() const {
  std::string s = "{";
  for (auto it = values.begin(); it != values.end(); ++it)
    s += (it == values.begin() ? "" : ",") + std::to_string(*it);
  return s + "}";
}

IntersectionProfile intersection_numbers(const Design &d) {
  if (d.b() < 2) throw DomainError("intersection numbers need at least two blocks");
  std::vector<Bits> rows;
  rows.reserve(d.b());
  for (const auto &blk : d.blocks) rows.push_back(block_row(blk, d.v));
  std::size_t w = words_for(d.v);
  IntersectionProfile out;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      out.values.insert(kernels::popcount_and(rows[i].data(), rows[j].data(), w));
  return out;
}

std::optional<std::uint64_t> constant_replication(const Design &d) {
  std::vector<std::uint64_t> r(d.v, 0);
  for (const auto &blk : d.blocks)
    for (Point p : blk) ++r[p];
  if (r.empty() || std::adjacent_find(r.begin(), r.end(), std::not_equal_to<>()) != r.end())
    return std::nullopt;
  return r.front();
}

std::optional<DesignParams> design_params(const Design &d) {
  auto pc = pair_coverage(d);
  auto r = constant_replication(d);
  if (!pc.is_2_design || !r) return std::nullopt;
  return DesignParams{BigInt(d.v), BigInt(d.b()), BigInt(*r), BigInt(d.k()), BigInt(*pc.lambda)};
}

FlagCheck verify_flag_transitive(const Group &g, const Design &d) {
  if (g.degree() != d.v) throw DomainError("group degree differs from design point count");
  std::size_t k = d.k();
  for (const auto &gen : g.generators())
    for (const auto &blk : d.blocks)
      if (!std::binary_search(d.blocks.begin(), d.blocks.end(), gen.image(blk)))
        throw DomainError("block set is not closed under the group");
  FlagCheck out;
  out.flags = d.b() * k;
  out.orbit_size = g.flag_orbit_size(d.blocks[0][0], d.blocks[0], d.blocks);
  out.flag_transitive = out.orbit_size == out.flags;
  return out;
}

namespace {

// Colex ranking of k-subsets: rank(S) = sum C(s_i, i+1).
struct SubsetRanker {
  std::size_t n, k;
  std::vector<std::vector<std::uint64_t>> c;  // c[m][j] = C(m, j)

  SubsetRanker(std::size_t n_, std::size_t k_) : n(n_), k(k_), c(n_ + 1) {
    for (std::size_t m = 0; m <= n; ++m) {
      c[m].assign(k + 2, 0);
      c[m][0] = 1;
      for (std::size_t j = 1; j <= std::min(m, k + 1); ++j)
        c[m][j] = c[m - 1][j - 1] + (j < m ? c[m - 1][j] : 0);
    }
  }
  std::uint64_t rank(const PointSet &s) const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < s.size(); ++i) r += c[s[i]][i + 1];
    return r;
  }
  PointSet unrank(std::uint64_t r) const {
    PointSet s(k);
    std::size_t m = n;
    for (std::size_t i = k; i-- > 0;) {
      while (c[m][i + 1] > r) --m;
      s[i] = static_cast<Point>(m);
      r -= c[m][i + 1];
    }
    return s;
  }
};

}  // namespace

std::vector<SearchHit> base_block_search(const Group &g, std::size_t k, const SearchOptions &opt) {
  std::size_t n = g.degree();
  if (k == 0 || k > n) throw DomainError("block size must be in 1..degree");
  BigInt total = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
  if (total > opt.cap)
    throw DomainError("C(" + std::to_string(n) + "," + std::to_string(k) + ") = " + str(total) +
                      " exceeds the subset cap; rerun with cap >= " + str(total));
  SubsetRanker rk(n, k);
  auto count = static_cast<std::uint64_t>(total);
  std::vector<char> seen(count, 0);
  std::vector<SearchHit> hits;
  for (std::uint64_t start = 0; start < count; ++start) {
    if (seen[start]) continue;
    seen[start] = 1;
    std::vector<PointSet> orbit{rk.unrank(start)};
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto &gen : g.generators()) {
        PointSet img = gen.image(orbit[i]);
        auto r = rk.rank(img);
        if (!seen[r]) seen[r] = 1, orbit.push_back(std::move(img));
      }
    if (orbit.size() < 2) continue;
    // Cheap necessary condition before the pair count: b k(k-1) = lambda v(v-1).
    if ((orbit.size() * k * (k - 1)) % (n * (n - 1)) != 0) continue;
    Design d = make_design(n, std::move(orbit));
    auto pc = pair_coverage(d);
    if (!pc.is_2_design) continue;
    // The group is transitive on an orbit, so the first block sees every
    // intersection size.
    IntersectionProfile prof;
    auto first = block_row(d.blocks[0], n);
    std::size_t w = words_for(n);
    for (std::size_t j = 1; j < d.b(); ++j) {
      auto row = block_row(d.blocks[j], n);
      prof.values.insert(kernels::popcount_and(first.data(), row.data(), w));
    }
    if (prof.values.size() != 2 || *prof.values.begin() != 0) continue;
    auto y = static_cast<int>(*prof.values.rbegin());
    if (y < 2 || y > opt.y_max) continue;
    hits.push_back({std::move(d), *pc.lambda, std::move(prof)});
  }
  std::sort(hits.begin(), hits.end(),
            [](const SearchHit &a, const SearchHit &b) { return a.design.blocks < b.design.blocks; });
  return hits;
}

Design parse_design(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  std::size_t no = 0, v = 0, b = 0, k = 0;
  bool have_header = false;
  std::vector<PointSet> blocks;
  auto number = [&](const std::string &t) {
    try {
      std::size_t used = 0;
      unsigned long x = std::stoul(t, &used);
      if (used == t.size()) return static_cast<std::size_t>(x);
    } catch (const std::exception &) {
    }
    throw ParseError("not a number: '" + t + "'", no);
  };
  while (std::getline(in, line)) {
    ++no;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (!have_header) {
      if (tok.size() != 3) throw ParseError("expected header 'v b k'", no);
      v = number(tok[0]), b = number(tok[1]), k = number(tok[2]);
      have_header = true;
      continue;
    }
    if (tok.size() != k)
      throw ParseError("expected " + std::to_string(k) + " points, got " + std::to_string(tok.size()),
                       no);
    PointSet blk;
    for (const auto &t : tok) {
      auto x = number(t);
      if (x < 1 || x > v) throw ParseError("point " + t + " out of range", no);
      blk.push_back(static_cast<Point>(x - 1));
    }
    std::sort(blk.begin(), blk.end());
    if (std::adjacent_find(blk.begin(), blk.end()) != blk.end())
      throw ParseError("block repeats a point", no);
    blocks.push_back(std::move(blk));
  }
  if (!have_header) throw ParseError("missing header 'v b k'", no);
  if (blocks.size() != b)
    throw ParseError("header says " + std::to_string(b) + " blocks, found " +
                         std::to_string(blocks.size()),
                     no);
  return make_design(v, std::move(blocks));
}

Design load_design(const std::string &path) { return parse_design(read_text_file(path)); }

std::string format_design(const Design &d, const std::string &header) {
  std::ostringstream os;
  os << comment_lines(header);
  os << d.v << ' ' << d.b() << ' ' << (d.blocks.empty() ? 0 : d.k()) << '\n';
  for (const auto &blk : d.blocks) {
    for (std::size_t i = 0; i < blk.size(); ++i) os << (i ? " " : "") << blk[i] + 1;
    os << '\n';
  }
  return os.str();
}

}  // namespace qsdl
