#include "qsdl/sporadic.hpp"

#include "qsdl/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

namespace qsdl {

namespace {

BigInt field(const TsvRow &row, std::size_t i) {
  try {
    return parse_bigint(row.cols.at(i));
  } catch (const std::exception &) {
    throw ParseError("bad integer in column " + std::to_string(i + 1), row.line);
  }
}

std::vector<BigInt> parse_subdegrees(const TsvRow &row, const std::string &cell) {
  std::vector<BigInt> out;
  if (cell.empty() || cell == "-") return out;
  std::stringstream ss(cell);
  for (std::string part; std::getline(ss, part, ',');) {
    try {
      out.push_back(parse_bigint(part));
    } catch (const std::exception &) {
      throw ParseError("bad subdegree '" + part + "'", row.line);
    }
    if (out.back() < 1) throw ParseError("subdegree must be positive", row.line);
  }
  return out;
}

// Parameter sets with gcd(r,lambda) = 1 that the classification of such
// designs with sporadic socle (Zhan and Zhou 2016, Thm 1) realizes, as (v,k,lambda).
const std::vector<std::tuple<int, int, int>> kCoprimeRealized = {{12, 6, 5}, {22, 6, 5}};

}  // namespace

std::vector<AtlasRecord> load_atlas(std::istream &in) {
  std::vector<AtlasRecord> out;
  std::map<std::string, std::size_t> index;
  for (const auto &row : read_tsv(in)) {
    if (row.cols.size() != 7 && row.cols.size() != 8)
      throw ParseError("expected 7 or 8 columns", row.line);
    AtlasSubgroup sub;
    sub.name = row.cols[4];
    sub.order = field(row, 5);
    sub.source = row.cols[6];
    sub.line = row.line;
    if (row.cols.size() == 8) sub.subdegrees = parse_subdegrees(row, row.cols[7]);
    BigInt order = field(row, 1), out_order = field(row, 3);
    if (sub.order < 1 || order % sub.order != 0)
      throw ParseError("subgroup order " + str(sub.order) + " does not divide " + str(order),
                       row.line);
    if (order / sub.order < 3) throw ParseError("index below 3", row.line);
    if (!sub.subdegrees.empty()) {
      BigInt sum = 1;
      for (const auto &d : sub.subdegrees) sum += d;
      if (sum != order / sub.order)
        throw ParseError("subdegrees do not sum to the index", row.line);
    }
    auto it = index.find(row.cols[0]);
    if (it == index.end()) {
      index[row.cols[0]] = out.size();
      out.push_back({row.cols[0], order, row.cols[2], out_order, {}});
      it = index.find(row.cols[0]);
    }
    auto &rec = out[it->second];
    if (rec.order != order || rec.socle != row.cols[2] || rec.out_order != out_order)
      throw ParseError("row disagrees with earlier rows for " + rec.name, row.line);
    rec.maximals.push_back(std::move(sub));
  }
  return out;
}

std::vector<AtlasRecord> load_atlas(const std::filesystem::path &p) {
  std::ifstream in(p);
  if (!in) throw ParseError("cannot open " + p.string(), 0);
  return load_atlas(in);
}

std::vector<SporadicCandidate> sporadic_screen(const std::vector<AtlasRecord> &records, int y_max) {
  if (y_max < 2 || y_max > 10) throw DomainError("y_max must be in 2..10");
  std::vector<SporadicCandidate> out;
  for (const auto &rec : records)
    for (const auto &h : rec.maximals) {
      BigInt v = rec.order / h.order;
      BigInt rm = gcd(v - 1, h.order);
      // lambda > y >= 2, so |H|^3 > lambda|G| gives |H|^3 > 2|G|.
      if (h.order * h.order * h.order <= 2 * rec.order) continue;
      if (v > 2 * BigInt(y_max - 1) * rm * rm) continue;
      out.push_back({rec.name, rec.order, h, v, rm});
    }
  return out;
}

SporadicRun sporadic_parameters(const std::vector<SporadicCandidate> &cands, int y_max) {
  SporadicRun run;
  run.report.label = "sporadic socle";
  run.report.bound("screened pairs", std::to_string(cands.size()));
  std::map<std::tuple<int, BigInt, BigInt>, std::size_t> row_of;  // (y, v, k)
  for (const auto &c : cands) {
    std::string pair = "(" + c.group + "," + c.subgroup.name + ")";
    run.report.items.push_back(pair + " v=" + str(c.v) + " r_max=" + str(c.r_max));
    SearchBox box{c.v, 2, y_max, c.r_max, false};
    auto found = enumerate_for_v(box);
    if (found.empty()) {
      run.report.reject(pair, "no admissible tuple with r/(r,lambda) | r_max");
      continue;
    }
    for (auto &cand : found) {
      const auto &p = cand.params;
      std::string what = pair + " " + tuple_str(cand);
      if ((p.lambda * c.r_max) % p.r != 0) {
        run.report.reject(what, "r does not divide lambda r_max");
        continue;
      }
      auto st = stabilizer_filter(cand, c.subgroup.order, c.group_order);
      if (!st.pass()) {
        run.report.reject(what, "fails " + st.first_failure()->name);
        continue;
      }
      if (!c.subgroup.subdegrees.empty() && !subdegree_filter(cand, c.subgroup.subdegrees)) {
        run.report.reject(what, "r/(r,lambda) does not divide the subdegrees");
        continue;
      }
      auto key = std::make_tuple(cand.profile.y, p.v, p.k);
      auto it = row_of.find(key);
      if (it == row_of.end()) {
        row_of[key] = run.rows.size();
        run.rows.push_back({cand, c.r_max, {}});
        it = row_of.find(key);
      }
      auto &pairs = run.rows[it->second].pairs;
      auto hit = std::find_if(pairs.begin(), pairs.end(), [&](const GroupPair &gp) {
        return gp.group == c.group && gp.subgroup == c.subgroup.name;
      });
      if (hit == pairs.end())
        pairs.push_back({c.group, c.subgroup.name, 1});
      else
        ++hit->classes;
    }
  }
  for (auto &row : run.rows) {
    auto &c = row.cand;
    const auto &p = c.params;
    BigInt g = gcd(p.r, p.lambda);
    if (g == 1) {
      bool realized = std::any_of(kCoprimeRealized.begin(), kCoprimeRealized.end(), [&](auto t) {
        return p.v == std::get<0>(t) && p.k == std::get<1>(t) && p.lambda == std::get<2>(t);
      });
      c.status = realized ? "exists" : "excluded-by-reference";
      c.reason = realized ? "(r,lambda)=1 [Zhan2016, Thm 1]" : "(r,lambda)=1, not in [Zhan2016, Thm 1]";
    } else if (c.profile.y == 2 && p.r % p.lambda != 0) {
      c.status = "excluded-by-reference";
      c.reason = "y=2 and lambda does not divide r [Zhang2023, Thm 2]";
    }
  }
  std::sort(run.rows.begin(), run.rows.end(), [](const SporadicRow &a, const SporadicRow &b) {
    return std::tie(a.cand.params.v, a.cand.profile.y) < std::tie(b.cand.params.v, b.cand.profile.y);
  });
  for (const auto &row : run.rows) run.report.survivors.push_back(row.cand);
  return run;
}

namespace {

std::string pairs_str(const std::vector<GroupPair> &pairs) {
  std::string s;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    s += (i ? "," : "") + std::string("(") + pairs[i].group + "," + pairs[i].subgroup + ")";
  return s;
}

}  // namespace

std::string sporadic_markdown(const std::vector<SporadicRow> &rows) {
  std::ostringstream os;
  os << "| Case | (y,v,b,r,k,lambda) | r/(r,lambda) | r_max | (G,G_alpha) | status |\n"
     << "|---|---|---|---|---|---|\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto &r = rows[i];
    os << "| (" << i + 1 << ") | " << tuple_str(r.cand) << " | " << r.cand.ratio() << " | "
       << r.r_max << " | " << pairs_str(r.pairs) << " | " << r.cand.status
       << (r.cand.reason.empty() ? "" : ": " + r.cand.reason) << " |\n";
  }
  return os.str();
}

std::string sporadic_tsv(const std::vector<SporadicRow> &rows) {
  std::ostringstream os;
  os << "case\ty\tv\tb\tr\tk\tlambda\tratio\tr_max\tpairs\tstatus\treason\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto &r = rows[i];
    const auto &p = r.cand.params;
    os << i + 1 << '\t' << r.cand.profile.y << '\t' << p.v << '\t' << p.b << '\t' << p.r << '\t'
       << p.k << '\t' << p.lambda << '\t' << r.cand.ratio() << '\t' << r.r_max << '\t'
       << pairs_str(r.pairs) << '\t' << r.cand.status << '\t'
       << (r.cand.reason.empty() ? "-" : r.cand.reason) << '\n';
  }
  return os.str();
}

MonsterData load_monster_candidates(std::istream &in) {
  MonsterData out;
  bool first = true;
  for (const auto &row : read_tsv(in)) {
    if (row.cols.size() != 2) throw ParseError("expected 2 columns: name order", row.line);
    BigInt n = field(row, 1);
    if (first) {
      if (row.cols[0] != "M") throw ParseError("first row must give the Monster order", row.line);
      out.monster_order = n;
      first = false;
    } else {
      out.aut_orders.emplace_back(row.cols[0], n);
    }
  }
  if (first) throw ParseError("no Monster order", 0);
  return out;
}

MonsterData load_monster_candidates(const std::filesystem::path &p) {
  std::ifstream in(p);
  if (!in) throw ParseError("cannot open " + p.string(), 0);
  return load_monster_candidates(in);
}

std::vector<MonsterVerdict> monster_check(const std::vector<std::pair<std::string, BigInt>> &cands,
                                          const BigInt &monster_order) {
  std::vector<MonsterVerdict> out;
  for (const auto &[name, aut] : cands) out.push_back({name, aut, aut * aut * aut < monster_order});
  return out;
}

}  // namespace qsdl
