// qsdl: command-line front end. Exit codes: 0 ok, 1 verification failure,
// 2 usage error, 3 data error.

#include "qsdl/alt_socle.hpp"
#include "qsdl/core.hpp"
#include "qsdl/design.hpp"
#include "qsdl/io.hpp"
#include "qsdl/permgroup.hpp"
#include "qsdl/reduction.hpp"
#include "qsdl/sporadic.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace qsdl;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct VerifyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string seed_data;
  std::string format = "tsv";
  std::string out;
  bool trace = false;
  int y_max = 10;
};

bool markdown(const Options &o) { return o.format == "markdown"; }

// "12" or "10..20"
std::pair<BigInt, BigInt> parse_range(const std::string &s, const char *what) {
  try {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
      BigInt x = parse_bigint(s);
      return {x, x};
    }
    return {parse_bigint(s.substr(0, dots)), parse_bigint(s.substr(dots + 2))};
  } catch (const std::exception &) {
    throw UsageError(std::string("bad ") + what + " range '" + s + "'");
  }
}

// A name that is not an existing path is looked up under the data directory,
// with or without its extension.
fs::path resolve(const Options &o, const std::string &name, const char *sub, const char *ext) {
  fs::path p(name);
  if (fs::exists(p)) return p;
  fs::path alt = data_dir(o.seed_data) / sub / name;
  if (fs::exists(alt)) return alt;
  alt += ext;
  if (fs::exists(alt)) return alt;
  throw ParseError("cannot open " + name, 0);
}

std::string cmd_sieve(const Options &o, const std::string &v_spec, const std::string &y_spec) {
  auto [v_lo, v_hi] = parse_range(v_spec, "v");
  auto [y_lo, y_hi] = parse_range(y_spec, "y");
  if (v_lo < 5) throw UsageError("v must be at least 5");
  if (v_lo > v_hi) throw UsageError("empty v range");
  if (y_lo < 2 || y_hi > 10 || y_lo > y_hi) throw UsageError("y range must lie in 2..10");
  std::ostringstream os;
  if (markdown(o))
    os << "| y | v | b | r | k | lambda | r/(r,lambda) |\n|---|---|---|---|---|---|---|\n";
  else
    os << tsv_header() << '\n';
  for (BigInt v = v_lo; v <= v_hi; ++v) {
    SearchBox box{v, static_cast<int>(y_lo), static_cast<int>(y_hi), std::nullopt, true};
    for (const auto &c : enumerate_for_v(box)) {
      const auto &p = c.params;
      if (markdown(o))
        os << "| " << c.profile.y << " | " << p.v << " | " << p.b << " | " << p.r << " | " << p.k
           << " | " << p.lambda << " | " << c.ratio() << " |\n";
      else
        os << tsv_row(c) << '\n';
    }
  }
  return os.str();
}

std::string soc_list(const std::vector<std::string> &names) {
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i];
  return s;
}

std::string cmd_reduce(const Options &o, const std::string &which) {
  std::ostringstream os;
  if (which == "twisted") {
    os << twisted_report(o.y_max).text();
  } else if (which == "diagonal") {
    auto catalog = load_simple_groups(data_dir(o.seed_data) / "simple_groups.tsv");
    os << diagonal_report(o.y_max, catalog).text();
  } else if (which == "product") {
    auto socles = load_product_socles(data_dir(o.seed_data) / "product_socles.tsv");
    auto rows = product_action_table(o.y_max, socles);
    if (markdown(o)) {
      os << "| y | a1 | (v,b,r,k,lambda) | Soc(H) |\n|---|---|---|---|\n";
      for (const auto &r : rows)
        os << "| " << r.y << " | " << r.a1 << " | (" << r.params.v << ',' << r.params.b << ','
           << r.params.r << ',' << r.params.k << ',' << r.params.lambda << ") | "
           << soc_list(r.soc_names) << " |\n";
      os << "\n| v | Soc(H) | outcome | rule | detail |\n|---|---|---|---|---|\n";
    } else {
      os << "y\ta1\tv\tb\tr\tk\tlambda\tsoc\n";
      for (const auto &r : rows)
        os << r.y << '\t' << r.a1 << '\t' << r.params.v << '\t' << r.params.b << '\t'
           << r.params.r << '\t' << r.params.k << '\t' << r.params.lambda << '\t'
           << soc_list(r.soc_names) << '\n';
      os << "\nv\tsocle\toutcome\trule\tdetail\n";
    }
    for (const auto &r : rows)
      for (const auto &vd : product_socle_verdicts(r, socles)) {
        if (markdown(o))
          os << "| " << r.params.v << " | " << vd.socle << " | " << vd.outcome << " | " << vd.rule
             << " | " << vd.detail << " |\n";
        else
          os << r.params.v << '\t' << vd.socle << '\t' << vd.outcome << '\t' << vd.rule << '\t'
             << vd.detail << '\n';
      }
    if (o.trace) {
      for (int y = 2; y <= o.y_max; ++y) {
        EliminationReport rep;
        rep.label = "product action m=2, y=" + std::to_string(y);
        product_action_m2(y, &rep);
        os << '\n' << rep.text();
      }
      os << '\n' << product_action_high_m(o.y_max).text();
    }
  } else {
    throw UsageError("reduce expects twisted, diagonal or product");
  }
  return os.str();
}

std::string cmd_alt(const Options &o) {
  auto catalog = load_primitive_catalog(data_dir(o.seed_data) / "primitive_catalog.tsv");
  std::ostringstream os;
  EliminationReport trace;
  trace.label = "primitive stabilizer";
  auto rows = primitive_candidates(catalog, o.y_max, &trace);
  if (markdown(o)) {
    os << primitive_markdown(rows);
  } else {
    os << "v\tn\tdivisors\tG\tH\n";
    for (const auto &r : rows) {
      os << r.v << '\t' << r.n << '\t';
      for (std::size_t i = 0; i < r.divisors.size(); ++i) os << (i ? "," : "") << r.divisors[i];
      os << '\t' << r.g_kind << '\t' << r.h_name << '\n';
    }
  }
  if (o.trace) os << '\n' << trace.text();
  os << '\n' << primitive_report(catalog, o.y_max).text();
  os << '\n' << n6_special_case(catalog).report.text();
  os << '\n' << imprimitive_partition_scan(o.y_max).report.text();
  os << '\n' << intransitive_scan(o.y_max).report.text();
  return os.str();
}

std::string cmd_sporadic(const Options &o) {
  auto records = load_atlas(data_dir(o.seed_data) / "atlas_sporadic.tsv");
  auto run = sporadic_parameters(sporadic_screen(records, o.y_max), o.y_max);
  std::ostringstream os;
  os << (markdown(o) ? sporadic_markdown(run.rows) : sporadic_tsv(run.rows));
  auto monster = load_monster_candidates(data_dir(o.seed_data) / "monster_candidates.tsv");
  os << (markdown(o) ? "\n| N | Aut(N) order | verdict |\n|---|---|---|\n" : "\nN\taut_order\tverdict\n");
  for (const auto &m : monster_check(monster.aut_orders, monster.monster_order)) {
    const char *verdict = m.excluded ? "excluded: aut_order^3 < order(M)" : "not excluded";
    if (markdown(o))
      os << "| " << m.name << " | " << m.aut_order << " | " << verdict << " |\n";
    else
      os << m.name << '\t' << m.aut_order << '\t' << verdict << '\n';
  }
  if (o.trace) os << '\n' << run.report.text();
  return os.str();
}

std::string cmd_verify(const Options &o, const std::string &group_file,
                       const std::string &design_file) {
  Group g = load_generators(resolve(o, group_file, "groups", ".gens").string());
  Design d = load_design(resolve(o, design_file, "designs", ".blk").string());
  if (g.degree() != d.v)
    throw VerifyFailure("group degree " + std::to_string(g.degree()) + " differs from v = " +
                        std::to_string(d.v));
  if (auto dup = duplicate_block(d))
    throw VerifyFailure("duplicate block " + std::to_string(*dup + 1) + " (sorted order)");
  auto pc = pair_coverage(d);
  if (!pc.is_2_design)
    throw VerifyFailure("not a 2-design: points " + std::to_string(pc.violation->first + 1) + "," +
                        std::to_string(pc.violation->second + 1) + " lie in " +
                        std::to_string(pc.found) + " blocks, points 1,2 in " +
                        std::to_string(pc.expected));
  auto r = constant_replication(d);
  auto prof = intersection_numbers(d);
  FlagCheck fc;
  try {
    fc = verify_flag_transitive(g, d);
  } catch (const DomainError &e) {
    throw VerifyFailure(e.what());
  }
  std::ostringstream os;
  os << "group order\t" << g.order() << '\n';
  os << "(v,b,r,k,lambda)\t(" << d.v << ',' << d.b() << ',' << (r ? std::to_string(*r) : "-")
     << ',' << d.k() << ',' << *pc.lambda << ")\n";
  os << "flag orbit\t" << fc.orbit_size << " of " << fc.flags << '\n';
  os << "2-(" << d.v << ',' << d.k() << ',' << *pc.lambda << "), " << prof.str()
     << ", flag-transitive: " << (fc.flag_transitive ? "true" : "false") << '\n';
  if (!fc.flag_transitive) {
    std::cout << os.str();
    throw VerifyFailure("flag orbit has " + std::to_string(fc.orbit_size) + " of " +
                        std::to_string(fc.flags) + " flags");
  }
  return os.str();
}

std::string cmd_search(const Options &o, const std::string &group_file, std::size_t k,
                       std::uint64_t cap, const std::string &out_dir) {
  fs::path gp = resolve(o, group_file, "groups", ".gens");
  Group g = load_generators(gp.string());
  SearchOptions opt;
  opt.cap = cap;
  opt.y_max = o.y_max;
  auto hits = base_block_search(g, k, opt);
  std::ostringstream os;
  os << "designs\t" << hits.size() << '\n';
  std::string stem = gp.stem().string();
  std::error_code ec;
  if (!hits.empty()) fs::create_directories(out_dir, ec);
  for (std::size_t i = 0; i < hits.size(); ++i) {
    const auto &h = hits[i];
    std::string name = stem + "-design" + (hits.size() > 1 ? "-" + std::to_string(i + 1) : "") + ".blk";
    fs::path path = fs::path(out_dir) / name;
    std::ofstream f(path);
    if (!f) throw ParseError("cannot write " + path.string(), 0);
    f << format_design(h.design, "Orbit of a " + std::to_string(k) + "-subset under " +
                                     gp.filename().string());
    os << "2-(" << h.design.v << ',' << k << ',' << h.lambda << ")\tb=" << h.design.b() << '\t'
       << h.profile.str() << '\t' << path.string() << '\n';
  }
  return os.str();
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Flag-transitive quasi-symmetric design toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed-data", o.seed_data, "data directory (default $QSDL_DATA or built-in)");
  app.add_option("--format", o.format, "tsv or markdown")->check(CLI::IsMember({"tsv", "markdown"}));
  app.add_option("--out", o.out, "write output to FILE");
  app.add_flag("--trace", o.trace, "append elimination reports");
  app.add_option("--y-max", o.y_max, "largest y considered")->check(CLI::Range(2, 10));

  std::string v_spec, y_spec = "2..10";
  auto *sieve = app.add_subcommand("sieve", "admissible parameter tuples");
  sieve->add_option("--v", v_spec, "v or lo..hi")->required();
  sieve->add_option("--y", y_spec, "y or lo..hi within 2..10");

  std::string which;
  auto *reduce = app.add_subcommand("reduce", "twisted wreath, simple diagonal, product action");
  reduce->add_option("case", which)->required()->check(CLI::IsMember({"twisted", "diagonal", "product"}));

  auto *alt = app.add_subcommand("alt", "alternating socle");
  auto *spor = app.add_subcommand("sporadic", "sporadic socle");

  std::string group_file, design_file, out_dir = ".";
  auto *verify = app.add_subcommand("verify", "check a design against a group");
  verify->add_option("--group", group_file)->required();
  verify->add_option("--design", design_file)->required();

  std::size_t k = 0;
  std::uint64_t cap = 1000000;
  auto *search = app.add_subcommand("search", "designs from orbits of k-subsets");
  search->add_option("--group", group_file)->required();
  search->add_option("--k", k)->required();
  search->add_option("--cap", cap, "largest number of k-subsets to enumerate");
  search->add_option("--out-dir", out_dir, "where design files go");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    std::string text;
    if (*sieve) text = cmd_sieve(o, v_spec, y_spec);
    else if (*reduce) text = cmd_reduce(o, which);
    else if (*alt) text = cmd_alt(o);
    else if (*spor) text = cmd_sporadic(o);
    else if (*verify) text = cmd_verify(o, group_file, design_file);
    else if (*search) text = cmd_search(o, group_file, k, cap, out_dir);
    if (o.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(o.out);
      if (!f) throw ParseError("cannot write " + o.out, 0);
      f << text;
    }
    return 0;
  } catch (const VerifyFailure &e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 1;
  } catch (const UsageError &e) {
    std::cerr << "usage: " << e.what() << '\n';
    return 2;
  } catch (const DomainError &e) {
    std::cerr << "usage: " << e.what() << '\n';
    return 2;
  } catch (const ParseError &e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 3;
  }
}
