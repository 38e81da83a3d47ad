#include "qsdl/reduction.hpp"

#include "qsdl/io.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace qsdl {

namespace {

BigInt pow_big(const BigInt &base, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  return out;
}

BigInt field(const TsvRow &row, std::size_t i) {
  try {
    return parse_bigint(row.cols.at(i));
  } catch (const std::exception &e) {
    throw ParseError(std::string("bad integer column ") + std::to_string(i + 1), row.line);
  }
}

}  // namespace

std::vector<SimpleGroupRecord> load_simple_groups(std::istream &in) {
  static const std::regex psl2(R"(PSL\(2,(\d+)\))");
  std::vector<SimpleGroupRecord> out;
  for (const auto &row : read_tsv(in)) {
    if (row.cols.size() != 3) throw ParseError("expected 3 columns: name order out_order", row.line);
    SimpleGroupRecord rec;
    auto names = split(row.cols[0], '=');
    rec.name = names.at(0);
    rec.aliases.assign(names.begin() + 1, names.end());
    rec.order = field(row, 1);
    rec.out_order = field(row, 2);
    if (rec.order < 60 || rec.out_order < 1) throw ParseError("order below 60 or Out < 1", row.line);
    for (const auto &n : names) {
      std::smatch m;
      if (!std::regex_match(n, m, psl2)) continue;
      BigInt q = parse_bigint(m[1].str());
      BigInt expect = q * (q * q - 1) / gcd(2, q - 1);
      if (expect != rec.order)
        throw ParseError(n + " order should be " + str(expect), row.line);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<SimpleGroupRecord> load_simple_groups(const std::filesystem::path &p) {
  std::ifstream in(p);
  if (!in) throw ParseError("cannot open " + p.string(), 0);
  return load_simple_groups(in);
}

Rational twisted_wreath_y_min(const BigInt &t_order, int m) {
  if (m < 6) throw DomainError("twisted wreath type needs m >= 6");
  if (t_order < 60) throw DomainError("|T| must be at least 60");
  Rational q(pow_big(t_order, m), 2 * BigInt(m) * m * (t_order - 1) * (t_order - 1));
  return q + 1;
}

EliminationReport twisted_report(int y_max) {
  EliminationReport rep;
  rep.label = "twisted wreath";
  Rational y_min = twisted_wreath_y_min(60, 6);
  BigInt fl = boost::multiprecision::numerator(y_min) / boost::multiprecision::denominator(y_min);
  rep.bound("y_min(|T|=60,m=6)", str(y_min));
  rep.bound("y_min(|T|=60,m=6) >", str(fl));
  rep.bound("y_max", std::to_string(y_max));
  if (y_min > y_max)
    rep.reject("T^m regular, |T|>=60, m>=6", "y >= " + str(fl) + " exceeds y_max");
  return rep;
}

std::vector<DiagonalHit> diagonal_feasible(int y_max, const std::vector<SimpleGroupRecord> &catalog) {
  std::vector<DiagonalHit> hits;
  for (int m = 2; m <= 4; ++m) {
    BigInt mfact = factorial(m);
    for (const auto &g : catalog) {
      BigInt v = pow_big(g.order, m - 1);
      bool sd1 = v <= 2 * BigInt(y_max - 1) * m * m * (g.order - 1) * (g.order - 1);
      bool sd2 = v <= 2 * BigInt(y_max - 1) * g.out_order * g.out_order * mfact * mfact;
      if (sd1 && sd2) hits.push_back({g, m, v});
    }
  }
  return hits;
}

std::vector<SimpleGroupRecord> diagonal_catalog_filter(const std::vector<SimpleGroupRecord> &catalog) {
  std::vector<SimpleGroupRecord> out;
  for (const auto &g : catalog)
    if (g.order <= 400 * g.out_order * g.out_order) out.push_back(g);
  return out;
}

EliminationReport diagonal_report(int y_max, const std::vector<SimpleGroupRecord> &catalog) {
  EliminationReport rep;
  rep.label = "simple diagonal";
  rep.bound("y_max", std::to_string(y_max));
  auto hits = diagonal_feasible(y_max, catalog);
  for (const auto &h : hits)
    rep.items.push_back("SD_1,SD_2 pass: " + h.group.name + " m=" + std::to_string(h.m) +
                        " v=" + str(h.v));
  for (const auto &g : diagonal_catalog_filter(catalog))
    rep.items.push_back("|T|<=400|Out|^2: " + g.name);

  // Sieve the (T, m) pairs that pass SD_2, and also the SD_1 pairs of the
  // small-|T| groups, where the printed SD_2 is tight. Other pairs fail SD_2
  // outright and are not sieved.
  std::set<std::string> small;
  for (const auto &g : diagonal_catalog_filter(catalog)) small.insert(g.name);
  for (int m = 2; m <= 4; ++m) {
    for (const auto &g : catalog) {
      BigInt v = pow_big(g.order, m - 1);
      if (v > 2 * BigInt(y_max - 1) * m * m * (g.order - 1) * (g.order - 1)) continue;
      BigInt mfact = factorial(m);
      BigInt sd2 = 2 * BigInt(y_max - 1) * g.out_order * g.out_order * mfact * mfact;
      std::string tag = g.name + " m=" + std::to_string(m) + " v=" + str(v);
      if (v > sd2 && !small.count(g.name)) {
        rep.reject(tag, "SD_2 fails (" + str(v) + " > " + str(sd2) + ")");
        continue;
      }
      auto found = enumerate_for_v({v, 2, y_max, std::nullopt, true});
      for (auto &c : found) {
        c.reason = tag;
        rep.survivors.push_back(c);
      }
      if (!found.empty()) continue;
      if (v > sd2)
        rep.reject(tag, "SD_2 fails (" + str(v) + " > " + str(sd2) + "); sieve empty");
      else
        rep.reject(tag, "sieve empty");
    }
  }
  return rep;
}

long omega_upper_bound(int m, int a, int y) {
  if (m < 3 || m > 5) throw DomainError("m must lie in 3..5");
  if (a < 1 || y < 2) throw DomainError("need a >= 1 and y >= 2");
  // a^2 w^m / (w-1)^2 increases for w >= 5 when m >= 3, so the feasible
  // omegas form an initial segment.
  auto ok = [&](long w) {
    BigInt lhs = BigInt(a) * a * pow_big(w, m);
    BigInt rhs = 2 * BigInt(y - 1) * m * m * BigInt(w - 1) * (w - 1);
    return lhs <= rhs;
  };
  long w = 4;
  while (ok(w + 1)) ++w;
  return w;
}

EliminationReport product_action_high_m(int y_max, long omega_cap) {
  if (y_max > 10 || y_max < 2) throw DomainError("y_max must lie in 2..10");
  if (omega_cap < 5) throw DomainError("omega_cap must be at least 5");
  EliminationReport rep;
  rep.label = "product action, m >= 3";
  long tuples = 0, integral = 0;
  for (int m = 3; m <= 5; ++m) {
    for (int y = 2; y <= y_max; ++y) {
      for (int a = 1;; ++a) {
        long wmax = std::min(omega_upper_bound(m, a, y), omega_cap);
        if (wmax < 5) break;
        for (long w = 5; w <= wmax; ++w) {
          ++tuples;
          if ((m * (w - 1)) % a != 0) continue;
          ++integral;
          BigInt d = m * (w - 1) / a;
          SearchBox box{pow_big(w, m), y, y, d, true};
          for (auto &c : enumerate_for_v(box)) {
            if (c.ratio() != d) continue;
            c.reason = "m=" + std::to_string(m) + " a=" + std::to_string(a) +
                       " omega=" + std::to_string(w);
            rep.survivors.push_back(c);
          }
        }
      }
    }
  }
  rep.bound("tuples (m,a,omega,y)", std::to_string(tuples));
  rep.bound("tuples with a | m(omega-1)", std::to_string(integral));
  rep.bound("omega max (m=3,a=1,y=" + std::to_string(y_max) + ")",
            std::to_string(omega_upper_bound(3, 1, y_max)));
  return rep;
}

namespace {

std::vector<BigInt> poly_mul(const std::vector<BigInt> &p, const std::vector<BigInt> &q) {
  std::vector<BigInt> out(p.size() + q.size() - 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
  return out;
}

}  // namespace

// With v = w^2, k-1 = a1(w+1)/2 and a1 r = 2 lambda (w-1), condition (4) gives
//   lambda = (N1 w + N0) / (A w + B),
//   N1 = a1^2, N0 = a1^2 - 2 a1 (y-1), A = a1^2 - 4(y-1), B = a1^2 + 4(y-1).
// When lambda is not constant, (A w + B) divides C = A N0 - N1 B. Otherwise
// b = 4 w^2 (w-1) lambda / (a1 (a1 w + a1 + 2)) supplies the divisor condition.
std::vector<ProductActionRow> product_action_m2(int y, EliminationReport *trace) {
  if (y < 2 || y > 10) throw DomainError("y must lie in 2..10");
  std::vector<ProductActionRow> rows;
  const BigInt y1 = y - 1;
  for (int a1 = 1; BigInt(a1) * a1 < 8 * y1; ++a1) {
    if (!(3 * BigInt(a1) * a1 > 8 * y1)) continue;
    const BigInt A = a1 * a1 - 4 * y1, B = a1 * a1 + 4 * y1;
    const BigInt N1 = a1 * a1, N0 = a1 * a1 - 2 * a1 * y1;
    const BigInt C = A * N0 - N1 * B;
    std::vector<BigInt> omegas;
    std::string how;
    if (A != 0 && C != 0) {
      omegas = linear_divisor_solutions(C, A, B, 5);
      how = "(" + str(A) + "w+" + str(B) + ") | " + str(C);
    } else {
      std::vector<BigInt> P = {0, 0, -4, 4};  // 4 w^2 (w-1)
      P = A == 0 ? poly_mul(P, {N0, N1}) : poly_mul(P, {N1});
      BigInt R = linear_divisor_constant(P, a1, a1 + 2);
      if (R == 0) throw std::logic_error("b-condition constant vanished");
      omegas = linear_divisor_solutions(R, a1, a1 + 2, 5);
      how = "(" + std::to_string(a1) + "w+" + std::to_string(a1 + 2) + ") | " + str(R);
    }
    std::string head = "y=" + std::to_string(y) + " a1=" + std::to_string(a1);
    if (trace) {
      std::string ws;
      for (const auto &w : omegas) ws += (ws.empty() ? "" : ",") + str(w);
      trace->items.push_back(head + " " + how + " omega in {" + ws + "}");
    }
    for (const auto &w : omegas) {
      std::string item = head + " omega=" + str(w);
      auto reject = [&](const std::string &why) {
        if (trace) trace->reject(item, why);
      };
      if ((a1 * (w + 1)) % 2 != 0) { reject("k not integral"); continue; }
      const BigInt k = a1 * (w + 1) / 2 + 1;
      const BigInt den = A * w + B, num = N1 * w + N0;
      if (den == 0 || num % den != 0) { reject("lambda not integral"); continue; }
      const BigInt lam = num / den;
      if (lam <= 0) { reject("lambda not positive"); continue; }
      if ((2 * lam * (w - 1)) % a1 != 0) { reject("r not integral"); continue; }
      const BigInt r = 2 * lam * (w - 1) / a1;
      const BigInt v = w * w;
      if ((v * r) % k != 0) { reject("b not integral"); continue; }
      Candidate c = make_candidate(y, v, v * r / k, r, k, lam);
      auto rep = check_admissible(c);
      if (!rep.pass()) {
        if (rep.symmetric) reject("b=v " + tuple_str(c) + " symmetric - rejected");
        else reject(tuple_str(c) + " fails " + rep.first_failure()->name);
        continue;
      }
      ProductActionRow row{y, a1, w, c.params, {}};
      rows.push_back(row);
      if (trace) trace->survivors.push_back(c);
    }
  }
  return rows;
}

bool tian_divisor_filter(const BigInt &t_order, const BigInt &out_order, const BigInt &omega,
                         const BigInt &r) {
  BigInt value = 2 * t_order * t_order * out_order * out_order;
  BigInt w2 = omega * omega;
  if (value % w2 != 0) return false;
  return (value / w2) % r == 0;
}

bool alt_product_exclusion(const BigInt &a1, const BigInt &omega, const BigInt &lambda) {
  if (omega < 5) throw DomainError("omega must be at least 5");
  return 2 <= a1 && a1 < lambda && lambda <= omega - 2;
}

std::vector<SocleEntry> load_product_socles(std::istream &in) {
  std::vector<SocleEntry> out;
  for (const auto &row : read_tsv(in)) {
    if (row.cols.size() != 5)
      throw ParseError("expected 5 columns: omega socle order out_order kind", row.line);
    SocleEntry e;
    e.omega = field(row, 0);
    e.socle = row.cols[1];
    e.order = field(row, 2);
    e.out_order = field(row, 3);
    if (row.cols[4] == "natural") e.natural = true;
    else if (row.cols[4] != "other") throw ParseError("kind must be natural or other", row.line);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<SocleEntry> load_product_socles(const std::filesystem::path &p) {
  std::ifstream in(p);
  if (!in) throw ParseError("cannot open " + p.string(), 0);
  return load_product_socles(in);
}

std::vector<ProductActionRow> product_action_table(int y_max, const std::vector<SocleEntry> &socles) {
  std::vector<ProductActionRow> rows;
  for (int y = 2; y <= y_max; ++y) {
    for (auto &row : product_action_m2(y)) {
      for (const auto &e : socles)
        if (e.omega == row.omega) row.soc_names.push_back(e.socle);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<SocleVerdict> product_socle_verdicts(const ProductActionRow &row,
                                                 const std::vector<SocleEntry> &socles) {
  std::vector<SocleVerdict> out;
  for (const auto &e : socles) {
    if (e.omega != row.omega) continue;
    SocleVerdict v;
    v.socle = e.socle;
    if (e.natural) {
      v.rule = "2<=a1<lambda<=omega-2";
      bool ex = alt_product_exclusion(row.a1, row.omega, row.params.lambda);
      v.outcome = ex ? "excluded" : "open";
      v.detail = "a1=" + std::to_string(row.a1) + " lambda=" + str(row.params.lambda) +
                 " omega-2=" + str(row.omega - 2);
    } else {
      v.rule = "r | 2|T|^2|Out|^2/omega^2";
      BigInt value = 2 * e.order * e.order * e.out_order * e.out_order;
      bool pass = tian_divisor_filter(e.order, e.out_order, row.omega, row.params.r);
      std::string q = value % (row.omega * row.omega) == 0
                          ? str(value / (row.omega * row.omega))
                          : str(value) + "/" + str(row.omega * row.omega);
      v.detail = "value=" + q + " r=" + str(row.params.r);
      if (!pass) {
        v.outcome = "excluded";
      } else {
        v.outcome = "excluded-by-reference";
        v.detail += "; needs subgroup classes of index b=" + str(row.params.b) +
                    " (computer-algebra check, not reproduced)";
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace qsdl
