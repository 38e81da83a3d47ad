#include "qsdl/alt_socle.hpp"

#include "qsdl/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace qsdl {

std::vector<BigInt> subset_subdegrees(unsigned n, unsigned l) {
  if (l < 1 || l >= n) throw DomainError("need 1 <= l < n");
  std::vector<BigInt> d;
  for (unsigned i = 0; i < l; ++i) d.push_back(binomial(l, i) * binomial(n - l, l - i));
  return d;
}

BigInt PrimitiveCaseRecord::group_order() const {
  if (g_kind == "S") return factorial(n);
  if (g_kind == "A") return factorial(n) / 2;
  auto slash = g_kind.find('/');
  if (slash == std::string::npos) throw DomainError("g_kind must be A, S or Name/order");
  return parse_bigint(g_kind.substr(slash + 1));
}

std::string PrimitiveCaseRecord::group_name() const {
  if (!special()) return g_kind + std::to_string(n);
  return g_kind.substr(0, g_kind.find('/'));
}

std::vector<PrimitiveCaseRecord> load_primitive_catalog(std::istream &in) {
  std::vector<PrimitiveCaseRecord> out;
  for (const auto &row : read_tsv(in)) {
    if (row.cols.size() != 4) throw ParseError("expected 4 columns: n g_kind h_name h_order", row.line);
    PrimitiveCaseRecord rec;
    try {
      rec.n = std::stoul(row.cols[0]);
      rec.g_kind = row.cols[1];
      rec.h_name = row.cols[2];
      rec.h_order = parse_bigint(row.cols[3]);
      BigInt g = rec.group_order();
      if (rec.h_order < 1 || g % rec.h_order != 0)
        throw ParseError("subgroup order does not divide " + str(g), row.line);
    } catch (const ParseError &) {
      throw;
    } catch (const std::exception &e) {
      throw ParseError(e.what(), row.line);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<PrimitiveCaseRecord> load_primitive_catalog(const std::filesystem::path &p) {
  std::ifstream in(p);
  if (!in) throw ParseError("cannot open " + p.string(), 0);
  return load_primitive_catalog(in);
}

std::vector<BigInt> primitive_ratio_set(unsigned n) {
  std::vector<BigInt> out;
  for (unsigned x : {n - 2, n - 1, n})
    if (x % 2 == 1 && is_prime(x)) out.push_back(x);
  if (is_prime(n - 2) && is_prime(n)) out.push_back(BigInt(n - 2) * n);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PrimitiveRow> primitive_candidates(const std::vector<PrimitiveCaseRecord> &catalog,
                                            int y_max, EliminationReport *trace) {
  std::vector<PrimitiveRow> rows;
  for (const auto &rec : catalog) {
    if (rec.special()) continue;
    const BigInt v = rec.group_order() / rec.h_order;
    const std::string item = rec.group_name() + " > " + rec.h_name + " v=" + str(v);
    auto reject = [&](const std::string &why) {
      if (trace) trace->reject(item, why);
    };
    auto divs = primitive_ratio_set(rec.n);
    const BigInt wielandt = factorial((rec.n + 1) / 2) / 2;
    if (v < wielandt) { reject("v below Wielandt bound " + str(wielandt)); continue; }
    if (divs.empty()) { reject("no admissible r/(r,lambda)"); continue; }
    const BigInt cap = 2 * BigInt(y_max - 1) * divs.back() * divs.back();
    if (v > cap) { reject("v > 2(y-1)max^2 = " + str(cap)); continue; }
    // These two branches are settled by separate arguments; their v values
    // are sieved in primitive_report.
    if (v % 2 == 1) { reject("v odd: odd-degree branch (v=15)"); continue; }
    if (v <= 6) { reject("v <= 6: small-degree branch"); continue; }
    rows.push_back({v, rec.n, divs, rec.g_kind, rec.h_name});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const PrimitiveRow &a, const PrimitiveRow &b) {
    if (a.v != b.v) return a.v < b.v;
    if (a.n != b.n) return a.n < b.n;
    return a.g_kind > b.g_kind;  // S before A, as in the published table
  });
  return rows;
}

EliminationReport primitive_report(const std::vector<PrimitiveCaseRecord> &catalog, int y_max) {
  EliminationReport rep;
  rep.label = "alternating socle, H primitive on n points";
  auto rows = primitive_candidates(catalog, y_max, &rep);
  std::set<BigInt> vs;
  std::map<BigInt, BigInt> ratio_lcm;
  for (const auto &r : rows) {
    vs.insert(r.v);
    std::ostringstream os;
    os << "candidate\tv=" << r.v << "\tn=" << r.n << "\tG=" << r.g_kind << "\tH=" << r.h_name;
    rep.items.push_back(os.str());
  }
  // The rejected branches: v = n <= 6 (H = S_{n-1}), v odd (v = 15), v = 6.
  for (const BigInt &v : {BigInt(5), BigInt(6), BigInt(15)}) {
    auto found = enumerate_for_v({v, 2, y_max, std::nullopt, true});
    rep.bound("sieve v=" + str(v), found.empty() ? "empty" : std::to_string(found.size()));
    for (auto &c : found) rep.survivors.push_back(c);
  }
  for (const auto &v : vs) {
    auto found = enumerate_for_v({v, 2, y_max, std::nullopt, true});
    rep.bound("sieve v=" + str(v), found.empty() ? "empty" : std::to_string(found.size()));
    for (const auto &r : rows) {
      if (r.v != v) continue;
      for (const auto &c : found) {
        bool ok = std::any_of(r.divisors.begin(), r.divisors.end(),
                              [&](const BigInt &d) { return d % c.ratio() == 0; });
        if (ok) rep.survivors.push_back(c);
      }
    }
  }
  return rep;
}

std::string primitive_markdown(const std::vector<PrimitiveRow> &rows) {
  std::ostringstream os;
  os << "| v | n | r/(r,lambda) | G | H |\n|---|---|---|---|---|\n";
  for (const auto &r : rows) {
    os << "| " << r.v << " | " << r.n << " | ";
    for (std::size_t i = 0; i < r.divisors.size(); ++i) os << (i ? "," : "") << r.divisors[i];
    os << " | " << r.g_kind << "_n | " << r.h_name << " |\n";
  }
  return os.str();
}

BigInt partition_count(unsigned t, unsigned s) {
  if (t < 2 || s < 2) throw DomainError("need t, s >= 2");
  BigInt v = 1;
  for (unsigned j = 2; j <= t; ++j) v *= binomial(j * s - 1, s - 1);
  return v;
}

ImprimitiveScan imprimitive_partition_scan(int y_max) {
  if (y_max < 2 || y_max > 10) throw DomainError("y_max must lie in 2..10");
  ImprimitiveScan out;
  auto &rep = out.report;
  rep.label = "alternating socle, H transitive imprimitive";
  const BigInt y1 = y_max - 1;

  // s = 2: d_2 = t(t-1); the bound v <= 2(y-1) d_2^2 stops at the first t
  // where it fails, since v grows like a double factorial.
  for (unsigned t = 3;; ++t) {
    BigInt v = partition_count(t, 2);
    BigInt d2 = BigInt(t) * (t - 1);
    BigInt cap = 2 * y1 * d2 * d2;
    if (v > cap) {
      rep.bound("s=2 first failing t", std::to_string(t) + " (" + str(v) + " > " + str(cap) + ")");
      break;
    }
    out.s2_values.push_back(v);
    auto found = enumerate_for_v({v, 2, y_max, std::nullopt, true});
    std::string item = "s=2 t=" + std::to_string(t) + " v=" + str(v);
    rep.items.push_back(item);
    if (found.empty()) rep.reject(item, "sieve empty");
    for (auto &c : found) rep.survivors.push_back(c);
  }

  // s >= 3
  for (unsigned t = 2;; ++t) {
    unsigned count_t = 0;
    BigInt tf = factorial(t);
    for (unsigned s = 3;; ++s) {
      BigInt lhs = 1;
      for (unsigned i = 1; i < s; ++i) lhs *= tf;
      BigInt rhs2 = y1 * BigInt(s) * s * s * s * t * t * (t - 1) * (t - 1);  // twice the bound
      if (!(2 * lhs < rhs2)) break;
      ++count_t;
      out.first.push_back({t, s});
      BigInt v = partition_count(t, s);
      if (2 * v <= rhs2) out.second.push_back({t, s});
    }
    if (count_t == 0) break;
  }
  rep.bound("s>=3 pairs after (t!)^(s-1) bound", std::to_string(out.first.size()));
  rep.bound("s>=3 pairs after exact v", std::to_string(out.second.size()));
  for (const auto &[t, s] : out.second) {
    BigInt v = partition_count(t, s);
    BigInt d2 = BigInt(s) * s * binomial(t, 2);
    auto found = enumerate_for_v({v, 2, y_max, d2, true});
    std::string item = "t=" + std::to_string(t) + " s=" + std::to_string(s) + " v=" + str(v);
    rep.items.push_back(item);
    if (found.empty()) rep.reject(item, "sieve with r/(r,lambda) | " + str(d2) + " empty");
    for (auto &c : found) rep.survivors.push_back(c);
  }
  return out;
}

namespace {

std::string subcase_label(int u, int y) {
  if (u == 4 && y == 3) return "(a)";
  if (u == 6 && y == 4) return "(b)";
  if (u == 8 && (y == 7 || y == 9)) return "(c)";
  if (u == 10 && y == 8) return "(d)";
  return "";
}

bool integral(const Rational &q) { return boost::multiprecision::denominator(q) == 1; }
BigInt num(const Rational &q) { return boost::multiprecision::numerator(q); }

// l = 2: v = C(n,2), r/lambda = 2(n-2)/u, k = (n+1)u/4 + 1 and
//   lambda = (N1 n + N0)/(A n + B),
//   N1 = u^2, N0 = u^2 - 4u(y-1), A = u^2 - 8(y-1), B = u^2 + 16(y-1).
void scan_l2(int y_max, IntransitiveScan &out) {
  auto &rep = out.report;
  for (int u = 3; u <= 11; ++u) {
    for (int y = 2; y <= y_max; ++y) {
      if (!(u * u < 16 * (y - 1))) continue;
      const BigInt y1 = y - 1;
      const BigInt N1 = u * u, N0 = u * u - 4 * u * y1, A = u * u - 8 * y1, B = u * u + 16 * y1;
      const std::string tag = subcase_label(u, y);
      const std::string head = "u=" + std::to_string(u) + " y=" + std::to_string(y) +
                               (tag.empty() ? "" : " " + tag);

      // lambda is monotone in n; if its supremum over n >= 5 is at most y
      // then no n can work. The per-n outcomes are still listed below.
      if (A > 0 && 5 * A + B > 0) {
        Rational l5(N1 * 5 + N0, A * 5 + B), lim(N1, A);
        Rational sup = std::max(l5, lim);
        BigInt ceil_sup = num(sup) / boost::multiprecision::denominator(sup) + 1;
        if (ceil_sup <= y) {
          BigInt g = gcd(gcd(N1, N0), gcd(A, B));
          L2Outcome o;
          o.u = u, o.y = y, o.subcase = tag, o.wholesale = true;
          auto lin = [](const BigInt &a, const BigInt &b) {
            return (a == 1 ? std::string() : str(a)) + "n" + (b < 0 ? "" : "+") + str(b);
          };
          o.verdict = "lambda=(" + lin(N1 / g, N0 / g) + ")/(" + lin(A / g, B / g) + ") < " +
                      str(ceil_sup) + " <= y";
          rep.reject(head, o.verdict);
          out.l2.push_back(std::move(o));
        }
      }

      std::vector<BigInt> ns;
      const BigInt C = A * N0 - N1 * B;
      if (A != 0 && C != 0) {
        ns = linear_divisor_solutions(C, A, B, 5);
      } else {
        // b = 4 n (n-1)(n-2) lambda / (u((n+1)u + 4))
        std::vector<BigInt> P = {0, 8, -12, 4};  // 4 n (n-1)(n-2)
        std::vector<BigInt> lam_num = A == 0 ? std::vector<BigInt>{N0, N1} : std::vector<BigInt>{N1};
        std::vector<BigInt> prod(P.size() + lam_num.size() - 1, 0);
        for (std::size_t i = 0; i < P.size(); ++i)
          for (std::size_t j = 0; j < lam_num.size(); ++j) prod[i + j] += P[i] * lam_num[j];
        ns = linear_divisor_solutions(linear_divisor_constant(prod, u, u + 4), u, u + 4, 5);
      }
      for (const auto &n : ns) {
        L2Outcome o;
        o.u = u, o.y = y, o.subcase = tag, o.n = n;
        o.v = n * (n - 1) / 2;
        std::string item = head + " n=" + str(n);
        auto done = [&](std::string why) {
          o.verdict = std::move(why);
          rep.reject(item, o.verdict);
          out.l2.push_back(o);
        };
        if (u % 2 == 1 && n % 4 != 3) { done("parity: odd u needs n = 3 mod 4"); continue; }
        if (((n + 1) * u) % 4 != 0) { done("k not integral"); continue; }
        o.k = (n + 1) * u / 4 + 1;
        const BigInt den = A * n + B;
        if (den <= 0) { done("lambda denominator not positive"); continue; }
        o.lambda = Rational(N1 * n + N0, den);
        o.r = Rational(2 * (n - 2)) * o.lambda / u;
        o.b = Rational(o.v) * o.r / Rational(o.k);
        if (o.k % y != 0) { done("y does not divide k=" + str(o.k)); continue; }
        if (!integral(o.lambda)) { done("lambda not integral"); continue; }
        if (!integral(o.r)) { done("r not integral"); continue; }
        if (!integral(o.b)) {
          done("b not integral (k=" + str(o.k) + ", r=" + str(num(o.r)) + ", v=" + str(o.v) + ")");
          continue;
        }
        Candidate c = make_candidate(y, o.v, num(o.b), num(o.r), o.k, num(o.lambda));
        auto chk = check_admissible(c);
        if (chk.symmetric) { done("b=v " + tuple_str(c) + " symmetric - rejected"); continue; }
        if (!chk.pass()) { done(tuple_str(c) + " fails " + chk.first_failure()->name); continue; }
        o.verdict = "admissible";
        rep.survivors.push_back(c);
        out.l2.push_back(o);
      }
    }
  }
}

}  // namespace

IntransitiveScan intransitive_scan(int y_max) {
  if (y_max < 2 || y_max > 10) throw DomainError("y_max must lie in 2..10");
  IntransitiveScan out;
  auto &rep = out.report;
  rep.label = "alternating socle, H intransitive";

  // l = 1: G is k-transitive on points, so C(n,k) = b <= n(n-1)/k; check
  // that this never holds for 4 <= k <= n-2 over a finite window of n.
  out.l1_impossible = true;
  for (unsigned n = 6; n <= 200; ++n)
    for (unsigned k = 4; k + 2 <= n; ++k)
      if (binomial(n, k) * k <= BigInt(n) * (n - 1)) out.l1_impossible = false;
  rep.bound("l=1: C(n,k) > n(n-1)/k for 4<=k<=n-2, n<=200", out.l1_impossible ? "yes" : "no");

  scan_l2(y_max, out);

  for (unsigned l = 3; l <= 9; ++l) {
    for (int y = 2; y <= y_max; ++y) {
      const BigInt y1 = y - 1;
      for (unsigned m = l + 1;; ++m) {
        BigInt v = binomial(l + m, l);
        if (v > 2 * y1 * l * l * m * m) break;
        BigInt a = gcd(binomial(m, l), BigInt(l) * m);
        if (v > 2 * y1 * a * a) continue;
        std::string item = "l=" + std::to_string(l) + " m=" + std::to_string(m) +
                           " y=" + std::to_string(y) + " v=" + str(v) + " a=" + str(a);
        rep.items.push_back(item);
        for (auto c : enumerate_for_v({v, y, y, a, true})) {
          c.status = "excluded-by-reference";
          c.reason = "n=" + std::to_string(l + m) + "; no quasi-symmetric 2-(" + str(c.params.v) + "," + str(c.params.k) + "," +
                     str(c.params.lambda) + ") design with intersection numbers 0," +
                     std::to_string(c.profile.y) + " [Munemasa2020, Thm 7]";
          out.l_ge3.push_back(c);
          rep.survivors.push_back(c);
        }
      }
    }
  }
  return out;
}

N6Scan n6_special_case(const std::vector<PrimitiveCaseRecord> &catalog) {
  N6Scan out;
  auto &rep = out.report;
  rep.label = "alternating socle, n = 6 exceptional groups";
  std::set<BigInt> idx;
  for (const auto &rec : catalog)
    if (rec.special() && rec.n == 6) idx.insert(rec.group_order() / rec.h_order);
  out.indices.assign(idx.rbegin(), idx.rend());
  for (const auto &v : out.indices) {
    auto found = enumerate_for_v({v, 2, 10, std::nullopt, true});
    rep.bound("sieve v=" + str(v), found.empty() ? "empty" : std::to_string(found.size()));
    for (const auto &c : found) {
      bool any_pass = false;
      for (const auto &rec : catalog) {
        if (!rec.special() || rec.n != 6 || rec.group_order() / rec.h_order != v) continue;
        auto chk = stabilizer_filter(c, rec.h_order, rec.group_order());
        std::string item = tuple_str(c) + " in " + rec.group_name() + " |H|=" + str(rec.h_order);
        if (chk.pass()) any_pass = true;
        else rep.reject(item, chk.first_failure()->name);
        out.outcomes.push_back({c, rec.group_name(), rec.h_order, chk});
      }
      if (any_pass) rep.survivors.push_back(c);
    }
  }
  return out;
}

}  // namespace qsdl
