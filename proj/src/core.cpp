#include "qsdl/core.hpp"

#include <algorithm>
#include <sstream>

namespace qsdl {

bool CheckReport::pass() const {
  for (const auto &c : checks)
    if (!c.pass) return false;
  return true;
}

const Check *CheckReport::first_failure() const {
  for (const auto &c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

void CheckReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

BigInt Candidate::ratio() const { return gcd_ratio(params.r, params.lambda); }

void Candidate::note(std::string name, bool ok, std::string detail) {
  ledger.push_back({std::move(name), ok, std::move(detail)});
}

BigInt gcd_ratio(const BigInt &r, const BigInt &lambda) {
  if (r <= 0 || lambda <= 0) throw DomainError("gcd_ratio needs positive arguments");
  return r / gcd(r, lambda);
}

CheckReport check_admissible(const Candidate &c) {
  const auto &[v, b, r, k, lam] = c.params;
  const BigInt y = c.profile.y;
  CheckReport rep;
  bool positive = v > 0 && b > 0 && r > 0 && k > 0 && lam > 0;
  rep.add("positive", positive && c.profile.x == 0 && y >= 2);
  if (!positive) return rep;

  rep.add("k<v", k < v);
  rep.add("(y-1)v<k(k-1)", (y - 1) * v < k * (k - 1));
  rep.add("r(k-1)=lambda(v-1)", r * (k - 1) == lam * (v - 1));
  rep.add("(y-1)(r-1)=(k-1)(lambda-1)", (y - 1) * (r - 1) == (k - 1) * (lam - 1));
  rep.add("y|k", k % y == 0);
  rep.add("y|(r-lambda)", (r - lam) % y == 0);
  rep.add("vr=bk", v * r == b * k);
  rep.add("r>k", r > k, r == k ? "r=k" : "");
  rep.add("y<lambda<=k-1", y < lam && lam <= k - 1);
  rep.add("2<k<v-1", 2 < k && k < v - 1);
  rep.add("b>v", b > v, b == v ? "symmetric - rejected" : "");

  // A symmetric design has b = v, r = k and then y = lambda; report it as
  // such when nothing else fails.
  rep.symmetric = b == v && std::all_of(rep.checks.begin(), rep.checks.end(), [](const Check &ch) {
                    return ch.pass || ch.name == "r>k" || ch.name == "b>v" || ch.name == "y<lambda<=k-1";
                  });
  return rep;
}

Candidate make_candidate(int y, const BigInt &v, const BigInt &b, const BigInt &r,
                         const BigInt &k, const BigInt &lambda) {
  Candidate c;
  c.params = {v, b, r, k, lambda};
  c.profile.y = y;
  return c;
}

namespace {

void validate(const SearchBox &box) {
  if (box.y_lo > box.y_hi) throw DomainError("empty y range");
  if (box.y_lo < 2) throw DomainError("y must be at least 2");
  if (box.v < 5) throw DomainError("v must be at least 5");
}

bool ratio_ok(const SearchBox &box, const BigInt &r, const BigInt &lam) {
  return !box.ratio_divides || *box.ratio_divides % gcd_ratio(r, lam) == 0;
}

// Conditions (3) and (4) are linear in (r, lambda) once v, k, y are fixed:
//   lambda = (k-1)(k-y) / D,  r = (v-1)(k-y) / D,  D = (k-1)^2 - (y-1)(v-1).
// r > k is equivalent to k(k-1) < y(v-1), which bounds the k loop.
template <class I>
void sieve_one_y(const I v, const I y, const SearchBox &box, std::vector<Candidate> &out) {
  const I lo_bound = (y - 1) * v;
  I k = 3;
  {
    // smallest k with k(k-1) > (y-1)v, seeded from the square root
    I s = static_cast<I>(boost::multiprecision::sqrt(BigInt(lo_bound)));
    if (s > 3) k = s - 1;
    while (k * (k - 1) <= lo_bound) ++k;
  }
  if (k % y) k += y - k % y;
  for (; k < v && k * (k - 1) < y * (v - 1); k += y) {
    const I D = (k - 1) * (k - 1) - (y - 1) * (v - 1);
    if (D <= 0) continue;
    const I ln = (k - 1) * (k - y), rn = (v - 1) * (k - y);
    if (ln % D != 0 || rn % D != 0) continue;
    const I lam = ln / D, r = rn / D;
    if (!(r > k && lam > 1)) continue;
    if (box.lambda_below_k && !(k > lam)) continue;
    if ((r - lam) % y != 0 || ((v % k) * (r % k)) % k != 0) continue;
    if (!ratio_ok(box, BigInt(r), BigInt(lam))) continue;
    const BigInt b = BigInt(v) * BigInt(r) / BigInt(k);
    out.push_back(make_candidate(static_cast<int>(y), BigInt(v), b, BigInt(r), BigInt(k),
                                 BigInt(lam)));
  }
}

}  // namespace

std::vector<Candidate> enumerate_for_v(const SearchBox &box) {
  validate(box);
  std::vector<Candidate> out;
  // int64 is safe while (v-1)*k stays below 2^63; k < sqrt(y v) here and
  // v*r is only ever taken modulo k.
  const bool small = box.v < (BigInt(1) << 36) && box.y_hi < 1024;
  for (int y = box.y_lo; y <= box.y_hi; ++y) {
    if (small)
      sieve_one_y<std::int64_t>(box.v.convert_to<std::int64_t>(), y, box, out);
    else
      sieve_one_y<BigInt>(box.v, BigInt(y), box, out);
  }
  return out;
}

bool subdegree_filter(const Candidate &c, const std::vector<BigInt> &subdegrees) {
  if (subdegrees.empty()) throw DomainError("no subdegrees supplied");
  BigInt g = 0;
  for (const auto &d : subdegrees) {
    if (d < 1) throw DomainError("subdegree must be positive");
    g = gcd(g, d);
  }
  return g % c.ratio() == 0;
}

CheckReport stabilizer_filter(const Candidate &c, const BigInt &stab_order,
                              const std::optional<BigInt> &group_order) {
  const auto &p = c.params;
  CheckReport rep;
  rep.add("r|lambda(v-1,|H|)", (p.lambda * gcd(p.v - 1, stab_order)) % p.r == 0);
  rep.add("r||H|", stab_order % p.r == 0, "|H|=" + str(stab_order));
  if (group_order) {
    BigInt h3 = stab_order * stab_order * stab_order;
    rep.add("|H|^3>lambda|G|", h3 > p.lambda * *group_order);
  }
  return rep;
}

std::string tuple_str(const Candidate &c) {
  const auto &p = c.params;
  std::ostringstream os;
  os << '(' << c.profile.y << ',' << p.v << ',' << p.b << ',' << p.r << ',' << p.k << ','
     << p.lambda << ')';
  return os.str();
}

std::string tsv_header() { return "y\tv\tb\tr\tk\tlambda\tratio\tstatus\treason"; }

std::string tsv_row(const Candidate &c) {
  const auto &p = c.params;
  std::ostringstream os;
  os << c.profile.y << '\t' << p.v << '\t' << p.b << '\t' << p.r << '\t' << p.k << '\t'
     << p.lambda << '\t' << c.ratio() << '\t' << c.status << '\t'
     << (c.reason.empty() ? "-" : c.reason);
  return os.str();
}

}  // namespace qsdl
