#pragma once
// Small permutation groups with known orders, shared by the group tests and
// the acceptance run.

#include "qsdl/io.hpp"
#include "qsdl/permgroup.hpp"

#include <functional>
#include <string>
#include <vector>

namespace corpus {

using namespace qsdl;

inline Permutation from_map(std::size_t n, const std::function<Point(Point)> &f) {
  std::vector<Point> img(n);
  for (Point x = 0; x < n; ++x) img[x] = f(x);
  return Permutation::from_images(img);
}

inline Permutation cycle(std::size_t n, Point lo, Point hi) {  // 1-based (lo lo+1 ... hi)
  std::vector<Point> c;
  for (Point p = lo; p <= hi; ++p) c.push_back(p);
  return Permutation::from_cycles(n, {c});
}

inline Group symmetric(std::size_t n) { return Group(n, {Permutation::from_cycles(n, {{1, 2}}), cycle(n, 1, n)}); }

inline Group alternating(std::size_t n) {
  // (1 2 3) with an (n-1)- or n-cycle of even parity
  Permutation c = n % 2 ? cycle(n, 1, n) : cycle(n, 2, n);
  return Group(n, {Permutation::from_cycles(n, {{1, 2, 3}}), c});
}

inline Group cyclic(std::size_t n) { return Group(n, {cycle(n, 1, n)}); }

inline Group dihedral(std::size_t n) {
  return Group(n, {cycle(n, 1, n), from_map(n, [n](Point x) { return Point((n - x) % n); })});
}

inline Point modinv(Point a, Point p) {
  for (Point b = 1; b < p; ++b)
    if (a * b % p == 1) return b;
  return 0;
}

inline Group agl1(Point p, Point g) {
  return Group(p, {from_map(p, [p](Point x) { return (x + 1) % p; }),
                   from_map(p, [p, g](Point x) { return x * g % p; })});
}

// PSL(2,p) on the projective line, infinity = p.
inline Group psl2(Point p) {
  auto t = from_map(p + 1, [p](Point x) { return x == p ? p : (x + 1) % p; });
  auto s = from_map(p + 1, [p](Point x) {
    if (x == p) return Point(0);
    if (x == 0) return p;
    return (p - modinv(x, p)) % p;
  });
  return Group(p + 1, {t, s});
}

// direct product acting on disjoint supports
inline Group disjoint(const Group &a, const Group &b) {
  std::size_t n = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto &g : a.generators())
    gens.push_back(from_map(n, [&](Point x) { return x < a.degree() ? g[x] : x; }));
  for (const auto &g : b.generators())
    gens.push_back(from_map(n, [&](Point x) {
      return x < a.degree() ? x : Point(a.degree() + g[x - a.degree()]);
    }));
  return Group(n, gens);
}

inline Group from_file(const std::string &name) { return load_generators((data_dir() / "groups" / name).string()); }

struct Named {
  std::string name;
  Group g;
  long order;
};

inline std::vector<Named> small_groups() {
  return {
      {"S3", symmetric(3), 6},          {"S4", symmetric(4), 24},
      {"S5", symmetric(5), 120},        {"S6", symmetric(6), 720},
      {"S7", symmetric(7), 5040},       {"A4", alternating(4), 12},
      {"A5", alternating(5), 60},       {"A6", alternating(6), 360},
      {"A7", alternating(7), 2520},     {"C5", cyclic(5), 5},
      {"C12", cyclic(12), 12},          {"D5", dihedral(5), 10},
      {"D8", dihedral(8), 16},          {"D12", dihedral(12), 24},
      {"AGL(1,5)", agl1(5, 2), 20},     {"AGL(1,7)", agl1(7, 3), 42},
      {"AGL(1,11)", agl1(11, 2), 110},  {"AGL(1,13)", agl1(13, 2), 156},
      {"PSL(2,5)", psl2(5), 60},        {"PSL(2,7)", psl2(7), 168},
      {"PSL(2,11)", psl2(11), 660},     {"PSL(2,13)", psl2(13), 1092},
      {"S3xS4", disjoint(symmetric(3), symmetric(4)), 144},
      {"C5xD8", disjoint(cyclic(5), dihedral(8)), 80},
      {"A5xC3", disjoint(alternating(5), cyclic(3)), 180},
      {"M11", from_file("m11.gens"), 7920},
  };
}

}  // namespace corpus
