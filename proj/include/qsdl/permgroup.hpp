#pragma once
// Permutation groups given by generators: deterministic Schreier-Sims,
// orbits of points, point sets and flags.
//
// Points are 0-based in memory and 1-based in files. Permutations act on the
// right: x^(gh) = (x^g)^h.

#include "qsdl/arith.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qsdl {

using Point = std::uint32_t;
using PointSet = std::vector<Point>;  // sorted, no repeats

class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(std::size_t n);
  // Throws DomainError unless images is a bijection on 0..n-1.
  static Permutation from_images(std::vector<Point> images);
  // 1-based cycle notation helper for tests and data: {{1,2,3},{4,5}}.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<Point>> &cycles);

  std::size_t degree() const { return img_.size(); }
  Point operator[](Point x) const { return img_[x]; }
  const std::vector<Point> &images() const { return img_; }
  bool is_identity() const;

  Permutation operator*(const Permutation &h) const;  // first *this, then h
  Permutation inverse() const;
  bool operator==(const Permutation &) const = default;
  auto operator<=>(const Permutation &) const = default;

  // Sorted image of a point set.
  PointSet image(const PointSet &s) const;

 private:
  explicit Permutation(std::vector<Point> img) : img_(std::move(img)) {}
  std::vector<Point> img_;
};

struct ActionOrbit {
  Point representative = 0;
  std::vector<Point> elements;  // sorted
  BigInt stabilizer_order;
};

class Group {
 public:
  // gens may be empty (trivial group). Every generator must have this degree.
  Group(std::size_t degree, std::vector<Permutation> gens);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation> &generators() const { return gens_; }
  const BigInt &order() const { return order_; }
  std::vector<Point> base() const;
  std::vector<std::size_t> basic_orbit_lengths() const;
  bool contains(const Permutation &g) const;

  ActionOrbit orbit(Point p) const;
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  // Orbit of a point set, each image sorted, list sorted lexicographically.
  std::vector<PointSet> set_orbit(const PointSet &block) const;

  // Size of the orbit of the flag (point, block). blocks must contain block.
  std::size_t flag_orbit_size(Point point, const PointSet &block,
                              const std::vector<PointSet> &blocks) const;

 private:
  struct Level {
    Point base_point;
    std::vector<Permutation> strong;  // generators of the stabilizer of earlier base points
    std::vector<Point> orbit;
    std::vector<int> slot;            // point -> index into orbit, -1 if absent
    std::vector<Permutation> transversal;  // base_point^transversal[i] = orbit[i]
  };

  void build();
  void rebuild_orbit(Level &lv) const;
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;
  void add_level(Point b);

  std::size_t degree_;
  std::vector<Permutation> gens_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

// Generator file: "degree N", then one permutation per line as N 1-based
// images; '#' starts a comment.
Group parse_generators(const std::string &text);
Group load_generators(const std::string &path);
std::string format_generators(const Group &g, const std::string &header = {});  // header as comments

}  // namespace qsdl
