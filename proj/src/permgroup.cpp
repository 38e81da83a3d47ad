#include "qsdl/permgroup.hpp"

#include "qsdl/io.hpp"
#include "qsdl/kernels.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace qsdl {

Permutation Permutation::identity(std::size_t n) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  return Permutation(std::move(img));
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<char> seen(images.size(), 0);
  for (Point x : images) {
    if (x >= images.size()) throw DomainError("image out of range");
    if (seen[x]) throw DomainError("repeated image");
    seen[x] = 1;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<Point>> &cycles) {
  std::vector<Point> img(n);
  std::iota(img.begin(), img.end(), Point{0});
  for (const auto &c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 1 || c[i] > n) throw DomainError("cycle point out of range");
      img[c[i] - 1] = c[(i + 1) % c.size()] - 1;
    }
  return from_images(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation &h) const {
  std::vector<Point> out(img_.size());
  kernels::gather_u32(h.img_.data(), img_.data(), out.data(), img_.size());
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<Point> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out[img_[i]] = static_cast<Point>(i);
  return Permutation(std::move(out));
}

PointSet Permutation::image(const PointSet &s) const {
  PointSet out(s.size());
  kernels::gather_u32(img_.data(), s.data(), out.data(), s.size());
  std::sort(out.begin(), out.end());
  return out;
}

Group::Group(std::size_t degree, std::vector<Permutation> gens)
    : degree_(degree), gens_(std::move(gens)) {
  for (const auto &g : gens_)
    if (g.degree() != degree_) throw DomainError("generator degree differs from group degree");
  build();
}

void Group::rebuild_orbit(Level &lv) const {
  lv.orbit.assign(1, lv.base_point);
  lv.slot.assign(degree_, -1);
  lv.slot[lv.base_point] = 0;
  lv.transversal.assign(1, Permutation::identity(degree_));
  for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
    for (const auto &s : lv.strong) {
      Point y = s[lv.orbit[i]];
      if (lv.slot[y] >= 0) continue;
      lv.slot[y] = static_cast<int>(lv.orbit.size());
      lv.orbit.push_back(y);
      lv.transversal.push_back(lv.transversal[i] * s);
    }
  }
}

std::pair<Permutation, std::size_t> Group::strip(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const auto &lv = levels_[l];
    int at = lv.slot[g[lv.base_point]];
    if (at < 0) return {std::move(g), l};
    g = g * lv.transversal[at].inverse();
  }
  return {std::move(g), levels_.size()};
}

void Group::add_level(Point b) {
  Level lv;
  lv.base_point = b;
  levels_.push_back(std::move(lv));
}

namespace {
// First point moved by g that is not already a base point.
Point first_moved(const Permutation &g) {
  for (Point x = 0; x < g.degree(); ++x)
    if (g[x] != x) return x;
  return 0;
}
}  // namespace

void Group::build() {
  levels_.clear();
  for (const auto &g : gens_) {
    if (g.is_identity()) continue;
    bool fixes_base = std::all_of(levels_.begin(), levels_.end(),
                                  [&](const Level &lv) { return g[lv.base_point] == lv.base_point; });
    if (fixes_base) add_level(first_moved(g));
  }
  for (const auto &g : gens_) {
    if (g.is_identity()) continue;
    for (auto &lv : levels_) {
      lv.strong.push_back(g);
      if (g[lv.base_point] != lv.base_point) break;
    }
  }
  for (auto &lv : levels_) rebuild_orbit(lv);

  // Every Schreier generator of level i must strip to the identity through
  // the levels below it; a failure adds the residue and restarts there.
  long i = static_cast<long>(levels_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    Level &lv = levels_[i];
    for (std::size_t xi = 0; xi < lv.orbit.size() && !extended; ++xi) {
      for (std::size_t si = 0; si < lv.strong.size(); ++si) {
        const Permutation &s = lv.strong[si];
        Point y = s[lv.orbit[xi]];
        Permutation h = lv.transversal[xi] * s * lv.transversal[lv.slot[y]].inverse();
        auto [res, j] = strip(std::move(h), i + 1);
        if (j == levels_.size() && res.is_identity()) continue;
        if (j == levels_.size()) add_level(first_moved(res));
        for (std::size_t l = i + 1; l <= j; ++l) {
          levels_[l].strong.push_back(res);
          rebuild_orbit(levels_[l]);
        }
        i = static_cast<long>(j);
        extended = true;
        break;
      }
    }
    if (!extended) --i;
  }
  order_ = 1;
  for (const auto &lv : levels_) order_ *= lv.orbit.size();
}

std::vector<Point> Group::base() const {
  std::vector<Point> b;
  for (const auto &lv : levels_) b.push_back(lv.base_point);
  return b;
}

std::vector<std::size_t> Group::basic_orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto &lv : levels_) out.push_back(lv.orbit.size());
  return out;
}

bool Group::contains(const Permutation &g) const {
  if (g.degree() != degree_) return false;
  auto [res, j] = strip(g, 0);
  return j == levels_.size() && res.is_identity();
}

ActionOrbit Group::orbit(Point p) const {
  if (p >= degree_) throw DomainError("point out of range");
  std::vector<char> seen(degree_, 0);
  std::vector<Point> pts{p};
  seen[p] = 1;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (const auto &g : gens_) {
      Point y = g[pts[i]];
      if (!seen[y]) seen[y] = 1, pts.push_back(y);
    }
  std::sort(pts.begin(), pts.end());
  return {p, pts, order_ / pts.size()};
}

std::vector<std::vector<Point>> Group::orbits() const {
  std::vector<std::vector<Point>> out;
  std::vector<char> done(degree_, 0);
  for (Point p = 0; p < degree_; ++p) {
    if (done[p]) continue;
    auto o = orbit(p);
    for (Point x : o.elements) done[x] = 1;
    out.push_back(std::move(o.elements));
  }
  return out;
}

bool Group::is_transitive() const { return degree_ == 0 || orbit(0).elements.size() == degree_; }

std::vector<PointSet> Group::set_orbit(const PointSet &block) const {
  if (block.empty()) throw DomainError("empty block");
  for (Point x : block)
    if (x >= degree_) throw DomainError("block point out of range");
  PointSet start = block;
  std::sort(start.begin(), start.end());
  std::set<PointSet> seen{start};
  std::deque<PointSet> queue{start};
  while (!queue.empty()) {
    PointSet cur = std::move(queue.front());
    queue.pop_front();
    for (const auto &g : gens_) {
      PointSet img = g.image(cur);
      if (seen.insert(img).second) queue.push_back(std::move(img));
    }
  }
  return {seen.begin(), seen.end()};
}

std::size_t Group::flag_orbit_size(Point point, const PointSet &block,
                                   const std::vector<PointSet> &blocks) const {
  if (!std::binary_search(block.begin(), block.end(), point))
    throw DomainError("point is not incident with block");
  if (std::find(blocks.begin(), blocks.end(), block) == blocks.end())
    throw DomainError("block is not in the block list");
  using Flag = std::pair<Point, PointSet>;
  std::set<Flag> seen{{point, block}};
  std::deque<Flag> queue{{point, block}};
  while (!queue.empty()) {
    Flag cur = std::move(queue.front());
    queue.pop_front();
    for (const auto &g : gens_) {
      Flag img{g[cur.first], g.image(cur.second)};
      if (seen.insert(img).second) queue.push_back(std::move(img));
    }
  }
  return seen.size();
}

Group parse_generators(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  std::size_t no = 0, degree = 0;
  bool have_degree = false;
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    ++no;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (!have_degree) {
      if (tok.size() != 2 || tok[0] != "degree") throw ParseError("expected 'degree N'", no);
      try {
        degree = std::stoul(tok[1]);
      } catch (const std::exception &) {
        throw ParseError("bad degree", no);
      }
      have_degree = true;
      continue;
    }
    if (tok.size() != degree)
      throw ParseError("expected " + std::to_string(degree) + " images, got " +
                           std::to_string(tok.size()),
                       no);
    std::vector<Point> img;
    img.reserve(degree);
    std::vector<char> seen(degree, 0);
    for (const auto &t : tok) {
      unsigned long x;
      try {
        std::size_t used = 0;
        x = std::stoul(t, &used);
        if (used != t.size()) throw std::invalid_argument(t);
      } catch (const std::exception &) {
        throw ParseError("not a point: '" + t + "'", no);
      }
      if (x < 1 || x > degree) throw ParseError("point " + t + " out of range", no);
      if (seen[x - 1]) throw ParseError("repeated image " + t, no);
      seen[x - 1] = 1;
      img.push_back(static_cast<Point>(x - 1));
    }
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  if (!have_degree) throw ParseError("missing 'degree N' line", no);
  return Group(degree, std::move(gens));
}

Group load_generators(const std::string &path) { return parse_generators(read_text_file(path)); }

std::string format_generators(const Group &g, const std::string &header) {
  std::ostringstream os;
  os << comment_lines(header);
  os << "degree " << g.degree() << '\n';
  for (const auto &p : g.generators()) {
    for (std::size_t i = 0; i < p.degree(); ++i) os << (i ? " " : "") << p[i] + 1;
    os << '\n';
  }
  return os.str();
}

}  // namespace qsdl
