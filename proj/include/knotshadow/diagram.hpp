#pragma once

// Knot shadows as 4-valent port matchings, their surgery, and the brute-force
// state sum over all split assignments.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "knotshadow/algebra.hpp"
#include "knotshadow/error.hpp"

namespace knotshadow {

using Port = std::size_t;
inline constexpr Port kUnmatched = std::numeric_limits<Port>::max();

inline constexpr std::size_t kDefaultCrossingGuard = 30;
inline constexpr std::size_t kHardCrossingCap = 34;

/// A point on the diagram where a later cut may happen: either on the edge
/// incident to a port, or on a free loop. Two distinct positions may share an
/// edge: an edge (p, q) is addressed both by port(p) and port(q), a loop by its
/// two slots.
struct Position {
  enum class Kind : std::uint8_t { Port, Loop };
  Kind kind = Kind::Port;
  std::size_t index = 0;
  int slot = 0;  // loops only

  static Position port(Port p) { return {Kind::Port, p, 0}; }
  static Position loop(std::size_t j, int slot) { return {Kind::Loop, j, slot}; }

  bool is_port() const noexcept { return kind == Kind::Port; }
  friend bool operator==(const Position&, const Position&) = default;
};

/// Public edge reference: canonical edge index plus slot. Edges are numbered
/// by their lower port; slot 0/1 names the lower/higher port end. Indices at
/// or past edge_count() address free loops.
struct ArcRef {
  std::size_t edge = 0;
  int slot = 0;
  friend bool operator==(const ArcRef&, const ArcRef&) = default;
};

/// One split type per crossing; bit i set means type 1 at crossing i.
class StateAssignment {
 public:
  StateAssignment() = default;
  explicit StateAssignment(std::vector<bool> bits) : bits_(std::move(bits)) {}

  static StateAssignment from_mask(std::uint64_t mask, std::size_t m) {
    std::vector<bool> bits(m);
    for (std::size_t i = 0; i < m; ++i) bits[i] = (mask >> i) & 1U;
    return StateAssignment(std::move(bits));
  }

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i]; }
  void flip(std::size_t i) { bits_[i] = !bits_[i]; }

 private:
  std::vector<bool> bits_;
};

class Shadow {
 public:
  Shadow() = default;

  /// Builds from a peer table (size 4m, peer[p] is the port matched with p).
  /// Not checked here; see validate().
  Shadow(std::vector<Port> peers, std::size_t free_loops, std::vector<Position> cuts = {})
      : peer_(std::move(peers)), free_loops_(free_loops), cuts_(std::move(cuts)) {}

  static Shadow empty() { return {}; }

  /// One free loop, with its two slots as canonical cuts.
  static Shadow unknot() { return Shadow({}, 1, {Position::loop(0, 0), Position::loop(0, 1)}); }

  static Shadow from_edges(std::size_t crossings, const std::vector<std::pair<Port, Port>>& edges,
                           std::size_t free_loops, std::vector<Position> cuts = {}) {
    std::vector<Port> peers(4 * crossings, kUnmatched);
    for (auto [p, q] : edges) {
      peers.at(p) = q;
      peers.at(q) = p;
    }
    return Shadow(std::move(peers), free_loops, std::move(cuts));
  }

  std::size_t crossing_count() const noexcept { return peer_.size() / 4; }
  std::size_t free_loops() const noexcept { return free_loops_; }
  bool is_empty() const noexcept { return peer_.empty() && free_loops_ == 0; }
  const std::vector<Port>& peers() const noexcept { return peer_; }
  Port peer(Port p) const { return peer_.at(p); }
  const std::vector<Position>& cut_points() const noexcept { return cuts_; }

  std::optional<Position> entry() const {
    return cuts_.size() == 2 ? std::optional<Position>(cuts_[0]) : std::nullopt;
  }
  std::optional<Position> exit() const {
    return cuts_.size() == 2 ? std::optional<Position>(cuts_[1]) : std::nullopt;
  }

  Shadow with_cut_points(std::vector<Position> cuts) const {
    Shadow r = *this;
    r.cuts_ = std::move(cuts);
    return r;
  }

  std::size_t edge_count() const noexcept { return peer_.size() / 2; }

  /// Canonical edge list (lower port first), ordered by lower port.
  std::vector<std::pair<Port, Port>> edges() const {
    std::vector<std::pair<Port, Port>> out;
    for (Port p = 0; p < peer_.size(); ++p)
      if (p < peer_[p]) out.emplace_back(p, peer_[p]);
    return out;
  }

  bool is_matching() const noexcept {
    for (Port p = 0; p < peer_.size(); ++p) {
      Port q = peer_[p];
      if (q >= peer_.size() || q == p || peer_[q] != p) return false;
    }
    return true;
  }

  bool has_position(const Position& pos) const noexcept {
    if (pos.is_port()) return pos.index < peer_.size() && pos.slot == 0;
    return pos.index < free_loops_ && (pos.slot == 0 || pos.slot == 1);
  }

  /// True when both positions lie on the same edge or loop.
  bool same_edge(const Position& a, const Position& b) const {
    if (a.kind != b.kind) return false;
    if (!a.is_port()) return a.index == b.index;
    return a.index == b.index || peer_[a.index] == b.index;
  }

  Position position_of(const ArcRef& arc) const {
    const std::size_t ne = edge_count();
    if (arc.slot != 0 && arc.slot != 1)
      throw Error(ErrorKind::InvalidArc, "slot must be 0 or 1");
    if (arc.edge >= ne) {
      if (arc.edge - ne >= free_loops_) throw Error(ErrorKind::InvalidArc, "no edge " + std::to_string(arc.edge));
      return Position::loop(arc.edge - ne, arc.slot);
    }
    std::size_t idx = 0;
    for (Port p = 0; p < peer_.size(); ++p) {
      if (p > peer_[p]) continue;
      if (idx++ == arc.edge) return Position::port(arc.slot == 0 ? p : peer_[p]);
    }
    throw Error(ErrorKind::InvalidArc, "no edge " + std::to_string(arc.edge));
  }

  ArcRef arc_of(const Position& pos) const {
    if (!pos.is_port()) return {edge_count() + pos.index, pos.slot};
    const Port lo = std::min(pos.index, peer_.at(pos.index));
    std::size_t idx = 0;
    for (Port p = 0; p < lo; ++p)
      if (p < peer_[p]) ++idx;
    return {idx, pos.index == lo ? 0 : 1};
  }

  friend bool operator==(const Shadow&, const Shadow&) = default;

 private:
  std::vector<Port> peer_;
  std::size_t free_loops_ = 0;
  std::vector<Position> cuts_;
};

namespace detail {

inline Port next_ccw(Port p) { return 4 * (p / 4) + (p % 4 + 1) % 4; }

/// Face label of every dart, where dart p runs from port p to its peer.
inline std::vector<std::size_t> face_labels(const Shadow& k) {
  const auto& peer = k.peers();
  std::vector<std::size_t> face(peer.size(), kUnmatched);
  std::size_t next = 0;
  for (Port start = 0; start < peer.size(); ++start) {
    if (face[start] != kUnmatched) continue;
    Port d = start;
    while (face[d] == kUnmatched) {
      face[d] = next;
      d = next_ccw(peer[d]);
    }
    ++next;
  }
  return face;
}

/// Union-find without path compression so unions can be undone in LIFO order.
class RollbackDsu {
 public:
  explicit RollbackDsu(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
    history_.reserve(n);
  }

  std::uint32_t find(std::uint32_t a) const {
    while (parent_[a] != a) a = parent_[a];
    return a;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      history_.push_back(kNone);
      return;
    }
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --components_;
    history_.push_back(b);
  }

  void undo() {
    const std::uint32_t b = history_.back();
    history_.pop_back();
    if (b == kNone) return;
    const std::uint32_t a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
    ++components_;
  }

  std::size_t components() const noexcept { return components_; }

 private:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::vector<std::uint32_t> history_;
  std::size_t components_;
};

/// Edge-node index for every port; split pairings then act on edge nodes.
inline std::vector<std::uint32_t> edge_node_of_port(const Shadow& k) {
  const auto& peer = k.peers();
  std::vector<std::uint32_t> node(peer.size());
  std::uint32_t next = 0;
  for (Port p = 0; p < peer.size(); ++p)
    if (p < peer[p]) node[p] = node[peer[p]] = next++;
  return node;
}

inline void require_valid(const Shadow& k) {
  if (!k.is_matching()) throw Error(ErrorKind::InvalidShadow, "ports are not perfectly matched");
}

struct Splitter {
  const std::vector<std::uint32_t>& node;
  std::size_t m;

  // Type 0 joins ports (0,1) and (2,3); type 1 joins (1,2) and (3,0).
  void apply(RollbackDsu& dsu, std::size_t c, bool type1) const {
    const std::size_t b = 4 * c;
    if (!type1) {
      dsu.unite(node[b + 0], node[b + 1]);
      dsu.unite(node[b + 2], node[b + 3]);
    } else {
      dsu.unite(node[b + 1], node[b + 2]);
      dsu.unite(node[b + 3], node[b + 0]);
    }
  }

  void walk(RollbackDsu& dsu, std::size_t c, std::vector<std::uint64_t>& hist) const {
    if (c == m) {
      ++hist[dsu.components()];
      return;
    }
    for (int t = 0; t < 2; ++t) {
      apply(dsu, c, t == 1);
      walk(dsu, c + 1, hist);
      dsu.undo();
      dsu.undo();
    }
  }
};

}  // namespace detail

struct StateSumOptions {
  std::size_t max_crossings = kDefaultCrossingGuard;
  unsigned threads = 1;
};

/// Number of circles of one state.
inline std::size_t resolve_state(const Shadow& k, const StateAssignment& s) {
  detail::require_valid(k);
  const std::size_t m = k.crossing_count();
  if (s.size() != m)
    throw Error(ErrorKind::LengthMismatch,
                "assignment has " + std::to_string(s.size()) + " bits for " + std::to_string(m) + " crossings");
  const auto node = detail::edge_node_of_port(k);
  detail::RollbackDsu dsu(k.edge_count());
  detail::Splitter split{node, m};
  for (std::size_t c = 0; c < m; ++c) split.apply(dsu, c, s[c]);
  return dsu.components() + k.free_loops();
}

/// hist[j] = number of states with exactly j circles (free loops included).
inline std::vector<std::uint64_t> circle_histogram(const Shadow& k, const StateSumOptions& opts = {}) {
  detail::require_valid(k);
  const std::size_t m = k.crossing_count();
  const std::size_t guard = std::min(opts.max_crossings, kHardCrossingCap);
  if (m > guard)
    throw Error(ErrorKind::TooManyCrossings,
                std::to_string(m) + " crossings exceed the guard of " + std::to_string(guard));
  const std::size_t ne = k.edge_count();
  std::vector<std::uint64_t> total(ne + 1, 0);
  if (m == 0) {
    total[0] = 1;
  } else {
    const auto node = detail::edge_node_of_port(k);
    const detail::Splitter split{node, m};
    const unsigned threads = std::max(1U, opts.threads);
    // Fix the first `prefix` crossings per task so tasks cover disjoint ranges.
    std::size_t prefix = 0;
    while (prefix < m && prefix < 12 && (std::size_t{1} << prefix) < 8 * static_cast<std::size_t>(threads)) ++prefix;
    if (threads == 1) prefix = 0;
    const std::uint64_t tasks = std::uint64_t{1} << prefix;
    std::atomic<std::uint64_t> next{0};
    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(ne + 1, 0));
    auto worker = [&](unsigned id) {
      detail::RollbackDsu dsu(ne);
      for (std::uint64_t t = next++; t < tasks; t = next++) {
        for (std::size_t c = 0; c < prefix; ++c) split.apply(dsu, c, (t >> c) & 1U);
        split.walk(dsu, prefix, partial[id]);
        for (std::size_t c = 0; c < 2 * prefix; ++c) dsu.undo();
      }
    };
    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker, i);
      for (auto& th : pool) th.join();
    }
    for (const auto& p : partial)
      for (std::size_t j = 0; j <= ne; ++j) total[j] += p[j];
  }
  std::vector<std::uint64_t> shifted(ne + 1 + k.free_loops(), 0);
  for (std::size_t j = 0; j <= ne; ++j) shifted[j + k.free_loops()] = total[j];
  return shifted;
}

/// Sum over all 2^m states of x^(circles). The empty shadow gives 1.
inline Polynomial state_sum(const Shadow& k, const StateSumOptions& opts = {}) {
  const auto hist = circle_histogram(k, opts);
  std::vector<Coefficient> c(hist.size());
  for (std::size_t j = 0; j < hist.size(); ++j) c[j] = hist[j];
  return Polynomial(std::move(c));
}

/// Side-by-side placement. The result carries no cut points.
inline Shadow disjoint_union(const Shadow& a, const Shadow& b) {
  std::vector<Port> peers = a.peers();
  const Port off = peers.size();
  for (Port q : b.peers()) peers.push_back(q == kUnmatched ? kUnmatched : q + off);
  return Shadow(std::move(peers), a.free_loops() + b.free_loops());
}

namespace detail {

/// Removes free loop `j`; positions on it move to `target`, later loops shift down.
inline Position drop_loop(Position pos, std::size_t j, const Position& target) {
  if (pos.is_port()) return pos;
  if (pos.index == j) return target;
  if (pos.index > j) --pos.index;
  return pos;
}

/// Of the two darts of the edge at `p`, the one lying in a face shared with
/// some dart of the edge at `hint` (if any), else the dart leaving p.
inline Port pick_dart(const Shadow& k, const std::vector<std::size_t>& face, Port p,
                      const std::optional<Position>& hint) {
  const Port q = k.peer(p);
  if (hint && hint->is_port()) {
    const Port h = hint->index;
    const std::size_t f1 = face[h], f2 = face[k.peer(h)];
    if (face[p] == f1 || face[p] == f2) return p;
    if (face[q] == f1 || face[q] == f2) return q;
  }
  return p;
}

/// The canonical cut that is not on the edge being operated on, if any.
inline std::optional<Position> other_cut(const Shadow& k, const Position& arc, bool prefer_entry) {
  auto first = prefer_entry ? k.entry() : k.exit();
  auto second = prefer_entry ? k.exit() : k.entry();
  if (first && !k.same_edge(*first, arc)) return first;
  if (second && !k.same_edge(*second, arc)) return second;
  return std::nullopt;
}

}  // namespace detail

/// Connected sum at explicit positions. The two edges are opened and joined
/// crosswise through a band, inside a face next to each arc. The result keeps
/// a's entry and b's exit as its cut points.
inline Shadow connected_sum_at(const Shadow& a, const Position& pa, const Shadow& b, const Position& pb) {
  if (a.is_empty() || b.is_empty()) throw Error(ErrorKind::InvalidArc, "connected sum with the empty shadow");
  if (!a.has_position(pa) || !b.has_position(pb)) throw Error(ErrorKind::InvalidArc, "arc outside the diagram");
  detail::require_valid(a);
  detail::require_valid(b);

  const Port off = a.peers().size();
  const std::size_t loop_off = a.free_loops();
  auto map_b = [&](Position p) {
    if (p.is_port()) p.index += off;
    else p.index += loop_off;
    return p;
  };

  std::vector<Port> peers = a.peers();
  for (Port q : b.peers()) peers.push_back(q + off);
  std::size_t loops = a.free_loops() + b.free_loops();
  std::optional<Position> entry = a.entry();
  std::optional<Position> exit;
  if (auto e = b.exit()) exit = map_b(*e);
  const Position qb = map_b(pb);

  if (pa.is_port() && pb.is_port()) {
    const auto fa = detail::face_labels(a);
    const auto fb = detail::face_labels(b);
    const Port ta = detail::pick_dart(a, fa, pa.index, detail::other_cut(a, pa, true));
    const Port tb = detail::pick_dart(b, fb, pb.index, detail::other_cut(b, pb, false)) + off;
    const Port ha = peers[ta], hb = peers[tb];
    peers[ha] = tb;
    peers[tb] = ha;
    peers[hb] = ta;
    peers[ta] = hb;
  } else if (!pa.is_port() && pb.is_port()) {
    // a's loop is absorbed into b's edge.
    --loops;
    // A cut carried by the loop lands on the same edge as b's cut, at its
    // other end when b's cut already sits at the join.
    const bool taken = exit && *exit == qb;
    const Position target = Position::port(taken ? peers[qb.index] : qb.index);
    if (entry) entry = detail::drop_loop(*entry, pa.index, target);
    if (exit) exit = detail::drop_loop(*exit, pa.index, target);
  } else if (pa.is_port() && !pb.is_port()) {
    --loops;
    const bool taken = entry && *entry == pa;
    const Position target = Position::port(taken ? peers[pa.index] : pa.index);
    if (entry) entry = detail::drop_loop(*entry, qb.index, target);
    if (exit) exit = detail::drop_loop(*exit, qb.index, target);
  } else {
    // Two loops merge into a's loop.
    --loops;
    int slot = 1;
    if (entry && !entry->is_port() && entry->index == pa.index) slot = 1 - entry->slot;
    const Position target = Position::loop(pa.index, slot);
    if (entry) entry = detail::drop_loop(*entry, qb.index, target);
    if (exit) exit = detail::drop_loop(*exit, qb.index, target);
  }

  std::vector<Position> cuts;
  if (entry && exit) cuts = {*entry, *exit};
  return Shadow(std::move(peers), loops, std::move(cuts));
}

inline Shadow connected_sum(const Shadow& a, const ArcRef& arc_a, const Shadow& b, const ArcRef& arc_b) {
  if (a.is_empty() || b.is_empty()) throw Error(ErrorKind::InvalidArc, "connected sum with the empty shadow");
  return connected_sum_at(a, a.position_of(arc_a), b, b.position_of(arc_b));
}

/// Chain step: joins a's exit to b's entry.
inline Shadow connected_sum(const Shadow& a, const Shadow& b) {
  if (a.is_empty() || b.is_empty()) throw Error(ErrorKind::InvalidArc, "connected sum with the empty shadow");
  if (!a.exit() || !b.entry()) throw Error(ErrorKind::InvalidArc, "operand carries no canonical cut points");
  return connected_sum_at(a, *a.exit(), b, *b.entry());
}

/// Closure: the connected sum of a knot with itself. The curve is cut at both
/// points and the four ends are rejoined by a band running inside a face that
/// borders both cut edges, adding no crossings. Cuts on one edge (or loop)
/// split off a free loop, giving k ⊔ U. The result's cut points are the two
/// new bridge arcs.
inline Shadow self_closure(const Shadow& k, const Position& c1, const Position& c2) {
  if (!k.has_position(c1) || !k.has_position(c2)) throw Error(ErrorKind::InvalidCut, "cut outside the diagram");
  if (c1 == c2) throw Error(ErrorKind::InvalidCut, "the two cuts coincide");
  detail::require_valid(k);

  std::vector<Port> peers = k.peers();
  std::size_t loops = k.free_loops();

  if (k.same_edge(c1, c2)) {
    // The stretch between the cuts closes up on its own.
    const Position bridge = Position::loop(loops, 0);
    return Shadow(std::move(peers), loops + 1, {c1, bridge});
  }
  if (c1.is_port() && c2.is_port()) {
    const auto face = detail::face_labels(k);
    const std::array<Port, 2> d1s{c1.index, peers[c1.index]};
    const std::array<Port, 2> d2s{c2.index, peers[c2.index]};
    for (Port t1 : d1s) {
      for (Port t2 : d2s) {
        if (face[t1] != face[t2]) continue;
        const Port h1 = peers[t1], h2 = peers[t2];
        peers[h1] = t2;
        peers[t2] = h1;
        peers[h2] = t1;
        peers[t1] = h2;
        return Shadow(std::move(peers), loops, {Position::port(h1), Position::port(h2)});
      }
    }
    throw Error(ErrorKind::InvalidCut, "the cut edges share no face");
  }
  if (c1.is_port() != c2.is_port()) {
    // A free loop joined to an edge simply disappears into that edge.
    const Position& edge = c1.is_port() ? c1 : c2;
    const Port p = edge.index;
    return Shadow(std::move(peers), loops - 1, {Position::port(p), Position::port(peers[p])});
  }
  // Two different free loops merge into one.
  std::size_t keep = c1.index;
  if (c2.index < keep) --keep;
  return Shadow(std::move(peers), loops - 1, {Position::loop(keep, 0), Position::loop(keep, 1)});
}

/// Closure at the shadow's own canonical cut points.
inline Shadow self_closure(const Shadow& k) {
  if (!k.entry()) throw Error(ErrorKind::ClosureUnsupported, "shadow carries no canonical cut points");
  return self_closure(k, *k.entry(), *k.exit());
}

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> problems;
  std::size_t crossings = 0;
  std::size_t free_loops = 0;
  std::size_t graph_components = 0;  // including free loops
  std::size_t curve_components = 0;  // closed curves, including free loops
  std::size_t faces = 0;             // over the crossing part
  bool planar = false;               // Euler count F = V + 2 per component
};

inline ValidationReport validate(const Shadow& k) {
  ValidationReport r;
  r.crossings = k.crossing_count();
  r.free_loops = k.free_loops();
  const auto& peer = k.peers();
  if (peer.size() % 4 != 0) {
    r.valid = false;
    r.problems.push_back("port count is not a multiple of 4");
    return r;
  }
  for (Port p = 0; p < peer.size(); ++p) {
    const Port q = peer[p];
    if (q == kUnmatched) r.problems.push_back("port " + std::to_string(p) + " is unmatched");
    else if (q >= peer.size()) r.problems.push_back("port " + std::to_string(p) + " points outside the diagram");
    else if (q == p) r.problems.push_back("port " + std::to_string(p) + " is matched to itself");
    else if (peer[q] != p) r.problems.push_back("ports " + std::to_string(p) + " and " + std::to_string(q) + " disagree");
  }
  if (k.cut_points().size() > 2) r.problems.push_back("more than two cut points");
  for (const auto& c : k.cut_points())
    if (!k.has_position(c)) r.problems.push_back("cut point outside the diagram");
  if (k.cut_points().size() == 2 && k.cut_points()[0] == k.cut_points()[1])
    r.problems.push_back("cut points coincide");
  if (!r.problems.empty()) {
    r.valid = false;
    return r;
  }

  const std::size_t m = k.crossing_count();
  std::vector<std::uint32_t> parent(peer.size());
  std::iota(parent.begin(), parent.end(), std::uint32_t{0});
  auto find = [&](std::uint32_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    parent[find(static_cast<std::uint32_t>(a))] = find(static_cast<std::uint32_t>(b));
  };
  // Curves follow straight through each crossing.
  for (Port p = 0; p < peer.size(); ++p) {
    unite(p, peer[p]);
    unite(p, 4 * (p / 4) + (p % 4 + 2) % 4);
  }
  std::vector<std::uint32_t> curve_root;
  for (Port p = 0; p < peer.size(); ++p) curve_root.push_back(find(static_cast<std::uint32_t>(p)));
  std::sort(curve_root.begin(), curve_root.end());
  r.curve_components = static_cast<std::size_t>(std::unique(curve_root.begin(), curve_root.end()) - curve_root.begin()) +
                       k.free_loops();

  std::vector<std::size_t> cparent(m);
  std::iota(cparent.begin(), cparent.end(), std::size_t{0});
  auto cfind = [&](std::size_t a) {
    while (cparent[a] != a) a = cparent[a] = cparent[cparent[a]];
    return a;
  };
  for (Port p = 0; p < peer.size(); ++p) cparent[cfind(p / 4)] = cfind(peer[p] / 4);
  std::size_t comps = 0;
  for (std::size_t c = 0; c < m; ++c)
    if (cfind(c) == c) ++comps;
  r.graph_components = comps + k.free_loops();

  const auto face = detail::face_labels(k);
  r.faces = face.empty() ? 0 : *std::max_element(face.begin(), face.end()) + 1;
  r.planar = r.faces == m + 2 * comps;
  return r;
}

/// Text form: "loops: n", "cuts: e:s,...", then one line per crossing listing
/// the peer of ports 0..3 as crossing.port.
inline std::string serialize(const Shadow& k) {
  std::ostringstream os;
  os << "loops: " << k.free_loops() << "\n";
  os << "cuts:";
  for (std::size_t i = 0; i < k.cut_points().size(); ++i) {
    const ArcRef a = k.arc_of(k.cut_points()[i]);
    os << (i == 0 ? " " : ",") << a.edge << ":" << a.slot;
  }
  os << "\n";
  for (std::size_t c = 0; c < k.crossing_count(); ++c) {
    for (std::size_t j = 0; j < 4; ++j) {
      const Port q = k.peer(4 * c + j);
      os << (j ? " " : "") << q / 4 << "." << q % 4;
    }
    os << "\n";
  }
  return os.str();
}

inline Shadow deserialize(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  auto fail = [](const std::string& why) -> Error { return Error(ErrorKind::FormatError, why); };
  auto header = [&](const std::string& key) {
    if (!std::getline(is, line) || line.rfind(key, 0) != 0) throw fail("expected '" + key + "' header");
    return line.substr(key.size());
  };
  std::size_t loops = 0;
  {
    std::string v = header("loops:");
    std::istringstream vs(v);
    if (!(vs >> loops)) throw fail("bad loop count");
  }
  std::vector<std::pair<std::size_t, int>> raw_cuts;
  {
    std::string v = header("cuts:");
    std::replace(v.begin(), v.end(), ',', ' ');
    std::istringstream vs(v);
    std::string tok;
    while (vs >> tok) {
      const auto colon = tok.find(':');
      if (colon == std::string::npos) throw fail("bad cut '" + tok + "'");
      try {
        raw_cuts.emplace_back(std::stoul(tok.substr(0, colon)), std::stoi(tok.substr(colon + 1)));
      } catch (const std::exception&) {
        throw fail("bad cut '" + tok + "'");
      }
    }
  }
  std::vector<Port> peers;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tok;
    int count = 0;
    while (ls >> tok) {
      const auto dot = tok.find('.');
      if (dot == std::string::npos) throw fail("bad port '" + tok + "'");
      try {
        const std::size_t c = std::stoul(tok.substr(0, dot));
        const std::size_t p = std::stoul(tok.substr(dot + 1));
        if (p > 3) throw fail("bad port '" + tok + "'");
        peers.push_back(4 * c + p);
      } catch (const Error&) {
        throw;
      } catch (const std::exception&) {
        throw fail("bad port '" + tok + "'");
      }
      ++count;
    }
    if (count != 4) throw fail("crossing line needs 4 ports");
  }
  Shadow k(std::move(peers), loops);
  if (!k.is_matching()) throw fail("ports are not perfectly matched");
  std::vector<Position> cuts;
  try {
    for (auto [e, s] : raw_cuts) cuts.push_back(k.position_of(ArcRef{e, s}));
  } catch (const Error& e) {
    throw fail(e.what());
  }
  return k.with_cut_points(std::move(cuts));
}

}  // namespace knotshadow
