#ifndef SURFWALK_CAYLEY_BALL_HPP_
#define SURFWALK_CAYLEY_BALL_HPP_

// The radius-R ball around the identity in the Cayley graph of a presented
// group, built by breadth-first search over canonical geodesic words, plus
// the vertex-type analysis for surface groups.
//
// Vertex numbering is deterministic: level by level, and within a level in
// lexicographic order of canonical words. Adjacency slots are indexed by
// letter; a slot whose neighbour lies outside the ball holds `absent`.

#include <algorithm>      // for sort
#include <cstddef>        // for size_t
#include <cstdint>        // for uint32_t
#include <limits>         // for numeric_limits
#include <optional>       // for optional
#include <ostream>        // for ostream
#include <span>           // for span
#include <string>         // for string
#include <unordered_map>  // for unordered_map
#include <utility>        // for pair
#include <vector>         // for vector

#include "error.hpp"
#include "group_words.hpp"

namespace surfwalk {

  using VertexId = std::uint32_t;

  inline constexpr VertexId absent = std::numeric_limits<VertexId>::max();

  struct BallOptions {
    std::size_t vertex_cap = 10'000'000;
  };

  class Ball {
   public:
    Ball(Ball&&)            = default;
    Ball& operator=(Ball&&) = default;

    Presentation const& presentation() const noexcept {
      return _presentation;
    }

    int radius() const noexcept {
      return _radius;
    }

    std::size_t degree() const noexcept {
      return _presentation.degree();
    }

    std::size_t size() const noexcept {
      return _level.size();
    }

    int level(VertexId v) const {
      return _level[v];
    }

    Word word(VertexId v) const {
      auto first = _word_offset[v];
      return Word(_letters.begin() + first, _letters.begin() + _word_offset[v + 1]);
    }

    VertexId neighbor(VertexId v, Letter s) const {
      return _adjacency[v * degree() + s];
    }

    std::span<VertexId const> neighbors(VertexId v) const {
      return {_adjacency.data() + v * degree(), degree()};
    }

    // True iff every one of the k neighbours of v lies in the ball.
    bool interior(VertexId v) const {
      return _level[v] < _radius;
    }

    // Vertex representing the element of w, if it lies in the ball.
    std::optional<VertexId> find(Word const& w) const {
      auto it = _index.find(key(canonical_geodesic(w, _presentation)));
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    std::vector<std::size_t> const& level_offsets() const noexcept {
      return _level_offset;
    }

   private:
    friend Ball build_ball(Presentation const&, int, BallOptions);

    Ball(Presentation p, int radius) : _presentation(std::move(p)), _radius(radius) {}

    static std::string key(Word const& w) {
      return std::string(w.begin(), w.end());
    }

    VertexId add_vertex(Word const& w, int lvl) {
      auto id = static_cast<VertexId>(_level.size());
      _level.push_back(lvl);
      _letters.insert(_letters.end(), w.begin(), w.end());
      _word_offset.push_back(_letters.size());
      _adjacency.resize(_adjacency.size() + degree(), absent);
      _index.emplace(key(w), id);
      return id;
    }

    void link(VertexId u, Letter s, VertexId v) {
      _adjacency[u * degree() + s]          = v;
      _adjacency[v * degree() + inverse(s)] = u;
    }

    Presentation                              _presentation;
    int                                       _radius;
    std::vector<int>                          _level;
    std::vector<Letter>                       _letters;
    std::vector<std::size_t>                  _word_offset{0};
    std::vector<VertexId>                     _adjacency;
    std::vector<std::size_t>                  _level_offset{0};
    std::unordered_map<std::string, VertexId> _index;
  };

  inline Ball build_ball(Presentation const& p, int radius, BallOptions options = {}) {
    if (radius < 0) {
      fail(ErrorKind::invalid_argument, "ball radius must be >= 0");
    }
    Ball ball(p, radius);
    ball.add_vertex({}, 0);
    auto const k = static_cast<Letter>(p.degree());

    for (int lvl = 0; lvl <= radius; ++lvl) {
      std::size_t const first = ball._level_offset[static_cast<std::size_t>(lvl)];
      std::size_t const last  = ball.size();
      ball._level_offset.push_back(last);

      // Words one level up, each with the (vertex, letter) pairs reaching it.
      std::unordered_map<std::string, std::vector<std::pair<VertexId, Letter>>> pending;
      for (std::size_t v = first; v < last; ++v) {
        auto  vid  = static_cast<VertexId>(v);
        Word  base = ball.word(vid);
        base.push_back(0);
        for (Letter s = 0; s < k; ++s) {
          if (ball.neighbor(vid, s) != absent) {
            continue;
          }
          base.back() = s;
          Word u      = canonical_geodesic(base, p);
          auto len    = static_cast<int>(u.size());
          if (len <= lvl) {
            auto it = ball._index.find(Ball::key(u));
            if (it == ball._index.end()) {
              fail(ErrorKind::internal,
                   "canonical form " + p.format(u) + " is shorter than its BFS level");
            }
            ball.link(vid, s, it->second);
          } else if (len == lvl + 1) {
            if (lvl < radius) {
              pending[Ball::key(u)].emplace_back(vid, s);
            }
          } else {
            fail(ErrorKind::internal, "canonical form grew by more than one letter");
          }
        }
      }
      if (pending.empty()) {
        continue;
      }
      if (ball.size() + pending.size() > options.vertex_cap) {
        fail(ErrorKind::resource_cap,
             "ball exceeds the vertex cap of " + std::to_string(options.vertex_cap)
                 + " at level " + std::to_string(lvl + 1));
      }
      std::vector<std::string> keys;
      keys.reserve(pending.size());
      for (auto const& [word, _] : pending) {
        keys.push_back(word);
      }
      // Letters are unsigned char values < 128, so string order is word order.
      std::sort(keys.begin(), keys.end());
      for (auto const& kw : keys) {
        VertexId id = ball.add_vertex(Word(kw.begin(), kw.end()), lvl + 1);
        for (auto [from, s] : pending[kw]) {
          ball.link(from, s, id);
        }
      }
    }
    ball._level_offset.resize(static_cast<std::size_t>(radius) + 2);
    return ball;
  }

  // Number of vertices on each sphere, levels 0..R.
  inline std::vector<std::size_t> sphere_sizes(Ball const& b) {
    std::vector<std::size_t> sizes(static_cast<std::size_t>(b.radius()) + 1, 0);
    for (VertexId v = 0; v < b.size(); ++v) {
      ++sizes[static_cast<std::size_t>(b.level(v))];
    }
    return sizes;
  }

  struct TypeReport {
    // t(x): number of neighbours one level closer to the identity.
    std::vector<int> type_of;
    // Vertices with t(x) >= 3.
    std::vector<VertexId> violations;
    // Pairs of type-2 vertices at distance <= 2 (first < second).
    std::vector<std::pair<VertexId, VertexId>> type2_pairs;
    // Type-1 vertices without a certifiable convenient neighbour.
    std::vector<VertexId> convenient_neighbour_misses;

    std::size_t type2_checked            = 0;
    std::size_t type2_skipped            = 0;
    std::size_t type1_checked            = 0;
    std::size_t type1_skipped            = 0;
    // Fewest convenient neighbours seen at a checked type-1 vertex. This is a
    // lower bound only: candidates near the boundary are not certifiable.
    std::size_t min_convenient_neighbours = 0;

    bool passed() const noexcept {
      return violations.empty() && type2_pairs.empty()
             && convenient_neighbour_misses.empty();
    }
  };

  // Counts down-neighbours. Down-neighbours of a level-l vertex sit at level
  // l - 1 < R, so types are exact for every vertex of the ball.
  inline TypeReport vertex_types(Ball const& b) {
    TypeReport report;
    report.type_of.assign(b.size(), 0);
    for (VertexId v = 0; v < b.size(); ++v) {
      int t = 0;
      for (VertexId u : b.neighbors(v)) {
        if (u != absent && b.level(u) < b.level(v)) {
          ++t;
        }
      }
      report.type_of[v] = t;
      if (t >= 3) {
        report.violations.push_back(v);
      }
    }
    return report;
  }

  // y is a convenient neighbour of x when y is one level further out, y has
  // type 1, and every other neighbour of y has type 1. Certifiable only when
  // y is interior (all its neighbours are in the ball).
  inline bool is_convenient(Ball const& b, TypeReport const& types, VertexId x, VertexId y) {
    if (y == absent || b.level(y) != b.level(x) + 1 || types.type_of[y] != 1
        || !b.interior(y)) {
      return false;
    }
    for (VertexId z : b.neighbors(y)) {
      if (z != x && types.type_of[z] != 1) {
        return false;
      }
    }
    return true;
  }

  inline std::size_t count_convenient(Ball const& b, TypeReport const& types, VertexId x) {
    std::size_t n = 0;
    for (VertexId y : b.neighbors(x)) {
      n += is_convenient(b, types, x, y) ? 1 : 0;
    }
    return n;
  }

  // Vertices within in-ball distance <= `depth` of v, excluding v.
  inline std::vector<VertexId> neighbourhood(Ball const& b, VertexId v, int depth) {
    std::vector<VertexId> seen{v};
    std::size_t           frontier_begin = 0;
    for (int d = 0; d < depth; ++d) {
      std::size_t frontier_end = seen.size();
      for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
        for (VertexId u : b.neighbors(seen[i])) {
          if (u != absent && std::find(seen.begin(), seen.end(), u) == seen.end()) {
            seen.push_back(u);
          }
        }
      }
      frontier_begin = frontier_end;
    }
    seen.erase(seen.begin());
    return seen;
  }

  // Finite-ball check of: t(x) <= 2 everywhere; type-2 vertices are pairwise
  // at distance >= 3; every type-1 vertex has a convenient neighbour.
  // A type-2 vertex at level <= R - 2 has its whole distance-2 neighbourhood
  // inside the ball (and in-ball paths of length 2 are all the paths), so
  // those are checked; others are counted as skipped. Likewise type-1
  // vertices need level <= R - 2 for their candidates to be certifiable.
  inline TypeReport check_geometric_proposition(Ball const& b) {
    if (b.radius() < 3) {
      fail(ErrorKind::insufficient_radius,
           "the geometric proposition check needs radius >= 3, got "
               + std::to_string(b.radius()));
    }
    TypeReport report = vertex_types(b);
    bool       first_type1 = true;
    for (VertexId v = 0; v < b.size(); ++v) {
      int  t         = report.type_of[v];
      bool checkable = b.level(v) <= b.radius() - 2;
      if (t == 2) {
        if (!checkable) {
          ++report.type2_skipped;
          continue;
        }
        ++report.type2_checked;
        for (VertexId u : neighbourhood(b, v, 2)) {
          if (report.type_of[u] == 2 && v < u) {
            report.type2_pairs.emplace_back(v, u);
          }
        }
      } else if (t == 1) {
        if (!checkable) {
          ++report.type1_skipped;
          continue;
        }
        ++report.type1_checked;
        std::size_t n = count_convenient(b, report, v);
        if (n == 0) {
          report.convenient_neighbour_misses.push_back(v);
        }
        if (first_type1 || n < report.min_convenient_neighbours) {
          report.min_convenient_neighbours = n;
          first_type1                      = false;
        }
      }
    }
    return report;
  }

  // Length of the shortest cycle through the identity, if one fits in the
  // ball. BFS labels each vertex with the first edge of its tree path; a
  // non-tree edge joining different labels closes a cycle through the root.
  inline std::optional<int> girth_at_identity(Ball const& b) {
    std::vector<VertexId> branch(b.size(), absent);
    std::vector<VertexId> parent(b.size(), absent);
    std::vector<VertexId> queue{0};
    branch[0] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      VertexId v = queue[i];
      for (VertexId u : b.neighbors(v)) {
        if (u != absent && branch[u] == absent) {
          branch[u] = (v == 0) ? u : branch[v];
          parent[u] = v;
          queue.push_back(u);
        }
      }
    }
    std::optional<int> best;
    for (VertexId v = 1; v < b.size(); ++v) {
      for (VertexId u : b.neighbors(v)) {
        if (u == absent || u == 0 || u == parent[v] || v == parent[u]
            || branch[u] == branch[v]) {
          continue;
        }
        int len = b.level(u) + b.level(v) + 1;
        if (!best || len < *best) {
          best = len;
        }
      }
    }
    return best;
  }

  // Edge list: header "vertices N radius R genus G", then "u v letter" for
  // each undirected edge with u < v, where letter labels the edge u -> v.
  inline void write_edge_list(std::ostream& out, Ball const& b) {
    out << "vertices " << b.size() << " radius " << b.radius() << " genus "
        << b.presentation().genus() << '\n';
    for (VertexId v = 0; v < b.size(); ++v) {
      auto nbrs = b.neighbors(v);
      for (std::size_t s = 0; s < nbrs.size(); ++s) {
        if (nbrs[s] != absent && v < nbrs[s]) {
          out << v << ' ' << nbrs[s] << ' ' << s << '\n';
        }
      }
    }
  }

}  // namespace surfwalk

#endif  // SURFWALK_CAYLEY_BALL_HPP_
