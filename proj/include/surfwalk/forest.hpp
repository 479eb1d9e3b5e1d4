#ifndef SURFWALK_FOREST_HPP_
#define SURFWALK_FOREST_HPP_

// Spanning forest of (k - 1)-regular trees inside a surface group ball,
// obtained by deleting one edge at every vertex:
//
//   phase 1: every type-2 vertex drops one of its two down-edges;
//   phase 2: in level order, every vertex still of full degree k drops the
//            edge to a convenient neighbour.
//
// The deleted edges touch each vertex once, so they form a perfect matching.
// Wherever several edges qualify, the smallest letter index is taken.

#include <cstddef>   // for size_t
#include <cstdint>   // for uint8_t
#include <optional>  // for optional
#include <ostream>   // for ostream
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include "cayley_ball.hpp"
#include "error.hpp"
#include "union_find.hpp"

namespace surfwalk {

  enum class EdgeState : std::uint8_t { kept, removed_phase1, removed_phase2 };

  inline char const* to_string(EdgeState s) noexcept {
    switch (s) {
      case EdgeState::kept:
        return "kept";
      case EdgeState::removed_phase1:
        return "removed-p1";
      case EdgeState::removed_phase2:
        return "removed-p2";
    }
    return "kept";
  }

  // An undirected edge named by its lexicographically smaller oriented
  // representative (vertex, letter).
  struct OrientedEdge {
    VertexId from;
    Letter   letter;

    friend bool operator==(OrientedEdge const&, OrientedEdge const&) = default;
  };

  class ForestMask {
   public:
    explicit ForestMask(Ball const& b)
        : _degree(b.degree()),
          _state(b.size() * b.degree(), EdgeState::kept),
          _deferred(b.size(), false) {}

    EdgeState state(VertexId v, Letter s) const {
      return _state[v * _degree + s];
    }

    void set(Ball const& b, VertexId v, Letter s, EdgeState st) {
      VertexId u = b.neighbor(v, s);
      if (u == absent) {
        fail(ErrorKind::internal, "cannot mask an edge that leaves the ball");
      }
      _state[v * _degree + s]          = st;
      _state[u * _degree + inverse(s)] = st;
    }

    bool deferred(VertexId v) const {
      return _deferred[v];
    }

    void defer(VertexId v) {
      _deferred[v] = true;
    }

    std::size_t deferred_count() const {
      std::size_t n = 0;
      for (bool d : _deferred) {
        n += d ? 1 : 0;
      }
      return n;
    }

    int masked_degree(Ball const& b, VertexId v) const {
      int d = 0;
      for (std::size_t s = 0; s < _degree; ++s) {
        if (b.neighbor(v, static_cast<Letter>(s)) != absent
            && _state[v * _degree + s] == EdgeState::kept) {
          ++d;
        }
      }
      return d;
    }

    std::vector<OrientedEdge> removed(Ball const& b, EdgeState phase) const {
      std::vector<OrientedEdge> out;
      for (VertexId v = 0; v < b.size(); ++v) {
        for (std::size_t s = 0; s < _degree; ++s) {
          VertexId u = b.neighbor(v, static_cast<Letter>(s));
          if (u != absent && _state[v * _degree + s] == phase
              && (v < u || (v == u && s < inverse(static_cast<Letter>(s))))) {
            out.push_back({v, static_cast<Letter>(s)});
          }
        }
      }
      return out;
    }

   private:
    std::size_t            _degree;
    std::vector<EdgeState> _state;
    std::vector<bool>      _deferred;
  };

  struct ForestStats {
    std::size_t phase1_removed            = 0;
    std::size_t phase2_removed            = 0;
    std::size_t deferred                  = 0;
    // Fewest certifiable convenient candidates at a phase-2 vertex (a lower
    // bound near the boundary).
    std::size_t min_phase2_candidates     = 0;
  };

  struct Forest {
    ForestMask  mask;
    ForestStats stats;
  };

  inline Forest build_forest(Ball const& b, TypeReport const& types) {
    if (b.radius() < 3) {
      fail(ErrorKind::insufficient_radius, "forest construction needs radius >= 3");
    }
    auto const k = static_cast<Letter>(b.degree());
    Forest     forest{ForestMask(b), {}};
    auto&      mask = forest.mask;

    for (VertexId v = 0; v < b.size(); ++v) {
      if (types.type_of[v] != 2) {
        continue;
      }
      for (Letter s = 0; s < k; ++s) {
        VertexId u = b.neighbor(v, s);
        if (u != absent && b.level(u) < b.level(v)) {
          mask.set(b, v, s, EdgeState::removed_phase1);
          ++forest.stats.phase1_removed;
          break;
        }
      }
    }

    bool first = true;
    for (VertexId v = 0; v < b.size(); ++v) {
      if (!b.interior(v) || mask.masked_degree(b, v) < static_cast<int>(k)) {
        continue;
      }
      std::optional<Letter> choice;
      std::size_t           candidates = 0;
      for (Letter s = 0; s < k; ++s) {
        if (is_convenient(b, types, v, b.neighbor(v, s))) {
          ++candidates;
          if (!choice) {
            choice = s;
          }
        }
      }
      if (!choice) {
        if (b.level(v) >= b.radius() - 1) {
          mask.defer(v);
          ++forest.stats.deferred;
          continue;
        }
        fail(ErrorKind::certification_failure,
             "vertex " + std::to_string(v) + " ("
                 + b.presentation().format(b.word(v))
                 + ") has full degree but no convenient neighbour");
      }
      mask.set(b, v, *choice, EdgeState::removed_phase2);
      ++forest.stats.phase2_removed;
      if (first || candidates < forest.stats.min_phase2_candidates) {
        forest.stats.min_phase2_candidates = candidates;
        first                              = false;
      }
    }
    return forest;
  }

  struct ForestCertificate {
    std::size_t checked_vertices = 0;  // interior, not deferred
    std::size_t deferred_vertices = 0;

    std::vector<VertexId> degree_failures;  // masked degree != k - 1
    std::optional<std::pair<VertexId, VertexId>> cycle_edge;
    std::vector<VertexId> isolated;
    std::vector<VertexId> touched_twice_in_phase;
    std::vector<VertexId> touched_twice;

    bool degree_ok() const noexcept {
      return degree_failures.empty();
    }
    bool acyclic() const noexcept {
      return !cycle_edge.has_value();
    }
    bool spanning() const noexcept {
      return isolated.empty();
    }
    bool matching() const noexcept {
      return touched_twice_in_phase.empty() && touched_twice.empty();
    }
    bool passed() const noexcept {
      return degree_ok() && acyclic() && spanning() && matching();
    }
    // Nothing could be certified (every interior vertex was deferred).
    bool inconclusive() const noexcept {
      return checked_vertices == 0;
    }
  };

  inline ForestCertificate verify_forest(Ball const& b, ForestMask const& mask) {
    constexpr std::size_t max_listed = 16;
    auto const            k          = static_cast<int>(b.degree());
    ForestCertificate     cert;
    UnionFind             uf(b.size());
    std::vector<int>      touched_p1(b.size(), 0);
    std::vector<int>      touched_p2(b.size(), 0);

    for (VertexId v = 0; v < b.size(); ++v) {
      int d = mask.masked_degree(b, v);
      if (b.interior(v)) {
        if (mask.deferred(v)) {
          ++cert.deferred_vertices;
        } else {
          ++cert.checked_vertices;
          if (d != k - 1 && cert.degree_failures.size() < max_listed) {
            cert.degree_failures.push_back(v);
          }
        }
      }
      if (d == 0 && b.size() > 1 && cert.isolated.size() < max_listed) {
        cert.isolated.push_back(v);
      }
      for (int s = 0; s < k; ++s) {
        VertexId u = b.neighbor(v, static_cast<Letter>(s));
        if (u == absent) {
          continue;
        }
        auto st = mask.state(v, static_cast<Letter>(s));
        if (st == EdgeState::removed_phase1) {
          ++touched_p1[v];
        } else if (st == EdgeState::removed_phase2) {
          ++touched_p2[v];
        } else if (v < u && !uf.unite(v, u) && !cert.cycle_edge) {
          cert.cycle_edge = std::make_pair(v, u);
        }
      }
    }
    for (VertexId v = 0; v < b.size(); ++v) {
      if ((touched_p1[v] > 1 || touched_p2[v] > 1)
          && cert.touched_twice_in_phase.size() < max_listed) {
        cert.touched_twice_in_phase.push_back(v);
      }
      if (touched_p1[v] + touched_p2[v] > 1 && cert.touched_twice.size() < max_listed) {
        cert.touched_twice.push_back(v);
      }
    }
    return cert;
  }

  inline std::size_t count_components(Ball const& b, ForestMask const& mask) {
    UnionFind uf(b.size());
    for (VertexId v = 0; v < b.size(); ++v) {
      for (std::size_t s = 0; s < b.degree(); ++s) {
        VertexId u = b.neighbor(v, static_cast<Letter>(s));
        if (u != absent && v < u && mask.state(v, static_cast<Letter>(s)) == EdgeState::kept) {
          uf.unite(v, u);
        }
      }
    }
    return uf.components();
  }

  // Ball edge list with a trailing kept|removed-p1|removed-p2 column.
  inline void write_forest_edge_list(std::ostream& out, Ball const& b, ForestMask const& mask) {
    out << "vertices " << b.size() << " radius " << b.radius() << " genus "
        << b.presentation().genus() << '\n';
    for (VertexId v = 0; v < b.size(); ++v) {
      for (std::size_t s = 0; s < b.degree(); ++s) {
        VertexId u = b.neighbor(v, static_cast<Letter>(s));
        if (u != absent && v < u) {
          out << v << ' ' << u << ' ' << s << ' '
              << to_string(mask.state(v, static_cast<Letter>(s))) << '\n';
        }
      }
    }
  }

}  // namespace surfwalk

#endif  // SURFWALK_FOREST_HPP_
