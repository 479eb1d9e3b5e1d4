#ifndef SURFWALK_GROUP_WORDS_HPP_
#define SURFWALK_GROUP_WORDS_HPP_

// Words over a symmetric generating set, group presentations, and the word
// problem for small cancellation presentations (Dehn's algorithm).
//
// A letter is an index in [0, 2h) where h is the number of positive
// generators. Generator i is represented by letter 2i and its inverse by
// letter 2i + 1, so inversion is `x ^ 1`. Lexicographic comparison of words
// uses letter indices, which for surface groups gives the order
// a1 < A1 < b1 < B1 < a2 < ... (capitals denote inverses).

#include <algorithm>  // for equal, min_element, reverse
#include <cstddef>    // for size_t
#include <cstdint>    // for uint8_t, uint32_t
#include <optional>   // for optional
#include <span>       // for span
#include <string>     // for string
#include <utility>    // for move
#include <vector>     // for vector

#include "error.hpp"

namespace surfwalk {

  using Letter = std::uint8_t;
  using Word   = std::vector<Letter>;

  constexpr Letter inverse(Letter x) noexcept {
    return static_cast<Letter>(x ^ 1u);
  }

  inline Word inverse(Word const& w) {
    Word result(w.rbegin(), w.rend());
    for (auto& x : result) {
      x = inverse(x);
    }
    return result;
  }

  inline Word concat(Word const& u, Word const& v) {
    Word result;
    result.reserve(u.size() + v.size());
    result.insert(result.end(), u.begin(), u.end());
    result.insert(result.end(), v.begin(), v.end());
    return result;
  }

  inline bool is_freely_reduced(Word const& w) noexcept {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i] == inverse(w[i - 1])) {
        return false;
      }
    }
    return true;
  }

  inline bool is_cyclically_reduced(Word const& w) noexcept {
    return is_freely_reduced(w)
           && (w.size() < 2 || w.front() != inverse(w.back()));
  }

  // Stack-based free reduction; the result is the unique freely reduced word
  // in the free-group class of w.
  inline Word free_reduce(Word const& w) {
    Word out;
    out.reserve(w.size());
    for (Letter x : w) {
      if (!out.empty() && out.back() == inverse(x)) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    }
    return out;
  }

  class Presentation {
   public:
    // `genus` is informational (0 for presentations that are not the
    // standard surface group presentation).
    Presentation(std::size_t generators, std::vector<Word> relators, int genus = 0)
        : _generators(generators), _relators(std::move(relators)), _genus(genus) {
      if (generators < 2) {
        fail(ErrorKind::invalid_argument,
             "a presentation needs at least 2 generators (k = 2h >= 4)");
      }
      if (generators > 127) {
        fail(ErrorKind::invalid_argument, "at most 127 generators are supported");
      }
      _by_first.resize(degree());
      for (auto const& r : _relators) {
        if (r.empty() || !is_cyclically_reduced(r)) {
          fail(ErrorKind::invalid_argument,
               "relators must be nonempty and cyclically reduced");
        }
        for (Letter x : r) {
          if (x >= degree()) {
            fail(ErrorKind::invalid_argument, "relator letter out of range");
          }
        }
        add_rotations(r);
        add_rotations(surfwalk::inverse(r));
      }
    }

    std::size_t generators() const noexcept {
      return _generators;
    }

    // Size k of the symmetric generating set.
    std::size_t degree() const noexcept {
      return 2 * _generators;
    }

    int genus() const noexcept {
      return _genus;
    }

    std::vector<Word> const& relators() const noexcept {
      return _relators;
    }

    // All distinct cyclic rotations of every relator and of its inverse.
    std::vector<Word> const& pieces() const noexcept {
      return _pieces;
    }

    std::span<std::uint32_t const> pieces_starting_with(Letter x) const {
      return _by_first[x];
    }

    std::string letter_name(Letter x) const {
      std::size_t gen = x / 2;
      std::string name;
      if (_genus > 0) {
        name += (gen % 2 == 0) ? 'a' : 'b';
        name += std::to_string(gen / 2 + 1);
      } else {
        name += 'x';
        name += std::to_string(gen + 1);
      }
      if (x % 2 == 1) {
        name[0] = static_cast<char>(name[0] - 'a' + 'A');
      }
      return name;
    }

    std::string format(Word const& w) const {
      if (w.empty()) {
        return "1";
      }
      std::string out;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) {
          out += ' ';
        }
        out += letter_name(w[i]);
      }
      return out;
    }

   private:
    void add_rotations(Word const& r) {
      for (std::size_t s = 0; s < r.size(); ++s) {
        Word rot(r.begin() + static_cast<std::ptrdiff_t>(s), r.end());
        rot.insert(rot.end(), r.begin(), r.begin() + static_cast<std::ptrdiff_t>(s));
        if (std::find(_pieces.begin(), _pieces.end(), rot) == _pieces.end()) {
          _by_first[rot.front()].push_back(static_cast<std::uint32_t>(_pieces.size()));
          _pieces.push_back(std::move(rot));
        }
      }
    }

    std::size_t                             _generators;
    std::vector<Word>                       _relators;
    int                                     _genus;
    std::vector<Word>                       _pieces;
    std::vector<std::vector<std::uint32_t>> _by_first;
  };

  // <a1, b1, ..., ag, bg | [a1, b1] ... [ag, bg]>
  inline Presentation surface_presentation(int g) {
    if (g < 2) {
      fail(ErrorKind::invalid_argument,
           "invalid genus " + std::to_string(g) + ": genus must be >= 2");
    }
    if (g > 63) {
      fail(ErrorKind::invalid_argument, "genus above 63 is not supported");
    }
    Word relator;
    for (int j = 0; j < g; ++j) {
      auto a = static_cast<Letter>(4 * j);
      auto b = static_cast<Letter>(4 * j + 2);
      relator.insert(relator.end(), {a, b, inverse(a), inverse(b)});
    }
    return Presentation(static_cast<std::size_t>(2 * g), {relator}, g);
  }

  // A relator-free presentation: the free group on `generators` letters.
  inline Presentation free_presentation(std::size_t generators) {
    return Presentation(generators, {});
  }

  namespace detail {

    inline bool matches(Word const& w, std::size_t at, Word const& piece, std::size_t len) {
      return at + len <= w.size()
             && std::equal(piece.begin(),
                           piece.begin() + static_cast<std::ptrdiff_t>(len),
                           w.begin() + static_cast<std::ptrdiff_t>(at));
    }

    // Replace w[at, at + len) (a prefix of `piece`) by the inverse of the
    // remainder of `piece`.
    inline Word splice(Word const& w, std::size_t at, std::size_t len, Word const& piece) {
      Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(at));
      for (std::size_t i = piece.size(); i > len; --i) {
        out.push_back(inverse(piece[i - 1]));
      }
      out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(at + len), w.end());
      return out;
    }

    // Leftmost, then shortest, subword that is more than half of a piece.
    inline std::optional<Word> dehn_step(Word const& w, Presentation const& p) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        std::size_t best_len   = 0;
        Word const* best_piece = nullptr;
        for (auto idx : p.pieces_starting_with(w[i])) {
          Word const& piece = p.pieces()[idx];
          std::size_t len   = piece.size() / 2 + 1;
          if ((best_piece == nullptr || len < best_len) && matches(w, i, piece, len)) {
            best_len   = len;
            best_piece = &piece;
          }
        }
        if (best_piece != nullptr) {
          return splice(w, i, best_len, *best_piece);
        }
      }
      return std::nullopt;
    }

  }  // namespace detail

  // Dehn's algorithm. Terminates because every replacement shortens the word;
  // for C'(1/6) presentations the result is empty iff w represents 1.
  inline Word dehn_reduce(Word const& w, Presentation const& p) {
    Word current = free_reduce(w);
    while (auto next = detail::dehn_step(current, p)) {
      current = free_reduce(*next);
    }
    return current;
  }

  inline bool is_identity(Word const& w, Presentation const& p) {
    return dehn_reduce(w, p).empty();
  }

  // All words obtained from w by replacing one subword equal to exactly half
  // of a piece with the inverse of the other half (a same-length rewrite).
  inline std::vector<Word> half_swaps(Word const& w, Presentation const& p) {
    std::vector<Word> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (auto idx : p.pieces_starting_with(w[i])) {
        Word const& piece = p.pieces()[idx];
        if (piece.size() % 2 != 0) {
          continue;
        }
        std::size_t half = piece.size() / 2;
        if (detail::matches(w, i, piece, half)) {
          out.push_back(detail::splice(w, i, half, piece));
        }
      }
    }
    return out;
  }

  // Lexicographically least word in the half-swap closure of the Dehn reduced
  // form of w. Whenever a word in the closure admits a shortening, the search
  // restarts from the shortened word, so the result has geodesic length.
  inline Word canonical_geodesic(Word const& w, Presentation const& p) {
    Word start = dehn_reduce(w, p);
    for (;;) {
      std::vector<Word> closure{start};
      bool              restarted = false;
      for (std::size_t i = 0; i < closure.size() && !restarted; ++i) {
        for (auto& v : half_swaps(closure[i], p)) {
          Word r = dehn_reduce(v, p);
          if (r.size() < v.size()) {
            start     = std::move(r);
            restarted = true;
            break;
          }
          if (std::find(closure.begin(), closure.end(), v) == closure.end()) {
            closure.push_back(std::move(v));
          }
        }
      }
      if (!restarted) {
        return *std::min_element(closure.begin(), closure.end());
      }
    }
  }

}  // namespace surfwalk

#endif  // SURFWALK_GROUP_WORDS_HPP_
