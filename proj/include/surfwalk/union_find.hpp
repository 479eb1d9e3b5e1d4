#ifndef SURFWALK_UNION_FIND_HPP_
#define SURFWALK_UNION_FIND_HPP_

#include <cstddef>  // for size_t
#include <numeric>  // for iota
#include <utility>  // for swap
#include <vector>   // for vector

namespace surfwalk {

  // Disjoint sets with union by size and path halving.
  class UnionFind {
   public:
    explicit UnionFind(std::size_t n) : _parent(n), _size(n, 1), _components(n) {
      std::iota(_parent.begin(), _parent.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
      while (_parent[x] != x) {
        _parent[x] = _parent[_parent[x]];
        x          = _parent[x];
      }
      return x;
    }

    // Returns false if x and y were already in the same set.
    bool unite(std::size_t x, std::size_t y) {
      x = find(x);
      y = find(y);
      if (x == y) {
        return false;
      }
      if (_size[x] < _size[y]) {
        std::swap(x, y);
      }
      _parent[y] = x;
      _size[x] += _size[y];
      --_components;
      return true;
    }

    std::size_t components() const noexcept {
      return _components;
    }

   private:
    std::vector<std::size_t> _parent;
    std::vector<std::size_t> _size;
    std::size_t              _components;
  };

}  // namespace surfwalk

#endif  // SURFWALK_UNION_FIND_HPP_
