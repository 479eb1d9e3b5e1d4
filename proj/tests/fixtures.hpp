#ifndef SURFWALK_TESTS_FIXTURES_HPP_
#define SURFWALK_TESTS_FIXTURES_HPP_

#include <map>
#include <memory>
#include <utility>

#include <surfwalk/cayley_ball.hpp>

namespace fixture {

  // Balls are immutable once built; share them across tests.
  inline surfwalk::Ball const& ball(int g, int radius) {
    static std::map<std::pair<int, int>, std::unique_ptr<surfwalk::Ball>> cache;
    auto& slot = cache[{g, radius}];
    if (!slot) {
      slot = std::make_unique<surfwalk::Ball>(
          surfwalk::build_ball(surfwalk::surface_presentation(g), radius));
    }
    return *slot;
  }

}  // namespace fixture

#endif  // SURFWALK_TESTS_FIXTURES_HPP_
