#ifndef SURFWALK_SPECTRAL_WALKS_HPP_
#define SURFWALK_SPECTRAL_WALKS_HPP_

// Lower bounds on the spectral radius from a finite ball: exact closed-walk
// counts at the identity and the top eigenvalue of the ball-restricted
// Markov operator.

#include <algorithm>  // for min
#include <cmath>      // for sqrt, exp, log
#include <cstdio>     // for snprintf
#include <cstddef>    // for size_t
#include <ostream>    // for ostream
#include <string>     // for string
#include <vector>     // for vector

#include <boost/multiprecision/cpp_int.hpp>

#include "cayley_ball.hpp"
#include "error.hpp"

namespace surfwalk {

  using BigInt = boost::multiprecision::cpp_int;

  struct WalkTable {
    std::size_t degree;
    // counts[n] = number of closed walks of length 2n at the identity.
    std::vector<BigInt> counts;
    // The identity count after every odd number of steps was 0.
    bool odd_counts_zero = true;

    std::size_t nmax() const noexcept {
      return counts.size() - 1;
    }

    // log(p_2n) with p_2n = W_2n / k^2n.
    double log_return_probability(std::size_t n) const {
      return std::log(counts[n].convert_to<long double>()) - 2.0 * n * std::log(degree);
    }

    // Exact quotient, correctly rounded.
    double return_probability(std::size_t n) const {
      BigInt denominator = boost::multiprecision::pow(BigInt(degree), static_cast<unsigned>(2 * n));
      return boost::multiprecision::cpp_rational(counts[n], denominator).convert_to<double>();
    }

    // p_2n^(1/2n), for n >= 1.
    double root(std::size_t n) const {
      return std::exp(log_return_probability(n) / (2.0 * n));
    }
  };

  // Dynamic programming over walk endpoints. At step t only vertices within
  // distance min(t, 2 nmax - t) of the identity matter; a closed walk of
  // length 2n never leaves the radius-n ball, so counts are exact.
  inline WalkTable closed_walk_counts(Ball const& b, std::size_t nmax) {
    if (static_cast<std::size_t>(b.radius()) < nmax) {
      fail(ErrorKind::insufficient_radius,
           "closed walks of length " + std::to_string(2 * nmax) + " need radius >= "
               + std::to_string(nmax) + ", ball has radius " + std::to_string(b.radius()));
    }
    auto const& offsets = b.level_offsets();
    WalkTable   table{b.degree(), {BigInt(1)}, true};
    std::vector<BigInt> cur(b.size());
    std::vector<BigInt> next(b.size());
    std::size_t         cur_extent  = 1;  // entries at or beyond are zero
    std::size_t         next_extent = 0;
    cur[0] = 1;
    for (std::size_t t = 1; t <= 2 * nmax; ++t) {
      std::size_t reach = std::min(t, 2 * nmax - t);
      std::size_t end   = offsets[reach + 1];
      for (std::size_t v = 0; v < end; ++v) {
        BigInt sum = 0;
        for (VertexId u : b.neighbors(static_cast<VertexId>(v))) {
          if (u != absent && u < cur_extent) {
            sum += cur[u];
          }
        }
        next[v] = std::move(sum);
      }
      // Walk endpoints further out can no longer return in time.
      for (std::size_t v = end; v < next_extent; ++v) {
        next[v] = 0;
      }
      next_extent = end;
      std::swap(cur_extent, next_extent);
      std::swap(cur, next);
      if (t % 2 == 1) {
        table.odd_counts_zero = table.odd_counts_zero && cur[0] == 0;
      } else {
        table.counts.push_back(cur[0]);
      }
    }
    return table;
  }

  // max_n p_2n^(1/2n); the sequence is nondecreasing, so this is the last
  // term. Never exceeds the spectral radius.
  inline double return_prob_lower(WalkTable const& t) {
    if (t.nmax() < 1) {
      fail(ErrorKind::invalid_argument, "need nmax >= 1");
    }
    double best = 0.0;
    for (std::size_t n = 1; n <= t.nmax(); ++n) {
      best = std::max(best, t.root(n));
    }
    return best;
  }

  // p_2n^(1/2n) <= p_2n+2^(1/(2n+2))  <=>  W_2n^(n+1) <= W_2n+2^n, checked in
  // exact integer arithmetic.
  inline bool roots_nondecreasing(WalkTable const& t) {
    for (std::size_t n = 1; n < t.nmax(); ++n) {
      if (boost::multiprecision::pow(t.counts[n], static_cast<unsigned>(n + 1))
          > boost::multiprecision::pow(t.counts[n + 1], static_cast<unsigned>(n))) {
        return false;
      }
    }
    return true;
  }

  // W_2(n+m) >= W_2n W_2m for all n + m <= nmax.
  inline bool supermultiplicative(WalkTable const& t) {
    for (std::size_t n = 0; n <= t.nmax(); ++n) {
      for (std::size_t m = 0; n + m <= t.nmax(); ++m) {
        if (t.counts[n + m] < t.counts[n] * t.counts[m]) {
          return false;
        }
      }
    }
    return true;
  }

  // CSV with columns n, W_2n, p_2n, p_2n^(1/2n).
  inline void write_walk_csv(std::ostream& out, WalkTable const& t) {
    out << "n,W_2n,p_2n,p_2n^(1/2n)\n";
    char buf[64];
    for (std::size_t n = 0; n <= t.nmax(); ++n) {
      out << n << ',' << t.counts[n].str() << ',';
      std::snprintf(buf, sizeof buf, "%.17g", t.return_probability(n));
      out << buf << ',';
      if (n == 0) {
        out << "1";
      } else {
        std::snprintf(buf, sizeof buf, "%.17g", t.root(n));
        out << buf;
      }
      out << '\n';
    }
  }

  struct EigenEstimate {
    double      value;       // ||A v|| / (k ||v||) at the last iterate
    std::size_t iterations;
    bool        converged;
  };

  // Power iteration on (1/k) A with A the in-ball adjacency, from the
  // indicator of the identity. The graph is bipartite, so the Rayleigh
  // quotient <v, Av> of a one-sided iterate vanishes; the estimate used is
  // ||A v|| / ||v||, which increases monotonically to the top eigenvalue
  // from below. Stops when successive estimates differ by less than tol.
  inline EigenEstimate dirichlet_power_iteration(Ball const& b,
                                                 double tol,
                                                 std::size_t max_iterations = 100'000) {
    if (!(tol > 0.0 && tol <= 1e-6)) {
      fail(ErrorKind::invalid_argument, "eigenvalue tolerance must lie in (0, 1e-6]");
    }
    double const        k = static_cast<double>(b.degree());
    std::vector<double> v(b.size(), 0.0);
    std::vector<double> w(b.size(), 0.0);
    v[0]             = 1.0;
    double estimate  = 0.0;
    for (std::size_t it = 1; it <= max_iterations; ++it) {
      double norm2 = 0.0;
      for (VertexId x = 0; x < b.size(); ++x) {
        double sum = 0.0;
        for (VertexId y : b.neighbors(x)) {
          if (y != absent) {
            sum += v[y];
          }
        }
        w[x] = sum / k;
        norm2 += w[x] * w[x];
      }
      double norm = std::sqrt(norm2);  // ||v|| == 1
      if (norm == 0.0) {
        return {0.0, it, true};
      }
      for (auto& x : w) {
        x /= norm;
      }
      std::swap(v, w);
      if (it > 1 && std::abs(norm - estimate) < tol) {
        return {norm, it, true};
      }
      estimate = norm;
    }
    return {estimate, max_iterations, false};
  }

  inline double dirichlet_top_eigenvalue(Ball const& b,
                                         double tol,
                                         std::size_t max_iterations = 100'000) {
    auto e = dirichlet_power_iteration(b, tol, max_iterations);
    if (!e.converged) {
      fail(ErrorKind::convergence,
           "power iteration did not converge after " + std::to_string(e.iterations)
               + " iterations; last estimate " + std::to_string(e.value));
    }
    return e.value;
  }

}  // namespace surfwalk

#endif  // SURFWALK_SPECTRAL_WALKS_HPP_
