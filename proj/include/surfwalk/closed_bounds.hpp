#ifndef SURFWALK_CLOSED_BOUNDS_HPP_
#define SURFWALK_CLOSED_BOUNDS_HPP_

// Closed-form bounds on the spectral radius of simple random walks, and the
// finite-ball certification of the level-based 1-form row sums.

#include <cmath>    // for sqrt, log, exp
#include <cstddef>  // for size_t
#include <map>      // for map
#include <string>   // for string
#include <utility>  // for move

#include "cayley_ball.hpp"
#include "error.hpp"

namespace surfwalk {

  enum class BoundMethod {
    kesten_lower,
    kesten_girth_lower,
    one_form,
    one_form_smallcancel,
    poisson,
    tree,
    one_relator
  };

  inline char const* to_string(BoundMethod m) noexcept {
    switch (m) {
      case BoundMethod::kesten_lower:
        return "kesten-lower";
      case BoundMethod::kesten_girth_lower:
        return "kesten-girth-lower";
      case BoundMethod::one_form:
        return "one-form";
      case BoundMethod::one_form_smallcancel:
        return "one-form-smallcancel";
      case BoundMethod::poisson:
        return "poisson";
      case BoundMethod::tree:
        return "tree";
      case BoundMethod::one_relator:
        return "one-relator";
    }
    return "unknown";
  }

  inline bool is_lower_bound(BoundMethod m) noexcept {
    return m == BoundMethod::kesten_lower || m == BoundMethod::kesten_girth_lower;
  }

  struct BoundReport {
    // Genus g for surface groups, otherwise the generator count h.
    int                           group;
    bool                          group_is_genus = true;
    BoundMethod                   method;
    std::map<std::string, double> parameters;
    double                        value;
    bool                          certified = false;
  };

  inline BoundReport make_report(int group,
                                 BoundMethod method,
                                 double value,
                                 std::map<std::string, double> parameters = {},
                                 bool certified = false) {
    if (!(value > 0.0 && value <= 1.0)) {
      fail(ErrorKind::internal,
           std::string("bound ") + to_string(method) + " is outside (0, 1]");
    }
    return BoundReport{group, true, method, std::move(parameters), value, certified};
  }

  // 2 sqrt(k - 1) / k, the spectral radius of the k-regular tree.
  inline double kesten_lower(int k) {
    if (k < 3) {
      fail(ErrorKind::invalid_argument, "invalid degree: k must be >= 3");
    }
    return 2.0 * std::sqrt(k - 1.0) / k;
  }

  struct GirthLowerBound {
    double base;        // sqrt(4g - 1) / (2g)
    double correction;  // (4 - 2 sqrt 3) / ((4g + 2) (4g)^(4g + 2))
    double log10_correction;

    // The correction falls below one ulp of the base for g >= 3, so the sum
    // only differs from the base in double precision for g = 2.
    double value() const noexcept {
      return base + correction;
    }
  };

  // Kesten's girth-corrected lower bound. The correction is evaluated in the
  // log domain: (4g)^(4g+2) overflows a double near g = 38.
  inline GirthLowerBound kesten_girth_lower(int g) {
    if (g < 2) {
      fail(ErrorKind::invalid_argument, "invalid genus: g must be >= 2");
    }
    double const k      = 4.0 * g;
    double const log_c  = std::log(4.0 - 2.0 * std::sqrt(3.0)) - std::log(k + 2.0)
                         - (k + 2.0) * std::log(k);
    return GirthLowerBound{std::sqrt(k - 1.0) / (2.0 * g), std::exp(log_c),
                           log_c / std::log(10.0)};
  }

  // Worst (type 2) row sum of the level 1-form with weight b, divided by k.
  inline double one_form_c(int k, double b) {
    if (k < 4 || k % 2 != 0) {
      fail(ErrorKind::invalid_argument, "one-form bound needs even k >= 4");
    }
    if (!(b >= 1.0)) {
      fail(ErrorKind::invalid_argument, "invalid parameter: b must be >= 1");
    }
    return ((k - 2.0) / b + 2.0 * b) / k;
  }

  struct OneFormOptimum {
    double b;
    double c;
  };

  // Minimiser b* = sqrt((k - 2) / 2), giving c* = 2 sqrt(2 (k - 2)) / k.
  inline OneFormOptimum one_form_bound(int k) {
    double b = std::sqrt((k - 2.0) / 2.0);
    return {b, one_form_c(k, b)};
  }

  // 2 sqrt(l - 1) / k + (k - l) / k: norm bound from a spanning forest of
  // l-regular trees.
  inline double tree_bound(int k, int l) {
    if (k < 3) {
      fail(ErrorKind::invalid_argument, "invalid degree: k must be >= 3");
    }
    if (l < 2 || l > k - 1) {
      fail(ErrorKind::invalid_argument, "invalid parameter: need 2 <= l <= k - 1");
    }
    return (2.0 * std::sqrt(l - 1.0) + (k - l)) / k;
  }

  // (sqrt(2h - 3) + 1) / h for one-relator groups on h >= 2 generators.
  inline double one_relator_bound(int h) {
    if (h < 2) {
      fail(ErrorKind::invalid_argument, "invalid generator count: h must be >= 2");
    }
    return (std::sqrt(2.0 * h - 3.0) + 1.0) / h;
  }

  struct OneFormCertificate {
    double      b;
    double      bound;         // k * one_form_c(k, b)
    double      max_row_sum;   // over interior vertices
    VertexId    argmax = absent;
    // Observed row sums by type; -1 when no interior vertex has that type.
    double      row_sum_by_type[3] = {-1.0, -1.0, -1.0};
    std::size_t vertices_checked           = 0;
    std::size_t level_preserving_edges     = 0;
    bool        certified                  = false;
  };

  // Row sums of the 1-form omega(e) = 1/b if l(e+) < l(e-), b if
  // l(e+) > l(e-), 1 otherwise, over edges heading into each interior vertex.
  inline OneFormCertificate verify_one_form(Ball const& ball, TypeReport const& types, double b) {
    int const k = static_cast<int>(ball.degree());
    OneFormCertificate cert;
    cert.b           = b;
    cert.bound       = k * one_form_c(k, b);
    cert.max_row_sum = 0.0;
    bool consistent  = true;
    for (VertexId x = 0; x < ball.size(); ++x) {
      if (!ball.interior(x)) {
        continue;
      }
      double sum = 0.0;
      for (VertexId y : ball.neighbors(x)) {
        if (ball.level(x) < ball.level(y)) {
          sum += 1.0 / b;
        } else if (ball.level(x) > ball.level(y)) {
          sum += b;
        } else {
          sum += 1.0;
          ++cert.level_preserving_edges;
        }
      }
      ++cert.vertices_checked;
      if (sum > cert.max_row_sum) {
        cert.max_row_sum = sum;
        cert.argmax      = x;
      }
      int t = types.type_of[x];
      if (t <= 2) {
        double& seen = cert.row_sum_by_type[t];
        if (seen < 0.0) {
          seen = sum;
        } else if (std::abs(seen - sum) > 1e-12) {
          consistent = false;
        }
      }
    }
    if (cert.level_preserving_edges > 0 && ball.presentation().genus() > 0) {
      fail(ErrorKind::internal, "level-preserving edge in a surface group ball");
    }
    cert.certified = consistent && cert.max_row_sum <= cert.bound + 1e-12;
    return cert;
  }

}  // namespace surfwalk

#endif  // SURFWALK_CLOSED_BOUNDS_HPP_
