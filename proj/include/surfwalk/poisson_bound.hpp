#ifndef SURFWALK_POISSON_BOUND_HPP_
#define SURFWALK_POISSON_BOUND_HPP_

// Upper bound on the spectral radius of the surface group Gamma_g obtained
// from powers of the hyperbolic Poisson kernel evaluated at the centres of
// the 4g tiles adjacent to a tile of the regular {4g, 4g} tiling:
//
//   mu_g <= max_phi  (1/4g) sum_j b(D_g, phi + j 2pi/4g)^nu,
//   b(rho, phi) = 1 / (cosh rho - sinh rho cos phi),
//   D_g = 2 arccosh(cot(pi/4g)),
//
// together with numerical certificates for the calculus facts showing that
// the maximum over phi sits at phi = 0 when 2 <= g <= 27 and 0 <= nu <= 1.

#include <array>     // for array
#include <cmath>     // for cosh, sinh, pow, atan2, ...
#include <cstddef>   // for size_t
#include <numbers>   // for pi
#include <optional>  // for optional
#include <string>    // for to_string
#include <vector>    // for vector

#include "error.hpp"
#include "golden_section.hpp"

namespace surfwalk {

  struct PoissonConstants {
    int    genus;
    double x;        // cot^2(pi/4g)
    double dist;     // distance between centres of adjacent tiles
    double c;        // cosh(dist)
    double s;        // sinh(dist)
    double delta;    // arccos(s/c)
    double epsilon;  // arccos(s/c - 1/(s c))
  };

  namespace detail {
    inline bool close_rel(double a, double b, double rel) {
      return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
    }
  }  // namespace detail

  // The arccos definitions of delta and epsilon lose accuracy as their
  // arguments approach 1, so the angles are computed from the equivalent
  // tangents tan(delta) = 1/s and tan(epsilon) = sqrt(3 s^2 - 1) / (s^2 - 1)
  // and cross-checked against the arccos forms.
  inline PoissonConstants poisson_constants(int g) {
    if (g < 2) {
      fail(ErrorKind::invalid_argument,
           "invalid genus " + std::to_string(g) + ": genus must be >= 2");
    }
    double const angle = std::numbers::pi / (4.0 * g);
    double const cot   = 1.0 / std::tan(angle);
    PoissonConstants k;
    k.genus   = g;
    k.x       = cot * cot;
    k.dist    = 2.0 * std::acosh(cot);
    k.c       = std::cosh(k.dist);
    k.s       = std::sinh(k.dist);
    k.delta   = std::atan2(1.0, k.s);
    k.epsilon = std::atan2(std::sqrt(3.0 * k.s * k.s - 1.0), k.s * k.s - 1.0);

    auto check = [g](bool ok, char const* what) {
      if (!ok) {
        fail(ErrorKind::internal,
             std::string("Poisson constants for g = ") + std::to_string(g) + ": " + what);
      }
    };
    check(detail::close_rel(k.c, 2.0 * k.x - 1.0, 1e-12), "cosh D != 2X - 1");
    check(detail::close_rel(k.s, 2.0 * std::sqrt(k.x * (k.x - 1.0)), 1e-12),
          "sinh D != 2 sqrt(X (X - 1))");
    // C^2 - S^2 = 1 holds to rounding relative to C^2.
    check(std::abs(k.c * k.c - k.s * k.s - 1.0) <= 1e-12 * k.c * k.c, "cosh^2 - sinh^2 != 1");
    check(std::abs(k.delta - std::acos(k.s / k.c)) <= 1e-9, "delta mismatch");
    check(std::abs(k.epsilon - std::acos(k.s / k.c - 1.0 / (k.s * k.c))) <= 1e-9,
          "epsilon mismatch");
    check(0.0 < k.delta && k.delta < k.epsilon && k.epsilon < angle,
          "0 < delta < epsilon < pi/4g fails");
    check(k.x > 2.0, "cot^2(pi/4g) <= 2");
    return k;
  }

  // b(rho, phi) = 1 / (cosh rho - sinh rho cos phi), with the denominator
  // written as e^-rho + 2 sinh(rho) sin^2(phi/2) to avoid cancellation.
  inline double kernel_b(double rho, double phi) {
    double h = std::sin(phi / 2.0);
    return 1.0 / (std::exp(-rho) + 2.0 * std::sinh(rho) * h * h);
  }

  // (C - S cos phi)^(-nu) = b(D, phi)^nu.
  inline double kernel_power(PoissonConstants const& k, double nu, double phi) {
    double h = std::sin(phi / 2.0);
    double q = std::exp(-k.dist) + 2.0 * k.s * h * h;
    return std::pow(q, -nu);
  }

  // Mean of the kernel power over the 4g equally spaced directions
  // phi + j 2pi/4g.
  inline double poisson_average(PoissonConstants const& k, double nu, double phi) {
    int const    n    = 4 * k.genus;
    double const step = 2.0 * std::numbers::pi / n;
    double       sum  = 0.0;
    for (int j = 0; j < n; ++j) {
      sum += kernel_power(k, nu, phi + j * step);
    }
    return sum / n;
  }

  struct PoissonEvaluation {
    double nu;
    double step;           // grid spacing actually used
    double argmax;         // in [0, pi/4g]
    double max_value;
    double value_at_zero;

    bool max_at_zero() const noexcept {
      return argmax <= 1e-9;
    }
  };

  // Maximum of phi -> poisson_average over one fundamental domain
  // [0, pi/4g] (the function is even with period pi/2g): uniform grid, then
  // golden-section refinement around the best grid point. Ties resolve to
  // the smaller phi.
  inline PoissonEvaluation scan_max_phi(PoissonConstants const& k, double nu, double step) {
    double const half_period = std::numbers::pi / (4.0 * k.genus);
    if (!(step > 0.0 && step <= std::numbers::pi / (64.0 * k.genus))) {
      fail(ErrorKind::invalid_argument, "phi step must lie in (0, pi/(64 g)]");
    }
    auto const n = static_cast<std::size_t>(std::ceil(half_period / step));
    PoissonEvaluation ev{nu, half_period / static_cast<double>(n), 0.0, 0.0, 0.0};
    ev.value_at_zero = poisson_average(k, nu, 0.0);
    ev.max_value     = ev.value_at_zero;
    for (std::size_t i = 1; i <= n; ++i) {
      double phi = half_period * static_cast<double>(i) / static_cast<double>(n);
      double v   = poisson_average(k, nu, phi);
      if (v > ev.max_value) {
        ev.max_value = v;
        ev.argmax    = phi;
      }
    }
    double lo = std::max(0.0, ev.argmax - ev.step);
    double hi = std::min(half_period, ev.argmax + ev.step);
    auto refined = golden_section_maximize(
        [&](double phi) { return poisson_average(k, nu, phi); }, lo, hi, 1e-12);
    if (refined.value > ev.max_value) {
      ev.max_value = refined.value;
      ev.argmax    = refined.x;
    }
    return ev;
  }

  struct NuOptimum {
    double nu;
    double bound;     // poisson_average(k, nu, 0)
    bool   unimodal;  // sampled values on a 101-point grid fall then rise
  };

  // Minimises nu -> poisson_average(k, nu, 0) over [0, 1].
  inline NuOptimum optimize_nu(PoissonConstants const& k, double tol) {
    if (!(tol > 0.0 && tol <= 1e-3)) {
      fail(ErrorKind::invalid_argument, "nu tolerance must lie in (0, 1e-3]");
    }
    auto f = [&](double nu) { return poisson_average(k, nu, 0.0); };

    constexpr int samples = 100;
    std::array<double, samples + 1> values{};
    for (int i = 0; i <= samples; ++i) {
      values[static_cast<std::size_t>(i)] = f(static_cast<double>(i) / samples);
    }
    std::size_t turn = 0;
    while (turn + 1 <= samples && values[turn + 1] < values[turn]) {
      ++turn;
    }
    bool unimodal = true;
    for (std::size_t i = turn; i + 1 <= samples; ++i) {
      unimodal = unimodal && values[i + 1] > values[i];
    }

    auto m = golden_section_minimize(f, 0.0, 1.0, tol);
    return {m.x, m.value, unimodal};
  }

  struct BetaDerivatives {
    double beta;
    double d1;
    double d2;
    double d3;
  };

  // beta(phi) = (C - S cos phi)^(-nu) and its first three derivatives in phi,
  // from the closed forms
  //   beta'   = -nu S sin(phi) q^-(nu+1)
  //   beta''  =  nu S (S - C cos(phi) + nu S sin^2(phi)) q^-(nu+2)
  //   beta''' =  nu S sin(phi) (1 - (3 nu + 1) S (S - C cos(phi))
  //                               - nu^2 S^2 sin^2(phi)) q^-(nu+3)
  // where q = C - S cos(phi).
  inline BetaDerivatives beta_derivatives(PoissonConstants const& k, double nu, double phi) {
    double const h   = std::sin(phi / 2.0);
    double const q   = std::exp(-k.dist) + 2.0 * k.s * h * h;
    double const sn  = std::sin(phi);
    double const cs  = std::cos(phi);
    double const ssc = k.s - k.c * cs;
    double const b   = std::pow(q, -nu);
    return {b,
            -nu * k.s * sn * b / q,
            nu * k.s * (ssc + nu * k.s * sn * sn) * b / (q * q),
            nu * k.s * sn
                * (1.0 - (3.0 * nu + 1.0) * k.s * ssc - nu * nu * k.s * k.s * sn * sn) * b
                / (q * q * q)};
  }

  struct SignCheck {
    double      lo;       // interval [lo, pi]
    double      worst;    // max for <= 0 conditions, min for >= 0
    double      worst_at;
    bool        passed;
  };

  struct Lemma4Certificate {
    double      nu;
    std::size_t grid;
    SignCheck   d1;  // beta'   <= 0 on [0, pi]
    SignCheck   d2;  // beta''  >= 0 on [delta, pi]
    SignCheck   d3;  // beta''' <= 0 on [epsilon, pi]

    bool certified() const noexcept {
      return d1.passed && d2.passed && d3.passed;
    }
  };

  inline constexpr double sign_slack = 1e-12;

  // Sign conditions on the derivatives of beta, sampled on uniform grids of
  // grid + 1 points over each interval.
  inline Lemma4Certificate lemma4_check(PoissonConstants const& k, double nu, std::size_t grid) {
    if (!(nu >= 0.0 && nu <= 1.0)) {
      fail(ErrorKind::invalid_argument, "nu must lie in [0, 1]");
    }
    if (grid < 10'000) {
      fail(ErrorKind::invalid_argument, "grid must have at least 1e4 points");
    }
    auto scan = [&](double lo, int which, bool want_nonpositive) {
      SignCheck out{lo, want_nonpositive ? -HUGE_VAL : HUGE_VAL, lo, true};
      for (std::size_t i = 0; i <= grid; ++i) {
        double phi = lo + (std::numbers::pi - lo) * static_cast<double>(i)
                              / static_cast<double>(grid);
        auto   d   = beta_derivatives(k, nu, phi);
        double v   = which == 1 ? d.d1 : which == 2 ? d.d2 : d.d3;
        if (want_nonpositive ? v > out.worst : v < out.worst) {
          out.worst    = v;
          out.worst_at = phi;
        }
      }
      out.passed = want_nonpositive ? out.worst <= sign_slack : out.worst >= -sign_slack;
      return out;
    };
    return {nu, grid, scan(0.0, 1, true), scan(k.delta, 2, false), scan(k.epsilon, 3, true)};
  }

  // 16X^4 - 44X^3 + 20X^2 + 9X + 1, whose positivity for X > 2 gives
  // epsilon_g < pi/4g.
  inline constexpr std::array<double, 5> quartic_coefficients{1.0, 9.0, 20.0, -44.0, 16.0};

  // Coefficients (ascending) of the same quartic in powers of (X - 2),
  // computed by repeated synthetic division.
  inline std::array<double, 5> shifted_quartic_coefficients() {
    std::array<double, 5> a = quartic_coefficients;
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = a.size() - 1; j > i; --j) {
        a[j - 1] += 2.0 * a[j];
      }
    }
    return a;
  }

  inline double horner(std::array<double, 5> const& a, double x) {
    double v = 0.0;
    for (std::size_t i = a.size(); i-- > 0;) {
      v = v * x + a[i];
    }
    return v;
  }

  struct QuarticCheck {
    double x;
    double value;          // plain form at X
    double shifted_value;  // shifted form at X - 2
    bool   shifted_coefficients_positive;
    bool   passed;         // value > 0 and X > 2
  };

  inline QuarticCheck quartic_check_at(double x) {
    auto const shifted = shifted_quartic_coefficients();
    QuarticCheck q;
    q.x             = x;
    q.value         = horner(quartic_coefficients, x);
    q.shifted_value = horner(shifted, x - 2.0);
    q.shifted_coefficients_positive = true;
    for (double a : shifted) {
      q.shifted_coefficients_positive = q.shifted_coefficients_positive && a > 0.0;
    }
    if (!detail::close_rel(q.value, q.shifted_value, 1e-9)) {
      fail(ErrorKind::internal, "quartic and its shifted form disagree");
    }
    q.passed = q.value > 0.0 && x > 2.0;
    return q;
  }

  inline QuarticCheck quartic_check(int g) {
    return quartic_check_at(poisson_constants(g).x);
  }

  // (4g - 1) (S - C cos(pi/2g) + nu S sin^2(pi/2g)) / (C - S cos(pi/2g))^2,
  // which must not exceed 1/delta for the maximum to sit at phi = 0.
  inline double pocket_ratio(PoissonConstants const& k, double nu) {
    double const a  = std::numbers::pi / (2.0 * k.genus);
    double const cs = std::cos(a);
    double const sn = std::sin(a);
    double const q  = k.c - k.s * cs;
    return (4.0 * k.genus - 1.0) * (k.s - k.c * cs + nu * k.s * sn * sn) / (q * q);
  }

  struct PocketRow {
    int    genus;
    double delta;
    double inv_delta;
    double ratio;   // pocket_ratio at nu = 1
    double margin;  // inv_delta - ratio
    bool   passed;
  };

  struct PocketTable {
    std::vector<PocketRow> rows;
    std::optional<int>     first_failure;

    bool all_passed() const noexcept {
      return !first_failure.has_value();
    }
  };

  inline PocketRow pocket_row(int g) {
    auto   k     = poisson_constants(g);
    double inv   = 1.0 / k.delta;
    double ratio = pocket_ratio(k, 1.0);
    return {g, k.delta, inv, ratio, inv - ratio, inv >= ratio};
  }

  inline PocketTable pocket_check(int g_min, int g_max) {
    if (g_min < 2 || g_max < g_min) {
      fail(ErrorKind::invalid_argument, "pocket check needs 2 <= gMin <= gMax");
    }
    PocketTable t;
    for (int g = g_min; g <= g_max; ++g) {
      t.rows.push_back(pocket_row(g));
      if (!t.rows.back().passed && !t.first_failure) {
        t.first_failure = g;
      }
    }
    return t;
  }

  inline PocketTable pocket_check(int g_max) {
    return pocket_check(2, g_max);
  }

  struct PoissonOptions {
    double nu_tolerance = 1e-6;
    // 0 selects pi / (4g * 1024).
    double phi_step     = 0.0;
    std::size_t lemma4_grid = 100'000;
  };

  struct PoissonResult {
    PoissonConstants  constants;
    NuOptimum         optimum;
    PoissonEvaluation scan;
    Lemma4Certificate lemma4;
    PocketRow         pocket;
    // max over the phi scan at the optimised nu; valid even when the
    // maximum is not at phi = 0.
    double bound;

    bool certified() const noexcept {
      return scan.max_at_zero() && lemma4.certified() && pocket.passed;
    }
  };

  inline PoissonResult poisson_upper_bound(int g, PoissonOptions const& options = {}) {
    auto   k    = poisson_constants(g);
    double step = options.phi_step > 0.0 ? options.phi_step
                                         : std::numbers::pi / (4.0 * g * 1024.0);
    auto   opt  = optimize_nu(k, options.nu_tolerance);
    auto   scan = scan_max_phi(k, opt.nu, step);
    return {k,
            opt,
            scan,
            lemma4_check(k, opt.nu, options.lemma4_grid),
            pocket_row(g),
            std::max(scan.max_value, opt.bound)};
  }

}  // namespace surfwalk

#endif  // SURFWALK_POISSON_BOUND_HPP_
