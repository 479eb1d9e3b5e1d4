#ifndef SURFWALK_REPORT_HPP_
#define SURFWALK_REPORT_HPP_

// Table reproduction, certification runs and their serialisation (markdown,
// CSV, JSON). Everything here is deterministic for a fixed configuration;
// the only varying field is the JSON timestamp, which honours
// SOURCE_DATE_EPOCH.

#include <array>      // for array
#include <cmath>      // for nearbyint, abs
#include <cstdio>     // for snprintf
#include <cstdlib>    // for getenv
#include <ctime>      // for time, gmtime_r, strftime
#include <optional>   // for optional
#include <ostream>    // for ostream
#include <string>     // for string
#include <string_view>
#include <vector>     // for vector

#include <json.hpp>

#include "cayley_ball.hpp"
#include "closed_bounds.hpp"
#include "error.hpp"
#include "forest.hpp"
#include "poisson_bound.hpp"
#include "spectral_walks.hpp"

namespace surfwalk {

#ifdef SURFWALK_VERSION
  inline constexpr char const* version = SURFWALK_VERSION;
#else
  inline constexpr char const* version = "0.1.0";
#endif

  using json = nlohmann::json;

  enum class Format { md, csv, json };

  struct GenusRange {
    int first = 2;
    int last  = 10;
  };

  // "G" or "A..B".
  inline GenusRange parse_genus_range(std::string_view text) {
    auto to_int = [&](std::string_view s) {
      if (s.empty() || s.size() > 6) {
        fail(ErrorKind::invalid_argument, "malformed genus range '" + std::string(text) + "'");
      }
      int v = 0;
      for (char ch : s) {
        if (ch < '0' || ch > '9') {
          fail(ErrorKind::invalid_argument, "malformed genus range '" + std::string(text) + "'");
        }
        v = 10 * v + (ch - '0');
      }
      return v;
    };
    auto dots = text.find("..");
    if (dots == std::string_view::npos) {
      int g = to_int(text);
      return {g, g};
    }
    return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
  }

  struct RunConfig {
    std::string                command = "table";
    GenusRange                 genus;
    int                        radius        = 6;
    std::size_t                nmax          = 7;
    double                     nu_tolerance  = 1e-6;
    double                     phi_step      = 0.0;  // 0: automatic
    double                     eig_tolerance = 1e-10;
    Format                     format        = Format::md;
    std::optional<std::string> output_path;
    std::optional<std::string> dump_path;
    std::size_t                vertex_cap = 10'000'000;

    void validate() const {
      if (genus.first < 2 || genus.last > 100 || genus.first > genus.last) {
        fail(ErrorKind::invalid_argument, "genus range must lie within [2, 100]");
      }
      if (radius < 0) {
        fail(ErrorKind::invalid_argument, "radius must be >= 0");
      }
      if (!(nu_tolerance > 0.0) || phi_step < 0.0 || !(eig_tolerance > 0.0)) {
        fail(ErrorKind::invalid_argument, "tolerances must be positive");
      }
    }

    json to_json() const {
      json j{{"genus", {genus.first, genus.last}},
             {"radius", radius},
             {"nmax", nmax},
             {"nuTolerance", nu_tolerance},
             {"phiStep", phi_step},
             {"eigTolerance", eig_tolerance},
             {"format", format == Format::md ? "md" : format == Format::csv ? "csv" : "json"},
             {"vertexCap", vertex_cap}};
      return j;
    }
  };

  // Half-to-even rounding to `decimals` places (of the scaled binary value).
  inline double round_half_even(double x, int decimals) {
    double scale = std::pow(10.0, decimals);
    return std::nearbyint(x * scale) / scale;
  }

  inline std::string fixed(double x, int decimals = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, round_half_even(x, decimals));
    return buf;
  }

  inline json bound_to_json(BoundReport const& r) {
    return json{{r.group_is_genus ? "genus" : "generators", r.group},
                {"method", to_string(r.method)},
                {"parameters", r.parameters},
                {"value", r.value},
                {"certified", r.certified}};
  }

  ////////////////////////////////////////////////////////////////////////////
  // Table
  ////////////////////////////////////////////////////////////////////////////

  struct TableRow {
    int                      genus;
    double                   kesten_lower;
    double                   one_form_upper;
    double                   nu_star;
    double                   poisson_upper;
    double                   tree_upper;
    std::vector<BoundReport> bounds;
  };

  struct ReferenceRow {
    int    genus;
    double kesten_lower;
    double one_form_upper;
    double nu_star;
    double poisson_upper;
    double tree_upper;
  };

  // Published reference values for g = 2..10, as printed (four decimals).
  inline constexpr std::array<ReferenceRow, 9> reference_table{{
      {2, .6614, .8660, .2990, .7675, .7373},
      {3, .5529, .7453, .2944, .6588, .6104},
      {4, .4841, .6615, .2932, .5872, .5303},
      {5, .4359, .6000, .2926, .5352, .4742},
      {6, .3997, .5529, .2920, .4953, .4325},
      {7, .3712, .5153, .2916, .4633, .3999},
      {8, .3480, .4841, .2912, .4369, .3736},
      {9, .3287, .4581, .2908, .4147, .3518},
      {10, .3123, .4359, .2905, .3956, .3332},
  }};

  inline constexpr double reference_bound_tolerance = 1e-4;
  inline constexpr double reference_nu_tolerance    = 1e-3;

  inline std::optional<ReferenceRow> reference_row(int g) {
    for (auto const& r : reference_table) {
      if (r.genus == g) {
        return r;
      }
    }
    return std::nullopt;
  }

  struct FixtureDeviation {
    int         genus;
    std::string column;
    double      computed;
    double      reference;
    double      tolerance;

    double delta() const noexcept {
      return std::abs(computed - reference);
    }
    bool within() const noexcept {
      return delta() <= tolerance;
    }
  };

  // Every compared cell for rows that have a reference (g <= 10).
  inline std::vector<FixtureDeviation> compare_with_reference(TableRow const& row) {
    std::vector<FixtureDeviation> out;
    auto ref = reference_row(row.genus);
    if (!ref) {
      return out;
    }
    double const tb = reference_bound_tolerance;
    out.push_back({row.genus, "kestenLower", row.kesten_lower, ref->kesten_lower, tb});
    out.push_back({row.genus, "oneFormUpper", row.one_form_upper, ref->one_form_upper, tb});
    out.push_back({row.genus, "nuStar", row.nu_star, ref->nu_star, reference_nu_tolerance});
    out.push_back({row.genus, "poissonUpper", row.poisson_upper, ref->poisson_upper, tb});
    out.push_back({row.genus, "treeUpper", row.tree_upper, ref->tree_upper, tb});
    return out;
  }

  inline TableRow table_row(int g, PoissonOptions const& options = {}) {
    int const k       = 4 * g;
    auto      one     = one_form_bound(k);
    auto      poisson = poisson_upper_bound(g, options);
    TableRow  row{g,
                 kesten_lower(k),
                 one.c,
                 poisson.optimum.nu,
                 poisson.bound,
                 tree_bound(k, k - 1),
                 {}};
    auto girth = kesten_girth_lower(g);
    row.bounds.push_back(make_report(g, BoundMethod::kesten_lower, row.kesten_lower,
                                     {{"k", k}}, true));
    row.bounds.push_back(make_report(g, BoundMethod::kesten_girth_lower, girth.value(),
                                     {{"k", k},
                                      {"correction", girth.correction},
                                      {"log10Correction", girth.log10_correction}},
                                     true));
    row.bounds.push_back(make_report(g, BoundMethod::one_form, row.one_form_upper,
                                     {{"k", k}, {"b", one.b}}));
    row.bounds.push_back(make_report(g, BoundMethod::poisson, row.poisson_upper,
                                     {{"nu", poisson.optimum.nu},
                                      {"valueAtZero", poisson.optimum.bound},
                                      {"argmaxPhi", poisson.scan.argmax}},
                                     poisson.certified()));
    row.bounds.push_back(make_report(g, BoundMethod::tree, row.tree_upper,
                                     {{"k", k}, {"l", k - 1}}));
    for (auto const& b : row.bounds) {
      if (!is_lower_bound(b.method) && !(row.kesten_lower < b.value)) {
        fail(ErrorKind::internal, "lower bound exceeds an upper bound for g = "
                                      + std::to_string(g));
      }
    }
    return row;
  }

  struct TableResult {
    std::vector<TableRow>         rows;
    std::vector<FixtureDeviation> mismatches;

    int exit_code() const noexcept {
      return mismatches.empty() ? 0 : 2;
    }
  };

  inline TableResult run_table(RunConfig const& cfg) {
    cfg.validate();
    PoissonOptions options;
    options.nu_tolerance = cfg.nu_tolerance;
    options.phi_step     = cfg.phi_step;
    TableResult result;
    for (int g = cfg.genus.first; g <= cfg.genus.last; ++g) {
      result.rows.push_back(table_row(g, options));
      for (auto const& d : compare_with_reference(result.rows.back())) {
        if (!d.within()) {
          result.mismatches.push_back(d);
        }
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Documents
  ////////////////////////////////////////////////////////////////////////////

  inline std::string timestamp() {
    std::time_t t = std::time(nullptr);
    if (char const* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
      t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
    }
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
  }

  inline json document(RunConfig const& cfg, char const* key, json payload) {
    return json{{"tool", "surfwalk"},
                {"version", version},
                {"command", cfg.command},
                {"config", cfg.to_json()},
                {key, std::move(payload)},
                {"timestamp", timestamp()}};
  }

  inline void write_table(std::ostream& out, RunConfig const& cfg, TableResult const& result) {
    switch (cfg.format) {
      case Format::md:
        out << "| g | kesten-lower | one-form | nu* | poisson | tree |\n"
            << "|---|---|---|---|---|---|\n";
        for (auto const& r : result.rows) {
          out << "| " << r.genus << " | " << fixed(r.kesten_lower) << " | "
              << fixed(r.one_form_upper) << " | " << fixed(r.nu_star) << " | "
              << fixed(r.poisson_upper) << " | " << fixed(r.tree_upper) << " |\n";
        }
        break;
      case Format::csv:
        out << "g,kesten_lower,one_form_upper,nu_star,poisson_upper,tree_upper\n";
        for (auto const& r : result.rows) {
          out << r.genus << ',' << fixed(r.kesten_lower) << ',' << fixed(r.one_form_upper)
              << ',' << fixed(r.nu_star) << ',' << fixed(r.poisson_upper) << ','
              << fixed(r.tree_upper) << '\n';
        }
        break;
      case Format::json: {
        json rows = json::array();
        for (auto const& r : result.rows) {
          json row{{"g", r.genus},
                   {"kestenLower", r.kesten_lower},
                   {"oneFormUpper", r.one_form_upper},
                   {"nuStar", r.nu_star},
                   {"poissonUpper", r.poisson_upper},
                   {"treeUpper", r.tree_upper},
                   {"bounds", json::array()}};
          for (auto const& b : r.bounds) {
            row["bounds"].push_back(bound_to_json(b));
          }
          auto cells = compare_with_reference(r);
          if (!cells.empty()) {
            json ref = json::object();
            bool ok  = true;
            for (auto const& c : cells) {
              ref[c.column] = c.reference;
              ok            = ok && c.within();
            }
            ref["withinTolerance"] = ok;
            row["reference"]       = ref;
          }
          rows.push_back(row);
        }
        out << document(cfg, "rows", rows).dump(2) << '\n';
        break;
      }
    }
  }

  inline void write_mismatches(std::ostream& err, std::vector<FixtureDeviation> const& ds) {
    char buf[256];
    for (auto const& d : ds) {
      std::snprintf(buf, sizeof buf,
                    "fixture mismatch: g=%d %s computed %.6f reference %.4f |delta| %.2e > %.0e\n",
                    d.genus, d.column.c_str(), d.computed, d.reference, d.delta(), d.tolerance);
      err << buf;
    }
  }

  ////////////////////////////////////////////////////////////////////////////
  // Poisson and pocket check
  ////////////////////////////////////////////////////////////////////////////

  inline json poisson_to_json(PoissonResult const& r) {
    auto sign = [](SignCheck const& s) {
      return json{{"from", s.lo}, {"worst", s.worst}, {"worstAt", s.worst_at}, {"passed", s.passed}};
    };
    return json{{"g", r.constants.genus},
                {"constants",
                 {{"X", r.constants.x},
                  {"D", r.constants.dist},
                  {"C", r.constants.c},
                  {"S", r.constants.s},
                  {"delta", r.constants.delta},
                  {"epsilon", r.constants.epsilon}}},
                {"nuStar", r.optimum.nu},
                {"valueAtZero", r.optimum.bound},
                {"unimodal", r.optimum.unimodal},
                {"scan",
                 {{"step", r.scan.step}, {"argmax", r.scan.argmax}, {"max", r.scan.max_value}}},
                {"lemma4",
                 {{"grid", r.lemma4.grid},
                  {"d1", sign(r.lemma4.d1)},
                  {"d2", sign(r.lemma4.d2)},
                  {"d3", sign(r.lemma4.d3)}}},
                {"pocket",
                 {{"invDelta", r.pocket.inv_delta},
                  {"ratio", r.pocket.ratio},
                  {"passed", r.pocket.passed}}},
                {"bound", bound_to_json(make_report(r.constants.genus, BoundMethod::poisson,
                                                    r.bound, {{"nu", r.optimum.nu}},
                                                    r.certified()))}};
  }

  inline int run_poisson(std::ostream& out, RunConfig const& cfg) {
    cfg.validate();
    PoissonOptions options;
    options.nu_tolerance = cfg.nu_tolerance;
    options.phi_step     = cfg.phi_step;
    std::vector<PoissonResult> results;
    bool                       all_certified = true;
    for (int g = cfg.genus.first; g <= cfg.genus.last; ++g) {
      results.push_back(poisson_upper_bound(g, options));
      all_certified = all_certified && results.back().certified();
    }
    if (cfg.format == Format::json) {
      json rows = json::array();
      for (auto const& r : results) {
        rows.push_back(poisson_to_json(r));
      }
      out << document(cfg, "rows", rows).dump(2) << '\n';
    } else {
      char const* sep = cfg.format == Format::csv ? "," : " | ";
      if (cfg.format == Format::md) {
        out << "| g | nu* | bound | argmax phi | lemma4 | pocket | certified |\n"
            << "|---|---|---|---|---|---|---|\n";
      } else {
        out << "g,nu_star,bound,argmax_phi,lemma4,pocket,certified\n";
      }
      for (auto const& r : results) {
        char phi[32];
        std::snprintf(phi, sizeof phi, "%.3e", r.scan.argmax);
        out << (cfg.format == Format::md ? "| " : "") << r.constants.genus << sep
            << fixed(r.optimum.nu) << sep << fixed(r.bound) << sep << phi << sep
            << (r.lemma4.certified() ? "pass" : "FAIL") << sep
            << (r.pocket.passed ? "pass" : "FAIL") << sep << (r.certified() ? "yes" : "no")
            << (cfg.format == Format::md ? " |" : "") << '\n';
      }
    }
    return all_certified ? 0 : 1;
  }

  inline int run_pocket_check(std::ostream& out, RunConfig const& cfg) {
    cfg.validate();
    auto table = pocket_check(cfg.genus.first, cfg.genus.last);
    if (cfg.format == Format::json) {
      json rows = json::array();
      for (auto const& r : table.rows) {
        rows.push_back(json{{"g", r.genus},
                            {"delta", r.delta},
                            {"invDelta", r.inv_delta},
                            {"ratio", r.ratio},
                            {"margin", r.margin},
                            {"passed", r.passed}});
      }
      out << document(cfg, "rows", rows).dump(2) << '\n';
      return 0;
    }
    char buf[256];
    if (cfg.format == Format::md) {
      out << "| g | delta | 1/delta | R(1) | margin | pass |\n|---|---|---|---|---|---|\n";
    } else {
      out << "g,delta,inv_delta,ratio,margin,pass\n";
    }
    for (auto const& r : table.rows) {
      char const* fmt = cfg.format == Format::md ? "| %d | %.10e | %.6f | %.6f | %.6f | %s |\n"
                                                 : "%d,%.10e,%.6f,%.6f,%.6f,%s\n";
      std::snprintf(buf, sizeof buf, fmt, r.genus, r.delta, r.inv_delta, r.ratio, r.margin,
                    r.passed ? "pass" : "fail");
      out << buf;
    }
    if (cfg.format == Format::md) {
      out << "\n"
          << (table.first_failure ? "first failure at g = " + std::to_string(*table.first_failure)
                                  : std::string("all passed"))
          << '\n';
    }
    return 0;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Certification runs on a ball
  ////////////////////////////////////////////////////////////////////////////

  enum class CheckStatus { pass, fail, inconclusive };

  inline char const* to_string(CheckStatus s) noexcept {
    switch (s) {
      case CheckStatus::pass:
        return "PASS";
      case CheckStatus::fail:
        return "FAIL";
      case CheckStatus::inconclusive:
        return "INCONCLUSIVE";
    }
    return "FAIL";
  }

  struct Check {
    std::string name;
    CheckStatus status;
    std::string summary;
    json        detail;
  };

  struct VerifySummary {
    std::vector<Check>       checks;
    std::vector<BoundReport> bounds;

    bool passed() const noexcept {
      for (auto const& c : checks) {
        if (c.status == CheckStatus::fail) {
          return false;
        }
      }
      return true;
    }

    bool inconclusive() const noexcept {
      for (auto const& c : checks) {
        if (c.status == CheckStatus::inconclusive) {
          return true;
        }
      }
      return false;
    }

    int exit_code() const noexcept {
      return passed() ? 0 : 1;
    }
  };

  inline json words_json(Ball const& b, std::vector<VertexId> const& vs) {
    json out = json::array();
    for (auto v : vs) {
      out.push_back(json{{"id", v}, {"word", b.presentation().format(b.word(v))}});
    }
    return out;
  }

  inline Check geometric_check(Ball const& b, TypeReport const& rep) {
    json pairs = json::array();
    for (auto [u, v] : rep.type2_pairs) {
      pairs.push_back({u, v});
    }
    json detail{{"type3Vertices", words_json(b, rep.violations)},
                {"type2PairsWithinDistance2", pairs},
                {"convenientNeighbourMisses", words_json(b, rep.convenient_neighbour_misses)},
                {"type2Checked", rep.type2_checked},
                {"type2Skipped", rep.type2_skipped},
                {"type1Checked", rep.type1_checked},
                {"type1Skipped", rep.type1_skipped},
                {"minConvenientNeighbours", rep.min_convenient_neighbours}};
    return {"geometric-proposition",
            rep.passed() ? CheckStatus::pass : CheckStatus::fail,
            std::to_string(rep.violations.size()) + " type>=3, "
                + std::to_string(rep.type2_pairs.size()) + " close type-2 pairs, "
                + std::to_string(rep.convenient_neighbour_misses.size())
                + " convenient-neighbour misses",
            detail};
  }

  inline Check forest_check(Ball const& b, Forest const& f, ForestCertificate const& c,
                            std::size_t components) {
    json detail{{"checkedVertices", c.checked_vertices},
                {"deferredVertices", c.deferred_vertices},
                {"phase1Removed", f.stats.phase1_removed},
                {"phase2Removed", f.stats.phase2_removed},
                {"minPhase2Candidates", f.stats.min_phase2_candidates},
                {"components", components},
                {"degreeFailures", words_json(b, c.degree_failures)},
                {"isolated", words_json(b, c.isolated)},
                {"touchedTwice", words_json(b, c.touched_twice)}};
    if (c.cycle_edge) {
      detail["cycleEdge"] = {c.cycle_edge->first, c.cycle_edge->second};
    }
    CheckStatus status = !c.passed()       ? CheckStatus::fail
                         : c.inconclusive() ? CheckStatus::inconclusive
                                            : CheckStatus::pass;
    return {"forest", status,
            "degree " + std::string(c.degree_ok() ? "ok" : "BAD") + ", acyclic "
                + (c.acyclic() ? "yes" : "NO") + ", matching "
                + (c.matching() ? "yes" : "NO") + ", " + std::to_string(components)
                + " components, " + std::to_string(c.deferred_vertices) + " deferred",
            detail};
  }

  inline VerifySummary run_verify(RunConfig const& cfg) {
    cfg.validate();
    int const  g = cfg.genus.first;
    int const  k = 4 * g;
    auto const p = surface_presentation(g);
    BallOptions opts;
    opts.vertex_cap = cfg.vertex_cap;
    Ball ball       = build_ball(p, cfg.radius, opts);

    VerifySummary summary;
    TypeReport    types = vertex_types(ball);
    bool const    deep  = ball.radius() >= 3;

    if (deep) {
      types = check_geometric_proposition(ball);
      summary.checks.push_back(geometric_check(ball, types));
    } else {
      summary.checks.push_back({"geometric-proposition", CheckStatus::inconclusive,
                                "radius < 3: nothing certifiable", json::object()});
    }

    auto one  = one_form_bound(k);
    auto cert = verify_one_form(ball, types, one.b);
    summary.checks.push_back(
        {"one-form",
         cert.certified ? CheckStatus::pass : CheckStatus::fail,
         "max row sum / k = " + std::to_string(cert.max_row_sum / k) + " <= c* = "
             + std::to_string(one.c),
         json{{"b", one.b},
              {"bound", cert.bound},
              {"maxRowSum", cert.max_row_sum},
              {"rowSumByType", {cert.row_sum_by_type[0], cert.row_sum_by_type[1],
                                cert.row_sum_by_type[2]}},
              {"verticesChecked", cert.vertices_checked}}});

    bool forest_ok = false;
    if (deep) {
      auto forest = build_forest(ball, types);
      auto fc     = verify_forest(ball, forest.mask);
      summary.checks.push_back(
          forest_check(ball, forest, fc, count_components(ball, forest.mask)));
      forest_ok = fc.passed() && !fc.inconclusive();
    } else {
      summary.checks.push_back({"forest", CheckStatus::inconclusive,
                                "radius < 3: every vertex is boundary-deferred", json::object()});
    }

    auto nmax  = static_cast<std::size_t>(ball.radius());
    auto walks = closed_walk_counts(ball, nmax);
    bool walks_ok = walks.odd_counts_zero && roots_nondecreasing(walks)
                    && supermultiplicative(walks);
    json counts = json::array();
    for (auto const& c : walks.counts) {
      counts.push_back(c.str());
    }
    summary.checks.push_back({"walks", walks_ok ? CheckStatus::pass : CheckStatus::fail,
                              "exact closed-walk counts up to length " + std::to_string(2 * nmax),
                              json{{"counts", counts},
                                   {"oddCountsZero", walks.odd_counts_zero},
                                   {"rootsNondecreasing", roots_nondecreasing(walks)},
                                   {"supermultiplicative", supermultiplicative(walks)}}});

    PoissonOptions popts;
    popts.nu_tolerance = cfg.nu_tolerance;
    popts.phi_step     = cfg.phi_step;
    auto poisson       = poisson_upper_bound(g, popts);

    summary.bounds.push_back(make_report(g, BoundMethod::kesten_lower, kesten_lower(k),
                                         {{"k", k}}, true));
    summary.bounds.push_back(make_report(g, BoundMethod::one_form, one.c,
                                         {{"k", k}, {"b", one.b}}, cert.certified));
    summary.bounds.push_back(make_report(g, BoundMethod::poisson, poisson.bound,
                                         {{"nu", poisson.optimum.nu}}, poisson.certified()));
    summary.bounds.push_back(make_report(g, BoundMethod::tree, tree_bound(k, k - 1),
                                         {{"k", k}, {"l", k - 1}}, forest_ok));

    double walk_lower = nmax >= 1 ? return_prob_lower(walks) : 0.0;
    double eig        = dirichlet_top_eigenvalue(ball, std::min(cfg.eig_tolerance, 1e-6));
    double min_upper  = 1.0;
    for (auto const& b : summary.bounds) {
      if (!is_lower_bound(b.method) && b.certified) {
        min_upper = std::min(min_upper, b.value);
      }
    }
    double tol      = std::min(cfg.eig_tolerance, 1e-6);
    bool   chain_ok = walk_lower <= eig + tol && eig <= min_upper
                    && kesten_lower(k) <= min_upper;
    summary.checks.push_back(
        {"ordering-chain", chain_ok ? CheckStatus::pass : CheckStatus::fail,
         "walks " + std::to_string(walk_lower) + " <= eigenvalue " + std::to_string(eig)
             + " <= min certified upper " + std::to_string(min_upper),
         json{{"returnProbLower", walk_lower},
              {"dirichletTopEigenvalue", eig},
              {"minCertifiedUpper", min_upper}}});
    return summary;
  }

  inline void write_verify(std::ostream& out, RunConfig const& cfg, VerifySummary const& s) {
    if (cfg.format == Format::json) {
      json checks = json::array();
      for (auto const& c : s.checks) {
        checks.push_back(json{{"name", c.name},
                              {"status", to_string(c.status)},
                              {"summary", c.summary},
                              {"detail", c.detail}});
      }
      json doc = document(cfg, "checks", checks);
      json bounds = json::array();
      for (auto const& b : s.bounds) {
        bounds.push_back(bound_to_json(b));
      }
      doc["bounds"] = bounds;
      out << doc.dump(2) << '\n';
      return;
    }
    for (auto const& c : s.checks) {
      if (cfg.format == Format::csv) {
        out << c.name << ',' << to_string(c.status) << ",\"" << c.summary << "\"\n";
      } else {
        out << to_string(c.status) << "  " << c.name << ": " << c.summary << '\n';
      }
    }
    if (cfg.format == Format::md) {
      for (auto const& c : s.checks) {
        if (c.status == CheckStatus::fail) {
          out << c.name << " detail: " << c.detail.dump() << '\n';
        }
      }
    }
  }

  struct ForestRun {
    Forest            forest;
    ForestCertificate certificate;
    std::size_t       components;
  };

  inline int run_forest(std::ostream& out, RunConfig const& cfg,
                        std::ostream* dump = nullptr) {
    cfg.validate();
    BallOptions opts;
    opts.vertex_cap = cfg.vertex_cap;
    Ball ball   = build_ball(surface_presentation(cfg.genus.first), cfg.radius, opts);
    auto types  = vertex_types(ball);
    auto forest = build_forest(ball, types);
    auto cert   = verify_forest(ball, forest.mask);
    auto check  = forest_check(ball, forest, cert, count_components(ball, forest.mask));
    if (dump != nullptr) {
      write_forest_edge_list(*dump, ball, forest.mask);
    }
    if (cfg.format == Format::json) {
      json c{{"name", check.name},
             {"status", to_string(check.status)},
             {"summary", check.summary},
             {"detail", check.detail}};
      out << document(cfg, "checks", json::array({c})).dump(2) << '\n';
    } else {
      out << to_string(check.status) << "  forest: " << check.summary << '\n';
    }
    return cert.passed() ? 0 : 1;
  }

  inline int run_walks(std::ostream& out, RunConfig const& cfg) {
    cfg.validate();
    BallOptions opts;
    opts.vertex_cap = cfg.vertex_cap;
    Ball ball = build_ball(surface_presentation(cfg.genus.first),
                           static_cast<int>(cfg.nmax), opts);
    auto table = closed_walk_counts(ball, cfg.nmax);
    switch (cfg.format) {
      case Format::csv:
        write_walk_csv(out, table);
        break;
      case Format::md: {
        out << "| n | W_2n | p_2n^(1/2n) |\n|---|---|---|\n";
        for (std::size_t n = 0; n <= table.nmax(); ++n) {
          out << "| " << n << " | " << table.counts[n].str() << " | "
              << (n == 0 ? std::string("1") : fixed(table.root(n), 6)) << " |\n";
        }
        if (table.nmax() >= 1) {
          out << "\nreturn-probability lower bound: " << fixed(return_prob_lower(table), 6)
              << '\n';
        }
        break;
      }
      case Format::json: {
        json rows = json::array();
        for (std::size_t n = 0; n <= table.nmax(); ++n) {
          rows.push_back(json{{"n", n},
                              {"W_2n", table.counts[n].str()},
                              {"p_2n", table.return_probability(n)},
                              {"root", n == 0 ? 1.0 : table.root(n)}});
        }
        out << document(cfg, "rows", rows).dump(2) << '\n';
        break;
      }
    }
    return 0;
  }

}  // namespace surfwalk

#endif  // SURFWALK_REPORT_HPP_
