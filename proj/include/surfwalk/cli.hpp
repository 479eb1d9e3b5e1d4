#ifndef SURFWALK_CLI_HPP_
#define SURFWALK_CLI_HPP_

// Command-line front end. run_cli parses argv, dispatches to the report
// layer and maps failures to exit codes; it never calls std::exit, so tests
// can drive it in-process.

#include <fstream>   // for ofstream
#include <iostream>  // for ostream
#include <map>       // for map
#include <string>    // for string

#include <CLI11.hpp>

#include "error.hpp"
#include "report.hpp"

namespace surfwalk {

  namespace detail {

    inline void add_format(CLI::App& app, Format& format) {
      app.add_option("--format", format, "Output format")
          ->transform(CLI::CheckedTransformer(
              std::map<std::string, Format>{{"md", Format::md},
                                            {"csv", Format::csv},
                                            {"json", Format::json}},
              CLI::ignore_case)
                         .description(""))
          ->option_text("md|csv|json");
    }

    inline void require_single_genus(RunConfig const& cfg) {
      if (cfg.genus.first != cfg.genus.last) {
        fail(ErrorKind::invalid_argument, "this command takes a single genus");
      }
    }

    inline std::ofstream open_output(std::string const& path) {
      std::ofstream f(path);
      if (!f) {
        fail(ErrorKind::invalid_argument, "cannot open '" + path + "' for writing");
      }
      return f;
    }

  }  // namespace detail

  inline int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certified spectral radius bounds for surface group random walks",
                 "surfwalk"};
    app.set_version_flag("--version", version);
    app.require_subcommand(1);

    RunConfig   cfg;
    std::string genus = "2";
    std::string dump;
    std::string dump_ball;
    std::string out_path;

    auto* table = app.add_subcommand("table", "Reproduce the bound table");
    table->add_option("--genus", genus, "Genus or range A..B")->default_str("2..10");
    detail::add_format(*table, cfg.format);
    table->add_option("--out", out_path, "Write the table to PATH instead of stdout");
    table->add_option("--nu-tol", cfg.nu_tolerance, "Tolerance of the nu optimisation");
    table->add_option("--phi-step", cfg.phi_step, "Grid step of the phi scan (0: automatic)");

    auto* verify = app.add_subcommand("verify", "Run all certifications on one ball");
    verify->add_option("--genus", genus, "Genus")->required();
    verify->add_option("--radius", cfg.radius, "Ball radius")->required();
    verify->add_option("--vertex-cap", cfg.vertex_cap, "Abort beyond this many vertices");
    verify->add_option("--eig-tol", cfg.eig_tolerance, "Power iteration tolerance");
    verify->add_option("--dump-ball", dump_ball, "Write the ball edge list to PATH");
    detail::add_format(*verify, cfg.format);

    auto* poisson = app.add_subcommand("poisson", "Kernel bound and its certificates");
    poisson->add_option("--genus", genus, "Genus or range A..B")->required();
    poisson->add_option("--nu-tol", cfg.nu_tolerance, "Tolerance of the nu optimisation");
    poisson->add_option("--phi-step", cfg.phi_step, "Grid step of the phi scan (0: automatic)");
    detail::add_format(*poisson, cfg.format);

    auto* forest = app.add_subcommand("forest", "Build and verify the spanning forest");
    forest->add_option("--genus", genus, "Genus")->required();
    forest->add_option("--radius", cfg.radius, "Ball radius")->required();
    forest->add_option("--vertex-cap", cfg.vertex_cap, "Abort beyond this many vertices");
    forest->add_option("--dump", dump, "Write the masked edge list to PATH");
    detail::add_format(*forest, cfg.format);

    auto* walks = app.add_subcommand("walks", "Exact closed-walk counts at the identity");
    walks->add_option("--genus", genus, "Genus")->required();
    walks->add_option("--nmax", cfg.nmax, "Count walks of length up to 2 nmax")->required();
    walks->add_option("--vertex-cap", cfg.vertex_cap, "Abort beyond this many vertices");
    detail::add_format(*walks, cfg.format);

    auto* pocket = app.add_subcommand("pocket-check", "Closed-form check of the kernel lemma");
    pocket->add_option("--genus", genus, "Genus or range A..B")->default_str("2..27");
    detail::add_format(*pocket, cfg.format);

    try {
      app.parse(argc, argv);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return 0;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return 0;
    } catch (CLI::CallForVersion const&) {
      out << version << '\n';
      return 0;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n\n" << app.help();
      return exit_code(ErrorKind::invalid_argument);
    }

    auto* sub   = app.get_subcommands().front();
    cfg.command = sub->get_name();
    try {
      if (sub->count("--genus") == 0) {
        genus = sub == table ? "2..10" : "2..27";
      }
      cfg.genus = parse_genus_range(genus);
      cfg.validate();

      if (sub == table) {
        auto result = run_table(cfg);
        if (out_path.empty()) {
          write_table(out, cfg, result);
        } else {
          cfg.output_path = out_path;
          auto f          = detail::open_output(out_path);
          write_table(f, cfg, result);
        }
        write_mismatches(err, result.mismatches);
        return result.exit_code();
      }
      if (sub == poisson) {
        return run_poisson(out, cfg);
      }
      if (sub == pocket) {
        return run_pocket_check(out, cfg);
      }

      detail::require_single_genus(cfg);
      if (sub == verify) {
        if (!dump_ball.empty()) {
          BallOptions opts;
          opts.vertex_cap = cfg.vertex_cap;
          auto f          = detail::open_output(dump_ball);
          write_edge_list(f, build_ball(surface_presentation(cfg.genus.first), cfg.radius, opts));
        }
        auto summary = run_verify(cfg);
        write_verify(out, cfg, summary);
        if (summary.passed() && summary.inconclusive()) {
          err << "warning: radius " << cfg.radius
              << " is too small to certify every check; see INCONCLUSIVE lines\n";
        }
        return summary.exit_code();
      }
      if (sub == forest) {
        if (dump.empty()) {
          return run_forest(out, cfg);
        }
        auto f = detail::open_output(dump);
        return run_forest(out, cfg, &f);
      }
      if (sub == walks) {
        return run_walks(out, cfg);
      }
      fail(ErrorKind::internal, "unhandled subcommand " + cfg.command);
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      if (e.kind() == ErrorKind::invalid_argument) {
        err << '\n' << sub->help();
      }
      return exit_code(e.kind());
    } catch (std::bad_alloc const&) {
      err << "error: out of memory\n";
      return exit_code(ErrorKind::resource_cap);
    } catch (std::exception const& e) {
      err << "error: " << e.what() << '\n';
      return exit_code(ErrorKind::internal);
    }
  }

}  // namespace surfwalk

#endif  // SURFWALK_CLI_HPP_
