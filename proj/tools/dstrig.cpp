#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dstrig/cli.hpp"

namespace {

// Runs fn with the requested input stream; "-" is standard input.
template <typename Fn>
int with_input(const std::string& path, Fn fn) {
  if (path == "-") return fn(std::cin);
  std::ifstream file(path);
  if (!file) {
    std::cerr << "dstrig: cannot open " << path << '\n';
    return dstrig::cli::kInvalidInput;
  }
  return fn(file);
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = dstrig::cli;

  CLI::App app{"Classify de Sitter triangles and evaluate their Girard-type areas"};
  app.require_subcommand(1);

  std::string input = "-";

  auto* classify = app.add_subcommand("classify", "Causal classification of a triangle document");
  classify->add_option("--input,-i", input, "JSON document, JSON array or JSON Lines; - for stdin");

  cli::AreaOptions area_opts;
  auto* area = app.add_subcommand("area", "Interior angles and area of a supported triangle");
  area->add_option("--input,-i", input, "JSON document, JSON array or JSON Lines; - for stdin");
  area->add_flag("--oracle", area_opts.oracle, "Also integrate the area numerically");
  area->add_option("--grid", area_opts.grid, "Oracle base grid size (>= 8)");

  cli::RandomOptions random_opts;
  auto* random = app.add_subcommand("random", "Emit seeded random triangle documents as JSON Lines");
  random->add_option("--type", random_opts.type, "Triangle type name")->required();
  random->add_option("--seed", random_opts.seed, "Generator seed");
  random->add_option("--count", random_opts.count, "Number of documents");
  random->add_option("--u-max", random_opts.u_max, "Rapidity bound of the vertex chart");

  cli::VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Check formulas and invariants against the oracle");
  verify->add_option("--type", verify_opts.type, "spatiolateral|tempolateral|chorosceles|chronosceles|all");
  verify->add_option("--trials", verify_opts.trials, "Random triangles per type");
  verify->add_option("--seed", verify_opts.seed, "Generator seed");
  verify->add_option("--grid", verify_opts.grid, "Oracle base grid size (>= 8)");
  verify->add_flag("--corrupt-normals", verify_opts.corrupt_normals, "Test hook: negate one outer normal");

  cli::PlotOptions plot_opts;
  std::string plot_out = "-";
  auto* plot = app.add_subcommand("plot", "Write an SVG projection of the triangle");
  plot->add_option("--input,-i", input, "JSON document; - for stdin");
  plot->add_option("--out,-o", plot_out, "Output SVG file; - for stdout");
  plot->add_option("--samples", plot_opts.samples, "Points per edge");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kInvalidInput;
  }

  if (*classify) {
    return with_input(input, [](std::istream& in) { return cli::run_classify(in, std::cout, std::cerr); });
  }
  if (*area) {
    return with_input(input,
                      [&](std::istream& in) { return cli::run_area(in, std::cout, std::cerr, area_opts); });
  }
  if (*random) return cli::run_random(random_opts, std::cout, std::cerr);
  if (*verify) return cli::run_verify(verify_opts, std::cout, std::cerr);
  if (*plot) {
    return with_input(input, [&](std::istream& in) {
      if (plot_out == "-") return cli::run_plot(in, std::cout, std::cerr, plot_opts);
      std::ostringstream svg;
      const int code = cli::run_plot(in, svg, std::cerr, plot_opts);
      if (code == cli::kOk) {
        std::ofstream file(plot_out, std::ios::binary);
        if (!file) {
          std::cerr << "dstrig: cannot write " << plot_out << '\n';
          return static_cast<int>(cli::kFailure);
        }
        file << svg.str();
      }
      return code;
    });
  }
  return cli::kInvalidInput;
}
