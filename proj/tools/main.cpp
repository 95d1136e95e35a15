#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "billiards/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"billiards in ideal hyperbolic polygons"};
  app.require_subcommand(1);

  billiards::RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--k", cfg.k, "number of sides");
    sub->add_option("--seq", cfg.seq, "billiard sequence labels")
        ->delimiter(',');
    sub->add_option("--polygon", cfg.polygon_file,
                    "polygon JSON file {\"k\":..,\"theta\":[..]}");
    sub->add_option("--chart", cfg.chart, "k-3 gap weights")->delimiter(',');
    sub->add_option("--seed", cfg.seed, "restart seed")
        ->envname("BILLIARDS_SEED");
    sub->add_option("--tol-f", [&cfg](CLI::results_t r) {
         cfg.tol_f = std::stod(r[0]);
         return true;
       }, "objective tolerance override")->expected(1);
    sub->add_option("--tol-x", [&cfg](CLI::results_t r) {
         cfg.tol_x = std::stod(r[0]);
         return true;
       }, "chart tolerance override")->expected(1);
    sub->add_option("--fd-step", [&cfg](CLI::results_t r) {
         cfg.fd_step = std::stod(r[0]);
         return true;
       }, "finite difference step override")->expected(1);
    sub->add_option("--out", cfg.out_path, "output path (default stdout)");
    sub->add_option("--format", cfg.format, "json | svg");
  };

  const char* names[] = {"validate", "trace",  "avg-length", "minimize",
                         "filling",  "euclid", "render"};
  const char* descs[] = {
      "check the two validity rules for a sequence",
      "closed trajectory for a sequence",
      "cyclic family and its average length",
      "minimize the average length over the moduli chart",
      "connectivity and face classification of the family",
      "rectangle billiard lengths and the square minimizer",
      "SVG figure of the family"};
  for (int i = 0; i < 7; ++i) {
    CLI::App* sub = app.add_subcommand(names[i], descs[i]);
    add_common(sub);
    if (std::string(names[i]) == "euclid") {
      sub->add_option("--n", cfg.n, "horizontal winding");
      sub->add_option("--m", cfg.m, "vertical winding");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  if (cfg.command == "render" && !sub->count("--format")) cfg.format = "svg";
  return billiards::run(cfg, std::cout, std::cerr);
}
