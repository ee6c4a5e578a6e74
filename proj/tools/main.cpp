#include <iostream>

#include "CLI11.hpp"
#include "cayleypair/commands.hpp"

int main(int argc, char** argv) {
  using cayleypair::RunConfig;
  CLI::App app{"Cayley graph pairs from sliding puzzles on theta graphs"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::vector<std::string> formats;
  bool dot = false, csv = false, json = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("a", cfg.a, "branch parameter a (>= 1)")->required();
    sub->add_option("b", cfg.b, "branch parameter b (>= 0)")->required();
    sub->add_option("--cap-elements", cfg.cap_elements, "largest group order to build")->capture_default_str();
    sub->add_option("--out", cfg.output_dir, "write report files into this directory");
    sub->add_option("--format", formats, "output formats: json, csv, dot")
        ->check(CLI::IsMember({"json", "csv", "dot"}))
        ->delimiter(',');
  };
  auto* pair = app.add_subcommand("pair", "print G, S1, S2, the case and vertex counts");
  add_common(pair);
  auto* verify = app.add_subcommand("verify", "verify non-isomorphism, walk equality and spectra");
  add_common(verify);
  auto* walk = app.add_subcommand("walk", "exact random-walk distributions and TV distances");
  add_common(walk);
  auto* spectra = app.add_subcommand("spectra", "characteristic polynomials of the covering diagram");
  add_common(spectra);
  auto* exp = app.add_subcommand("export", "write DOT / CSV / JSON artifacts");
  add_common(exp);

  for (auto* sub : {verify, walk}) {
    sub->add_option("--T", cfg.T, "walk horizon (default 2*diameter+4)");
  }
  verify->add_option("--trunc", cfg.trunc, "Euler product truncation degree")->capture_default_str();
  for (auto* sub : {verify, spectra}) {
    sub->add_option("--cap-charpoly-n", cfg.cap_charpoly_n, "largest n for characteristic polynomials")
        ->capture_default_str();
  }
  walk->add_option("--gens1", cfg.gens1, "replace S1, e.g. \"(1,3,2);(1,2,3);(1,3)\"");
  walk->add_option("--gens2", cfg.gens2, "replace S2");
  exp->add_flag("--dot", dot, "emit DOT files");
  exp->add_flag("--csv", csv, "emit arc CSV files");
  exp->add_flag("--json", json, "emit pair and phi JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cayleypair::kExitInvalidInput;
  }

  std::string command = app.get_subcommands().front()->get_name();
  if (!formats.empty()) cfg.formats = {formats.begin(), formats.end()};
  if (command == "export") {
    if (dot || csv || json) cfg.formats.clear();
    if (dot) cfg.formats.insert("dot");
    if (csv) cfg.formats.insert("csv");
    if (json) cfg.formats.insert("json");
    if (formats.empty() && !dot && !csv && !json) cfg.formats = {"json", "csv", "dot"};
  }
  return cayleypair::run_command(command, cfg, std::cout, std::cerr);
}
