#include <iostream>

#include <CLI11.hpp>

#include "ghostchar/report.hpp"

int main(int argc, char** argv) {
  using namespace ghostchar;
  CLI::App app{"Trace-free character slices, ghost characters and branched-cover checks from braid words"};
  app.require_subcommand(1);

  RunConfig cfg;
  long dropped = -1;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--braid", cfg.braid, "braid word \"m: s1 s2 ...\" or \"torus p q\"");
    sub->add_flag("--json", cfg.json, "emit a JSON report");
    sub->add_option("--tolerance", cfg.tolerance, "representation residual and snapping tolerance");
    sub->add_option("--zero-tolerance", cfg.zero_tolerance, "numeric zero test for non-quadratic points");
    sub->add_flag("!--no-symmetry", cfg.symmetry, "skip the closure-permutation symmetry reduction");
    sub->add_flag("--all-rectangles", cfg.all_rectangles, "check rectangle minors on every 4-subset of arcs");
    sub->add_option("--precision", cfg.precision, "working precision in bits");
  };

  const std::pair<const char*, const char*> commands[] = {
      {"diagram", "arcs, crossings and Wirtinger relators"},
      {"f2", "pair-variable equations after eliminating the open braid"},
      {"solve", "points of the pair-variable system"},
      {"ghosts", "classify every point as lifting or ghost"},
      {"find", "alias of ghosts"},
      {"cover", "presentation of the 2-fold branched cover group"},
      {"repcheck", "verify an SL2 representation of the cover group"},
      {"phihat", "cover character coordinates of each point"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    common(sub);
    if (std::string(name) == "cover" || std::string(name) == "repcheck")
      sub->add_option("--drop", dropped, "index (relator order) of the omitted Wirtinger relator");
    if (std::string(name) == "repcheck") {
      sub->add_option("--rep", cfg.rep_path, "representation JSON file");
      sub->add_option("--builtin", cfg.builtin_rep,
                      "ghost[:r], ghost-printed[:r], diagonal:k or beta:r (torus 4 5 cover)");
    }
    if (std::string(name) == "phihat") sub->add_option("--arcs", cfg.phihat_arcs, "use arcs 1..n");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : UsageError;
  }
  cfg.command = *parse_command(app.get_subcommands().front()->get_name());
  if (dropped >= 0) cfg.dropped_relator = static_cast<std::size_t>(dropped);
  return run(cfg, std::cout);
}
