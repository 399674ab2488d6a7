#include <CLI11.hpp>
#include <iostream>

#include "kumlift/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact lattice checks for derived equivalences of abelian surfaces"};
  app.require_subcommand(1);

  std::string document;
  kumlift::cli::RunOptions options;
  auto* run = app.add_subcommand("run", "Run every task in a problem document");
  run->add_option("document", document, "Problem document (JSON)")->required();
  run->add_option("--parallel", options.parallel, "Worker threads")->check(CLI::Range(1u, 256u));
  run->add_flag("--witness-only", options.witness_only, "Emit only verdicts and witnesses");
  run->add_flag("--canonical", options.canonical, "Omit the timing trailer");

  std::string outdir;
  auto* demo = app.add_subcommand("demo", "Write the worked-example corpus");
  demo->add_option("outdir", outdir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*run) {
    const auto outcome = kumlift::cli::run_file(document, options);
    std::cout << outcome.output;
    std::cerr << outcome.diagnostics;
    return outcome.exit_code;
  }
  try {
    for (const auto& path : kumlift::cli::write_demo(outdir)) std::cout << path.string() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
