#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace cli = takegrant::cli;

int main(int argc, char** argv) {
  CLI::App app{"Take-Grant protection graph analysis: islands and t->*/t<-* bridges"};
  app.require_subcommand(1);

  const cli::Io io{std::cin, std::cout, std::cerr};
  int status = cli::kSuccess;

  std::string islands_file;
  auto* islands = app.add_subcommand("islands", "List islands (tg-connected subject sets)");
  islands->add_option("file", islands_file, "TGG file, or - for stdin")->required();
  islands->callback([&] { status = cli::cmd_islands(islands_file, io); });

  cli::BridgeOptions bridge_opts;
  auto* bridge = app.add_subcommand("bridge", "Search for a bridge between two vertices");
  bridge->add_option("file", bridge_opts.file, "TGG file, or - for stdin")->required();
  bridge->add_option("from", bridge_opts.from, "Source vertex name")->required();
  bridge->add_option("to", bridge_opts.to, "Target vertex name")->required();
  bridge->add_flag("--backward", bridge_opts.backward, "Search t<-* instead of t->*");
  bridge->add_flag("--json", bridge_opts.json, "Print the search report as JSON");
  bridge->add_flag("--path", bridge_opts.show_path, "Print the witness path");
  bridge->callback([&] { status = cli::cmd_bridge(bridge_opts, io); });

  cli::BridgesOptions bridges_opts;
  auto* bridges = app.add_subcommand("bridges", "List bridges between two islands");
  bridges->add_option("file", bridges_opts.file, "TGG file, or - for stdin")->required();
  bridges->add_option("i1", bridges_opts.from_island, "Source island index")->required();
  bridges->add_option("i2", bridges_opts.to_island, "Target island index")->required();
  bridges->add_flag("--backward", bridges_opts.backward, "Search t<-* instead of t->*");
  bridges->callback([&] { status = cli::cmd_bridges(bridges_opts, io); });

  cli::CheckOptions check_opts;
  auto* check = app.add_subcommand("check", "Audit the search against the brute-force oracle");
  check->add_option("--subjects", check_opts.subjects, "Subjects per graph")->capture_default_str();
  check->add_option("--objects", check_opts.objects, "Objects per graph")->capture_default_str();
  check->add_option("--p", check_opts.p, "Arc probability per pair and right")->capture_default_str();
  check->add_option("--seed", check_opts.seed, "Seed of the first trial")->capture_default_str();
  check->add_option("--trials", check_opts.trials, "Number of random graphs")->capture_default_str();
  check->callback([&] { status = cli::cmd_check(check_opts, io); });

  cli::GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "Write a random graph in TGG format");
  gen->add_option("--subjects", gen_opts.subjects, "Number of subjects")->capture_default_str();
  gen->add_option("--objects", gen_opts.objects, "Number of objects")->capture_default_str();
  gen->add_option("--p", gen_opts.p, "Arc probability per pair and right")->capture_default_str();
  gen->add_option("--seed", gen_opts.seed, "Generator seed")->capture_default_str();
  gen->add_option("--rights", gen_opts.rights, "Rights pool, letters from tgrw")->capture_default_str();
  gen->add_option("-o,--output", gen_opts.out_path, "Output file, or - for stdout")->required();
  gen->callback([&] { status = cli::cmd_gen(gen_opts, io); });

  cli::BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "Time bridge searches on random graphs (CSV)");
  bench->add_option("--sizes", bench_opts.sizes, "Comma-separated vertex counts")
      ->required()
      ->delimiter(',');
  bench->add_option("--density", bench_opts.density, "t-arc probability")->capture_default_str();
  bench->add_option("--seed", bench_opts.seed, "Seed of the first trial")->capture_default_str();
  bench->add_option("--variant", bench_opts.variant, "both, optimized or faithful")
      ->capture_default_str()
      ->check(CLI::IsMember({"both", "optimized", "faithful"}));
  bench->callback([&] { status = cli::cmd_bench(bench_opts, io); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsageError;
  }
  return status;
}
