#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  namespace cli = pcpbench::cli;

  CLI::App app{"Conjugate and bi-infinite PCP toolkit"};
  app.require_subcommand(1);

  std::string tm_file, instance_file, candidate_file, out_file;
  std::size_t max_len = 6, depth = 200, window = 50, rounds = 21;

  auto* tm2pcp = app.add_subcommand("tm2pcp", "Build the conjugate-PCP instance of a machine");
  tm2pcp->add_option("tm", tm_file, "Machine file (JSON)")->required();
  tm2pcp->add_option("--out,-o", out_file, "Instance file to write")->required();

  auto* solve = app.add_subcommand("solve", "Bounded search for a conjugate-PCP solution");
  solve->add_option("instance", instance_file, "Instance file (JSON)")->required();
  solve->add_option("--max-len", max_len, "Longest candidate word")->capture_default_str();
  solve->add_option("--out,-o", out_file, "Solution report to write");

  auto* roundtrip =
      app.add_subcommand("roundtrip", "Orbit, encode, check and decode for a machine");
  roundtrip->add_option("tm", tm_file, "Machine file (JSON)")->required();
  roundtrip->add_option("--depth", depth, "Orbit step bound")->capture_default_str();
  roundtrip->add_option("--out,-o", out_file, "Result file to write");

  auto* zpcp = app.add_subcommand("zpcp", "Bi-infinite PCP tools");
  zpcp->require_subcommand(1);
  auto* find = zpcp->add_subcommand("find-periodic", "Search purely periodic solutions");
  find->add_option("instance", instance_file, "ZPCP instance file (JSON)")->required();
  find->add_option("--max-len", max_len, "Longest period")->capture_default_str();
  find->add_option("--out,-o", out_file, "Result file to write");
  auto* verify = zpcp->add_subcommand("verify", "Windowed shift test of a candidate");
  verify->add_option("instance", instance_file, "ZPCP instance file (JSON)")->required();
  verify->add_option("candidate", candidate_file, "Candidate file (JSON)")->required();
  verify->add_option("--rounds", rounds, "Shifts to try")->capture_default_str();
  verify->add_option("--window", window, "Window radius")->capture_default_str();
  verify->add_option("--out,-o", out_file, "Result file to write");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::usage_error;
  }

  cli::Options opts;
  opts.workers = cli::workers_from_env();
  if (!out_file.empty()) opts.out = out_file;

  if (*tm2pcp) return cli::cmd_tm2pcp(tm_file, out_file, std::cout, std::cerr);
  if (*solve) return cli::cmd_solve(instance_file, max_len, opts, std::cout, std::cerr);
  if (*roundtrip) return cli::cmd_roundtrip(tm_file, depth, opts, std::cout, std::cerr);
  if (*find) return cli::cmd_zpcp_find(instance_file, max_len, opts, std::cout, std::cerr);
  if (*verify) {
    return cli::cmd_zpcp_verify(instance_file, candidate_file, rounds, window, opts, std::cout,
                                std::cerr);
  }
  return cli::usage_error;
}
