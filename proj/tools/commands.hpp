#pragma once

// Subcommands of the pcpbench tool. Each returns the process exit status and
// writes its human-readable report to `out`, diagnostics to `err`.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace pcpbench::cli {

enum Exit : int {
  found = 0,
  not_found = 1,
  usage_error = 2,  // also unreadable or malformed input files
  machine_error = 3,
  check_failure = 4,
};

struct Options {
  std::optional<std::filesystem::path> out;  // result file; manifest goes to <out>.run.json
  std::size_t workers = 1;
};

/// Worker count from PCPBENCH_WORKERS, 1 when unset or invalid.
std::size_t workers_from_env();

int cmd_tm2pcp(const std::filesystem::path& tm_file, const std::filesystem::path& instance_file,
               std::ostream& out, std::ostream& err);

int cmd_solve(const std::filesystem::path& instance_file, std::size_t max_len,
              const Options& opts, std::ostream& out, std::ostream& err);

int cmd_roundtrip(const std::filesystem::path& tm_file, std::size_t depth, const Options& opts,
                  std::ostream& out, std::ostream& err);

int cmd_zpcp_find(const std::filesystem::path& instance_file, std::size_t max_len,
                  const Options& opts, std::ostream& out, std::ostream& err);

int cmd_zpcp_verify(const std::filesystem::path& instance_file,
                    const std::filesystem::path& candidate_file, std::size_t rounds,
                    std::size_t window, const Options& opts, std::ostream& out,
                    std::ostream& err);

}  // namespace pcpbench::cli
