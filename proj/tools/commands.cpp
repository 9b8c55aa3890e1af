#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ostream>

#include "pcpbench/cpcp.hpp"
#include "pcpbench/errors.hpp"
#include "pcpbench/io.hpp"
#include "pcpbench/st2cpcp.hpp"
#include "pcpbench/tm2st.hpp"
#include "pcpbench/zpcp.hpp"

namespace pcpbench::cli {

namespace fs = std::filesystem;
using io::json;

namespace {

using Clock = std::chrono::steady_clock;

// Manifest of one invocation, written next to the result file.
struct RunManifest {
  std::string command;
  json inputs = json::object();
  json params = json::object();
  json outcome = json::object();
  Clock::time_point started = Clock::now();

  void write(const fs::path& result, int status) const {
    json doc = {{"command", command}, {"inputs", inputs}, {"params", params},
                {"outcome", outcome}, {"exit_status", status}};
    doc["seconds"] = std::chrono::duration<double>(Clock::now() - started).count();
    io::save_json(fs::path(result.string() + ".run.json"), doc);
  }
};

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return usage_error;
  } catch (const DeterminismError& e) {
    err << "determinism violation: " << e.what() << '\n';
    return machine_error;
  } catch (const ConstructionError& e) {
    err << "invalid machine: " << e.what() << '\n';
    return machine_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
}

fs::path sibling(const fs::path& file, const std::string& suffix) {
  fs::path out = file;
  out.replace_extension();
  return fs::path(out.string() + suffix);
}

bool crosses_both_phases(const ReductionSystem& red, const DerivationTrace& trace) {
  bool fwd = false, back = false;
  for (const auto& s : trace.steps) {
    fwd = fwd || red.roles[s.step.rule] == RuleRole::phase_switch;
    back = back || red.roles[s.step.rule] == RuleRole::ov_phase_switch;
  }
  return fwd && back;
}

}  // namespace

std::size_t workers_from_env() {
  const char* raw = std::getenv("PCPBENCH_WORKERS");
  if (raw == nullptr) return 1;
  char* end = nullptr;
  const long n = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || n < 1) return 1;
  return static_cast<std::size_t>(std::min(n, 256L));
}

int cmd_tm2pcp(const fs::path& tm_file, const fs::path& instance_file, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    RunManifest run{"tm2pcp"};
    run.inputs["tm"] = tm_file.string();
    const TuringMachine tm = io::machine_from_json(io::load_json(tm_file));
    const ReductionSystem red = build_T(tm);
    const ValidationReport report = validate_reduction(red);
    out << report.to_string();
    if (!report.passed()) {
      out << "determinism checks: FAIL\n";
      return int{check_failure};
    }
    out << "determinism checks: pass\n";

    const CpcpInstance inst = build_instance(red);
    const fs::path system_file = sibling(instance_file, ".system.json");
    const fs::path manifest_file = sibling(instance_file, ".reduction.json");
    io::save_json(system_file, io::system_to_json(red.system, red.states));
    io::save_json(manifest_file, io::reduction_manifest(red));
    io::save_json(instance_file,
                  io::instance_to_json(inst, manifest_file.filename().string()));
    out << "rules: " << red.system.size() << ", domain letters: " << inst.rows.size()
        << "\nwrote " << instance_file.string() << '\n';

    run.outcome = {{"rules", red.system.size()},
                   {"domain", inst.rows.size()},
                   {"instance", instance_file.string()},
                   {"system", system_file.string()},
                   {"reduction", manifest_file.string()}};
    run.write(instance_file, found);
    return int{found};
  });
}

int cmd_solve(const fs::path& instance_file, std::size_t max_len, const Options& opts,
              std::ostream& out, std::ostream& err) {
  if (max_len == 0) {
    err << "usage error: --max-len must be at least 1\n";
    return usage_error;
  }
  return guarded(err, [&] {
    RunManifest run{"solve"};
    run.inputs["instance"] = instance_file.string();
    run.params = {{"max_len", max_len}, {"workers", opts.workers}};
    const io::InstanceFile inst = io::instance_from_json(io::load_json(instance_file));
    const auto t0 = Clock::now();
    const auto sol = solve_bounded(inst.h, inst.g, max_len, opts.workers);
    const auto elapsed = Clock::now() - t0;

    int status = not_found;
    if (sol) {
      status = found;
      out << "w = " << sol->w.spelling() << "\n"
          << sol->splits.size() << " split(s):\n";
      for (const auto& s : sol->splits) {
        out << "  u = " << s.u.spelling() << " | v = " << s.v.spelling() << '\n';
      }
    } else {
      out << "none up to " << max_len << '\n';
    }
    if (opts.out) {
      io::save_json(*opts.out, io::solution_report(inst.h, inst.g, sol, max_len, elapsed));
      run.outcome = {{"found", sol.has_value()}};
      if (sol) run.outcome["w"] = sol->w.spelling();
      run.write(*opts.out, status);
    }
    return status;
  });
}

int cmd_roundtrip(const fs::path& tm_file, std::size_t depth, const Options& opts,
                  std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    RunManifest run{"roundtrip"};
    run.inputs["tm"] = tm_file.string();
    run.params = {{"depth", depth}};
    const TuringMachine tm = io::machine_from_json(io::load_json(tm_file));
    const ReductionSystem red = build_T(tm);
    const CpcpInstance inst = build_instance(red);

    auto finish = [&](int status, json outcome) {
      if (opts.out) {
        run.outcome = std::move(outcome);
        io::save_json(*opts.out, run.outcome);
        run.write(*opts.out, status);
      }
      return status;
    };

    const auto trace = find_circular(red.system, red.w0, depth);
    if (!trace || !crosses_both_phases(red, *trace)) {
      out << "no circular orbit within depth " << depth;
      if (trace) {
        out << " (a configuration cycle of length " << trace->length()
            << " returns without halting)";
      }
      out << '\n';
      return finish(not_found, {{"circular", false}});
    }

    const Word w = encode_derivation(inst, *trace);
    const auto splits = check_solution(inst.h, inst.g, w);
    if (!splits) {
      out << "circular orbit length " << trace->length() << "; check FAILED\n";
      return finish(check_failure, {{"circular", true}, {"check", false}});
    }
    try {
      if (decode_solution(inst, w) != *trace) {
        out << "circular orbit length " << trace->length() << "; decode mismatch\n";
        return finish(check_failure, {{"circular", true}, {"decode", false}});
      }
    } catch (const DecodeError& e) {
      out << "circular orbit length " << trace->length() << "; decode FAILED: " << e.what()
          << '\n';
      return finish(check_failure, {{"circular", true}, {"decode", false}});
    }
    out << "circular orbit length " << trace->length() << "; encode/check/decode OK\n"
        << "w = " << w.spelling() << '\n';
    return finish(found, {{"circular", true},
                          {"length", trace->length()},
                          {"w", w.spelling()},
                          {"splits", splits->size()}});
  });
}

int cmd_zpcp_find(const fs::path& instance_file, std::size_t max_len, const Options& opts,
                  std::ostream& out, std::ostream& err) {
  if (max_len == 0) {
    err << "usage error: --max-len must be at least 1\n";
    return usage_error;
  }
  return guarded(err, [&] {
    RunManifest run{"zpcp find-periodic"};
    run.inputs["instance"] = instance_file.string();
    run.params = {{"max_len", max_len}};
    const ZpcpInstance inst = io::zpcp_from_json(io::load_json(instance_file));
    const auto sol = find_periodic_solution(inst.h, inst.g, max_len);
    json result = {{"found", sol.has_value()}};
    if (sol) {
      out << "z=" << sol->z.spelling() << ", shift=" << sol->shift << '\n';
      result["z"] = sol->z.spelling();
      result["shift"] = sol->shift;
    } else {
      out << "none up to " << max_len << '\n';
    }
    const int status = sol ? found : not_found;
    if (opts.out) {
      io::save_json(*opts.out, result);
      run.outcome = result;
      run.write(*opts.out, status);
    }
    return status;
  });
}

int cmd_zpcp_verify(const fs::path& instance_file, const fs::path& candidate_file,
                    std::size_t rounds, std::size_t window, const Options& opts,
                    std::ostream& out, std::ostream& err) {
  if (rounds == 0) {
    err << "usage error: --rounds must be at least 1\n";
    return usage_error;
  }
  return guarded(err, [&] {
    RunManifest run{"zpcp verify"};
    run.inputs = {{"instance", instance_file.string()}, {"candidate", candidate_file.string()}};
    run.params = {{"rounds", rounds}, {"window", window}};
    const ZpcpInstance inst = io::zpcp_from_json(io::load_json(instance_file));
    const IndexSequence seq =
        io::candidate_from_json(io::load_json(candidate_file), inst.h.domain().size());
    const Verdict v = test_procedure(inst.h, inst.g, seq, rounds, window);
    json result;
    int status = not_found;
    if (v.kind == Verdict::Kind::accepted) {
      status = found;
      out << "accepted: shift=" << v.shift << " on round " << v.rounds_used << " (window "
          << v.window << ")\n";
      result = {{"verdict", "accepted"}, {"shift", v.shift}, {"round", v.rounds_used}};
    } else {
      out << "inconclusive after " << v.rounds_used << " rounds (window " << v.window << ")\n";
      result = {{"verdict", "inconclusive"}, {"rounds", v.rounds_used}};
    }
    result["window"] = v.window;
    if (opts.out) {
      io::save_json(*opts.out, result);
      run.outcome = result;
      run.write(*opts.out, status);
    }
    return status;
  });
}

}  // namespace pcpbench::cli
