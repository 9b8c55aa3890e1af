#pragma once

// JSON file formats for machines, systems, instances, candidates and reports.
// Words are strings of whitespace separated letter spellings.

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pcpbench/cpcp.hpp"
#include "pcpbench/machine.hpp"
#include "pcpbench/rewriting.hpp"
#include "pcpbench/st2cpcp.hpp"
#include "pcpbench/tm2st.hpp"
#include "pcpbench/zpcp.hpp"

namespace pcpbench::io {

using json = nlohmann::ordered_json;

/// Reads and parses a JSON file; ParseError carries the path and the reason.
json load_json(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const json& doc);

// {"states", "input_alphabet", "tape_alphabet", "blank", "initial", "halt",
//  "transitions": [{"from", "read", "to", "write", "move": "L"|"R"|"S"}]}
TuringMachine machine_from_json(const json& doc);
json machine_to_json(const TuringMachine& tm);

// {"states": [...], "rules": [[lhs, rhs], ...]}
SemiThueSystem system_from_json(const json& doc);
json system_to_json(const SemiThueSystem& sys, const std::vector<std::string>& states = {});

// Sidecar of a reduction system: w0, u_halt, s, per-rule roles, encoding.
json reduction_manifest(const ReductionSystem& red);
ReductionSystem reduction_from_json(const json& system, const json& manifest);

/// A conjugate-PCP instance as read from disk. Constructed instances carry
/// their row labels; hand-written ones may omit them.
struct InstanceFile {
  Morphism h;
  Morphism g;
  std::vector<std::string> rows;
  std::vector<std::string> states;
  std::optional<std::string> manifest;
};

// {"domain": [...], "codomain": [...], "states": [...], "rows": [...],
//  "h": {letter: word}, "g": {letter: word}, "manifest": path}
InstanceFile instance_from_json(const json& doc);
json instance_to_json(const CpcpInstance& inst, const std::optional<std::string>& manifest = {});
json instance_to_json(const Morphism& h, const Morphism& g);

// {"n": 2, "pairs": [["a b", "b a"], ...]}
ZpcpInstance zpcp_from_json(const json& doc);

// {"left_period": "1", "center": "", "right_period": "1"} over indices 1..n.
IndexSequence candidate_from_json(const json& doc, std::size_t n);

json solution_report(const Morphism& h, const Morphism& g,
                     const std::optional<ConjugateSolution>& sol, std::size_t max_len,
                     std::chrono::duration<double> elapsed);

}  // namespace pcpbench::io
