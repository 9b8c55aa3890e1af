#include "pcpbench/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "pcpbench/errors.hpp"

namespace pcpbench::io {

namespace {

SpellingContext context_of(const std::vector<std::string>& states) {
  SpellingContext ctx;
  ctx.states.insert(states.begin(), states.end());
  return ctx;
}

template <class T>
T field(const json& doc, const char* key) {
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return it->get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

template <class T>
T field_or(const json& doc, const char* key, T fallback) {
  if (!doc.is_object() || !doc.contains(key)) return fallback;
  return field<T>(doc, key);
}

Move move_from(const std::string& m) {
  if (m == "L") return Move::left;
  if (m == "R") return Move::right;
  if (m == "S") return Move::stay;
  throw ParseError("move must be L, R or S, got '" + m + "'");
}

const char* move_name(Move m) {
  switch (m) {
    case Move::left: return "L";
    case Move::right: return "R";
    case Move::stay: return "S";
  }
  return "S";
}

json split_json(const Split& s) { return {{"u", s.u.spelling()}, {"v", s.v.spelling()}}; }

}  // namespace

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void save_json(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << doc.dump(2) << '\n';
}

TuringMachine machine_from_json(const json& doc) {
  std::vector<Transition> delta;
  const auto list = field<json>(doc, "transitions");
  if (!list.is_array()) throw ParseError("'transitions' must be a list");
  for (const auto& t : list) {
    delta.push_back({field<std::string>(t, "from"), field<std::string>(t, "read"),
                     field<std::string>(t, "to"), field<std::string>(t, "write"),
                     move_from(field<std::string>(t, "move"))});
  }
  return TuringMachine(field<std::vector<std::string>>(doc, "states"),
                       field_or<std::vector<std::string>>(doc, "input_alphabet", {}),
                       field<std::vector<std::string>>(doc, "tape_alphabet"),
                       field<std::string>(doc, "blank"), std::move(delta),
                       field<std::string>(doc, "initial"), field<std::string>(doc, "halt"));
}

json machine_to_json(const TuringMachine& tm) {
  json delta = json::array();
  for (const auto& t : tm.transitions()) {
    delta.push_back({{"from", t.from}, {"read", t.read}, {"to", t.to}, {"write", t.write},
                     {"move", move_name(t.move)}});
  }
  return {{"states", tm.states()},     {"input_alphabet", tm.input_alphabet()},
          {"tape_alphabet", tm.tape_alphabet()}, {"blank", tm.blank()},
          {"transitions", delta},      {"initial", tm.initial()},
          {"halt", tm.halt()}};
}

SemiThueSystem system_from_json(const json& doc) {
  const auto ctx = context_of(field_or<std::vector<std::string>>(doc, "states", {}));
  std::vector<Rule> rules;
  for (const auto& r : field<std::vector<std::pair<std::string, std::string>>>(doc, "rules")) {
    rules.emplace_back(Word::parse(r.first, ctx), Word::parse(r.second, ctx));
  }
  return SemiThueSystem(std::move(rules));
}

json system_to_json(const SemiThueSystem& sys, const std::vector<std::string>& states) {
  json rules = json::array();
  for (const auto& r : sys.rules()) rules.push_back({r.lhs.spelling(), r.rhs.spelling()});
  return {{"states", states}, {"rules", rules}};
}

json reduction_manifest(const ReductionSystem& red) {
  json roles = json::array();
  for (auto r : red.roles) roles.push_back(std::string(to_string(r)));
  json table = json::array();
  for (const auto& [sym, code] : red.encoding.table()) table.push_back({sym, code.spelling()});
  return {{"w0", red.w0.spelling()},
          {"u_halt", red.u_halt.spelling()},
          {"s", red.s.spelling()},
          {"states", red.states},
          {"roles", roles},
          {"encoding", {{"width", red.encoding.width()}, {"table", table}}}};
}

ReductionSystem reduction_from_json(const json& system, const json& manifest) {
  ReductionSystem red;
  red.states = field<std::vector<std::string>>(manifest, "states");
  const auto ctx = context_of(red.states);
  red.system = system_from_json(system);
  red.w0 = Word::parse(field<std::string>(manifest, "w0"), ctx);
  red.u_halt = Word::parse(field<std::string>(manifest, "u_halt"), ctx);
  red.s = parse_letter(field<std::string>(manifest, "s"), ctx);
  for (const auto& r : field<std::vector<std::string>>(manifest, "roles")) {
    try {
      red.roles.push_back(rule_role_from_string(r));
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }
  if (red.roles.size() != red.system.size()) throw ParseError("one role per rule expected");
  const auto enc = field<json>(manifest, "encoding");
  std::vector<std::string> tape;
  std::vector<std::string> codes;
  for (const auto& row : field<std::vector<std::pair<std::string, std::string>>>(enc, "table")) {
    tape.push_back(row.first);
    codes.push_back(row.second);
  }
  red.encoding = EncodingMap(tape);
  for (std::size_t i = 0; i < tape.size(); ++i) {
    if (red.encoding.encode(tape[i]).spelling() != codes[i]) {
      throw ParseError("encoding table is not the canonical code of its tape alphabet");
    }
  }
  return red;
}

InstanceFile instance_from_json(const json& doc) {
  InstanceFile out;
  out.states = field_or<std::vector<std::string>>(doc, "states", {});
  out.rows = field_or<std::vector<std::string>>(doc, "rows", {});
  if (doc.contains("manifest")) out.manifest = field<std::string>(doc, "manifest");
  const auto ctx = context_of(out.states);
  const auto domain = field<std::vector<std::string>>(doc, "domain");
  if (!out.rows.empty() && out.rows.size() != domain.size()) {
    throw ParseError("'rows' must label every domain letter");
  }
  const auto himg = field<json>(doc, "h");
  const auto gimg = field<json>(doc, "g");
  std::vector<std::pair<Letter, Word>> hs, gs;
  for (const auto& a : domain) {
    const Letter letter = parse_letter(a, ctx);
    hs.emplace_back(letter, Word::parse(field<std::string>(himg, a.c_str()), ctx));
    gs.emplace_back(letter, Word::parse(field<std::string>(gimg, a.c_str()), ctx));
  }
  if (himg.size() != domain.size() || gimg.size() != domain.size()) {
    throw ParseError("h and g must be defined exactly on the domain");
  }
  try {
    if (doc.contains("codomain")) {
      Alphabet codomain;
      for (const auto& a : field<std::vector<std::string>>(doc, "codomain")) {
        codomain.insert(parse_letter(a, ctx));
      }
      out.h = Morphism(std::move(hs), codomain);
      out.g = Morphism(std::move(gs), codomain);
    } else {
      out.h = Morphism(std::move(hs));
      out.g = Morphism(std::move(gs));
    }
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  return out;
}

json instance_to_json(const CpcpInstance& inst, const std::optional<std::string>& manifest) {
  json domain = json::array(), rows = json::array(), codomain = json::array();
  json h = json::object(), g = json::object();
  for (const auto& r : inst.rows) {
    domain.push_back(r.letter.spelling());
    rows.push_back(r.row);
    h[r.letter.spelling()] = r.h.spelling();
    g[r.letter.spelling()] = r.g.spelling();
  }
  for (const auto& a : inst.codomain) codomain.push_back(a.spelling());
  json doc = {{"domain", domain}, {"codomain", codomain}, {"states", inst.reduction.states},
              {"rows", rows},     {"h", h},               {"g", g}};
  if (manifest) doc["manifest"] = *manifest;
  return doc;
}

json instance_to_json(const Morphism& h, const Morphism& g) {
  json domain = json::array(), codomain = json::array();
  json hj = json::object(), gj = json::object();
  for (const auto& a : h.domain()) {
    domain.push_back(a.spelling());
    hj[a.spelling()] = h.image(a).spelling();
    gj[a.spelling()] = g.image(a).spelling();
  }
  Alphabet cod = h.codomain();
  cod.insert(g.codomain().begin(), g.codomain().end());
  for (const auto& a : cod) codomain.push_back(a.spelling());
  return {{"domain", domain}, {"codomain", codomain}, {"h", hj}, {"g", gj}};
}

ZpcpInstance zpcp_from_json(const json& doc) {
  const auto n = field<std::size_t>(doc, "n");
  const auto pairs = field<std::vector<std::pair<std::string, std::string>>>(doc, "pairs");
  if (n == 0 || pairs.size() != n) throw ParseError("'pairs' must list exactly n >= 1 pairs");
  std::vector<std::pair<Word, Word>> words;
  for (const auto& [u, v] : pairs) words.emplace_back(Word::parse(u), Word::parse(v));
  return ZpcpInstance::from_pairs(words);
}

IndexSequence candidate_from_json(const json& doc, std::size_t n) {
  std::set<Letter> allowed;
  for (std::size_t i = 0; i < n; ++i) allowed.insert(index_letter(i));
  auto read = [&](const char* key) {
    Word w = Word::parse(field<std::string>(doc, key));
    for (const auto& a : w) {
      if (!allowed.contains(a)) {
        throw ParseError(std::string("'") + key + "' uses index " + a.spelling() +
                         " outside 1.." + std::to_string(n));
      }
    }
    return w;
  };
  Word l = read("left_period");
  Word c = read("center");
  Word r = read("right_period");
  if (l.empty() || r.empty()) throw ParseError("candidate periods must be nonempty");
  return {std::move(l), std::move(c), std::move(r)};
}

json solution_report(const Morphism& h, const Morphism& g,
                     const std::optional<ConjugateSolution>& sol, std::size_t max_len,
                     std::chrono::duration<double> elapsed) {
  json doc = {{"max_len", max_len}, {"found", sol.has_value()}};
  if (sol) {
    json splits = json::array();
    for (const auto& s : sol->splits) splits.push_back(split_json(s));
    doc["w"] = sol->w.spelling();
    doc["h_w"] = h.apply(sol->w).spelling();
    doc["g_w"] = g.apply(sol->w).spelling();
    doc["splits"] = splits;
  }
  doc["seconds"] = elapsed.count();
  return doc;
}

}  // namespace pcpbench::io
