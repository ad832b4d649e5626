#include "scenario.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace reslat_cli {

using nlohmann::json;

namespace {

int line_of_offset(const std::string& text, std::size_t offset) {
  int line = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k)
    if (text[k] == '\n') ++line;
  return line;
}

// Line of the n-th (0-based) occurrence of a key in the raw text; good
// enough for pointing at the offending edit entry.
int line_of_nth_key(const std::string& text, const std::string& key,
                    std::size_t n) {
  std::size_t pos = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    pos = text.find(key, pos);
    if (pos == std::string::npos) return 0;
    if (k < n) pos += key.size();
  }
  return line_of_offset(text, pos);
}

std::array<std::int64_t, 2> pair_of(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer())
    throw ParseError{std::string(what) + " must be a pair of integers", 0};
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

}  // namespace

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError{"cannot open scenario file: " + path, 0};
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError{e.what(), line_of_offset(text, e.byte)};
  }

  Scenario s;
  try {
    if (doc.value("version", 0) != 1)
      throw ParseError{"unsupported or missing scenario version (expect 1)", 0};
    const std::string lattice = doc.at("lattice").get<std::string>();
    if (lattice == "square")
      s.lattice = RL_LATTICE_SQUARE;
    else if (lattice == "triangular")
      s.lattice = RL_LATTICE_TRIANGULAR;
    else
      throw ParseError{"lattice must be \"square\" or \"triangular\"", 0};

    for (const json& je : doc.value("edits", json::array())) {
      ScenarioEdit e;
      const auto start = pair_of(je.at("start"), "edit start");
      const auto end = pair_of(je.at("end"), "edit end");
      e.start[0] = start[0];
      e.start[1] = start[1];
      e.end[0] = end[0];
      e.end[1] = end[1];
      const std::string action = je.value("action", "remove");
      if (action == "remove") {
        e.beta = 0.0;
      } else if (action == "set") {
        if (!je.contains("beta"))
          throw ParseError{"edit with action \"set\" requires beta", 0};
        e.beta = je.at("beta").get<double>();
      } else {
        throw ParseError{"edit action must be \"remove\" or \"set\"", 0};
      }
      s.edits.push_back(e);
    }
    for (const json& jq : doc.value("queries", json::array())) {
      ScenarioQuery q;
      const auto i = pair_of(jq.at("i"), "query i");
      const auto j = pair_of(jq.at("j"), "query j");
      q.i[0] = i[0];
      q.i[1] = i[1];
      q.j[0] = j[0];
      q.j[1] = j[1];
      s.queries.push_back(q);
    }
    if (doc.contains("options")) {
      const json& opt = doc.at("options");
      s.auto_augment = opt.value("auto_augment", true);
      if (opt.contains("current_window")) {
        const json& w = opt.at("current_window");
        if (!w.is_array() || w.size() != 4)
          throw ParseError{"current_window must be [m0, n0, m1, n1]", 0};
        s.current_window = Window{w[0].get<std::int64_t>(), w[1].get<std::int64_t>(),
                                  w[2].get<std::int64_t>(), w[3].get<std::int64_t>()};
      }
      s.output_prefix = opt.value("output_prefix", "");
    }
  } catch (const json::exception& e) {
    throw ParseError{e.what(), 0};
  }

  // Duplicate-bond validation with a line diagnostic.
  {
    rl_editset* probe = rl_editset_new(s.lattice);
    for (std::size_t k = 0; k < s.edits.size(); ++k) {
      const ScenarioEdit& e = s.edits[k];
      const rl_status st = rl_editset_add(probe, e.start[0], e.start[1],
                                          e.end[0], e.end[1], e.beta);
      if (st != RL_OK) {
        const int line = line_of_nth_key(text, "\"start\"", k);
        rl_editset_free(probe);
        throw ParseError{"edit " + std::to_string(k + 1) + ": " +
                             rl_last_error(),
                         line};
      }
    }
    rl_editset_free(probe);
  }
  return s;
}

std::string scenario_to_json(const Scenario& s) {
  json doc;
  doc["version"] = 1;
  doc["lattice"] = s.lattice == RL_LATTICE_SQUARE ? "square" : "triangular";
  doc["edits"] = json::array();
  for (const ScenarioEdit& e : s.edits) {
    json je;
    je["start"] = {e.start[0], e.start[1]};
    je["end"] = {e.end[0], e.end[1]};
    if (e.beta == 0.0) {
      je["action"] = "remove";
    } else {
      je["action"] = "set";
      je["beta"] = e.beta;
    }
    doc["edits"].push_back(je);
  }
  doc["queries"] = json::array();
  for (const ScenarioQuery& q : s.queries) {
    json jq;
    jq["i"] = {q.i[0], q.i[1]};
    jq["j"] = {q.j[0], q.j[1]};
    doc["queries"].push_back(jq);
  }
  json opt;
  opt["auto_augment"] = s.auto_augment;
  if (s.current_window)
    opt["current_window"] = {s.current_window->m0, s.current_window->n0,
                             s.current_window->m1, s.current_window->n1};
  if (!s.output_prefix.empty()) opt["output_prefix"] = s.output_prefix;
  doc["options"] = opt;
  return doc.dump(2) + "\n";
}

}  // namespace reslat_cli
