#include "chromcon/serialize.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace chromcon {

using nlohmann::json;

std::string template_to_json(const Template& t) {
  json out;
  out["S"] = json::array();
  out["c"] = json::array();
  out["F"] = json::object();
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (t.precolor[v] != 0) {
      out["S"].push_back(v);
      out["c"].push_back(t.precolor[v]);
    } else if (!t.forbidden[v].empty()) {
      out["F"][std::to_string(v)] = t.forbidden[v];
    }
  }
  return out.dump();
}

Template template_from_json(const std::string& text, const Graph& g, const ColorSet& c) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("template json: ") + e.what());
  }
  Template t = empty_template(g.vertex_count());
  const json s = in.value("S", json::array());
  const json cols = in.value("c", json::array());
  if (!s.is_array() || !cols.is_array() || s.size() != cols.size())
    throw std::invalid_argument("template json: S and c must be parallel arrays");
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int v = s[i].get<int>();
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("template json: precolored vertex " + std::to_string(v) +
                                  " out of range");
    if (t.precolor[v] != 0)
      throw std::invalid_argument("template json: vertex " + std::to_string(v) + " repeated in S");
    t.precolor[v] = cols[i].get<int>();
  }
  const json f_map = in.value("F", json::object());
  for (const auto& [key, value] : f_map.items()) {
    const int v = std::stoi(key);
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("template json: forbidden vertex " + key + " out of range");
    std::vector<int> f = value.get<std::vector<int>>();
    std::sort(f.begin(), f.end());
    t.forbidden[v] = std::move(f);
  }
  validate_template(g, t, c);
  return t;
}

std::string coloring_to_json(const Coloring& f) { return json(f.colors).dump(); }

Coloring coloring_from_json(const std::string& text) {
  try {
    return Coloring{json::parse(text).get<std::vector<int>>()};
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("coloring json: ") + e.what());
  }
}

std::string trace_to_json(const TraceLog& trace) {
  json stages = json::array();
  for (const StageTrace& st : trace.stages()) {
    json stage;
    stage["stage"] = st.stage;
    stage["values"] = json::object();
    for (const auto& [key, value] : st.values) stage["values"][key] = value;
    stage["checks"] = json::array();
    for (const CheckRecord& c : st.checks) {
      json check;
      check["label"] = c.label;
      check["ok"] = c.ok;
      if (!c.detail.empty()) check["detail"] = c.detail;
      stage["checks"].push_back(check);
    }
    stages.push_back(stage);
  }
  return stages.dump();
}

namespace {

const char* verdict_name(GBoundRecord::Verdict v) {
  return v == GBoundRecord::Verdict::lower_bound_witness ? "lower-bound-witness"
                                                         : "upper-bound-consistent";
}

}  // namespace

std::string gbound_records_to_json(const std::vector<GBoundRecord>& records) {
  json out = json::array();
  for (const GBoundRecord& r : records) {
    json rec;
    rec["k"] = r.k;
    rec["m"] = r.m;
    rec["n"] = r.n;
    rec["verdict"] = verdict_name(r.verdict);
    rec["upper_bound_violation"] = r.upper_bound_violation;
    if (r.witness_graph6) rec["witness_graph6"] = *r.witness_graph6;
    out.push_back(rec);
  }
  return out.dump();
}

std::string gbound_records_to_csv(const std::vector<GBoundRecord>& records) {
  std::ostringstream out;
  out << "k,m,n,verdict,upper_bound_violation,witness_graph6\n";
  for (const GBoundRecord& r : records) {
    out << r.k << ',' << r.m << ',' << r.n << ',' << verdict_name(r.verdict) << ','
        << (r.upper_bound_violation ? "true" : "false") << ','
        << (r.witness_graph6 ? *r.witness_graph6 : "") << '\n';
  }
  return out.str();
}

}  // namespace chromcon
