#include "lll/io.hpp"

#include <json.hpp>

#include <sstream>

namespace lll {

namespace {

using nlohmann::json;

json parse_json(std::string_view text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError(std::string("invalid JSON in ") + what);
  return j;
}

Rel rel_from_string(const std::string& s) {
  if (s == "eq") return Rel::Eq;
  if (s == "ne") return Rel::Ne;
  throw ParseError("unknown atom relation '" + s + "' (expected \"eq\" or \"ne\")");
}

json forest_node_to_json(const LabeledForest& forest, int id) {
  json node;
  node["label"] = forest.nodes[id].label + 1;
  node["children"] = json::array();
  for (int child : forest.nodes[id].children) {
    node["children"].push_back(forest_node_to_json(forest, child));
  }
  return node;
}

int forest_node_from_json(const json& j, LabeledForest& forest) {
  if (!j.is_object() || !j.contains("label") || !j["label"].is_number_integer()) {
    throw ParseError("forest node must be an object with an integer \"label\"");
  }
  const int label = j["label"].get<int>();
  if (label < 1) throw ParseError("forest labels are 1-based event indices");
  forest.nodes.push_back({label - 1, {}});
  const int id = static_cast<int>(forest.nodes.size() - 1);
  if (j.contains("children")) {
    if (!j["children"].is_array()) throw ParseError("forest \"children\" must be an array");
    for (const auto& child : j["children"]) {
      const int child_id = forest_node_from_json(child, forest);
      forest.nodes[id].children.push_back(child_id);
    }
  }
  return id;
}

}  // namespace

EventSystem instance_from_json(std::string_view text, const Budget& budget) {
  const json j = parse_json(text, "instance");
  if (!j.is_object() || !j.contains("variables") || !j["variables"].is_array()) {
    throw ParseError("instance needs a \"variables\" array");
  }
  std::vector<VariableSpec> variables;
  for (const auto& vj : j["variables"]) {
    VariableSpec spec;
    if (!vj.contains("domain") || !vj["domain"].is_number_integer()) {
      throw ParseError("variable needs an integer \"domain\"");
    }
    spec.domain_size = vj["domain"].get<int>();
    if (!vj.contains("weights") || !vj["weights"].is_array()) {
      throw ParseError("variable needs a \"weights\" array");
    }
    for (const auto& wj : vj["weights"]) {
      if (wj.is_string()) {
        spec.weights.push_back(parse_rational(wj.get<std::string>()));
      } else if (wj.is_number_integer()) {
        spec.weights.push_back(Rational(wj.get<long>()));
      } else {
        throw ParseError("weights must be rational strings");
      }
    }
    variables.push_back(std::move(spec));
  }
  std::vector<EventSpec> events;
  if (j.contains("events")) {
    if (!j["events"].is_array()) throw ParseError("\"events\" must be an array");
    for (const auto& ej : j["events"]) {
      EventSpec spec;
      if (!ej.contains("dnf") || !ej["dnf"].is_array()) {
        throw ParseError("event needs a \"dnf\" array of terms");
      }
      for (const auto& tj : ej["dnf"]) {
        if (!tj.is_array()) throw ParseError("each DNF term must be an array of atoms");
        Term term;
        for (const auto& aj : tj) {
          if (!aj.contains("var") || !aj.contains("rel") || !aj.contains("val")) {
            throw ParseError("atom needs \"var\", \"rel\" and \"val\"");
          }
          term.push_back({aj["var"].get<int>(), rel_from_string(aj["rel"].get<std::string>()),
                          aj["val"].get<int>()});
        }
        spec.expr.terms.push_back(std::move(term));
      }
      if (ej.contains("scope")) {
        if (!ej["scope"].is_array()) throw ParseError("event \"scope\" must be an array");
        for (const auto& sj : ej["scope"]) spec.extra_scope.push_back(sj.get<int>());
      }
      events.push_back(std::move(spec));
    }
  }
  try {
    return EventSystem(std::move(variables), std::move(events), budget);
  } catch (const MalformedError& e) {
    throw ParseError(e.what());
  }
}

std::string instance_to_json(const EventSystem& system) {
  json j;
  j["variables"] = json::array();
  for (const auto& v : system.variables()) {
    json vj;
    vj["domain"] = v.domain_size;
    vj["weights"] = json::array();
    for (const auto& w : v.weights) vj["weights"].push_back(format_rational(w));
    j["variables"].push_back(std::move(vj));
  }
  j["events"] = json::array();
  for (const auto& e : system.events()) {
    json ej;
    ej["dnf"] = json::array();
    for (const auto& term : e.expr.terms) {
      json tj = json::array();
      for (const auto& atom : term) {
        tj.push_back({{"var", atom.var}, {"rel", atom.rel == Rel::Eq ? "eq" : "ne"},
                      {"val", atom.value}});
      }
      ej["dnf"].push_back(std::move(tj));
    }
    ej["scope"] = e.scope;
    j["events"].push_back(std::move(ej));
  }
  return j.dump(2) + "\n";
}

LabeledForest forest_from_json(std::string_view text) {
  const json j = parse_json(text, "forest");
  if (!j.is_object() || !j.contains("roots") || !j["roots"].is_array()) {
    throw ParseError("forest needs a \"roots\" array");
  }
  LabeledForest forest;
  for (const auto& root : j["roots"]) {
    forest.roots.push_back(forest_node_from_json(root, forest));
  }
  return forest;
}

std::string forest_to_json(const LabeledForest& forest) {
  json j;
  j["roots"] = json::array();
  for (int root : forest.roots) j["roots"].push_back(forest_node_to_json(forest, root));
  return j.dump(2) + "\n";
}

std::string log_to_json(const ExecutionLog& log) {
  json j;
  j["seed"] = log.seed;
  j["outcome"] = log.outcome == Outcome::Success ? "success" : "round-limit";
  j["rounds"] = log.rounds;
  j["initial_assignment"] = log.initial_assignment.values;
  j["final_assignment"] = log.final_assignment.values;
  j["records"] = json::array();
  for (const auto& rec : log.records) {
    json rj;
    rj["event"] = rec.event + 1;
    rj["depth"] = rec.depth;
    if (rec.parent) {
      rj["parent"] = *rec.parent;
    } else {
      rj["parent"] = nullptr;
    }
    rj["round"] = rec.round;
    j["records"].push_back(std::move(rj));
  }
  return j.dump(2) + "\n";
}

std::string vdl_to_json(const VDLGraph& graph) {
  json j;
  j["type"] = "vdl";
  j["m"] = graph.m;
  j["d"] = graph.d;
  j["edges"] = json::array();
  for (const auto& [i, k] : graph.edge_list()) j["edges"].push_back({i + 1, k + 1});
  j["gamma"] = json::array();
  for (const auto& out : graph.gamma) {
    json row = json::array();
    for (int k : out) row.push_back(k + 1);
    j["gamma"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

std::string lops_to_json(const LopsGraph& graph) {
  json j;
  j["type"] = "lopsidependency";
  j["m"] = graph.m;
  j["d_prime"] = graph.d_prime;
  j["edges"] = json::array();
  for (const auto& [i, k] : graph.edge_list()) j["edges"].push_back({i + 1, k + 1});
  j["neighborhoods"] = json::array();
  for (const auto& n : graph.neighbors) {
    json row = json::array();
    for (int k : n) row.push_back(k + 1);
    j["neighborhoods"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

std::string vdl_to_dot(const VDLGraph& graph) {
  std::ostringstream out;
  out << "digraph vdl {\n";
  for (std::size_t e = 0; e < graph.m; ++e) out << "  E" << e + 1 << ";\n";
  for (const auto& [i, k] : graph.edge_list()) out << "  E" << i + 1 << " -> E" << k + 1 << ";\n";
  out << "}\n";
  return out.str();
}

std::string lops_to_dot(const LopsGraph& graph) {
  std::ostringstream out;
  out << "graph lopsidependency {\n";
  for (std::size_t e = 0; e < graph.m; ++e) out << "  E" << e + 1 << ";\n";
  for (const auto& [i, k] : graph.edge_list()) out << "  E" << i + 1 << " -- E" << k + 1 << ";\n";
  out << "}\n";
  return out.str();
}

std::string stats_to_csv(const SimulationStats& stats, std::size_t max_n, int d, std::size_t m,
                         const Rational& p) {
  std::ostringstream out;
  out << "n,survivors,p_hat,stderr,bound\n";
  for (std::size_t n = 0; n <= max_n; ++n) {
    const auto survivors = n < stats.survivors.size() ? stats.survivors[n] : 0;
    out << n << ',' << survivors << ',' << stats.p_hat(n) << ',' << stats.std_error(n) << ','
        << to_double(bound_report(d, m, n, p).fn_pn) << '\n';
  }
  return out.str();
}

std::string stats_to_json(const SimulationStats& stats, std::size_t max_n) {
  json j;
  j["base_seed"] = stats.base_seed;
  j["trials"] = stats.trials;
  j["limited"] = stats.limited;
  j["histogram"] = json::object();
  for (const auto& [rounds, count] : stats.rounds_histogram) {
    j["histogram"][std::to_string(rounds)] = count;
  }
  j["survival"] = json::array();
  for (std::size_t n = 0; n <= max_n; ++n) {
    j["survival"].push_back({{"n", n},
                             {"survivors", n < stats.survivors.size() ? stats.survivors[n] : 0},
                             {"p_hat", stats.p_hat(n)},
                             {"stderr", stats.std_error(n)}});
  }
  return j.dump(2) + "\n";
}

std::string counts_to_csv(int d, std::size_t m, std::size_t n_max, const Rational* p) {
  std::ostringstream out;
  out << (p ? "n,t_n,f_n,bound\n" : "n,t_n,f_n\n");
  const auto t = t_sequence(d, n_max);
  const auto f = f_sequence(d, m, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    out << n << ',' << t[n].get_str() << ',' << f[n].get_str();
    if (p) out << ',' << format_rational(bound_report(d, m, n, *p).fn_pn);
    out << '\n';
  }
  return out.str();
}

}  // namespace lll
