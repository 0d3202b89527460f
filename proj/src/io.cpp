#include "simcores/io.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace simcores {

namespace {

using ordered_json = nlohmann::ordered_json;

}  // namespace

std::string partition_to_json(const Partition& p) {
  ordered_json arr = ordered_json::array();
  for (int part : p.parts()) arr.push_back(part);
  return arr.dump();
}

Partition partition_from_json(const std::string& text) {
  ordered_json parsed = ordered_json::parse(text);
  if (!parsed.is_array()) throw std::invalid_argument("expected a JSON array");
  std::vector<int> parts;
  for (const auto& v : parsed) {
    if (!v.is_number_integer()) throw std::invalid_argument("expected integers");
    parts.push_back(v.get<int>());
  }
  return Partition(std::move(parts));
}

std::string hookset_to_json(const HookSet& h) {
  ordered_json arr = ordered_json::array();
  for (int v : h.values) arr.push_back(v);
  return arr.dump();
}

std::string poset_to_json(const GapPoset& p) {
  ordered_json out;
  out["generators"] = p.generators;
  out["ground"] = p.ground;
  ordered_json edges = ordered_json::array();
  for (const auto& [a, b] : p.cover_edges) edges.push_back({a, b});
  out["cover_edges"] = std::move(edges);
  return out.dump();
}

std::string poset_to_dot(const GapPoset& p) {
  std::ostringstream out;
  out << "digraph gap_poset {\n";
  for (int g : p.ground) out << "  " << g << ";\n";
  for (const auto& [a, b] : p.cover_edges) out << "  " << a << " -> " << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string tilde_to_json(const TildePoset& tp) {
  ordered_json out;
  out["s"] = tp.s;
  out["generators"] = tp.ambient_generators;
  out["ground"] = tp.ground;
  ordered_json edges = ordered_json::array();
  for (const auto& [a, b] : tp.cover_edges()) edges.push_back({a, b});
  out["cover_edges"] = std::move(edges);
  ordered_json pairs = ordered_json::array();
  for (const auto& [h1, h2] : tp.forbidden) pairs.push_back({h1, h2});
  out["forbidden_pairs"] = std::move(pairs);
  return out.dump();
}

std::string tilde_to_dot(const TildePoset& tp) {
  std::ostringstream out;
  out << "digraph modified_diagram {\n";
  for (int g : tp.ground) out << "  " << g << ";\n";
  for (const auto& [a, b] : tp.cover_edges())
    out << "  " << a << " -> " << b << ";\n";
  for (const auto& [h1, h2] : tp.forbidden)
    out << "  " << h1 << " -> " << h2
        << " [style=dotted, dir=none, forbidden=true];\n";
  out << "}\n";
  return out.str();
}

std::string witness_to_json(const ScCoreWitness& w, int s) {
  ordered_json out;
  out["s"] = s;
  out["md"] = w.md;
  out["partition"] = w.partition.parts();
  return out.dump();
}

MotzkinPath motzkin_from_text(const std::string& text) {
  std::string trimmed = text;
  const auto first = trimmed.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return MotzkinPath{};
  if (trimmed[first] == '[') {
    ordered_json parsed = ordered_json::parse(trimmed);
    std::string steps;
    for (const auto& v : parsed) {
      if (!v.is_string() || v.get<std::string>().size() != 1)
        throw std::invalid_argument("invalid step");
      steps.push_back(v.get<std::string>()[0]);
    }
    return parse_motzkin(steps);
  }
  return parse_motzkin(trimmed);
}

GenDyckPath gen_dyck_from_text(const std::string& text, int k) {
  std::string trimmed = text;
  const auto first = trimmed.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && trimmed[first] == '[') {
    ordered_json parsed = ordered_json::parse(trimmed);
    std::ostringstream joined;
    bool space = false;
    for (const auto& v : parsed) {
      if (!v.is_string()) throw std::invalid_argument("invalid step");
      if (space) joined << ' ';
      joined << v.get<std::string>();
      space = true;
    }
    return parse_gen_dyck(joined.str(), k);
  }
  return parse_gen_dyck(text, k);
}

std::string report_to_json(const VerificationReport& r, bool with_timing) {
  ordered_json out;
  out["claim_id"] = r.claim_id;
  ordered_json params;
  for (const auto& [name, value] : r.parameters) params[name] = value;
  out["parameters"] = std::move(params);
  out["left"] = r.left;
  out["right"] = r.right;
  out["passed"] = r.passed;
  out["elapsed_ms"] = with_timing ? r.elapsed_ms : 0;
  return out.dump();
}

std::string report_csv_header() {
  return "claim_id,parameters,left,right,passed,elapsed_ms";
}

namespace {

std::string join(const std::vector<std::string>& values, char sep) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out.push_back(sep);
    out += values[i];
  }
  return out;
}

}  // namespace

std::string report_to_csv(const VerificationReport& r, bool with_timing) {
  std::ostringstream out;
  out << r.claim_id << ',';
  std::vector<std::string> params;
  for (const auto& [name, value] : r.parameters)
    params.push_back(name + "=" + std::to_string(value));
  out << join(params, ';') << ',' << join(r.left, ';') << ','
      << join(r.right, ';') << ',' << (r.passed ? "true" : "false") << ','
      << (with_timing ? r.elapsed_ms : 0);
  return out.str();
}

}  // namespace simcores
