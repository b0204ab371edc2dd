#include "quiverkit/export.hpp"

#include <sstream>

namespace quiverkit {

Json to_json(const TranslationQuiver& tq) {
  Json out = Json::object();
  out["vertices"] = tq.quiver().labels();
  Json arrows = Json::array();
  for (const Arrow& a : tq.quiver().arrows()) {
    arrows.push_back(Json::array({tq.label(a.source), tq.label(a.target)}));
  }
  out["arrows"] = std::move(arrows);
  Json tau = Json::object();
  for (VertexId v = 0; v < tq.vertex_count(); ++v) {
    if (auto t = tq.tau(v)) tau[tq.label(v)] = tq.label(*t);
  }
  out["tau"] = std::move(tau);
  return out;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const TranslationQuiver& tq, std::string_view graph_name) {
  std::ostringstream out;
  out << "digraph " << quoted(std::string(graph_name)) << " {\n";
  for (VertexId v = 0; v < tq.vertex_count(); ++v) out << "  " << quoted(tq.label(v)) << ";\n";
  for (const Arrow& a : tq.quiver().arrows()) {
    out << "  " << quoted(tq.label(a.source)) << " -> " << quoted(tq.label(a.target)) << ";\n";
  }
  for (VertexId v = 0; v < tq.vertex_count(); ++v) {
    if (auto t = tq.tau(v)) {
      out << "  " << quoted(tq.label(v)) << " -> " << quoted(tq.label(*t))
          << " [style=dashed, label=\"tau\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace quiverkit
