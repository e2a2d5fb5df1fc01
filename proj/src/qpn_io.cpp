#include "dmf/qpn_io.hpp"

#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace dmf {

namespace {

std::string dot_id(const ConceptId& id) {
  static const std::regex plain("[a-z_][a-z0-9_]*");
  return std::regex_match(id.str(), plain) ? id.str() : "\"" + id.str() + "\"";
}

std::string_view dot_shape(NodeKind kind) {
  switch (kind) {
    case NodeKind::decision: return "box";
    case NodeKind::chance: return "ellipse";
    case NodeKind::value: return "diamond";
  }
  return "ellipse";
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

ConceptId id_at(const std::string& text, int line) {
  if (auto id = ConceptId::parse(text)) return *id;
  throw ModelError(ModelErrorKind::syntax, "invalid concept name '" + text + "'", {}, line);
}

}  // namespace

std::string export_dot(const Qpn& model) {
  std::ostringstream out;
  out << "digraph qpn {\n";
  for (const auto& n : model.nodes()) {
    out << "  " << dot_id(n.concept_id) << " [shape=" << dot_shape(n.kind) << "];\n";
  }
  for (const auto& e : model.edges()) {
    out << "  " << dot_id(e.from) << " -> " << dot_id(e.to) << " [label=\""
        << pretty_symbol(e.sign) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string serialize_qpn(const Qpn& model) {
  std::ostringstream out;
  for (const auto& n : model.nodes()) {
    out << "node " << n.concept_id << " kind=" << to_string(n.kind);
    if (!n.values.empty()) {
      out << " values=";
      for (std::size_t i = 0; i < n.values.size(); ++i) out << (i ? "," : "") << n.values[i];
    }
    out << "\n";
  }
  for (const auto& e : model.edges()) {
    out << "edge " << e.from << " -> " << e.to << " sign=" << symbol(e.sign) << "\n";
  }
  return out.str();
}

Qpn parse_qpn(std::string_view text) {
  std::vector<QpnNode> nodes;
  std::vector<QpnEdge> edges;
  std::map<ConceptId, int> node_line;
  std::set<std::pair<ConceptId, ConceptId>> seen_edges;
  std::vector<std::pair<int, ConceptId>> references;

  const auto lines = split(text, '\n');
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int line = static_cast<int>(i) + 1;
    std::string body = lines[i];
    if (auto hash = body.find('#'); hash != std::string::npos) body.erase(hash);
    const auto w = words(body);
    if (w.empty()) continue;

    if (w[0] == "node") {
      if (w.size() < 3 || w.size() > 4 || w[2].rfind("kind=", 0) != 0) {
        throw ModelError(ModelErrorKind::syntax,
                         "expected 'node NAME kind=K [values=a,b,...]'", {}, line);
      }
      QpnNode node{id_at(w[1], line), NodeKind::chance, {}};
      auto kind = parse_node_kind(std::string_view(w[2]).substr(5));
      if (!kind) throw ModelError(ModelErrorKind::syntax, "unknown node kind '" + w[2] + "'", {}, line);
      node.kind = *kind;
      if (w.size() == 4) {
        if (w[3].rfind("values=", 0) != 0) {
          throw ModelError(ModelErrorKind::syntax, "expected values=a,b,...", {}, line);
        }
        for (const auto& v : split(std::string_view(w[3]).substr(7), ',')) {
          node.values.push_back(id_at(v, line));
        }
      }
      if (!node_line.emplace(node.concept_id, line).second) {
        throw ModelError(ModelErrorKind::duplicate_node, "node declared twice", {node.concept_id},
                         line);
      }
      nodes.push_back(std::move(node));
    } else if (w[0] == "edge") {
      if (w.size() != 5 || w[2] != "->" || w[4].rfind("sign=", 0) != 0) {
        throw ModelError(ModelErrorKind::syntax, "expected 'edge A -> B sign=(+|-|?)'", {}, line);
      }
      const std::string sign_text = w[4].substr(5);
      auto sign = parse_eval_sign(sign_text);
      if (!sign || *sign == EvalSign::zero) {
        throw ModelError(ModelErrorKind::syntax, "edge sign must be +, - or ?", {}, line);
      }
      QpnEdge edge{id_at(w[1], line), id_at(w[3], line), *sign, std::nullopt};
      if (edge.from == edge.to) {
        throw ModelError(ModelErrorKind::invalid_edge, "self edge", {edge.from}, line);
      }
      if (!seen_edges.emplace(edge.from, edge.to).second) {
        throw ModelError(ModelErrorKind::duplicate_edge, "edge declared twice",
                         {edge.from, edge.to}, line);
      }
      references.emplace_back(line, edge.from);
      references.emplace_back(line, edge.to);
      edges.push_back(std::move(edge));
    } else {
      throw ModelError(ModelErrorKind::syntax, "unknown statement '" + w[0] + "'", {}, line);
    }
  }
  for (const auto& [line, id] : references) {
    if (!node_line.count(id)) {
      throw ModelError(ModelErrorKind::unknown_node, "edge refers to an undeclared node", {id}, line);
    }
  }
  Qpn model(std::move(nodes), std::move(edges));
  check_decision_model(model);
  return model;
}

}  // namespace dmf
