#include "dmf/kb_parser.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "dmf/categorization.hpp"

namespace dmf {

std::string format_diagnostics(const std::vector<Diagnostic>& diagnostics) {
  std::string out;
  for (const auto& d : diagnostics) {
    if (d.line > 0) out += "line " + std::to_string(d.line) + ": ";
    out += d.message + "\n";
  }
  return out;
}

LoadError::LoadError(std::vector<Diagnostic> diagnostics)
    : KbError(format_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError({{0, "cannot open '" + path.string() + "'"}});
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string without_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '\t') out.push_back(c);
  }
  return out;
}

struct SourceLine {
  int no;
  std::string keyword;
  std::string rest;
};

class Loader {
 public:
  KnowledgeBase run(std::string_view text) {
    std::vector<SourceLine> lines = split_lines(text);
    for (const auto& l : lines) {
      if (l.keyword == "concept") declare(l);
    }
    for (const auto& l : lines) {
      if (l.keyword == "concept") decompose_declared(l);
    }
    for (const auto& l : lines) {
      if (l.keyword == "concept") continue;
      if (l.keyword == "property") {
        property(l);
      } else if (l.keyword == "value") {
        value(l);
      } else if (l.keyword == "link") {
        link(l);
      } else if (auto kind = parse_categorizer(l.keyword)) {
        categorical(l, *kind);
      } else {
        error(l.no, "unknown statement '" + l.keyword + "'");
      }
    }
    if (diags_.empty()) validate();
    if (!diags_.empty()) {
      std::stable_sort(diags_.begin(), diags_.end(),
                       [](const Diagnostic& a, const Diagnostic& b) { return a.line < b.line; });
      throw LoadError(std::move(diags_));
    }
    return std::move(kb_);
  }

 private:
  std::vector<SourceLine> split_lines(std::string_view text) {
    std::vector<SourceLine> out;
    int no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t nl = text.find('\n', pos);
      std::string_view raw =
          text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      ++no;
      if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
        raw = raw.substr(0, hash);
      }
      raw = trim(raw);
      if (!raw.empty()) {
        const auto sp = raw.find_first_of(" \t");
        std::string keyword(raw.substr(0, sp));
        std::string rest(sp == std::string_view::npos ? std::string_view{}
                                                      : trim(raw.substr(sp)));
        out.push_back({no, std::move(keyword), std::move(rest)});
      }
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
    return out;
  }

  void error(int line, std::string message) { diags_.push_back({line, std::move(message)}); }

  std::optional<ConceptId> name(int line, std::string_view text) {
    auto id = ConceptId::parse(text);
    if (!id) error(line, "invalid concept name '" + std::string(text) + "'");
    return id;
  }

  // Declared, or P-of-C with P declared and C resolvable (registered on success).
  std::optional<ConceptId> resolve(const ConceptId& id, int line) {
    if (kb_.contains(id)) return id;
    const std::string& s = id.str();
    for (auto pos = s.find("-of-"); pos != std::string::npos; pos = s.find("-of-", pos + 1)) {
      auto property = ConceptId::parse(s.substr(0, pos));
      auto rest = ConceptId::parse(s.substr(pos + 4));
      if (!property || !rest || !kb_.contains(*property)) continue;
      if (auto of = resolve(*rest, line)) {
        kb_.add_concept(id, DerivedOrigin{*property, *of});
        first_line_.emplace(id, line);
        return id;
      }
    }
    return std::nullopt;
  }

  std::optional<ConceptId> require(int line, std::string_view text) {
    auto id = name(line, text);
    if (!id) return std::nullopt;
    auto resolved = resolve(*id, line);
    if (!resolved) error(line, "undeclared concept '" + id->str() + "'");
    return resolved;
  }

  std::optional<Context> context(int line, std::string_view text) {
    const std::string compact = without_spaces(text);
    if (compact.empty()) {
      error(line, "empty context after '@'");
      return std::nullopt;
    }
    std::set<ConceptId> conditions;
    bool ok = true;
    std::size_t start = 0;
    while (true) {
      const auto plus = compact.find('+', start);
      auto c = require(line, std::string_view(compact).substr(
                                 start, plus == std::string::npos ? std::string::npos
                                                                  : plus - start));
      if (c) {
        conditions.insert(*c);
      } else {
        ok = false;
      }
      if (plus == std::string::npos) break;
      start = plus + 1;
    }
    if (!ok) return std::nullopt;
    return Context(std::move(conditions));
  }

  // Splits "<body> @ <ctx>"; returns the body and the parsed context.
  std::pair<std::string_view, std::optional<Context>> split_context(const SourceLine& l,
                                                                    bool& ok) {
    std::string_view rest = l.rest;
    const auto at = rest.find('@');
    if (at == std::string_view::npos) return {rest, Context{}};
    auto ctx = context(l.no, rest.substr(at + 1));
    if (!ctx) ok = false;
    return {trim(rest.substr(0, at)), ctx};
  }

  void declare(const SourceLine& l) {
    if (l.rest.empty()) {
      error(l.no, "expected: concept NAME");
      return;
    }
    auto id = name(l.no, l.rest);
    if (!id) return;
    if (const Concept* existing = kb_.find(*id)) {
      if (!existing->builtin) error(l.no, "duplicate concept declaration '" + id->str() + "'");
      return;
    }
    kb_.add_concept(*id);
    first_line_.emplace(*id, l.no);
  }

  void decompose_declared(const SourceLine& l) {
    auto id = ConceptId::parse(l.rest);
    if (!id) return;
    const Concept* c = kb_.find(*id);
    if (!c || c->builtin || c->derived) return;
    const std::string& s = id->str();
    for (auto pos = s.find("-of-"); pos != std::string::npos; pos = s.find("-of-", pos + 1)) {
      auto property = ConceptId::parse(s.substr(0, pos));
      auto rest = ConceptId::parse(s.substr(pos + 4));
      if (!property || !rest || !kb_.contains(*property)) continue;
      if (auto of = resolve(*rest, l.no)) {
        kb_.set_origin(*id, {*property, *of});
        return;
      }
    }
  }

  // NAME.PROP
  std::optional<std::pair<ConceptId, ConceptId>> dotted(int line, std::string_view text) {
    const auto dot = text.find('.');
    if (dot == std::string_view::npos) {
      error(line, "expected NAME.PROP, got '" + std::string(text) + "'");
      return std::nullopt;
    }
    auto c = require(line, text.substr(0, dot));
    auto p = require(line, text.substr(dot + 1));
    if (!c || !p) return std::nullopt;
    return std::make_pair(*c, *p);
  }

  void property(const SourceLine& l) {
    const auto tokens = split_ws(l.rest);
    if (tokens.size() != 1) {
      error(l.no, "expected: property NAME.PROP");
      return;
    }
    if (auto cp = dotted(l.no, tokens[0])) kb_.add_property(cp->first, cp->second);
  }

  void value(const SourceLine& l) {
    const std::string_view rest = l.rest;
    const auto eq = rest.find('=');
    if (eq == std::string_view::npos) {
      error(l.no, "expected: value NAME.PROP = V1,V2,...");
      return;
    }
    const auto head = split_ws(trim(rest.substr(0, eq)));
    if (head.size() != 1) {
      error(l.no, "expected: value NAME.PROP = V1,V2,...");
      return;
    }
    auto cp = dotted(l.no, head[0]);
    std::vector<ConceptId> values;
    bool ok = cp.has_value();
    const std::string list = without_spaces(rest.substr(eq + 1));
    if (!list.empty()) {
      std::size_t start = 0;
      while (true) {
        const auto comma = list.find(',', start);
        auto v = require(l.no, std::string_view(list).substr(
                                   start, comma == std::string::npos ? std::string::npos
                                                                     : comma - start));
        if (v) {
          values.push_back(*v);
        } else {
          ok = false;
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    if (!ok) return;
    if (kb_.find_assignment(cp->first, cp->second)) {
      error(l.no, "duplicate value assignment for " + cp->first.str() + "." + cp->second.str());
      return;
    }
    assignment_lines_[{cp->first, cp->second}] = l.no;
    kb_.assign({cp->first, cp->second, std::move(values)});
  }

  void categorical(const SourceLine& l, CategorizerKind kind) {
    bool ok = true;
    auto [body, ctx] = split_context(l, ok);
    const auto tokens = split_ws(body);
    if (tokens.size() != 2) {
      error(l.no, "expected: " + std::string(to_string(kind)) + " A B [@ C1+C2+...]");
      return;
    }
    if (kind != CategorizerKind::eqv && tokens[0] == tokens[1]) {
      error(l.no, std::string(kind == CategorizerKind::ako ? "AKO" : "PARTOF") +
                      " is irreflexive: '" + std::string(tokens[0]) +
                      "' cannot be related to itself");
      ok = false;
    }
    auto a = require(l.no, tokens[0]);
    auto b = require(l.no, tokens[1]);
    if (!ok || !a || !b || !ctx) return;
    categorical_lines_.push_back(l.no);
    kb_.add_categorical({kind, *a, *b, *ctx});
  }

  void link(const SourceLine& l) {
    bool ok = true;
    auto [body, ctx] = split_context(l, ok);
    const auto tokens = split_ws(body);
    if (tokens.size() < 3 || tokens[1] != "->") {
      error(l.no, "expected: link A -> B sign=(+|-|?) prec=(known|unknown) [sig=FLOAT] [@ ...]");
      return;
    }
    auto source = require(l.no, tokens[0]);
    auto target = require(l.no, tokens[2]);
    std::optional<InfluenceSign> sign;
    std::optional<Precedence> prec;
    double significance = 0.5;
    for (std::size_t i = 3; i < tokens.size(); ++i) {
      const auto eq = tokens[i].find('=');
      const std::string_view key = tokens[i].substr(0, eq);
      const std::string_view val =
          eq == std::string_view::npos ? std::string_view{} : tokens[i].substr(eq + 1);
      if (key == "sign" && !sign) {
        sign = parse_influence_sign(val);
        if (!sign) {
          error(l.no, "sign must be one of +, -, ?");
          ok = false;
        }
      } else if (key == "prec" && !prec) {
        prec = parse_precedence(val);
        if (!prec) {
          error(l.no, "prec must be known or unknown");
          ok = false;
        }
      } else if (key == "sig") {
        auto res = std::from_chars(val.data(), val.data() + val.size(), significance);
        if (res.ec != std::errc{} || res.ptr != val.data() + val.size() ||
            !std::isfinite(significance) || significance < 0.0 || significance > 1.0) {
          error(l.no, "sig must be a number in [0,1], got '" + std::string(val) + "'");
          ok = false;
        }
      } else {
        error(l.no, "unexpected link attribute '" + std::string(tokens[i]) + "'");
        ok = false;
      }
    }
    if (!sign || !prec) {
      if (ok) error(l.no, "link requires sign= and prec=");
      return;
    }
    if (!ok || !source || !target || !ctx) return;
    if (*source == *target) {
      error(l.no, "link source and target must differ ('" + source->str() + "')");
      return;
    }
    kb_.add_interaction({*source, *target, *sign, *prec, *ctx, significance});
  }

  int line_of_cycle(const CycleError& e) const {
    const auto& assertions = kb_.categorical();
    for (std::size_t i = 0; i < assertions.size(); ++i) {
      const auto& a = assertions[i];
      const bool in_a = std::binary_search(e.members().begin(), e.members().end(), a.a);
      const bool in_b = std::binary_search(e.members().begin(), e.members().end(), a.b);
      if (in_a && in_b) return categorical_lines_[i];
    }
    return 0;
  }

  void validate() {
    try {
      kb_.finalize();
    } catch (const CycleError& e) {
      error(line_of_cycle(e), e.what());
      return;
    }

    std::set<std::string> reported;
    std::vector<Context> views{Context{}};
    for (const auto& ctx : kb_.declared_contexts()) views.push_back(ctx);
    for (const auto& view : views) {
      for (auto kind : {CategorizerKind::ako, CategorizerKind::partof}) {
        try {
          categorizer_closure(kb_, kind, view);
        } catch (const CycleError& e) {
          const std::string msg = std::string(e.what()) + " in context " + view.display();
          if (reported.insert(msg).second) error(line_of_cycle(e), msg);
        }
      }
    }

    for (const auto& [id, c] : kb_.concepts()) {
      if (!c.derived) continue;
      if (!applicable_properties(kb_, c.derived->of).count(c.derived->property)) {
        auto it = first_line_.find(id);
        error(it == first_line_.end() ? 0 : it->second,
              "property '" + c.derived->property.str() + "' is not applicable to '" +
                  c.derived->of.str() + "' (derived concept '" + id.str() + "')");
      }
    }
    for (const auto& [key, assignment] : kb_.assignments()) {
      if (!applicable_properties(kb_, key.first).count(key.second)) {
        error(assignment_lines_.at(key), "property '" + key.second.str() +
                                             "' is not applicable to '" + key.first.str() + "'");
      }
    }
  }

  KnowledgeBase kb_;
  std::vector<Diagnostic> diags_;
  std::map<ConceptId, int> first_line_;
  std::map<std::pair<ConceptId, ConceptId>, int> assignment_lines_;
  std::vector<int> categorical_lines_;
};

}  // namespace

KnowledgeBase parse_kb(std::string_view text) { return Loader().run(text); }

KnowledgeBase load_kb(const std::filesystem::path& path) {
  return parse_kb(read_text_file(path));
}

std::string serialize_kb(const KnowledgeBase& kb) {
  std::ostringstream out;
  for (const auto& [id, c] : kb.concepts()) {
    if (!c.builtin) out << "concept " << id << "\n";
  }
  for (const auto& [id, c] : kb.concepts()) {
    for (const auto& p : c.properties) out << "property " << id << "." << p << "\n";
  }
  for (const auto& [key, a] : kb.assignments()) {
    out << "value " << key.first << "." << key.second << " =";
    for (std::size_t i = 0; i < a.values.size(); ++i) {
      out << (i ? "," : " ") << a.values[i];
    }
    out << "\n";
  }
  for (const auto& a : kb.categorical()) out << render(a) << "\n";
  for (const auto& a : kb.interactions()) out << render(a) << "\n";
  return out.str();
}

}  // namespace dmf
