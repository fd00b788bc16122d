#include "gog/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "gog/central.hpp"
#include "gog/dehn.hpp"

namespace gog {

ConfigError::ConfigError(const std::string& msg, int line, int col)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) +
                                        (col > 0 ? ":" + std::to_string(col) : "") +
                                        ": " + msg
                                  : msg),
      line_(line),
      col_(col) {}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

bool is_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = s[0] == '-' ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + i, s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

struct Entry {
  int line;
  std::string text;
};

struct Sections {
  std::vector<Entry> vertices, edges, oracles, admissible;
};

Sections read_sections(std::string_view text) {
  Sections out;
  std::vector<Entry>* cur = nullptr;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError("unterminated section header", lineno);
      std::string name = trim(line.substr(1, line.size() - 2));
      if (name == "vertices") {
        cur = &out.vertices;
      } else if (name == "edges") {
        cur = &out.edges;
      } else if (name == "oracles") {
        cur = &out.oracles;
      } else if (name == "admissible") {
        cur = &out.admissible;
      } else {
        throw ConfigError("unknown section: " + name, lineno);
      }
      continue;
    }
    if (cur == nullptr) throw ConfigError("entry before any section", lineno);
    cur->push_back(Entry{lineno, line});
  }
  return out;
}

// --- oracle spec grammar: kind(arg, arg, ...) with nested specs ------------

struct SpecNode {
  std::string head;            // kind name, or the literal for leaves
  std::vector<SpecNode> args;
  bool leaf = true;
};

struct SpecParser {
  const std::string& s;
  std::size_t pos = 0;
  int line;

  explicit SpecParser(const std::string& text, int lineno) : s(text), line(lineno) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  std::string token() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && s[pos] != '(' && s[pos] != ')' && s[pos] != ',' &&
           !std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
    if (start == pos) {
      throw ConfigError("syntax error in oracle spec", line, static_cast<int>(pos) + 1);
    }
    return s.substr(start, pos - start);
  }

  SpecNode parse() {
    SpecNode node;
    node.head = token();
    skip_ws();
    if (pos < s.size() && s[pos] == '(') {
      node.leaf = false;
      ++pos;
      skip_ws();
      if (pos < s.size() && s[pos] == ')') {
        ++pos;
        return node;
      }
      for (;;) {
        node.args.push_back(parse());
        skip_ws();
        if (pos < s.size() && s[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < s.size() && s[pos] == ')') {
          ++pos;
          break;
        }
        throw ConfigError("expected ',' or ')' in oracle spec", line,
                          static_cast<int>(pos) + 1);
      }
    }
    return node;
  }

  SpecNode parse_all() {
    SpecNode node = parse();
    skip_ws();
    if (pos != s.size()) {
      throw ConfigError("trailing text after oracle spec", line,
                        static_cast<int>(pos) + 1);
    }
    return node;
  }
};

struct OracleBuild {
  std::shared_ptr<const VertexOracle> oracle;
  std::vector<GenId> positive_letters;
};

std::pair<GenId, GenId> intern_pair(GroupSchema& schema, VertexId v,
                                    const std::string& name, bool aux,
                                    int line) {
  GenId existing = schema.alphabet().find(name);
  if (existing != kNoGen) {
    const GeneratorInfo& gi = schema.alphabet().info(existing);
    if (!aux || gi.kind != GenKind::VertexLetter || gi.vertex != v ||
        gi.inverse == kNoGen) {
      throw ConfigError("letter already declared: " + name, line);
    }
    return {existing, gi.inverse};
  }
  return aux ? schema.add_auxiliary_letter_pair(v, name)
             : schema.add_vertex_letter_pair(v, name);
}

Word parse_letters_word(const GroupSchema& schema, const std::string& text,
                        int line) {
  try {
    return schema.alphabet().parse_word(text);
  } catch (const WordError& e) {
    throw ConfigError(e.what(), line);
  }
}

// Declared letter names for free/abelian: either explicit identifiers or a
// rank (auto-named after the vertex).
std::vector<std::string> letter_names(const SpecNode& node,
                                      const GroupSchema& schema, VertexId v,
                                      const char* stem, int line) {
  std::vector<std::string> names;
  if (node.args.size() == 1 && node.args[0].leaf && is_integer(node.args[0].head)) {
    long rank = std::stol(node.args[0].head);
    if (rank < 1) throw ConfigError("rank must be positive", line);
    for (long i = 1; i <= rank; ++i) {
      names.push_back(schema.vertex(v).name + "_" + stem + std::to_string(i));
    }
    return names;
  }
  for (const SpecNode& a : node.args) {
    if (!a.leaf) throw ConfigError("expected a letter name", line);
    names.push_back(a.head);
  }
  if (names.empty()) throw ConfigError("oracle needs at least one letter", line);
  return names;
}

DehnSystem load_rules_file(GroupSchema& schema, VertexId v,
                           const std::string& path, bool aux, int line);
CosetTable load_table_file(GroupSchema& schema, VertexId v,
                           const std::string& path, int line);

OracleBuild build_oracle(const SpecNode& node, GroupSchema& schema, VertexId v,
                         bool aux, const std::string& base_dir, int line) {
  OracleBuild out;
  const std::string& kind = node.head;

  if (kind == "free" || kind == "abelian") {
    auto names = letter_names(node, schema, v, kind == "free" ? "x" : "z", line);
    for (const std::string& n : names) {
      out.positive_letters.push_back(intern_pair(schema, v, n, aux, line).first);
    }
    if (kind == "free") {
      out.oracle = std::make_shared<FreeOracle>(schema.alphabet(),
                                                out.positive_letters);
    } else {
      out.oracle = std::make_shared<AbelianOracle>(schema.alphabet(),
                                                   out.positive_letters);
    }
    return out;
  }

  if (kind == "product") {
    if (node.args.size() != 2) {
      throw ConfigError("product takes two factor specs", line);
    }
    OracleBuild a = build_oracle(node.args[0], schema, v, aux, base_dir, line);
    OracleBuild b = build_oracle(node.args[1], schema, v, aux, base_dir, line);
    auto with_inverses = [&](const std::vector<GenId>& pos) {
      std::vector<GenId> all;
      for (GenId g : pos) {
        all.push_back(g);
        all.push_back(schema.alphabet().inverse(g));
      }
      return all;
    };
    out.oracle = std::make_shared<ProductOracle>(
        a.oracle, with_inverses(a.positive_letters), b.oracle,
        with_inverses(b.positive_letters));
    out.positive_letters = a.positive_letters;
    out.positive_letters.insert(out.positive_letters.end(),
                                b.positive_letters.begin(),
                                b.positive_letters.end());
    return out;
  }

  if (kind == "central_extension") {
    if (node.args.size() != 2 || !node.args[1].leaf) {
      throw ConfigError("central_extension takes a base spec and a central letter",
                        line);
    }
    const SpecNode& base = node.args[0];
    DehnSystem sys = [&]() {
      if (base.head == "free") {
        auto names = letter_names(base, schema, v, "x", line);
        std::vector<GenId> letters;
        for (const std::string& n : names) {
          letters.push_back(intern_pair(schema, v, n, aux, line).first);
        }
        for (GenId g : letters) out.positive_letters.push_back(g);
        return DehnSystem::free_group(schema.alphabet(), letters);
      }
      if (base.head == "dehn") {
        if (base.args.size() != 1 || !base.args[0].leaf) {
          throw ConfigError("dehn takes a rules file", line);
        }
        return load_rules_file(schema, v, base_dir + "/" + base.args[0].head,
                               aux, line);
      }
      throw ConfigError("central_extension base must be free(...) or dehn(...)",
                        line);
    }();
    for (GenId g : sys.positive_letters()) {
      if (std::find(out.positive_letters.begin(), out.positive_letters.end(),
                    g) == out.positive_letters.end()) {
        out.positive_letters.push_back(g);
      }
    }
    auto [zp, zn] = intern_pair(schema, v, node.args[1].head, aux, line);
    out.positive_letters.push_back(zp);
    CentralExtensionPresentation pres{std::move(sys), zp, zn, {}};
    out.oracle = std::make_shared<CentralExtensionOracle>(std::move(pres));
    return out;
  }

  if (kind == "dehn") {
    if (node.args.size() != 1 || !node.args[0].leaf) {
      throw ConfigError("dehn takes a rules file", line);
    }
    DehnSystem sys =
        load_rules_file(schema, v, base_dir + "/" + node.args[0].head, aux, line);
    out.positive_letters = sys.positive_letters();
    out.oracle = std::make_shared<DehnOracle>(std::move(sys));
    return out;
  }

  if (kind == "finite_index") {
    if (node.args.size() != 2 || !node.args[0].leaf) {
      throw ConfigError("finite_index takes a table file and an inner spec",
                        line);
    }
    OracleBuild inner =
        build_oracle(node.args[1], schema, v, /*aux=*/true, base_dir, line);
    CosetTable table =
        load_table_file(schema, v, base_dir + "/" + node.args[0].head, line);
    // The loader interned the ambient letters into S_v already.
    out.oracle = std::make_shared<FiniteIndexOracle>(std::move(table), inner.oracle);
    return out;
  }

  throw ConfigError("unknown oracle kind: " + kind, line);
}

DehnSystem load_rules_file(GroupSchema& schema, VertexId v,
                           const std::string& path, bool aux, int line) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open rules file: " + path, line);
  int delta = 1;
  std::vector<GenId> letters;
  std::vector<std::pair<Word, Word>> rules;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
    std::string text = trim(raw);
    if (text.empty()) continue;
    if (text.rfind("letters:", 0) == 0) {
      std::istringstream ls(text.substr(8));
      std::string name;
      while (ls >> name) {
        letters.push_back(intern_pair(schema, v, name, aux, line).first);
      }
      continue;
    }
    if (text.rfind("delta:", 0) == 0) {
      delta = std::stoi(trim(text.substr(6)));
      continue;
    }
    if (text.rfind("rule:", 0) == 0) {
      auto arrow = text.find("->");
      if (arrow == std::string::npos) {
        throw ConfigError("rule without '->' in " + path, lineno);
      }
      Word lhs = parse_letters_word(schema, trim(text.substr(5, arrow - 5)), lineno);
      Word rhs = parse_letters_word(schema, trim(text.substr(arrow + 2)), lineno);
      rules.emplace_back(std::move(lhs), std::move(rhs));
      continue;
    }
    throw ConfigError("unrecognized line in rules file " + path, lineno);
  }
  if (letters.empty()) {
    throw ConfigError("rules file declares no letters: " + path, line);
  }
  return DehnSystem::from_rules(schema.alphabet(), delta, std::move(letters),
                                std::move(rules));
}

CosetTable load_table_file(GroupSchema& schema, VertexId v,
                           const std::string& path, int line) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open coset table: " + path, line);
  CosetTable table;
  std::string raw;
  int lineno = 0;
  std::vector<GenId> gens;
  auto coset_id = [&](const std::string& name, int at) -> std::uint32_t {
    for (std::uint32_t i = 0; i < table.coset_names.size(); ++i) {
      if (table.coset_names[i] == name) return i;
    }
    throw ConfigError("unknown coset: " + name, at);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
    std::string text = trim(raw);
    if (text.empty()) continue;
    if (text.rfind("cosets:", 0) == 0) {
      std::istringstream ls(text.substr(7));
      std::string name;
      while (ls >> name) table.coset_names.push_back(name);
      if (table.coset_names.empty()) {
        throw ConfigError("empty coset list in " + path, lineno);
      }
      continue;
    }
    if (text.rfind("gens:", 0) == 0) {
      std::istringstream ls(text.substr(5));
      std::string name;
      while (ls >> name) {
        gens.push_back(intern_pair(schema, v, name, /*aux=*/false, lineno).first);
      }
      continue;
    }
    // coset letter -> coset : inner word
    auto arrow = text.find("->");
    auto colon = text.find(':', arrow == std::string::npos ? 0 : arrow);
    if (arrow == std::string::npos || colon == std::string::npos) {
      throw ConfigError("transition needs '-> coset : word' in " + path, lineno);
    }
    std::istringstream head(text.substr(0, arrow));
    std::string coset_name, letter_name;
    if (!(head >> coset_name >> letter_name)) {
      throw ConfigError("transition needs 'coset letter' on the left", lineno);
    }
    std::uint32_t from = coset_id(coset_name, lineno);
    GenId letter = schema.alphabet().find(letter_name);
    if (letter == kNoGen) {
      throw ConfigError("unknown letter in table: " + letter_name, lineno);
    }
    std::uint32_t to = coset_id(trim(text.substr(arrow + 2, colon - arrow - 2)), lineno);
    std::string inner_text = trim(text.substr(colon + 1));
    Word inner;
    {
      std::istringstream ws(inner_text);
      std::string tok;
      while (ws >> tok) {
        GenId g = schema.alphabet().find(tok);
        if (g == kNoGen) {
          // Inner letters are auxiliary; intern on first sight.
          auto [p, n] = intern_pair(schema, v, tok, /*aux=*/true, lineno);
          g = p;
          (void)n;
        }
        inner.push_back(g);
      }
    }
    table.set(from, letter, to, std::move(inner));
  }
  if (table.coset_names.empty()) {
    throw ConfigError("coset table has no cosets: " + path, line);
  }
  // Auto-complete inverse transitions: (c, s) -> d with word u gives
  // (d, s') -> c with word u^-1.
  std::vector<std::tuple<std::uint32_t, GenId, std::uint32_t, Word>> implied;
  for (const auto& [key, cell] : table.cells) {
    std::uint32_t coset = static_cast<std::uint32_t>(key >> 32);
    GenId g = static_cast<GenId>(key & 0xffffffffu);
    GenId inv = schema.alphabet().inverse(g);
    if (inv == kNoGen || table.defined(cell.next, inv)) continue;
    implied.emplace_back(cell.next, inv, coset,
                         schema.alphabet().inverse_word(cell.inner));
  }
  for (auto& [c, g, d, w] : implied) table.set(c, g, d, std::move(w));
  // The walk must be total on cosets x letters.
  for (std::uint32_t c = 0; c < table.coset_names.size(); ++c) {
    for (GenId g : gens) {
      for (GenId letter : {g, schema.alphabet().inverse(g)}) {
        if (!table.defined(c, letter)) {
          throw ConfigError("coset table incomplete: no transition for (" +
                                table.coset_names[c] + ", " +
                                schema.alphabet().spell(letter) + ") in " + path,
                            line);
        }
      }
    }
  }
  return table;
}

QuasiconvexAutomaton load_automaton_file(GroupSchema& schema,
                                         const std::string& path, int line) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open automaton file: " + path, line);
  QuasiconvexAutomaton aut;
  aut.state_names.clear();
  std::string raw;
  int lineno = 0;
  auto state_id = [&](const std::string& name, int at) -> std::uint32_t {
    for (std::uint32_t i = 0; i < aut.state_names.size(); ++i) {
      if (aut.state_names[i] == name) return i;
    }
    throw ConfigError("unknown state: " + name, at);
  };
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto pos = raw.find('#'); pos != std::string::npos) raw.erase(pos);
    std::string text = trim(raw);
    if (text.empty()) continue;
    if (text.rfind("states:", 0) == 0) {
      std::istringstream ls(text.substr(7));
      std::string name;
      while (ls >> name) aut.state_names.push_back(name);
      aut.num_states = static_cast<std::uint32_t>(aut.state_names.size());
      aut.initial = 0;
      continue;
    }
    if (text.rfind("lambda:", 0) == 0) {
      aut.lambda = std::stoi(trim(text.substr(7)));
      continue;
    }
    auto arrow = text.find("->");
    auto colon = text.find(':', arrow == std::string::npos ? 0 : arrow);
    if (arrow == std::string::npos || colon == std::string::npos) {
      throw ConfigError("transition needs '-> state : word'", lineno);
    }
    std::istringstream head(text.substr(0, arrow));
    std::string state_name, letter_name;
    if (!(head >> state_name >> letter_name)) {
      throw ConfigError("transition needs 'state letter' on the left", lineno);
    }
    std::uint32_t from = state_id(state_name, lineno);
    GenId letter = schema.alphabet().find(letter_name);
    if (letter == kNoGen) {
      throw ConfigError("unknown letter in automaton: " + letter_name, lineno);
    }
    std::uint32_t to = state_id(trim(text.substr(arrow + 2, colon - arrow - 2)), lineno);
    Word output = parse_letters_word(schema, trim(text.substr(colon + 1)), lineno);
    aut.add_transition(from, letter, to, std::move(output));
  }
  if (aut.state_names.empty()) {
    throw ConfigError("automaton has no states: " + path, line);
  }
  return aut;
}

// --- admissible section -----------------------------------------------------

EdgeNormalForm parse_triple(const std::string& text,
                            const std::vector<std::string>& coset_names,
                            int line) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') {
    throw ConfigError("expected a (k, l, h) triple", line);
  }
  auto parts = split(t.substr(1, t.size() - 2), ',');
  if (parts.size() != 3) throw ConfigError("triple needs three entries", line);
  if (!is_integer(parts[0]) || !is_integer(parts[1])) {
    throw ConfigError("triple exponents must be integers", line);
  }
  EdgeNormalForm out;
  out.k = std::stoll(parts[0]);
  out.l = std::stoll(parts[1]);
  auto it = std::find(coset_names.begin(), coset_names.end(), parts[2]);
  if (it == coset_names.end()) {
    throw ConfigError("unknown coset in triple: " + parts[2], line);
  }
  out.h = static_cast<std::uint32_t>(it - coset_names.begin());
  return out;
}

struct FrameDraft {
  int line = 0;
  std::string c, o, automaton;
  std::vector<std::string> cosets = {"1"};
  std::vector<std::string> mul_entries, conj_entries;
  std::int64_t K = 0;  // 0 means unset
};

}  // namespace

GroupSchema parse_schema(std::string_view text, const std::string& base_dir) {
  Sections sec = read_sections(text);
  GroupSchema schema;

  // Vertices and the base vertex.
  std::string base_name;
  for (const Entry& e : sec.vertices) {
    auto eq = e.text.find('=');
    if (eq != std::string::npos) {
      std::string key = trim(e.text.substr(0, eq));
      if (key != "base") {
        throw ConfigError("only 'base = <vertex>' may use '=' here", e.line);
      }
      base_name = trim(e.text.substr(eq + 1));
      continue;
    }
    std::istringstream ls(e.text);
    std::string name;
    while (ls >> name) schema.add_vertex(name);
  }
  if (schema.vertex_count() == 0) {
    throw ConfigError("no vertices declared");
  }
  if (!base_name.empty()) {
    VertexId b = schema.vertex_by_name(base_name);
    if (b == kNoVertex) throw ConfigError("unknown base vertex: " + base_name);
    schema.set_base(b);
  }

  // Oracles; these also declare the vertex alphabets. Both "u = kind(...)"
  // and "u.oracle = kind(...)" are accepted.
  for (const Entry& e : sec.oracles) {
    auto eq = e.text.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("oracle entry needs 'vertex = kind(...)'", e.line);
    }
    std::string vname = trim(e.text.substr(0, eq));
    if (vname.size() > 7 && vname.substr(vname.size() - 7) == ".oracle") {
      vname = trim(vname.substr(0, vname.size() - 7));
    }
    VertexId v = schema.vertex_by_name(vname);
    if (v == kNoVertex) throw ConfigError("unknown vertex: " + vname, e.line);
    std::string spec_text = trim(e.text.substr(eq + 1));
    SpecParser parser(spec_text, e.line);
    SpecNode node = parser.parse_all();
    OracleBuild built =
        build_oracle(node, schema, v, /*aux=*/false, base_dir, e.line);
    schema.set_oracle(v, built.oracle, spec_text);
  }

  // Edges: collect, then link reverses.
  struct EdgeDraft {
    int line;
    std::string name, reverse;
    EdgeId id;
  };
  std::vector<EdgeDraft> drafts;
  for (const Entry& e : sec.edges) {
    auto colon = e.text.find(':');
    if (colon == std::string::npos) {
      throw ConfigError("edge entry needs 'name : fields'", e.line);
    }
    EdgeDraft d;
    d.line = e.line;
    d.name = trim(e.text.substr(0, colon));
    std::string from, to, tree;
    for (const std::string& kv : split(e.text.substr(colon + 1), ',')) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) {
        throw ConfigError("edge field needs 'key = value'", e.line);
      }
      std::string key = trim(kv.substr(0, eq));
      std::string value = trim(kv.substr(eq + 1));
      if (key == "reverse") {
        d.reverse = value;
      } else if (key == "from") {
        from = value;
      } else if (key == "to") {
        to = value;
      } else if (key == "in_tree") {
        tree = value;
      } else {
        throw ConfigError("unknown edge field: " + key, e.line);
      }
    }
    if (d.reverse.empty() || from.empty() || to.empty() || tree.empty()) {
      throw ConfigError("edge needs reverse, from, to and in_tree", e.line);
    }
    VertexId vf = schema.vertex_by_name(from);
    VertexId vt = schema.vertex_by_name(to);
    if (vf == kNoVertex) {
      throw ConfigError("dangling reference: unknown vertex " + from, e.line);
    }
    if (vt == kNoVertex) {
      throw ConfigError("dangling reference: unknown vertex " + to, e.line);
    }
    bool in_tree;
    if (tree == "yes" || tree == "true") {
      in_tree = true;
    } else if (tree == "no" || tree == "false") {
      in_tree = false;
    } else {
      throw ConfigError("in_tree must be yes/no", e.line);
    }
    d.id = schema.add_edge(d.name, vf, vt, in_tree);
    drafts.push_back(std::move(d));
  }
  for (const EdgeDraft& d : drafts) {
    EdgeId rev = schema.edge_by_name(d.reverse);
    if (rev == kNoEdge) {
      throw ConfigError("dangling reference: unknown edge " + d.reverse, d.line);
    }
    if (schema.edge(d.id).reverse == kNoEdge) {
      schema.link_reverse(d.id, rev);
    } else if (schema.edge(d.id).reverse != rev) {
      throw ConfigError("reverse declarations disagree for " + d.name, d.line);
    }
  }

  // Admissible frames.
  std::unordered_map<std::string, FrameDraft> frames;
  std::int64_t global_k = 0;
  for (const Entry& e : sec.admissible) {
    auto eq = e.text.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("admissible entry needs 'edge.field = value'", e.line);
    }
    std::string key = trim(e.text.substr(0, eq));
    std::string value = trim(e.text.substr(eq + 1));
    if (key == "K") {
      if (!is_integer(value)) throw ConfigError("K must be an integer", e.line);
      global_k = std::stoll(value);
      continue;
    }
    auto dot = key.rfind('.');
    if (dot == std::string::npos) {
      throw ConfigError("admissible entry needs 'edge.field = value'", e.line);
    }
    std::string edge_name = trim(key.substr(0, dot));
    std::string field = trim(key.substr(dot + 1));
    FrameDraft& draft = frames[edge_name];
    draft.line = e.line;
    if (field == "c") {
      draft.c = value;
    } else if (field == "o") {
      draft.o = value;
    } else if (field == "K") {
      draft.K = std::stoll(value);
    } else if (field == "automaton") {
      draft.automaton = value;
    } else if (field == "cosets") {
      std::string body = value;
      if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw ConfigError("unterminated coset list", e.line);
        body = body.substr(1, body.size() - 2);
      }
      draft.cosets.clear();
      for (const std::string& name : split(body, ',')) {
        if (!name.empty()) draft.cosets.push_back(name);
      }
      if (draft.cosets.empty() || draft.cosets[0] != "1") {
        throw ConfigError("coset list must start with 1", e.line);
      }
    } else if (field == "coset_mul" || field == "conj") {
      std::string body = value;
      if (!body.empty() && body.front() == '{') {
        if (body.back() != '}') throw ConfigError("unterminated table", e.line);
        body = body.substr(1, body.size() - 2);
      }
      auto& target = field == "coset_mul" ? draft.mul_entries : draft.conj_entries;
      for (const std::string& entry : split(body, ';')) {
        if (!entry.empty()) target.push_back(entry);
      }
    } else {
      throw ConfigError("unknown admissible field: " + field, e.line);
    }
  }

  for (auto& [edge_name, draft] : frames) {
    EdgeId e = schema.edge_by_name(edge_name);
    if (e == kNoEdge) {
      throw ConfigError("dangling reference: unknown edge " + edge_name, draft.line);
    }
    if (draft.c.empty() || draft.o.empty()) {
      throw ConfigError("frame of " + edge_name + " needs c and o letters",
                        draft.line);
    }
    EdgeFrame frame;
    frame.c_letter = schema.alphabet().find(draft.c);
    frame.o_letter = schema.alphabet().find(draft.o);
    if (frame.c_letter == kNoGen || frame.o_letter == kNoGen) {
      throw ConfigError("frame letter not declared by any oracle", draft.line);
    }
    frame.K = draft.K > 0 ? draft.K : (global_k > 0 ? global_k : 1);
    const std::size_t count = draft.cosets.size();
    frame.coset_letters.assign(count, kNoGen);
    for (std::size_t h = 1; h < count; ++h) {
      GenId g = schema.alphabet().find(draft.cosets[h]);
      if (g == kNoGen) {
        throw ConfigError("coset letter not declared: " + draft.cosets[h],
                          draft.line);
      }
      frame.coset_letters[h] = g;
    }
    frame.coset_mul.assign(count, std::vector<EdgeNormalForm>(count));
    for (std::size_t h = 0; h < count; ++h) {
      frame.coset_mul[0][h] = EdgeNormalForm{0, 0, static_cast<std::uint32_t>(h)};
      frame.coset_mul[h][0] = EdgeNormalForm{0, 0, static_cast<std::uint32_t>(h)};
    }
    for (const std::string& entry : draft.mul_entries) {
      auto arrow = entry.find("->");
      if (arrow == std::string::npos) {
        throw ConfigError("coset_mul entry needs '->'", draft.line);
      }
      auto star = entry.find('*');
      if (star == std::string::npos || star > arrow) {
        throw ConfigError("coset_mul entry needs 'h*h'", draft.line);
      }
      auto index_of = [&](const std::string& name) -> std::size_t {
        auto it = std::find(draft.cosets.begin(), draft.cosets.end(), name);
        if (it == draft.cosets.end()) {
          throw ConfigError("unknown coset: " + name, draft.line);
        }
        return static_cast<std::size_t>(it - draft.cosets.begin());
      };
      std::size_t h1 = index_of(trim(entry.substr(0, star)));
      std::size_t h2 = index_of(trim(entry.substr(star + 1, arrow - star - 1)));
      frame.coset_mul[h1][h2] =
          parse_triple(entry.substr(arrow + 2), draft.cosets, draft.line);
    }
    frame.conj.assign(count, EdgeNormalForm{});
    for (const std::string& entry : draft.conj_entries) {
      auto arrow = entry.find("->");
      if (arrow == std::string::npos) {
        throw ConfigError("conj entry needs '->'", draft.line);
      }
      std::string name = trim(entry.substr(0, arrow));
      auto it = std::find(draft.cosets.begin(), draft.cosets.end(), name);
      if (it == draft.cosets.end()) {
        throw ConfigError("unknown coset: " + name, draft.line);
      }
      frame.conj[static_cast<std::size_t>(it - draft.cosets.begin())] =
          parse_triple(entry.substr(arrow + 2), draft.cosets, draft.line);
    }
    schema.set_frame(e, std::move(frame));
    if (!draft.automaton.empty()) {
      schema.set_edge_automaton(
          e, load_automaton_file(schema, base_dir + "/" + draft.automaton,
                                 draft.line));
    }
  }

  schema.finalize();
  return schema;
}

GroupSchema parse_schema_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open schema file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string dir = ".";
  if (auto slash = path.find_last_of('/'); slash != std::string::npos) {
    dir = path.substr(0, slash);
  }
  return parse_schema(buf.str(), dir);
}

std::string serialize_schema(const GroupSchema& schema) {
  std::ostringstream out;
  out << "[vertices]\n";
  for (VertexId v = 0; v < schema.vertex_count(); ++v) {
    out << schema.vertex(v).name << "\n";
  }
  out << "base = " << schema.vertex(schema.base_vertex()).name << "\n";

  out << "\n[edges]\n";
  for (EdgeId e = 0; e < schema.edge_count(); ++e) {
    const Edge& ed = schema.edge(e);
    if (ed.dummy) continue;
    out << ed.name << " : reverse = " << schema.edge(ed.reverse).name
        << ", from = " << schema.vertex(ed.from).name << ", to = "
        << schema.vertex(ed.to).name << ", in_tree = "
        << (ed.in_tree ? "yes" : "no") << "\n";
  }

  out << "\n[oracles]\n";
  for (VertexId v = 0; v < schema.vertex_count(); ++v) {
    out << schema.vertex(v).name << " = " << schema.vertex(v).oracle_spec
        << "\n";
  }

  bool any_frame = false;
  for (EdgeId e = 0; e < schema.edge_count(); ++e) {
    if (schema.frame(e) != nullptr) any_frame = true;
  }
  if (any_frame) {
    out << "\n[admissible]\n";
    for (EdgeId e = 0; e < schema.edge_count(); ++e) {
      const EdgeFrame* f = schema.frame(e);
      if (f == nullptr) continue;
      const std::string& name = schema.edge(e).name;
      auto coset_name = [&](std::uint32_t h) {
        return h == 0 ? std::string("1")
                      : schema.alphabet().spell(f->coset_letters[h]);
      };
      out << name << ".K = " << f->K << "\n";
      out << name << ".c = " << schema.alphabet().spell(f->c_letter) << "\n";
      out << name << ".o = " << schema.alphabet().spell(f->o_letter) << "\n";
      out << name << ".cosets = [";
      for (std::uint32_t h = 0; h < f->coset_count(); ++h) {
        if (h) out << ", ";
        out << coset_name(h);
      }
      out << "]\n";
      auto triple = [&](const EdgeNormalForm& t) {
        return "(" + std::to_string(t.k) + ", " + std::to_string(t.l) + ", " +
               coset_name(t.h) + ")";
      };
      out << name << ".coset_mul = { ";
      bool first = true;
      for (std::uint32_t a = 0; a < f->coset_count(); ++a) {
        for (std::uint32_t b = 0; b < f->coset_count(); ++b) {
          if (!first) out << " ; ";
          first = false;
          out << coset_name(a) << "*" << coset_name(b) << " -> "
              << triple(f->coset_mul[a][b]);
        }
      }
      out << " }\n";
      out << name << ".conj = { ";
      for (std::uint32_t a = 0; a < f->coset_count(); ++a) {
        if (a) out << " ; ";
        out << coset_name(a) << " -> " << triple(f->conj[a]);
      }
      out << " }\n";
    }
  }
  return out.str();
}

}  // namespace gog
