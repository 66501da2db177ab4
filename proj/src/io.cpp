#include "cyclefact/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <functional>

namespace cyclefact {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::invalid_argument("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c))
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected a positive integer");
    if (pos_ - start > 6)
      throw ParseError(start, "integer too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }
  Cycle cycle() {
    skip_space();
    const std::size_t start = pos_;
    expect('(');
    std::vector<int> elements;
    while (!peek(')')) {
      if (done())
        fail("unterminated cycle");
      elements.push_back(integer());
    }
    ++pos_;
    try {
      return Cycle(std::move(elements));
    } catch (const std::invalid_argument& e) {
      throw ParseError(start, e.what());
    }
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }
  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Cycle> parse_cycles(std::string_view text) {
  Scanner in(text);
  std::vector<Cycle> out;
  while (!in.done())
    out.push_back(in.cycle());
  return out;
}

Factorization parse_factorization(std::string_view text, std::optional<int> n) {
  std::vector<Cycle> factors = parse_cycles(text);
  int top = 1;
  for (const auto& c : factors)
    top = std::max(top, c.max_point());
  const int size = n.value_or(top);
  if (top > size)
    throw ParseError(0, "point " + std::to_string(top) + " exceeds n = " + std::to_string(size));
  return Factorization(size, std::move(factors));
}

std::vector<Cycle> parse_multiset(std::string_view text) {
  Scanner in(text);
  in.expect('{');
  std::vector<Cycle> out;
  if (!in.peek('}')) {
    out.push_back(in.cycle());
    while (in.peek(',')) {
      in.expect(',');
      out.push_back(in.cycle());
    }
  }
  in.expect('}');
  if (!in.done())
    in.fail("trailing input after '}'");
  return out;
}

std::string format_multiset(std::span<const Cycle> cycles) {
  std::string out = "{";
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (i)
      out += ',';
    out += cycles[i].to_string();
  }
  return out + '}';
}

TypeVector parse_type_vector(std::string_view text) {
  Scanner in(text);
  TypeVector alpha;
  if (in.done() || (in.peek('0') && text.find_first_not_of(" \t0") == std::string_view::npos))
    return alpha;
  while (true) {
    in.expect('a');
    const std::size_t at = in.position();
    const int j = in.integer();
    if (j < 2)
      throw ParseError(at, "cycle length must be >= 2");
    in.expect('=');
    alpha.add(j, in.integer());
    if (in.done())
      break;
    in.expect(',');
  }
  return alpha;
}

nlohmann::json tree_to_json(const PlaneTree& tree) {
  const TreeNodes nodes(tree);
  std::function<nlohmann::json(int)> node_json = [&](int v) -> nlohmann::json {
    if (nodes.is_leaf(v))
      return "leaf";
    nlohmann::json arr = nlohmann::json::array();
    for (int c : nodes.children[v])
      arr.push_back(node_json(c));
    return arr;
  };
  return nlohmann::json{{"root_child", node_json(1)}};
}

PlaneTree tree_from_json(const nlohmann::json& json) {
  if (!json.is_object() || !json.contains("root_child") || json.size() != 1)
    throw std::invalid_argument("tree JSON must be {\"root_child\": node}");
  std::vector<int> code;
  std::function<void(const nlohmann::json&)> walk = [&](const nlohmann::json& node) {
    if (node.is_string() && node.get<std::string>() == "leaf") {
      code.push_back(0);
      return;
    }
    if (!node.is_array())
      throw std::invalid_argument("tree node must be \"leaf\" or an array of children");
    code.push_back(static_cast<int>(node.size()));
    for (const auto& child : node)
      walk(child);
  };
  walk(json.at("root_child"));
  return PlaneTree(std::move(code));
}

nlohmann::json cactus_to_json(const Cactus& cactus) {
  nlohmann::json polys = nlohmann::json::array();
  for (const auto& p : cactus.polygons)
    polys.push_back(std::vector<int>(p.elements().begin(), p.elements().end()));
  return nlohmann::json{{"n", cactus.n}, {"polygons", polys}};
}

Cactus cactus_from_json(const nlohmann::json& json) {
  if (!json.is_object() || !json.contains("n") || !json.contains("polygons"))
    throw std::invalid_argument("cactus JSON must be {\"n\": n, \"polygons\": [...]}");
  const int n = json.at("n").get<int>();
  std::vector<Cycle> polys;
  for (const auto& p : json.at("polygons"))
    polys.emplace_back(p.get<std::vector<int>>());
  return make_cactus(n, std::move(polys));
}

std::string tree_to_dot(const PlaneTree& tree) {
  const TreeNodes nodes(tree);
  std::string out = "graph tree {\n";
  for (int v = 0; v < static_cast<int>(nodes.size()); ++v) {
    out += "  n" + std::to_string(v) + " [";
    if (nodes.is_leaf(v))
      out += "shape=plaintext, label=\"" + nodes.label(v).to_string() + "\"";
    else
      out += "shape=circle, label=\"" + std::to_string(nodes.degree(v)) + "\"";
    out += "];\n";
  }
  for (int v = 1; v < static_cast<int>(nodes.size()); ++v)
    out += "  n" + std::to_string(nodes.parent[v]) + " -- n" + std::to_string(v) + ";\n";
  return out + "}\n";
}

std::string cactus_to_dot(const Cactus& cactus) {
  constexpr double kPi = 3.14159265358979323846;
  std::string out = "graph cactus {\n  layout=neato;\n  node [shape=circle];\n";
  for (int k = 1; k <= cactus.n; ++k) {
    const double angle = kPi / 2 + 2 * kPi * (k - 1) / cactus.n;
    char pos[64];
    std::snprintf(pos, sizeof pos, "%.3f,%.3f", 2 * std::cos(angle), 2 * std::sin(angle));
    out += "  p" + std::to_string(k) + " [label=\"" + std::to_string(k) + "\", pos=\"" + pos +
           "!\"];\n";
  }
  for (std::size_t i = 0; i < cactus.polygons.size(); ++i) {
    const auto el = cactus.polygons[i].elements();
    for (std::size_t k = 0; k < el.size(); ++k) {
      out += "  p" + std::to_string(el[k]) + " -- p" + std::to_string(el[(k + 1) % el.size()]) +
             " [polygon=" + std::to_string(i) + "];\n";
    }
  }
  return out + "}\n";
}

nlohmann::json series_to_json(const MultiSeries& series) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : series.terms()) {
    nlohmann::json exps = nlohmann::json::object();
    const char* names[3] = {"x", "u", "v"};
    const TypeVector parts[3] = {m.x_part(), m.u_part(), m.v_part()};
    for (int kind = 0; kind < 3; ++kind) {
      for (int j = 2; j <= parts[kind].max_index(); ++j) {
        if (parts[kind][j] != 0)
          exps[names[kind] + std::to_string(j)] = parts[kind][j];
      }
    }
    terms.push_back({{"monomial", m.to_string()}, {"exponents", exps}, {"coefficient", c.str()}});
  }
  return nlohmann::json{{"truncation", series.truncation()}, {"terms", terms}};
}

}  // namespace cyclefact
