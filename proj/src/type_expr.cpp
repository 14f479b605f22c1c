// Copyright 2026 The hotc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hot/type_expr.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <utility>

namespace hot {

struct TypeExpr::Node {
  Kind kind = Kind::Trivial;
  Label label;
  // Null for leaves; default-constructing would recurse into the trivial node.
  TypeExpr left_child{std::shared_ptr<const Node>()};
  TypeExpr right_child{std::shared_ptr<const Node>()};
  std::size_t systems = 0;
  std::size_t nodes = 1;
};

namespace {

bool is_label_start(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }

bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

TypeExpr::TypeExpr() {
  static const auto trivial = std::make_shared<const Node>();
  node_ = trivial;
}

TypeExpr::TypeExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

TypeExpr TypeExpr::elementary(std::string name, int dim) {
  return elementary(Label{std::move(name), dim});
}

TypeExpr TypeExpr::elementary(Label label) {
  if (label.name.empty() || !is_label_start(label.name.front()))
    throw std::invalid_argument("label must start with an uppercase letter: '" +
                                label.name + "'");
  if (label.name == kTrivialName)
    throw std::invalid_argument("label 'I' is reserved for the trivial type");
  if (label.dim < 2)
    throw std::invalid_argument("system '" + label.name +
                                "' must have dimension >= 2");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Elementary;
  node->label = std::move(label);
  node->systems = 1;
  return TypeExpr(std::move(node));
}

TypeExpr TypeExpr::trivial() { return TypeExpr(); }

TypeExpr TypeExpr::arrow(TypeExpr left, TypeExpr right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Arrow;
  node->systems = left.system_count() + right.system_count();
  node->nodes = 1 + left.node_count() + right.node_count();
  node->left_child = std::move(left);
  node->right_child = std::move(right);
  return TypeExpr(std::move(node));
}

TypeExpr::Kind TypeExpr::kind() const { return node_->kind; }

const Label& TypeExpr::label() const {
  if (!is_elementary()) throw std::logic_error("label() on non-elementary type");
  return node_->label;
}

const TypeExpr& TypeExpr::left() const {
  if (!is_arrow()) throw std::logic_error("left() on non-arrow type");
  return node_->left_child;
}

const TypeExpr& TypeExpr::right() const {
  if (!is_arrow()) throw std::logic_error("right() on non-arrow type");
  return node_->right_child;
}

std::size_t TypeExpr::system_count() const { return node_->systems; }
std::size_t TypeExpr::node_count() const { return node_->nodes; }

bool operator==(const TypeExpr& a, const TypeExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.node_count() != b.node_count()) return false;
  switch (a.kind()) {
    case TypeExpr::Kind::Trivial:
      return true;
    case TypeExpr::Kind::Elementary:
      return a.label() == b.label();
    case TypeExpr::Kind::Arrow:
      return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

TypeExpr bar(TypeExpr x) { return TypeExpr::arrow(std::move(x), TypeExpr::trivial()); }

TypeExpr tensor(TypeExpr x, TypeExpr y) {
  return bar(TypeExpr::arrow(std::move(x), bar(std::move(y))));
}

TypeExpr tensor_of(std::span<const Label> systems) {
  if (systems.empty()) return TypeExpr::trivial();
  TypeExpr result = TypeExpr::elementary(systems.front());
  for (const Label& label : systems.subspan(1))
    result = tensor(std::move(result), TypeExpr::elementary(label));
  return result;
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const SystemTable& systems)
      : text_(text), systems_(systems) {}

  TypeExpr parse() {
    TypeExpr result = parse_arrow();
    skip_space();
    if (pos_ != text_.size())
      throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return result;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  TypeExpr parse_arrow() {
    TypeExpr left = parse_tensor();
    if (accept("->")) return TypeExpr::arrow(std::move(left), parse_arrow());
    return left;
  }

  TypeExpr parse_tensor() {
    TypeExpr result = parse_unary();
    while (accept("*")) result = tensor(std::move(result), parse_unary());
    return result;
  }

  TypeExpr parse_unary() {
    if (accept("~")) return bar(parse_unary());
    return parse_atom();
  }

  TypeExpr parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    const std::size_t start = pos_;
    if (accept("(")) {
      TypeExpr inner = parse_arrow();
      if (!accept(")")) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (!is_label_start(text_[pos_])) {
      throw ParseError("expected a system label, 'I', '~' or '('", pos_);
    }
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    if (name == kTrivialName) return TypeExpr::trivial();
    int dim = kDefaultDimension;
    if (auto it = systems_.find(name); it != systems_.end()) dim = it->second;
    if (dim < 2)
      throw ParseError("system '" + name + "' has dimension " + std::to_string(dim) +
                           " (must be >= 2)",
                       start);
    return TypeExpr::elementary(std::move(name), dim);
  }

  std::string_view text_;
  const SystemTable& systems_;
  std::size_t pos_ = 0;
};

void validate_table(const SystemTable& systems) {
  for (const auto& [name, dim] : systems) {
    if (name == kTrivialName && dim != 1)
      throw std::invalid_argument("label 'I' is reserved for the trivial type");
    if (dim < 1)
      throw std::invalid_argument("system '" + name + "' has dimension < 1");
  }
}

bool is_bar(const TypeExpr& x) { return x.is_arrow() && x.right().is_trivial(); }

void render_into(const TypeExpr& x, bool sugar, std::string& out) {
  switch (x.kind()) {
    case TypeExpr::Kind::Trivial:
      out += kTrivialName;
      return;
    case TypeExpr::Kind::Elementary:
      out += x.label().name;
      return;
    case TypeExpr::Kind::Arrow:
      break;
  }
  if (sugar && is_bar(x)) {
    const TypeExpr& inner = x.left();
    // bar(a -> bar(b)) is a tensor a*b.
    if (inner.is_arrow() && is_bar(inner.right())) {
      out += '(';
      render_into(inner.left(), sugar, out);
      out += '*';
      render_into(inner.right().left(), sugar, out);
      out += ')';
      return;
    }
    out += '~';
    render_into(inner, sugar, out);
    return;
  }
  out += '(';
  render_into(x.left(), sugar, out);
  out += "->";
  render_into(x.right(), sugar, out);
  out += ')';
}

}  // namespace

TypeExpr parse_type(std::string_view text, const SystemTable& systems) {
  validate_table(systems);
  return Parser(text, systems).parse();
}

std::string render_type(const TypeExpr& x, bool sugar) {
  std::string out;
  render_into(x, sugar, out);
  return out;
}

SystemTable read_system_table(std::istream& in) {
  SystemTable table;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string name, eq;
    int dim = 0;
    if (!(fields >> name)) continue;
    if (auto pos = name.find('='); pos != std::string::npos) {
      // "A=3" or "A= 3"
      std::string rest = name.substr(pos + 1);
      name.erase(pos);
      std::istringstream tail(rest);
      if (!(tail >> dim) && !(fields >> dim))
        throw std::invalid_argument("line " + std::to_string(line_no) +
                                    ": expected 'Label = dimension'");
    } else if (!(fields >> eq) || eq.rfind('=', 0) != 0) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected 'Label = dimension'");
    } else if (eq.size() > 1) {
      dim = std::stoi(eq.substr(1));
    } else if (!(fields >> dim)) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": missing dimension");
    }
    std::string trailing;
    if (fields >> trailing)
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": trailing text '" + trailing + "'");
    if (name.empty() || !is_label_start(name.front()))
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": bad label '" + name + "'");
    table[name] = dim;
  }
  validate_table(table);
  return table;
}

SystemTable load_system_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open dimensions file '" + path + "'");
  return read_system_table(in);
}

RelabelResult relabel_unique(const TypeExpr& x) {
  std::set<std::string, std::less<>> taken;
  std::vector<std::string> order;
  const auto collect = [&](const auto& self, const TypeExpr& t) -> void {
    if (t.is_elementary()) {
      taken.insert(t.label().name);
    } else if (t.is_arrow()) {
      self(self, t.left());
      self(self, t.right());
    }
  };
  collect(collect, x);

  RelabelResult result;
  std::set<std::string, std::less<>> seen;
  std::map<std::string, int, std::less<>> occurrences;
  std::map<std::string, int, std::less<>> next_suffix;

  const auto rebuild = [&](const auto& self, const TypeExpr& t) -> TypeExpr {
    if (t.is_trivial()) return t;
    if (t.is_arrow()) {
      TypeExpr l = self(self, t.left());
      TypeExpr r = self(self, t.right());
      if (l == t.left() && r == t.right()) return t;
      return TypeExpr::arrow(std::move(l), std::move(r));
    }
    const Label& label = t.label();
    const int occurrence = occurrences[label.name]++;
    if (seen.insert(label.name).second) return t;
    int& suffix = next_suffix[label.name];
    std::string fresh;
    do {
      fresh = label.name + std::to_string(++suffix);
    } while (taken.contains(fresh));
    taken.insert(fresh);
    result.renamed.push_back({label.name, occurrence, fresh});
    return TypeExpr::elementary(fresh, label.dim);
  };
  result.type = rebuild(rebuild, x);
  return result;
}

}  // namespace hot
