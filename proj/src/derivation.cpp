#include "dycknf/derivation.hpp"

#include "dycknf/errors.hpp"
#include "dycknf/grammar_io.hpp"

namespace dycknf {

Sentence DerivationTree::frontier() const {
  if (is_leaf()) return label.name;
  Sentence out;
  for (const auto& child : children) out += child.frontier();
  return out;
}

Rule DerivationTree::rule() const {
  Rule r{label.name, {}};
  for (const auto& child : children) r.rhs.push_back(child.label);
  return r;
}

namespace {

void validate_node(const Grammar& g, const DerivationTree& node) {
  if (node.is_leaf()) {
    if (!node.children.empty()) throw PreconditionError("terminal leaf with children");
    return;
  }
  const auto rule = node.rule();
  if (!g.has_rule(rule))
    throw PreconditionError("tree/grammar mismatch: no rule " + format_rule(rule));
  for (const auto& child : node.children) validate_node(g, child);
}

void collect_preorder(const DerivationTree& node, std::vector<Rule>& out) {
  if (node.is_leaf()) return;
  out.push_back(node.rule());
  for (const auto& child : node.children) collect_preorder(child, out);
}

void render(const DerivationTree& node, std::string& out) {
  if (node.is_leaf()) {
    out += node.label.name;
    return;
  }
  out += '(';
  out += node.label.name;
  for (const auto& child : node.children) {
    out += ' ';
    render(child, out);
  }
  out += ')';
}

}  // namespace

void validate_tree(const Grammar& g, const DerivationTree& tree) {
  if (tree.is_leaf() || tree.label.name != g.start())
    throw PreconditionError("tree/grammar mismatch: root is not the start symbol");
  validate_node(g, tree);
}

std::vector<Rule> leftmost_derivation(const Grammar& g, const DerivationTree& tree) {
  validate_tree(g, tree);
  std::vector<Rule> out;
  collect_preorder(tree, out);
  return out;
}

std::string format_tree(const DerivationTree& tree) {
  std::string out;
  render(tree, out);
  return out;
}

}  // namespace dycknf
