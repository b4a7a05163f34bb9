#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pcs/word.hpp"

namespace pcs {

// Finite ordered unranked tree; empty label = the unlabeled bullet node.
struct Tree {
  std::string label;
  std::vector<Tree> children;

  bool operator==(const Tree&) const = default;
};

int tree_depth(const Tree& t);   // single leaf has depth 0
int tree_size(const Tree& t);    // node count

// Quasi-order on node labels; both arguments come from the same label set.
using TreeLabelLeq = std::function<bool(const std::string&, const std::string&)>;

// Strong embedding: u restricted by deleting whole subtrees yields t, with
// downward relabeling along `leq` allowed at retained nodes.  The default
// order is label equality, which on unlabeled trees is plain strong embedding.
bool strong_embed(const Tree& t, const Tree& u);
bool strong_embed(const Tree& t, const Tree& u, const TreeLabelLeq& leq);

// Append t as a last child (the extension operation).
Tree tree_extend(const Tree& base, const Tree& t);

// Level-d code of an unlabeled tree of depth <= d+1, and its inverse on
// proper words.
Word tree_encode(const Tree& t, int d);
Tree tree_decode(const Word& code);

// Labeled variant over the uniform stratified alphabet.
LabeledWord labeled_tree_encode(const Tree& t, int d);

// Nested parentheses with optional labels: (()()), f((g)(h)).
std::string tree_to_string(const Tree& t);
Tree tree_parse(const std::string& text);

}  // namespace pcs
