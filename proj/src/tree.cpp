#include "pcs/tree.hpp"

#include <algorithm>

#include "pcs/error.hpp"

namespace pcs {

int tree_depth(const Tree& t) {
  int d = 0;
  for (const Tree& c : t.children) {
    d = std::max(d, 1 + tree_depth(c));
  }
  return d;
}

int tree_size(const Tree& t) {
  int n = 1;
  for (const Tree& c : t.children) {
    n += tree_size(c);
  }
  return n;
}

bool strong_embed(const Tree& t, const Tree& u, const TreeLabelLeq& leq) {
  if (!leq(t.label, u.label)) {
    return false;
  }
  // Greedy leftmost subsequence match of children.
  size_t j = 0;
  for (const Tree& c : t.children) {
    bool found = false;
    for (; j < u.children.size(); ++j) {
      if (strong_embed(c, u.children[j], leq)) {
        found = true;
        ++j;
        break;
      }
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

bool strong_embed(const Tree& t, const Tree& u) {
  return strong_embed(t, u, [](const std::string& a, const std::string& b) { return a == b; });
}

Tree tree_extend(const Tree& base, const Tree& t) {
  Tree out = base;
  out.children.push_back(t);
  return out;
}

Word tree_encode(const Tree& t, int d) {
  if (tree_depth(t) > d + 1) {
    throw InputError("tree_encode: depth exceeds " + std::to_string(d + 1));
  }
  if (t.children.empty()) {
    return {};
  }
  if (d < 0) {
    throw InputError("tree_encode: depth exceeds bound");
  }
  Word out;
  for (const Tree& c : t.children) {
    out += tree_encode(c, d - 1);
    out.push_back(static_cast<char>(d));
  }
  return out;
}

Tree tree_decode(const Word& code) {
  if (code.empty()) {
    return Tree{};
  }
  int h = height(code);
  if (static_cast<int>(code.back()) != h) {
    throw InputError("tree_decode: improper code");
  }
  Tree out;
  Word block;
  for (char c : code) {
    if (static_cast<int>(c) == h) {
      out.children.push_back(tree_decode(block));
      block.clear();
    } else {
      block.push_back(c);
    }
  }
  if (!block.empty()) {
    throw InputError("tree_decode: improper code");
  }
  return out;
}

LabeledWord labeled_tree_encode(const Tree& t, int d) {
  if (tree_depth(t) > d) {
    throw InputError("labeled_tree_encode: depth exceeds " + std::to_string(d));
  }
  if (t.children.empty()) {
    return {LabeledLetter{d, t.label}};
  }
  LabeledWord out;
  for (const Tree& c : t.children) {
    LabeledWord part = labeled_tree_encode(c, d - 1);
    out.insert(out.end(), part.begin(), part.end());
    out.push_back(LabeledLetter{d, t.label});
  }
  return out;
}

std::string tree_to_string(const Tree& t) {
  std::string out = t.label;
  out.push_back('(');
  for (const Tree& c : t.children) {
    out += tree_to_string(c);
  }
  out.push_back(')');
  return out;
}

namespace {

Tree parse_at(const std::string& s, size_t& pos) {
  Tree t;
  while (pos < s.size() && s[pos] != '(' && s[pos] != ')') {
    t.label.push_back(s[pos++]);
  }
  if (pos >= s.size() || s[pos] != '(') {
    throw InputError("tree_parse: expected '(' at offset " + std::to_string(pos));
  }
  ++pos;
  while (pos < s.size() && s[pos] != ')') {
    t.children.push_back(parse_at(s, pos));
  }
  if (pos >= s.size()) {
    throw InputError("tree_parse: missing ')'");
  }
  ++pos;
  return t;
}

}  // namespace

Tree tree_parse(const std::string& text) {
  size_t pos = 0;
  Tree t = parse_at(text, pos);
  if (pos != text.size()) {
    throw InputError("tree_parse: trailing input");
  }
  return t;
}

}  // namespace pcs
