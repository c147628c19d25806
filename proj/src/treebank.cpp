#include "lexboot/treebank.hpp"

#include <cctype>
#include <exception>
#include <fstream>
#include <sstream>

#include "lexboot/errors.hpp"

namespace lexboot {

namespace {

constexpr std::string_view kEmptyCategory = "-NONE-";

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

class Reader {
 public:
  Reader(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  // Returns nullopt when the whole expression consisted of empty categories.
  std::optional<Tree> read_tree() {
    skip_space();
    auto tree = read_node();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing input after tree", base_ + pos_);
    return tree;
  }

 private:
  enum class Kind { Open, Close, Atom, End };

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  Kind peek() {
    skip_space();
    if (pos_ >= text_.size()) return Kind::End;
    if (text_[pos_] == '(') return Kind::Open;
    if (text_[pos_] == ')') return Kind::Close;
    return Kind::Atom;
  }

  std::string_view atom() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_]) && text_[pos_] != '(' && text_[pos_] != ')') ++pos_;
    return text_.substr(start, pos_ - start);
  }

  [[noreturn]] void unbalanced() { throw ParseError("unbalanced parentheses", base_ + text_.size()); }

  void expect_close(std::size_t open_at) {
    switch (peek()) {
      case Kind::Close: ++pos_; return;
      case Kind::End: unbalanced();
      default: throw StructureError("node opened at " + std::to_string(base_ + open_at) + " has extra material", base_ + pos_);
    }
  }

  std::optional<Tree> read_node() {
    std::size_t open_at = pos_;
    if (peek() != Kind::Open) throw ParseError("expected '('", base_ + pos_);
    ++pos_;

    std::string label;
    switch (peek()) {
      case Kind::End: unbalanced();
      case Kind::Close: throw StructureError("empty node", base_ + open_at);
      case Kind::Atom: label = std::string(atom()); break;
      case Kind::Open: break;
    }

    Kind next = peek();
    if (next == Kind::End) unbalanced();
    if (next == Kind::Close) {
      if (label.empty()) throw StructureError("empty node", base_ + open_at);
      throw StructureError("leaf '" + label + "' has no word", base_ + open_at);
    }
    if (next == Kind::Atom) {
      std::string word(atom());
      expect_close(open_at);
      if (label == kEmptyCategory) return std::nullopt;
      Tree leaf;
      leaf.label = label;
      leaf.token = Token{label, std::move(word)};
      return leaf;
    }

    Tree node;
    node.label = std::move(label);
    bool had_child = false;
    while (true) {
      Kind k = peek();
      if (k == Kind::Close) {
        ++pos_;
        break;
      }
      if (k == Kind::End) unbalanced();
      if (k == Kind::Atom) throw StructureError("word mixed with subtrees", base_ + pos_);
      had_child = true;
      if (auto child = read_node()) node.children.push_back(std::move(*child));
    }
    if (!had_child) throw StructureError("empty node", base_ + open_at);
    if (node.children.empty()) return std::nullopt;
    return node;
  }

  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

void assign_spans(Tree& node, std::size_t& next) {
  if (node.is_leaf()) {
    node.span = {next, next};
    ++next;
    return;
  }
  std::size_t first = next;
  for (auto& child : node.children) assign_spans(child, next);
  node.span = {first, next - 1};
}

void collect_leaves(const Tree& node, std::vector<const Tree*>& out) {
  if (node.is_leaf()) {
    out.push_back(&node);
    return;
  }
  for (const auto& child : node.children) collect_leaves(child, out);
}

void render(const Tree& node, std::string& out) {
  out += '(';
  if (node.is_leaf()) {
    out += node.token->tag;
    out += ' ';
    out += node.token->surface;
  } else {
    out += node.label;
    for (const auto& child : node.children) {
      out += ' ';
      render(child, out);
    }
  }
  out += ')';
}

std::optional<Tree> parse_one(std::string_view text, std::size_t begin, std::size_t end) {
  Reader reader(text.substr(begin, end - begin), begin);
  auto tree = reader.read_tree();
  if (tree) {
    std::size_t next = 0;
    assign_spans(*tree, next);
  }
  return tree;
}

}  // namespace

std::string_view bare_category(std::string_view label) {
  if (label.empty() || label.front() == '-') return label;
  auto cut = label.find_first_of("-=");
  return cut == std::string_view::npos ? label : label.substr(0, cut);
}

bool is_np(std::string_view label) { return bare_category(label) == "NP"; }

bool is_clause(std::string_view label) {
  auto cat = bare_category(label);
  return cat == "S" || cat == "SBAR" || cat == "SINV" || cat == "SQ" || cat == "SBARQ";
}

bool is_clausal_or_vp(std::string_view label) { return is_clause(label) || bare_category(label) == "VP"; }

std::vector<const Tree*> leaves(const Tree& tree) {
  std::vector<const Tree*> out;
  collect_leaves(tree, out);
  return out;
}

std::string to_bracketed(const Tree& tree) {
  std::string out;
  render(tree, out);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> split_sentences(std::string_view text) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (depth == 0) {
      if (is_space(c)) continue;
      if (c == '#') {
        while (i < text.size() && text[i] != '\n') ++i;
        continue;
      }
      if (c == ')') throw ParseError("unbalanced parentheses", i);
      if (c != '(') throw ParseError("text outside of any tree", i);
      start = i;
      depth = 1;
      continue;
    }
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      if (--depth == 0) out.emplace_back(start, i + 1);
    }
  }
  if (depth != 0) throw ParseError("unbalanced parentheses", text.size());
  return out;
}

std::vector<Tree> parse_trees(std::string_view text) {
  std::vector<Tree> out;
  for (auto [begin, end] : split_sentences(text)) {
    if (auto tree = parse_one(text, begin, end)) out.push_back(std::move(*tree));
  }
  return out;
}

std::vector<Tree> parse_trees_parallel(std::string_view text) {
  auto ranges = split_sentences(text);
  const auto n = static_cast<std::ptrdiff_t>(ranges.size());
  std::vector<std::optional<Tree>> parsed(ranges.size());
  std::vector<std::exception_ptr> errors(ranges.size());

#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      parsed[i] = parse_one(text, ranges[i].first, ranges[i].second);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Tree> out;
  out.reserve(parsed.size());
  for (auto& t : parsed) {
    if (t) out.push_back(std::move(*t));
  }
  return out;
}

std::vector<Tree> read_treebank(const std::filesystem::path& path, bool parallel) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return parallel ? parse_trees_parallel(text) : parse_trees(text);
  } catch (const StructureError& e) {
    throw StructureError(path.string() + ": " + e.detail(), e.offset());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.detail(), e.offset());
  }
}

}  // namespace lexboot
