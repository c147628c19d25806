#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lexboot {

struct Token {
  std::string tag;
  std::string surface;

  bool operator==(const Token&) const = default;
};

/// Inclusive range of token indices covered by a node.
struct Span {
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t width() const { return last - first + 1; }
  bool contains(std::size_t i) const { return first <= i && i <= last; }
  bool operator==(const Span&) const = default;
};

/// Constituent tree node. Leaves carry a token and have no children; their
/// label repeats the POS tag. Nodes are built once by the reader and never
/// mutated afterwards.
struct Tree {
  std::string label;
  std::vector<Tree> children;
  std::optional<Token> token;
  Span span;

  bool is_leaf() const { return token.has_value(); }
  bool operator==(const Tree&) const = default;
};

/// Category with functional tags and co-indices removed: "NP-SBJ=2" -> "NP".
/// Labels that start with '-' ("-NONE-", "-LRB-") are returned unchanged.
std::string_view bare_category(std::string_view label);

bool is_np(std::string_view label);
/// S, SBAR, SINV, SQ, SBARQ.
bool is_clause(std::string_view label);
/// Clause labels plus VP: the nodes that block co-occurrence under an NP.
bool is_clausal_or_vp(std::string_view label);

/// Leaves in left-to-right order; element i has token index i.
std::vector<const Tree*> leaves(const Tree& tree);

/// Penn-style single-line rendering. Parsing the result yields an equal tree.
std::string to_bracketed(const Tree& tree);

/// Byte ranges [begin, end) of each top-level s-expression, skipping
/// whitespace and '#' comment lines. Throws ParseError on stray or missing
/// parentheses.
std::vector<std::pair<std::size_t, std::size_t>> split_sentences(std::string_view text);

/// Parses every tree in `text`, in input order. Offsets in errors are
/// relative to the start of `text`.
std::vector<Tree> parse_trees(std::string_view text);

/// Same result as parse_trees; sentences are parsed on the OpenMP pool.
std::vector<Tree> parse_trees_parallel(std::string_view text);

/// Reads and parses a treebank file. Errors are rethrown with the file name
/// prefixed to the message.
std::vector<Tree> read_treebank(const std::filesystem::path& path, bool parallel = true);

}  // namespace lexboot
