#include "lexboot/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <system_error>

#include "lexboot/errors.hpp"

namespace lexboot {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

Count parse_count(std::string_view s, std::size_t offset) {
  Count v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) throw ParseError("bad count '" + std::string(s) + "'", offset);
  return v;
}

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

void write_counts(std::ostream& out, const CoocTable& cooc, const CompoundTable& compounds) {
  out << "#PAIRS\n";
  for (const auto& [p, n] : cooc.pairs()) out << p.first << '\t' << p.second << '\t' << n << '\n';
  out << "#COMPOUNDS\n";
  for (const auto& [p, n] : compounds.right_counts()) {
    out << p.first << '\t' << p.second << '\t' << n << '\t' << compounds.member_count(p.first) << '\n';
  }
  out << "#FREQ\n";
  for (const auto& [l, n] : cooc.freqs()) out << l << '\t' << n << '\n';
}

CountsFile read_counts(std::istream& in) {
  enum class Section { None, Pairs, Compounds, Freq } section = Section::None;
  CountsFile file;
  std::set<std::string> member_seen;
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    if (line == "#PAIRS") {
      section = Section::Pairs;
      continue;
    }
    if (line == "#COMPOUNDS") {
      section = Section::Compounds;
      continue;
    }
    if (line == "#FREQ") {
      section = Section::Freq;
      continue;
    }
    auto fields = split_tabs(line);
    switch (section) {
      case Section::None: throw ParseError("row outside of any section", line_start);
      case Section::Pairs:
        if (fields.size() != 3) throw ParseError("PAIRS row needs 3 fields", line_start);
        if (!(fields[0] < fields[1])) throw ParseError("PAIRS row not in lemma order", line_start);
        file.cooc.add_pair(std::string(fields[0]), std::string(fields[1]), parse_count(fields[2], line_start));
        break;
      case Section::Compounds: {
        if (fields.size() != 4) throw ParseError("COMPOUNDS row needs 4 fields", line_start);
        std::string i(fields[0]);
        file.compounds.add_counts(i, std::string(fields[1]), parse_count(fields[2], line_start));
        Count member = parse_count(fields[3], line_start);
        if (member_seen.insert(i).second) {
          file.compounds.add_member(i, member);
        } else if (file.compounds.member_count(i) != member) {
          throw ParseError("inconsistent member count for '" + i + "'", line_start);
        }
        break;
      }
      case Section::Freq:
        if (fields.size() != 2) throw ParseError("FREQ row needs 2 fields", line_start);
        file.cooc.add_head(std::string(fields[0]), parse_count(fields[1], line_start));
        break;
    }
  }
  return file;
}

std::string format_score(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void write_head_list(std::ostream& out, std::span<const RankedEntry> ranked, const std::map<std::string, Lemma>& vocabulary) {
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    const auto& e = ranked[i];
    auto it = vocabulary.find(e.lemma);
    out << (i + 1) << '\t' << (it == vocabulary.end() ? e.lemma : display(it->second)) << '\t' << e.iteration << '\t'
        << format_score(e.score) << '\n';
  }
}

void write_compound_list(std::ostream& out, std::span<const CompoundEntry> entries,
                         const std::map<std::string, Lemma>& vocabulary) {
  for (const auto& e : entries) out << e.head_rank << '\t' << display_compound(e, vocabulary) << '\n';
}

std::vector<Lemma> parse_seeds(std::string_view text) {
  std::vector<Lemma> out;
  std::set<std::string> keys;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    std::size_t pos = 0;
    while (pos <= line.size()) {
      auto comma = line.find(',', pos);
      auto item = trim(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
      pos = comma == std::string_view::npos ? line.size() + 1 : comma + 1;
      if (item.empty()) continue;
      auto lemma = parse_display_form(item);
      if (keys.insert(lemma.key).second) out.push_back(std::move(lemma));
    }
  }
  return out;
}

std::vector<Lemma> read_seed_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read seed file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_seeds(buf.str());
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace lexboot
