#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexboot/bootstrap.hpp"
#include "lexboot/compound.hpp"
#include "lexboot/extract.hpp"
#include "lexboot/morph.hpp"

namespace lexboot {

// Counts file: three TSV sections, rows in byte order.
//
//   #PAIRS      lemma1 <TAB> lemma2 <TAB> count           (lemma1 < lemma2)
//   #COMPOUNDS  lemma_i <TAB> lemma_j <TAB> right <TAB> member_i
//   #FREQ       lemma <TAB> count
void write_counts(std::ostream& out, const CoocTable& cooc, const CompoundTable& compounds);

struct CountsFile {
  CoocTable cooc;
  CompoundTable compounds;
};

/// Inverse of write_counts. Member counts are recovered only for lemmas
/// with at least one COMPOUNDS row. Throws ParseError on malformed input.
CountsFile read_counts(std::istream& in);

/// Shortest decimal string that parses back to the same double.
std::string format_score(double v);

/// rank <TAB> display_lemma <TAB> iteration <TAB> score
void write_head_list(std::ostream& out, std::span<const RankedEntry> ranked, const std::map<std::string, Lemma>& vocabulary);

/// head_rank <TAB> display_compound
void write_compound_list(std::ostream& out, std::span<const CompoundEntry> entries,
                         const std::map<std::string, Lemma>& vocabulary);

/// Seed list: one display form per line ("car(s)", "dynamite"), commas also
/// separate entries, '#' starts a comment line. Duplicate keys are dropped.
std::vector<Lemma> parse_seeds(std::string_view text);
std::vector<Lemma> read_seed_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it into place, so readers
/// never observe a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

}  // namespace lexboot
