#pragma once

// Group presentations of link complements together with the augmentation
// xi : G -> Z.

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nk {

using GeneratorId = std::uint32_t;

struct Letter {
  GeneratorId gen = 0;
  int sign = 1;  // +1 or -1

  Letter inverse() const { return {gen, -sign}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A freely reduced word. Every constructor reduces its input.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Letter> letters);
  static FreeWord generator(GeneratorId g, int sign = 1) { return FreeWord({Letter{g, sign}}); }

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord inverse() const;
  FreeWord prefix(std::size_t n) const;  // first n letters (already reduced)
  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);

  // Sum of sign * xi[gen].
  long xi_sum(const std::vector<int>& xi) const;
  bool contains(GeneratorId g) const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  // Shortlex: length first, then lexicographic on (gen, sign).
  friend std::strong_ordering operator<=>(const FreeWord& a, const FreeWord& b);

 private:
  std::vector<Letter> letters_;
};

// True if no adjacent pair cancels.
bool is_freely_reduced(const std::vector<Letter>& letters);

// Syntax error in a presentation, representation or braid source.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }
  std::size_t line_;
  std::size_t column_;
};

// Semantic problem with a presentation (imbalanced relator, bad meridian, ...).
class PresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unvalidated presentation data; relators may be unreduced.
struct PresentationDraft {
  std::vector<std::string> names;
  std::vector<std::vector<Letter>> relators;
  std::vector<int> xi;  // empty means all 1
  std::optional<GeneratorId> meridian;
  std::vector<std::size_t> redundant;  // relator indices implied by the others
};

class Presentation {
 public:
  Presentation() = default;

  // Reduces relators, drops relators that reduce to the empty word, and
  // checks xi-balance. Throws PresentationError.
  static Presentation from_draft(PresentationDraft draft);

  std::size_t generator_count() const { return names_.size(); }
  std::size_t relator_count() const { return relators_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(GeneratorId g) const { return names_.at(g); }
  std::optional<GeneratorId> find(std::string_view name) const;
  const std::vector<FreeWord>& relators() const { return relators_; }
  const std::vector<int>& xi() const { return xi_; }
  std::optional<GeneratorId> meridian() const { return meridian_; }

  // Relators known to be consequences of the others (one per connected
  // diagram for Wirtinger presentations). Dropping all of them leaves a
  // presentation of the same group.
  const std::vector<std::size_t>& redundant_relators() const { return redundant_; }

  bool xi_is_constant_one() const;
  // Every relator has the shape a^-1 w b^e w^-1 with xi-balance (Wirtinger crossing).
  bool is_wirtinger_type() const;

  std::string word_to_string(const FreeWord& w) const;
  PresentationDraft to_draft() const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<FreeWord> relators_;
  std::vector<int> xi_;
  std::optional<GeneratorId> meridian_;
  std::vector<std::size_t> redundant_;
};

// ---- text format -------------------------------------------------------------

// Grammar:
//   generators: s1 s2 ... sg
//   meridian: s1                      (optional)
//   xi: s1=1 s2=1 ...                 (optional, default all 1)
//   redundant: 11                     (optional, 1-based relator indices)
//   rel: <word> = <word>              (relator LHS^-1 RHS)
//   relator: <word>
// Words are whitespace-separated letters `name` or `name^k`, k a nonzero integer.
// Blank lines and lines starting with '#' are ignored.
Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::string& path);
std::string to_text(const Presentation& p);

// ---- constructions -------------------------------------------------------------

struct BraidWord {
  int strands = 2;
  std::vector<int> letters;  // i > 0: sigma_i, i < 0: sigma_|i|^-1
};

// "k: l1 l2 ..." e.g. "2: 1 1 1".
BraidWord parse_braid(std::string_view text);

// Number of link components of the closure.
std::size_t component_count(const BraidWord& b);

// Wirtinger presentation of the braid closure. Arcs s1..sk are the top
// segments of positions 1..k; every undercrossing starts a new arc, numbered
// in crossing order. An arc reaching the bottom is the top arc of its position.
Presentation braid_to_wirtinger(const BraidWord& b);

// Free product amalgamated over the meridians. Generators are renamed with
// suffixes _1 and _2; the last relator identifies the meridians.
Presentation connected_sum(const Presentation& p1, const Presentation& p2);

// ---- diagnostics ---------------------------------------------------------------

struct RelatorDiagnostic {
  std::size_t index = 0;
  long xi_sum = 0;
  bool reduced = true;
  std::size_t length = 0;
};

struct ValidationReport {
  std::vector<RelatorDiagnostic> relators;
  std::vector<std::size_t> generator_usage;  // occurrences in relators
  std::vector<std::string> warnings;
  std::vector<std::string> errors;
  bool ok() const { return errors.empty(); }
};

ValidationReport validate(const PresentationDraft& draft);
ValidationReport validate(const Presentation& p);

}  // namespace nk
