#pragma once

// Morse-Novikov lower bounds m_i >= (b1 + q1) / n and the aggregated report.

#include "nk/alexander.hpp"
#include "nk/novikov.hpp"

#include <optional>
#include <string>
#include <vector>

namespace nk {

struct UpperBound {
  long value = 0;
  std::string note;
};

// "2 (handle construction)" -> {2, "handle construction"}. Throws std::invalid_argument.
UpperBound parse_upper_bound(const std::string& text);

struct MNBound {
  std::size_t n = 1;
  long m1_lb = 0;
  long m2_lb = 0;
  long mn_lb = 0;
  mpq_class raw;  // 2 (b1 + q1) / n
  std::string provenance;
  std::optional<UpperBound> upper;
  bool contradiction = false;
};

MNBound mn_lower_bound(const NovikovProfile& profile, std::size_t n);
MNBound with_upper(MNBound b, std::optional<UpperBound> upper);

// Profile of the n-fold connected sum with the product representation.
// Throws std::invalid_argument for n_copies < 1.
NovikovProfile connected_sum_scale(const NovikovProfile& profile, std::size_t n_copies);

nlohmann::json to_json(const MNBound& b);

// One representation's contribution to a report.
struct ReportEntry {
  std::string label;            // e.g. "h (search #1)" or a file name
  std::string representation;   // text form
  std::size_t dimension = 0;
  NovikovProfile profile;
  std::optional<TwistedAlexander> alexander;
  std::string alexander_error;
  MNBound bound;
};

struct ReportConventions {
  std::string matrix_convention = "as-given";
  std::optional<std::size_t> drop_gen;
  std::optional<std::size_t> drop_rel;
  std::size_t copies = 1;
};

struct Report {
  std::string input;
  std::optional<Presentation> presentation;
  std::vector<ReportEntry> entries;
  ReportConventions conventions;
  std::optional<UpperBound> upper;
  std::vector<std::string> notes;
};

// Best lower bound across the entries (0 when there are none).
MNBound best_bound(const Report& r);

nlohmann::json to_json(const Report& r);
std::string to_text(const Report& r);

}  // namespace nk
