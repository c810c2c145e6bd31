#include "nk/bounds.hpp"

#include <sstream>

namespace nk {

UpperBound parse_upper_bound(const std::string& text) {
  std::size_t pos = 0;
  UpperBound u;
  try {
    u.value = std::stol(text, &pos);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("upper bound must start with an integer: '" + text + "'");
  }
  if (u.value < 0) throw std::invalid_argument("upper bound must be nonnegative");
  std::string rest = text.substr(pos);
  const auto a = rest.find_first_not_of(" \t(");
  const auto b = rest.find_last_not_of(" \t)");
  u.note = a == std::string::npos ? "" : rest.substr(a, b - a + 1);
  return u;
}

namespace {

long ceil_div(long a, long b) { return a <= 0 ? 0 : (a + b - 1) / b; }

}  // namespace

MNBound mn_lower_bound(const NovikovProfile& profile, std::size_t n) {
  if (n == 0) throw std::invalid_argument("representation dimension must be positive");
  MNBound b;
  b.n = n;
  const long s = profile.b1 + profile.q1_lower;
  b.m1_lb = ceil_div(s, static_cast<long>(n));
  b.m2_lb = b.m1_lb;
  b.mn_lb = b.m1_lb + b.m2_lb;
  b.raw = mpq_class(2 * s, static_cast<long>(n));
  b.raw.canonicalize();
  std::ostringstream os;
  os << "m1, m2 >= (b1 + q1) / n with b1 = " << profile.b1 << ", q1 >= " << profile.q1_lower << ", n = " << n;
  b.provenance = os.str();
  return b;
}

MNBound with_upper(MNBound b, std::optional<UpperBound> upper) {
  b.upper = std::move(upper);
  b.contradiction = b.upper && b.upper->value < b.mn_lb;
  return b;
}

NovikovProfile connected_sum_scale(const NovikovProfile& profile, std::size_t n_copies) {
  if (n_copies < 1) throw std::invalid_argument("number of copies must be at least 1");
  if (n_copies == 1) return profile;
  const int k = static_cast<int>(n_copies);
  NovikovProfile out = profile;
  out.b0 *= k;
  out.b1 *= k;
  out.b2 *= k;
  out.q1_lower *= k;
  if (out.q1_exact) *out.q1_exact *= k;
  // Torsion splits as a direct sum over the summands, so the base certificates
  // are kept and a derivation record is added on top.
  Certificate rec;
  rec.kind = CertificateKind::kScaled;
  std::size_t prev = 1;
  for (const auto& c : profile.certificates)
    if (c.kind == CertificateKind::kScaled) prev = c.scale;
  rec.scale = prev * n_copies;
  rec.q_lower = out.q1_lower;
  rec.q_exact = out.q1_exact;
  std::erase_if(out.certificates, [](const Certificate& c) { return c.kind == CertificateKind::kScaled; });
  out.certificates.push_back(rec);
  out.notes.push_back("scaled to " + std::to_string(rec.scale) +
                      " copies: homology of a connected sum is the direct sum of the summands");
  return out;
}

nlohmann::json to_json(const MNBound& b) {
  nlohmann::json j{
      {"n", b.n},
      {"m1_lower", b.m1_lb},
      {"m2_lower", b.m2_lb},
      {"mn_lower", b.mn_lb},
      {"raw", b.raw.get_str()},
      {"provenance", b.provenance},
      {"contradiction", b.contradiction},
  };
  if (b.upper) {
    j["upper"] = {{"value", b.upper->value}, {"note", b.upper->note}};
    j["bracket"] = {b.mn_lb, b.upper->value};
  } else {
    j["upper"] = nullptr;
    j["bracket"] = {b.mn_lb, nullptr};
  }
  return j;
}

MNBound best_bound(const Report& r) {
  MNBound best;
  best.provenance = "no representation: trivial lower bound";
  bool any = false;
  for (const auto& e : r.entries) {
    if (!any || e.bound.mn_lb > best.mn_lb || (e.bound.mn_lb == best.mn_lb && e.bound.raw > best.raw)) {
      best = e.bound;
      any = true;
    }
  }
  return with_upper(best, r.upper);
}

nlohmann::json to_json(const Report& r) {
  using nlohmann::json;
  json pres = nullptr;
  if (r.presentation) {
    json rels = json::array();
    for (const auto& w : r.presentation->relators()) rels.push_back(r.presentation->word_to_string(w));
    pres = {{"generators", r.presentation->names()}, {"relators", rels},
            {"redundant", r.presentation->redundant_relators()}};
  }
  json entries = json::array();
  for (const auto& e : r.entries) {
    json je{{"label", e.label},
            {"representation", e.representation},
            {"dimension", e.dimension},
            {"profile", to_json(e.profile)},
            {"bound", to_json(e.bound)}};
    if (e.alexander)
      je["alexander"] = to_json(*e.alexander);
    else if (!e.alexander_error.empty())
      je["alexander"] = {{"error", e.alexander_error}};
    entries.push_back(je);
  }
  const MNBound best = best_bound(r);
  json conclusion;
  if (best.upper && best.upper->value == best.mn_lb)
    conclusion = "MN = " + std::to_string(best.mn_lb);
  else if (best.contradiction)
    conclusion = "contradiction: upper bound below certified lower bound";
  else
    conclusion = "MN >= " + std::to_string(best.mn_lb);
  return {
      {"schema", "novikov-knot/v1"},
      {"input", r.input},
      {"presentation", pres},
      {"conventions",
       {{"representation", "right: rho(uv) = rho(v) rho(u)"},
        {"matrix_convention", r.conventions.matrix_convention},
        {"permutation_product", "left to right"},
        {"twist", "t^{+xi(w)}"},
        {"d2_orientation", "rows = generator blocks, columns = relator blocks"},
        {"drop_generator", r.conventions.drop_gen ? json(*r.conventions.drop_gen) : json(nullptr)},
        {"drop_relator", r.conventions.drop_rel ? json(*r.conventions.drop_rel) : json(nullptr)},
        {"indices", "0-based"},
        {"copies", r.conventions.copies}}},
      {"entries", entries},
      {"notes", r.notes},
      {"best", to_json(best)},
      {"conclusion", conclusion},
  };
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << "input: " << r.input << '\n';
  if (r.presentation)
    os << "presentation: " << r.presentation->generator_count() << " generators, "
       << r.presentation->relator_count() << " relators\n";
  if (r.conventions.copies > 1) os << "copies: " << r.conventions.copies << '\n';
  for (const auto& e : r.entries) {
    os << "\n[" << e.label << "] dimension " << e.dimension << '\n';
    os << "  b1 = " << e.profile.b1 << ", b2 = " << e.profile.b2 << ", q1 >= " << e.profile.q1_lower;
    if (e.profile.q1_exact) os << " (exact " << *e.profile.q1_exact << ")";
    os << '\n';
    for (const auto& c : e.profile.certificates) {
      os << "  certificate " << to_string(c.kind);
      if (c.polynomial) os << ": " << c.polynomial->to_string();
      if (c.kind == CertificateKind::kModEllFitting) os << ": ell = " << c.prime << ", q1 >= " << c.q_lower;
      if (c.kind == CertificateKind::kUnitPivotReduction)
        os << ": " << c.pivots << " pivots, " << c.diagonal.size() << " non-unit diagonal entries";
      if (c.kind == CertificateKind::kScaled) os << ": " << c.scale << " copies";
      os << '\n';
    }
    for (const auto& n : e.profile.notes) os << "  note: " << n << '\n';
    if (e.alexander) {
      const bool monic = is_monic(*e.alexander);
      os << "  twisted Alexander: " << display(*e.alexander) << (monic ? "  monic" : "  not monic => not fibred")
         << '\n';
    } else if (!e.alexander_error.empty()) {
      os << "  twisted Alexander: " << e.alexander_error << '\n';
    }
    os << "  MN >= " << e.bound.mn_lb << " (raw " << e.bound.raw.get_str() << ")\n";
  }
  for (const auto& n : r.notes) os << "note: " << n << '\n';
  const MNBound best = best_bound(r);
  os << "\nbest lower bound: MN >= " << best.mn_lb << " (raw " << best.raw.get_str() << ")\n";
  if (best.upper) {
    os << "upper bound: MN <= " << best.upper->value;
    if (!best.upper->note.empty()) os << " (" << best.upper->note << ")";
    os << "\nbracket: [" << best.mn_lb << ", " << best.upper->value << "]\n";
    if (best.contradiction) os << "CONTRADICTION: upper bound below the certified lower bound\n";
  }
  return os.str();
}

}  // namespace nk
