#include "nk/novikov.hpp"

#include "nk/foxcalc.hpp"
#include "nk/linalg.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <numeric>
#include <tuple>

namespace nk {

TwistedComplex build_complex(const Presentation& p, const MatrixRep& r) {
  if (!verify_rep(p, r)) throw std::invalid_argument("representation does not satisfy the relators");
  TwistedComplex c;
  c.n = r.dimension();
  c.g = p.generator_count();
  c.r = p.relator_count();
  c.redundant = p.redundant_relators();
  const std::size_t n = c.n;
  const PolyMatrix id = PolyMatrix::identity(n);

  c.d1 = PolyMatrix(n, n * c.g);
  for (std::size_t j = 0; j < c.g; ++j)
    c.d1.set_block(0, j * n, evaluate_word(r, p.xi(), FreeWord::generator(static_cast<GeneratorId>(j))) - id);

  const FoxJacobian jac = jacobian(p);
  c.d2 = PolyMatrix(n * c.g, n * c.r);
  for (std::size_t i = 0; i < c.r; ++i)
    for (std::size_t j = 0; j < c.g; ++j) {
      const auto& e = jac(i, j);
      if (!e.is_zero()) c.d2.set_block(j * n, i * n, evaluate(r, p.xi(), e));
    }

  if (!(c.d1 * c.d2).is_zero()) throw ChainLawError("d1 * d2 != 0");
  return c;
}

EpiWitness d1_epi_check(const TwistedComplex& c) {
  EpiWitness w;
  for (std::size_t j = c.g; j-- > 0;) {
    LaurentPoly d = det(c.generator_block(j));
    if (!d.is_zero() && is_novikov_unit(d)) {
      w.epi = true;
      w.generator = j;
      w.determinant = std::move(d);
      return w;
    }
  }
  return w;
}

PolyMatrix homology_presentation(const TwistedComplex& c, std::size_t gen) {
  if (gen >= c.g) throw std::out_of_range("generator index out of range");
  std::vector<std::size_t> rows;
  for (std::size_t k = 0; k < c.n * c.g; ++k)
    if (k / c.n != gen) rows.push_back(k);
  std::vector<std::size_t> cols(c.n * c.r);
  std::iota(cols.begin(), cols.end(), 0);
  return c.d2.select(rows, cols);
}

std::vector<std::size_t> dropped_relators(const TwistedComplex& c, std::optional<std::size_t> drop_rel) {
  std::vector<std::size_t> out = c.redundant;
  if (drop_rel) {
    if (*drop_rel >= c.r) throw std::out_of_range("relator index out of range");
    if (std::find(out.begin(), out.end(), *drop_rel) == out.end()) {
      if (out.empty())
        out.push_back(*drop_rel);
      else
        out.back() = *drop_rel;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PolyMatrix torsion_minor(const TwistedComplex& c, std::size_t gen, const std::vector<std::size_t>& dropped) {
  const PolyMatrix a = homology_presentation(c, gen);
  std::vector<std::size_t> rows(a.rows());
  std::iota(rows.begin(), rows.end(), 0);
  std::vector<std::size_t> cols;
  for (std::size_t k = 0; k < a.cols(); ++k)
    if (std::find(dropped.begin(), dropped.end(), k / c.n) == dropped.end()) cols.push_back(k);
  return a.select(rows, cols);
}

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::kAcyclic: return "acyclic";
    case CertificateKind::kTorsionNonUnit: return "torsion-non-unit";
    case CertificateKind::kModEllFitting: return "mod-ell-fitting";
    case CertificateKind::kUnitPivotReduction: return "unit-pivot-reduction";
    case CertificateKind::kScaled: return "scaled";
  }
  return "?";
}

CertificateKind parse_certificate_kind(const std::string& s) {
  for (auto k : {CertificateKind::kAcyclic, CertificateKind::kTorsionNonUnit, CertificateKind::kModEllFitting,
                 CertificateKind::kUnitPivotReduction, CertificateKind::kScaled})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown certificate kind '" + s + "'");
}

// ---- unit-pivot reduction ------------------------------------------------------------

PivotReduction unit_pivot_reduce(PolyMatrix a, int span_limit) {
  PivotReduction out;
  std::vector<std::size_t> live_rows(a.rows()), live_cols(a.cols());
  std::iota(live_rows.begin(), live_rows.end(), 0);
  std::iota(live_cols.begin(), live_cols.end(), 0);

  for (;;) {
    // minimal span, then lowest (row, col)
    std::optional<std::tuple<int, std::size_t, std::size_t>> best;
    for (std::size_t ri = 0; ri < live_rows.size(); ++ri)
      for (std::size_t ci = 0; ci < live_cols.size(); ++ci) {
        const LaurentPoly& e = a(live_rows[ri], live_cols[ci]);
        if (e.is_zero() || !is_novikov_unit(e)) continue;
        auto key = std::make_tuple(e.span(), ri, ci);
        if (!best || key < *best) best = key;
      }
    if (!best) break;
    const auto [span, pr, pc] = *best;
    const std::size_t p = live_rows[pr], col = live_cols[pc];
    const LaurentPoly u = a(p, col);
    const bool mono = u.is_monomial();
    for (std::size_t ri = 0; ri < live_rows.size(); ++ri) {
      const std::size_t i = live_rows[ri];
      if (i == p || a(i, col).is_zero()) continue;
      const LaurentPoly f = a(i, col);
      const LaurentPoly q = mono ? divide_exact(f, u) : LaurentPoly();
      for (std::size_t j : live_cols) {
        if (mono) {
          if (!a(p, j).is_zero()) a(i, j) -= q * a(p, j);
        } else {
          // row_i <- u row_i - f row_p, invertible over Z((t)) since u is a unit
          a(i, j) = u * a(i, j) - f * a(p, j);
        }
        if (a(i, j).span() > span_limit) {
          out.aborted = true;
          break;
        }
      }
      if (out.aborted) break;
    }
    if (out.aborted) break;
    ++out.pivots;
    live_rows.erase(live_rows.begin() + static_cast<std::ptrdiff_t>(pr));
    live_cols.erase(live_cols.begin() + static_cast<std::ptrdiff_t>(pc));
  }
  out.remainder = a.select(live_rows, live_cols);
  return out;
}

namespace {

struct DiagonalShape {
  bool diagonal = false;
  std::vector<LaurentPoly> entries;
  std::size_t zero_rows = 0;
};

DiagonalShape diagonal_shape(const PolyMatrix& m) {
  DiagonalShape s;
  std::vector<int> col_hits(m.cols(), 0);
  s.diagonal = true;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int hits = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      ++hits;
      ++col_hits[j];
      s.entries.push_back(m(i, j));
    }
    if (hits == 0) ++s.zero_rows;
    if (hits > 1) s.diagonal = false;
  }
  for (int h : col_hits)
    if (h > 1) s.diagonal = false;
  if (!s.diagonal) s.entries.clear();
  std::sort(s.entries.begin(), s.entries.end(),
            [](const LaurentPoly& x, const LaurentPoly& y) { return x.to_string() < y.to_string(); });
  return s;
}

std::optional<Certificate> minor_certificate(const TwistedComplex& c, std::size_t gen,
                                             const std::vector<std::size_t>& dropped, int b1) {
  const PolyMatrix m = torsion_minor(c, gen, dropped);
  if (!m.is_square()) return std::nullopt;
  Certificate cert;
  cert.generator = gen;
  cert.dropped_relators = dropped;
  cert.rows = m.rows();
  LaurentPoly d = det(m);
  if (d.is_zero()) return std::nullopt;
  if (is_novikov_unit(d)) {
    // the minor alone is onto, so H1 = 0
    cert.kind = CertificateKind::kAcyclic;
    cert.q_exact = 0;
  } else {
    if (b1 != 0) return std::nullopt;
    cert.kind = CertificateKind::kTorsionNonUnit;
    cert.q_lower = 1;
  }
  cert.polynomial = std::move(d);
  return cert;
}

std::optional<Certificate> mod_ell_certificate(const PolyMatrix& a, std::size_t rank_q,
                                               const std::vector<std::uint64_t>& primes, std::size_t gen,
                                               int b1) {
  std::optional<Certificate> best;
  for (std::uint64_t ell : primes) {
    const std::size_t rk = rank_mod(a, ell);
    // dim over F_ell((t)) of H1 / ell H1 is rows - rk; the free part accounts for b1 of them
    const int bound = static_cast<int>(rank_q) - static_cast<int>(rk);
    if (bound <= 0 || (best && bound <= best->q_lower)) continue;
    Certificate cert;
    cert.kind = CertificateKind::kModEllFitting;
    cert.generator = gen;
    cert.prime = ell;
    cert.rows = a.rows();
    cert.rank_mod = rk;
    cert.b1 = static_cast<std::size_t>(b1);
    cert.q_lower = bound;
    best = std::move(cert);
  }
  return best;
}

std::optional<Certificate> reduction_certificate(const PolyMatrix& a, std::size_t gen, int span_limit) {
  PivotReduction red = unit_pivot_reduce(a, span_limit);
  if (red.aborted) return std::nullopt;
  const DiagonalShape shape = diagonal_shape(red.remainder);
  Certificate cert;
  cert.kind = CertificateKind::kUnitPivotReduction;
  cert.generator = gen;
  cert.rows = a.rows();
  cert.pivots = red.pivots;
  cert.diagonalized = shape.diagonal;
  if (!shape.diagonal) return std::nullopt;
  cert.diagonal = shape.entries;
  cert.free_rank = shape.zero_rows;
  const int k = static_cast<int>(shape.entries.size());
  cert.q_lower = std::min(k, 1);
  // a sum of k cyclic modules needs between 1 and k generators; exact when k <= 1
  if (k <= 1) cert.q_exact = k;
  return cert;
}

}  // namespace

NovikovProfile compute_profile(const TwistedComplex& c, const ProfileOptions& opt) {
  NovikovProfile prof;
  prof.n = c.n;
  const EpiWitness epi = d1_epi_check(c);
  prof.d1_epi = epi.epi;

  std::size_t gen = 0;
  if (opt.drop_gen) {
    if (*opt.drop_gen >= c.g) throw std::out_of_range("generator index out of range");
    gen = *opt.drop_gen;
    if (!is_novikov_unit(det(c.generator_block(gen))))
      throw std::invalid_argument("the d1 block of the chosen generator is not a Novikov unit");
  } else if (epi.generator) {
    gen = *epi.generator;
  }

  const std::size_t rank_d1 = c.g == 0 ? 0 : rank_over_function_field(c.d1);
  const std::size_t rank_d2 = c.d2.empty() ? 0 : rank_over_function_field(c.d2);
  prof.b0 = static_cast<int>(c.n - rank_d1);
  prof.b1 = static_cast<int>(c.n * c.g - rank_d1 - rank_d2);
  // relators beyond the redundant ones carry the 2-cells of the exterior
  const std::size_t r_eff = c.r - std::min(c.r, c.redundant.size());
  const int b2_complex = static_cast<int>(c.n * r_eff) - static_cast<int>(rank_d2);
  prof.b2 = prof.b1;
  prof.euler_consistent = b2_complex == prof.b1 && prof.b0 == 0;
  if (!prof.euler_consistent)
    prof.notes.push_back("b2 from the 2-complex (" + std::to_string(b2_complex) + ") differs from b1; expected only for split links or presentations without deficiency one per component");

  if (!epi.epi) {
    prof.notes.push_back("no generator block of d1 is a Novikov unit; torsion certificates skipped");
    return prof;
  }

  const PolyMatrix a = homology_presentation(c, gen);
  const std::vector<std::size_t> dropped = dropped_relators(c, opt.drop_rel);
  const int b1 = prof.b1;
  const std::size_t rank_q = rank_d2;

  auto f_minor = std::async(std::launch::async, [&] { return minor_certificate(c, gen, dropped, b1); });
  auto f_mod = std::async(std::launch::async, [&] { return mod_ell_certificate(a, rank_q, opt.primes, gen, b1); });
  std::optional<Certificate> red;
  if (opt.reduction) red = reduction_certificate(a, gen, opt.reduction_span_limit);
  std::optional<Certificate> minor = f_minor.get();
  std::optional<Certificate> modl = f_mod.get();

  for (auto* cert : {&minor, &modl, &red})
    if (*cert) prof.certificates.push_back(**cert);

  for (const auto& cert : prof.certificates) prof.q1_lower = std::max(prof.q1_lower, cert.q_lower);
  for (const auto& cert : prof.certificates)
    if (cert.q_exact) prof.q1_exact = cert.q_exact;
  if (!prof.q1_exact && red && static_cast<int>(red->diagonal.size()) == prof.q1_lower) prof.q1_exact = prof.q1_lower;
  if (prof.q1_exact && *prof.q1_exact < prof.q1_lower) throw std::logic_error("exact q1 below a certified lower bound");
  if (a.rows() == 0 && prof.certificates.empty()) prof.q1_exact = 0;
  return prof;
}

bool verify_certificate(const Certificate& cert, const TwistedComplex& c) {
  try {
    if (cert.generator >= c.g) return false;
    if (!is_novikov_unit(det(c.generator_block(cert.generator)))) return false;
    switch (cert.kind) {
      case CertificateKind::kAcyclic:
      case CertificateKind::kTorsionNonUnit: {
        if (!cert.polynomial) return false;
        const PolyMatrix m = torsion_minor(c, cert.generator, cert.dropped_relators);
        if (!m.is_square()) return false;
        const LaurentPoly d = det_symbolic(m);
        if (d != *cert.polynomial || d.is_zero()) return false;
        if (cert.kind == CertificateKind::kAcyclic) return is_novikov_unit(d);
        // a non-unit minor forces torsion only when the homology is torsion
        const std::size_t rank_d2 = c.d2.empty() ? 0 : rank_symbolic(c.d2);
        return !is_novikov_unit(d) && rank_d2 == c.n * (c.g - 1) && cert.q_lower == 1;
      }
      case CertificateKind::kModEllFitting: {
        const PolyMatrix a = homology_presentation(c, cert.generator);
        const std::size_t rk = rank_mod(a, cert.prime);
        const std::size_t rq = rank_over_function_field(a);
        return rk == cert.rank_mod && a.rows() == cert.rows &&
               cert.q_lower == static_cast<int>(rq) - static_cast<int>(rk) && cert.q_lower > 0;
      }
      case CertificateKind::kUnitPivotReduction: {
        const PolyMatrix a = homology_presentation(c, cert.generator);
        PivotReduction red = unit_pivot_reduce(a, std::numeric_limits<int>::max());
        const DiagonalShape shape = diagonal_shape(red.remainder);
        return shape.diagonal && red.pivots == cert.pivots && shape.entries == cert.diagonal &&
               shape.zero_rows == cert.free_rank;
      }
      case CertificateKind::kScaled: return false;  // a derivation record, not a computation
    }
  } catch (const std::exception&) {
    return false;
  }
  return false;
}

// ---- JSON -------------------------------------------------------------------------------

using nlohmann::json;

json to_json(const LaurentPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  return {{"low", p.is_zero() ? 0 : p.low_degree()}, {"coeffs", coeffs}};
}

LaurentPoly laurent_from_json(const json& j) {
  std::vector<Integer> c;
  for (const auto& x : j.at("coeffs")) c.emplace_back(x.get<std::string>());
  return LaurentPoly(j.at("low").get<int>(), std::move(c));
}

json to_json(const Certificate& c) {
  json j{{"kind", to_string(c.kind)}, {"q_lower", c.q_lower}};
  j["q_exact"] = c.q_exact ? json(*c.q_exact) : json(nullptr);
  switch (c.kind) {
    case CertificateKind::kAcyclic:
    case CertificateKind::kTorsionNonUnit:
      j["generator"] = c.generator;
      j["dropped_relators"] = c.dropped_relators;
      j["minor_size"] = c.rows;
      if (c.polynomial) {
        j["polynomial"] = to_json(*c.polynomial);
        j["polynomial_text"] = c.polynomial->to_string();
      }
      break;
    case CertificateKind::kModEllFitting:
      j["generator"] = c.generator;
      j["prime"] = c.prime;
      j["rows"] = c.rows;
      j["rank_mod"] = c.rank_mod;
      j["b1"] = c.b1;
      break;
    case CertificateKind::kUnitPivotReduction: {
      j["generator"] = c.generator;
      j["rows"] = c.rows;
      j["pivots"] = c.pivots;
      j["free_rank"] = c.free_rank;
      json d = json::array();
      for (const auto& p : c.diagonal) d.push_back(to_json(p));
      j["diagonal"] = d;
      break;
    }
    case CertificateKind::kScaled:
      j["copies"] = c.scale;
      break;
  }
  return j;
}

Certificate certificate_from_json(const json& j) {
  Certificate c;
  c.kind = parse_certificate_kind(j.at("kind").get<std::string>());
  c.q_lower = j.at("q_lower").get<int>();
  if (!j.at("q_exact").is_null()) c.q_exact = j.at("q_exact").get<int>();
  c.generator = j.value("generator", std::size_t{0});
  c.dropped_relators = j.value("dropped_relators", std::vector<std::size_t>{});
  if (j.contains("polynomial")) c.polynomial = laurent_from_json(j["polynomial"]);
  c.prime = j.value("prime", std::uint64_t{0});
  c.rows = j.value("rows", j.value("minor_size", std::size_t{0}));
  c.rank_mod = j.value("rank_mod", std::size_t{0});
  c.b1 = j.value("b1", std::size_t{0});
  c.pivots = j.value("pivots", std::size_t{0});
  c.free_rank = j.value("free_rank", std::size_t{0});
  if (j.contains("diagonal")) {
    for (const auto& p : j["diagonal"]) c.diagonal.push_back(laurent_from_json(p));
    c.diagonalized = true;
  }
  c.scale = j.value("copies", std::size_t{1});
  return c;
}

json to_json(const NovikovProfile& p) {
  json certs = json::array();
  for (const auto& c : p.certificates) certs.push_back(to_json(c));
  json j{
      {"n", p.n},
      {"b", {{"0", p.b0}, {"1", p.b1}, {"2", p.b2}}},
      {"q_lower", {{"1", p.q1_lower}}},
      {"q_exact", {{"1", p.q1_exact ? json(*p.q1_exact) : json(nullptr)}}},
      {"d1_epi", p.d1_epi},
      {"euler_consistent", p.euler_consistent},
      {"certificates", certs},
      {"notes", p.notes},
  };
  return j;
}

NovikovProfile profile_from_json(const json& j) {
  NovikovProfile p;
  p.n = j.at("n").get<std::size_t>();
  p.b0 = j.at("b").value("0", 0);
  p.b1 = j.at("b").at("1").get<int>();
  p.b2 = j.at("b").value("2", p.b1);
  p.q1_lower = j.at("q_lower").at("1").get<int>();
  const auto& qe = j.at("q_exact").at("1");
  if (!qe.is_null()) p.q1_exact = qe.get<int>();
  p.d1_epi = j.value("d1_epi", true);
  p.euler_consistent = j.value("euler_consistent", true);
  for (const auto& c : j.at("certificates")) p.certificates.push_back(certificate_from_json(c));
  p.notes = j.value("notes", std::vector<std::string>{});
  return p;
}

}  // namespace nk
