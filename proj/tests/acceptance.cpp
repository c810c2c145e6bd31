// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "nk/alexander.hpp"
#include "nk/bounds.hpp"
#include "nk/foxcalc.hpp"
#include "nk/linalg.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace nk;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, const std::string& name, const std::function<std::string(bool&)>& body) {
  bool ok = false;
  std::string detail;
  const auto t0 = Clock::now();
  try {
    detail = body(ok);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  if (!ok) ++failures;
  std::printf("%s [%d] %s -- %s (%.1fs)\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str(), seconds_since(t0));
  std::fflush(stdout);
}

struct Conway {
  Presentation p = load_presentation(oracle::fixture("conway.pres"));
  PermutationRep h = *load_representation(oracle::fixture("conway_h.rep"), p).perm;
  MatrixRep rho = perm_to_matrix(h);
};

const std::vector<long> kConwayCoeffs = {-5, 14, -15, 16, -19, 10, 5, -24, 34, -32, 34, -24, 5, 10, -19, 16, -15, 14, -5};

bool matches_reference(const LaurentPoly& d) {
  std::vector<Integer> c;
  for (long v : kConwayCoeffs) c.emplace_back(v);
  const LaurentPoly ref(0, c);
  return equal_up_to_unit(d, ref) || equal_up_to_unit(d.reciprocal(), ref);
}

FreeWord random_word(std::mt19937& rng, std::size_t gens, std::size_t max_len) {
  std::vector<Letter> l;
  const std::size_t len = rng() % (max_len + 1);
  while (l.size() < len) {
    const Letter x{static_cast<GeneratorId>(rng() % gens), rng() % 2 ? 1 : -1};
    if (!l.empty() && l.back() == x.inverse()) continue;
    l.push_back(x);
  }
  return FreeWord(l);
}

PolyMatrix random_poly_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> low(-3, 3), span(0, 3), coef(-4, 4);
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (rng() % 4 == 0) continue;
      std::vector<Integer> c(static_cast<std::size_t>(span(rng)) + 1);
      for (auto& x : c) x = coef(rng);
      m(i, j) = LaurentPoly(low(rng), c);
    }
  return m;
}

}  // namespace

int main() {
  Conway k;

  report(1, "Conway determinant reproduction", [&](bool& ok) {
    const TwistedComplex c = build_complex(k.p, k.rho);
    // drop the last generator block and the last relator block
    const PolyMatrix m = torsion_minor(c, c.g - 1, {c.r - 1});
    const LaurentPoly d = det(m);
    ok = m.rows() == 50 && m.cols() == 50 && matches_reference(d);
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " minor, det = " + d.to_string();
  });

  report(2, "Conway rank of d2", [&](bool& ok) {
    const TwistedComplex c = build_complex(k.p, k.rho);
    const std::size_t rk = rank_over_function_field(c.d2);
    const NovikovProfile prof = compute_profile(c);
    ok = rk == 50 && prof.b1 == 0;
    return "rank " + std::to_string(rk) + ", b1 = " + std::to_string(prof.b1);
  });

  report(3, "Conway verdicts", [&](bool& ok) {
    const TwistedComplex c = build_complex(k.p, k.rho);
    const NovikovProfile prof = compute_profile(c);
    const MNBound b = mn_lower_bound(prof, 5);
    bool cert_ok = false;
    for (const auto& cert : prof.certificates)
      if (cert.kind == CertificateKind::kTorsionNonUnit && abs(cert.polynomial->lowest_coeff()) == 5 &&
          verify_certificate(cert, c))
        cert_ok = true;
    ok = prof.q1_lower >= 1 && cert_ok && b.raw == mpq_class(2, 5) && b.m1_lb >= 1 && b.m2_lb == b.m1_lb;
    return "q1 >= " + std::to_string(prof.q1_lower) + ", raw bound " + b.raw.get_str() + ", m1 = m2 >= " +
           std::to_string(b.m1_lb);
  });

  report(4, "Representation search finds h", [&](bool& ok) {
    const auto t0 = Clock::now();
    SearchOptions o;
    o.degree = 5;
    o.cycle_type = parse_cycle_type("3cycle", 5);
    const auto reps = search_permutation_reps(k.p, o);
    const double secs = seconds_since(t0);
    bool found = false;
    for (const auto& r : reps) found = found || conjugate_reps(r, k.h);
    ok = found && secs < 60;
    return std::to_string(reps.size()) + " classes, conjugate of h " + (found ? "found" : "missing");
  });

  report(5, "Kinoshita-Terasaka has a representation with q1 > 0", [&](bool& ok) {
    const Presentation kt = load_presentation(oracle::fixture("kinoshita_terasaka.pres"));
    const LaurentPoly delta = twisted_alexander(kt, MatrixRep::trivial(kt.generator_count())).numerator;
    SearchOptions o;
    o.degree = 5;
    o.limit = 1000;
    const auto reps = search_permutation_reps(kt, o);
    int certified = 0;
    for (const auto& r : reps) {
      const TwistedComplex c = build_complex(kt, perm_to_matrix(r));
      const NovikovProfile prof = compute_profile(c);
      bool verified = false;
      for (const auto& cert : prof.certificates) verified = verified || (cert.q_lower >= 1 && verify_certificate(cert, c));
      if (prof.q1_lower >= 1 && verified) ++certified;
    }
    ok = certified > 0 && is_novikov_unit(delta) && delta.is_monomial();
    return "Alexander polynomial " + normalized(delta).to_string() + ", " + std::to_string(reps.size()) +
           " S5 classes, " + std::to_string(certified) + " certify q1 >= 1";
  });

  report(6, "Scaling and Conway # Conway", [&](bool& ok) {
    const TwistedComplex c = build_complex(k.p, k.rho);
    const NovikovProfile prof = compute_profile(c);
    const NovikovProfile s10 = connected_sum_scale(prof, 10);
    const MNBound b10 = mn_lower_bound(s10, 5);

    const Presentation cc = connected_sum(k.p, k.p);
    const MatrixRep hh = product_rep(k.rho, k.p, k.rho, k.p, cc);
    const TwistedComplex c2 = build_complex(cc, hh);
    ProfileOptions popt;
    popt.reduction = false;
    const NovikovProfile p2 = compute_profile(c2, popt);
    const TwistedAlexander a1 = twisted_alexander(c);
    const TwistedAlexander a12 = twisted_alexander(c2);
    const bool tau = tau_product_check(a1, a1, a12);
    ok = s10.q1_lower >= 10 && b10.raw == 4 && p2.b1 == 0 && p2.b1 == connected_sum_scale(prof, 2).b1 && tau;
    std::ostringstream os;
    os << "n=10: q1 >= " << s10.q1_lower << ", raw " << b10.raw.get_str() << "; C#C: b1 = " << p2.b1
       << ", q1 >= " << p2.q1_lower << ", tau product " << (tau ? "holds" : "fails");
    return os.str();
  });

  report(7, "Fibred controls", [&](bool& ok) {
    ok = true;
    std::ostringstream os;
    for (const char* f : {"unknot.pres", "trefoil.pres", "figure_eight.pres"}) {
      const Presentation p = load_presentation(oracle::fixture(f));
      const TwistedComplex c = build_complex(p, MatrixRep::trivial(p.generator_count()));
      const NovikovProfile prof = compute_profile(c);
      bool acyclic = false;
      for (const auto& cert : prof.certificates)
        acyclic = acyclic || (cert.kind == CertificateKind::kAcyclic && verify_certificate(cert, c));
      const bool monic = is_monic(twisted_alexander(c));
      const bool good = prof.b0 == 0 && prof.b1 == 0 && prof.q1_lower == 0 && prof.q1_exact == 0 && acyclic && monic;
      ok = ok && good;
      os << f << (good ? " ok " : " BAD ");
    }
    return os.str();
  });

  report(8, "Property suites", [&](bool& ok) {
    std::mt19937 rng(20240601);
    std::ostringstream os;

    int fox_fail = 0;
    for (int i = 0; i < 10000; ++i)
      if (!fundamental_check(random_word(rng, 1 + rng() % 6, 30))) ++fox_fail;
    os << "fox " << fox_fail << "/10000";

    int chain_fail = 0, chain_runs = 0;
    for (const char* f : {"unknot.pres", "trefoil.pres", "figure_eight.pres", "conway.pres", "kinoshita_terasaka.pres"}) {
      const Presentation p = load_presentation(oracle::fixture(f));
      std::vector<MatrixRep> reps{MatrixRep::trivial(p.generator_count())};
      for (std::size_t d = 2; d <= 5; ++d) {
        SearchOptions o;
        o.degree = d;
        o.limit = 50;
        if (d == 5) o.cycle_type = parse_cycle_type("3cycle", 5);
        for (const auto& r : search_permutation_reps(p, o)) {
          reps.push_back(perm_to_matrix(r, Convention::kAsGiven));
          reps.push_back(perm_to_matrix(r, Convention::kTransposed));
        }
      }
      for (const auto& r : reps) {
        ++chain_runs;
        try {
          build_complex(p, r);
        } catch (const ChainLawError&) {
          ++chain_fail;
        }
      }
    }
    os << ", chain law " << chain_fail << "/" << chain_runs;

    int det_fail = 0;
    for (int i = 0; i < 1000; ++i) {
      const PolyMatrix m = random_poly_matrix(rng, 1 + rng() % 8);
      if (det(m) != det_symbolic(m)) ++det_fail;
    }
    os << ", det " << det_fail << "/1000";

    int drop_fail = 0, drop_pairs = 0;
    {
      const Presentation t = load_presentation(oracle::fixture("trefoil.pres"));
      std::vector<std::pair<const Presentation*, MatrixRep>> cases;
      cases.emplace_back(&t, MatrixRep::trivial(t.generator_count()));
      SearchOptions o;
      o.degree = 3;
      for (const auto& r : search_permutation_reps(t, o)) cases.emplace_back(&t, perm_to_matrix(r));
      cases.emplace_back(&k.p, k.rho);
      for (const auto& [p, r] : cases) {
        const TwistedComplex c = build_complex(*p, r);
        std::optional<TwistedAlexander> base;
        for (std::size_t g = 0; g < c.g; ++g)
          for (std::size_t rel = 0; rel < c.r; ++rel) {
            TwistedAlexander a;
            try {
              a = twisted_alexander(c, g, rel);
            } catch (const UndefinedInvariant&) {
              continue;  // not a legal pair
            }
            ++drop_pairs;
            if (!base) base = a;
            else if (!same_invariant(*base, a)) ++drop_fail;
          }
      }
    }
    os << ", drop choice " << drop_fail << "/" << drop_pairs;

    int anti_fail = 0;
    for (int i = 0; i < 1000; ++i) {
      const FreeWord u = random_word(rng, 11, 20), v = random_word(rng, 11, 20);
      const Convention conv = i % 2 ? Convention::kTransposed : Convention::kAsGiven;
      const MatrixRep r = perm_to_matrix(k.h, conv);
      if (evaluate_word(r, k.p.xi(), u * v) != evaluate_word(r, k.p.xi(), v) * evaluate_word(r, k.p.xi(), u))
        ++anti_fail;
    }
    os << ", anti-homomorphism " << anti_fail << "/1000";

    ok = fox_fail == 0 && chain_fail == 0 && det_fail == 0 && drop_fail == 0 && anti_fail == 0 && drop_pairs > 0;
    return os.str();
  });

  std::printf("%s: %d failing criteria\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
