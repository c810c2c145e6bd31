#include "nk/alexander.hpp"

#include "nk/linalg.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace nk;

namespace {

TwistedAlexander classical(const Presentation& p) { return twisted_alexander(p, MatrixRep::trivial(p.generator_count())); }

// tau = Delta / (t - 1) for a knot with the trivial representation
void check_against(const Presentation& p, const LaurentPoly& delta) {
  const TwistedAlexander a = classical(p);
  CHECK(equal_up_to_unit(a.numerator * LaurentPoly::parse("-1 + t"), delta * a.denominator));
}

}  // namespace

TEST_CASE("Seifert oracles") {
  CHECK(equal_up_to_unit(oracle::seifert_alexander({{-1, 1}, {0, -1}}), LaurentPoly::parse("1 - t + t^2")));
  CHECK(equal_up_to_unit(oracle::seifert_alexander({{-1, 1}, {0, 1}}), LaurentPoly::parse("1 - 3*t + t^2")));
}

TEST_CASE("trivial representation gives the classical Alexander polynomial") {
  check_against(load_presentation(oracle::fixture("trefoil.pres")), oracle::seifert_alexander({{-1, 1}, {0, -1}}));
  check_against(load_presentation(oracle::fixture("figure_eight.pres")), oracle::seifert_alexander({{-1, 1}, {0, 1}}));
  check_against(load_presentation(oracle::fixture("conway.pres")), LaurentPoly(1));
  check_against(load_presentation(oracle::fixture("kinoshita_terasaka.pres")), LaurentPoly(1));
}

TEST_CASE("numerator matches the hand-abelianised Fox matrix") {
  for (const char* f : {"trefoil.pres", "figure_eight.pres", "conway.pres"}) {
    CAPTURE(f);
    const Presentation p = load_presentation(oracle::fixture(f));
    const PolyMatrix m = oracle::abelian_fox_matrix(p);
    std::vector<std::size_t> rows(p.relator_count() - 1), cols(p.generator_count() - 1);
    std::iota(rows.begin(), rows.end(), 0);
    std::iota(cols.begin(), cols.end(), 0);
    const PolyMatrix minor = m.select(rows, cols);
    const LaurentPoly ref = minor.rows() <= 7 ? oracle::leibniz_det(minor) : det_symbolic(minor);
    CHECK(equal_up_to_unit(classical(p).numerator, ref));
  }
}

TEST_CASE("unknot") {
  const TwistedAlexander a = classical(load_presentation(oracle::fixture("unknot.pres")));
  CHECK(a.numerator == LaurentPoly(1));
  CHECK(a.denominator == LaurentPoly::parse("-1 + t"));
  CHECK(is_monic(a));
}

TEST_CASE("drop-choice independence on the trefoil") {
  const Presentation p = load_presentation(oracle::fixture("trefoil.pres"));
  const TwistedComplex c = build_complex(p, MatrixRep::trivial(3));
  const TwistedAlexander base = twisted_alexander(c);
  for (std::size_t g = 0; g < 3; ++g)
    for (std::size_t r = 0; r < 3; ++r) CHECK(same_invariant(base, twisted_alexander(c, g, r)));
}

TEST_CASE("Conway with h is not monic") {
  const Presentation p = load_presentation(oracle::fixture("conway.pres"));
  const MatrixRep h = perm_to_matrix(*load_representation(oracle::fixture("conway_h.rep"), p).perm);
  const TwistedAlexander a = twisted_alexander(p, h);
  CHECK_FALSE(is_monic(a));
  CHECK(abs(a.numerator.lowest_coeff()) == 5);
  CHECK(display(a).rfind("(5 - 14*t", 0) == 0);
}

TEST_CASE("undefined invariant") {
  // two-component unlink: H1 has positive rank over Q(t)
  const Presentation p = parse_presentation("generators: a b\n");
  CHECK_THROWS_AS(twisted_alexander(p, MatrixRep::trivial(2)), UndefinedInvariant);
}

TEST_CASE("torsion is multiplicative under connected sum") {
  const Presentation t = load_presentation(oracle::fixture("trefoil.pres"));
  const Presentation f = load_presentation(oracle::fixture("figure_eight.pres"));
  const Presentation u = load_presentation(oracle::fixture("unknot.pres"));
  const auto a_t = classical(t), a_f = classical(f), a_u = classical(u);
  CHECK(tau_product_check(a_t, a_t, classical(connected_sum(t, t))));
  CHECK(tau_product_check(a_t, a_f, classical(connected_sum(t, f))));
  CHECK(tau_product_check(a_f, a_u, classical(connected_sum(f, u))));
  CHECK_FALSE(tau_product_check(a_t, a_t, classical(connected_sum(t, f))));
}
