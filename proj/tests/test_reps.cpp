#include "nk/reps.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace nk;

TEST_CASE("permutation basics") {
  const Permutation a = Permutation::parse_cycles("(253)", 5);
  CHECK(a(1) == 4);
  CHECK(a(4) == 2);
  CHECK(a(2) == 1);
  CHECK(a.to_cycles() == "(253)");
  CHECK(a.cycle_type() == std::vector<int>{3, 1, 1});
  CHECK(a.then(a.inverse()).is_identity());
  CHECK(Permutation::parse_cycles("()", 3).is_identity());
  CHECK(Permutation::parse_cycles("(1 2)(3 4)", 4).cycle_type() == std::vector<int>{2, 2});
  // left to right: (12) then (23) sends 1 -> 2 -> 3
  const Permutation p = Permutation::parse_cycles("(12)", 3).then(Permutation::parse_cycles("(23)", 3));
  CHECK(p(0) == 2);
  CHECK_THROWS(Permutation::parse_cycles("(12)(23)", 3));
  CHECK_THROWS(Permutation::parse_cycles("(16)", 5));
  CHECK(parse_cycle_type("3cycle", 5) == std::vector<int>{3, 1, 1});
  CHECK(parse_cycle_type("2,2", 5) == std::vector<int>{2, 2, 1});
  CHECK_THROWS(parse_cycle_type("6cycle", 5));
}

TEST_CASE("search agrees with brute force over S3") {
  const Presentation t = load_presentation(oracle::fixture("trefoil.pres"));
  const std::vector<Presentation> cases = {load_presentation(oracle::fixture("unknot.pres")), t,
                                           load_presentation(oracle::fixture("figure_eight.pres")),
                                           braid_to_wirtinger(parse_braid("2: 1 1")), connected_sum(t, t)};
  for (const Presentation& p : cases) {
    SearchOptions o;
    o.degree = 3;
    o.limit = 1000;
    const auto reps = search_permutation_reps(p, o);
    CHECK(reps.size() == oracle::s3_class_count(p));
    for (const auto& r : reps) CHECK(verify_rep(p, r));
  }
}

TEST_CASE("results are canonical and pairwise non-conjugate") {
  const Presentation p = load_presentation(oracle::fixture("trefoil.pres"));
  SearchOptions o;
  o.degree = 4;
  o.limit = 1000;
  const auto reps = search_permutation_reps(p, o);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    CHECK(canonical_conjugate(reps[i]).images == reps[i].images);
    for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(conjugate_reps(reps[i], reps[j]));
  }
  o.limit = 2;
  CHECK(search_permutation_reps(p, o).size() == 2);
}

TEST_CASE("representation h on the Conway fixture") {
  const Presentation p = load_presentation(oracle::fixture("conway.pres"));
  const RepresentationFile rf = load_representation(oracle::fixture("conway_h.rep"), p);
  REQUIRE(rf.perm);
  CHECK(rf.perm->verified);
  SearchOptions o;
  o.degree = 5;
  o.cycle_type = parse_cycle_type("3cycle", 5);
  o.limit = 100;
  const auto reps = search_permutation_reps(p, o);
  CHECK(std::any_of(reps.begin(), reps.end(), [&](const PermutationRep& r) { return conjugate_reps(r, *rf.perm); }));
}

TEST_CASE("matrix representations") {
  IntMatrix m(2, 2);
  m(0, 0) = 2;
  m(1, 1) = 1;
  CHECK_THROWS_AS(MatrixRep(2, {m}), std::invalid_argument);
  m(0, 0) = 1;
  m(0, 1) = 3;
  const MatrixRep r(2, {m});
  CHECK(r.evaluate(FreeWord::generator(0) * FreeWord::generator(0, -1)) == IntMatrix::identity(2));

  PermutationRep unverified{3, {Permutation::identity(3)}, false};
  CHECK_THROWS_AS(perm_to_matrix(unverified), std::invalid_argument);
}

TEST_CASE("evaluate_word is an anti-homomorphism, in both conventions") {
  const Presentation p = load_presentation(oracle::fixture("conway.pres"));
  const RepresentationFile rf = load_representation(oracle::fixture("conway_h.rep"), p);
  const MatrixRep a = perm_to_matrix(*rf.perm, Convention::kAsGiven);
  const MatrixRep b = perm_to_matrix(*rf.perm, Convention::kTransposed);
  std::mt19937 rng(4);
  auto random_word = [&] {
    std::vector<Letter> l;
    for (int i = 0; i < 12; ++i) l.push_back({static_cast<GeneratorId>(rng() % 11), rng() % 2 ? 1 : -1});
    return FreeWord(l);
  };
  for (int k = 0; k < 100; ++k) {
    const FreeWord u = random_word(), v = random_word();
    CHECK(evaluate_word(a, p.xi(), u * v) == evaluate_word(a, p.xi(), v) * evaluate_word(a, p.xi(), u));
    CHECK(evaluate_word(a, p.xi(), u) == evaluate_word(b, p.xi(), u));
  }
}

TEST_CASE("representation files") {
  const Presentation p = parse_presentation("generators: a b\nrelator: a^-1 b a b^-1\n");
  const auto rf = parse_representation("a: (12)\nb: (12)\n", p);
  REQUIRE(rf.perm);
  CHECK(rf.perm->verified);
  const auto bad = parse_representation("degree: 3\na: (12)\nb: (23)\n", p);
  CHECK_FALSE(bad.perm->verified);
  const auto mat = parse_representation("convention: transposed\na: [1 1; 0 1]\nb: [1 0; 0 1]\n", p);
  REQUIRE(mat.matrix);
  CHECK(mat.matrix->convention() == Convention::kTransposed);
  CHECK(parse_representation(to_text(*mat.matrix, p), p).matrix == mat.matrix);
  CHECK_THROWS_AS(parse_representation("a: (12)\n", p), ParseError);
  CHECK_THROWS_AS(parse_representation("c: (12)\n", p), ParseError);
}
