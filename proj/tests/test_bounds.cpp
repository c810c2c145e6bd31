#include "nk/bounds.hpp"

#include <doctest.h>

using namespace nk;

namespace {

NovikovProfile profile(int b1, int q1, std::optional<int> exact = std::nullopt) {
  NovikovProfile p;
  p.b1 = p.b2 = b1;
  p.q1_lower = q1;
  p.q1_exact = exact;
  return p;
}

}  // namespace

TEST_CASE("lower bound formula") {
  MNBound b = mn_lower_bound(profile(0, 1), 5);
  CHECK(b.m1_lb == 1);
  CHECK(b.m2_lb == 1);
  CHECK(b.mn_lb == 2);
  CHECK(b.raw == mpq_class(2, 5));
  b = mn_lower_bound(profile(3, 0), 1);
  CHECK(b.mn_lb == 6);
  CHECK(mn_lower_bound(profile(0, 0), 1).mn_lb == 0);
  CHECK_THROWS(mn_lower_bound(profile(0, 0), 0));
}

TEST_CASE("scaling") {
  const NovikovProfile p = profile(1, 2, 2);
  CHECK(to_json(connected_sum_scale(p, 1)) == to_json(p));
  const NovikovProfile s6 = connected_sum_scale(p, 6);
  CHECK(s6.b1 == 6);
  CHECK(s6.q1_lower == 12);
  CHECK(s6.q1_exact == 12);
  const NovikovProfile s23 = connected_sum_scale(connected_sum_scale(p, 2), 3);
  CHECK(to_json(s23)["b"] == to_json(s6)["b"]);
  CHECK(to_json(s23)["q_lower"] == to_json(s6)["q_lower"]);
  CHECK(to_json(s23)["certificates"] == to_json(s6)["certificates"]);
  CHECK_THROWS_AS(connected_sum_scale(p, 0), std::invalid_argument);
  const MNBound b = mn_lower_bound(connected_sum_scale(profile(0, 1), 10), 5);
  CHECK(b.mn_lb == 4);
  CHECK(b.raw == 4);
}

TEST_CASE("upper bounds and brackets") {
  const UpperBound u = parse_upper_bound("20 (handle construction)");
  CHECK(u.value == 20);
  CHECK(u.note == "handle construction");
  CHECK_THROWS(parse_upper_bound("about two"));
  const MNBound b = with_upper(mn_lower_bound(profile(0, 1), 5), parse_upper_bound("1"));
  CHECK(b.contradiction);
  const auto j = to_json(with_upper(mn_lower_bound(profile(0, 1), 5), u));
  CHECK(j["bracket"] == nlohmann::json::array({2, 20}));
}

TEST_CASE("best bound over representations") {
  Report r;
  CHECK(best_bound(r).mn_lb == 0);
  for (int q : {0, 1, 0}) {
    ReportEntry e;
    e.profile = profile(0, q);
    e.bound = mn_lower_bound(e.profile, 5);
    r.entries.push_back(e);
  }
  r.upper = parse_upper_bound("2 (construction)");
  CHECK(best_bound(r).mn_lb == 2);
  CHECK(to_json(r)["conclusion"] == "MN = 2");
  CHECK(to_text(r).find("bracket: [2, 2]") != std::string::npos);
}
