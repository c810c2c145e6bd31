#include "nk/alexander.hpp"

#include "nk/linalg.hpp"

namespace nk {

TwistedAlexander twisted_alexander(const TwistedComplex& c, std::optional<std::size_t> drop_gen,
                                   std::optional<std::size_t> drop_rel) {
  if (c.g == 0) throw UndefinedInvariant("presentation has no generators");
  TwistedAlexander a;
  a.drop_gen = drop_gen.value_or(c.g - 1);
  if (a.drop_gen >= c.g) throw std::out_of_range("generator index out of range");
  a.drop_rels = dropped_relators(c, drop_rel);
  const PolyMatrix m = torsion_minor(c, a.drop_gen, a.drop_rels);
  if (!m.is_square())
    throw UndefinedInvariant("minor is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                             "; the relator deficiency is not one per component");
  a.denominator = det(c.generator_block(a.drop_gen));
  if (a.denominator.is_zero()) throw UndefinedInvariant("denominator vanishes for this generator");
  a.numerator = det(m);
  if (a.numerator.is_zero())
    throw UndefinedInvariant("twisted Alexander undefined (complex not acyclic over Q(t)); use the Novikov profile");
  return a;
}

TwistedAlexander twisted_alexander(const Presentation& p, const MatrixRep& r, std::optional<std::size_t> drop_gen,
                                   std::optional<std::size_t> drop_rel) {
  return twisted_alexander(build_complex(p, r), drop_gen, drop_rel);
}

bool is_monic(const TwistedAlexander& a) { return is_monic(a.numerator) && is_monic(a.denominator); }

bool same_invariant(const TwistedAlexander& a, const TwistedAlexander& b) {
  return equal_up_to_unit(a.numerator * b.denominator, b.numerator * a.denominator);
}

bool tau_product_check(const TwistedAlexander& a1, const TwistedAlexander& a2, const TwistedAlexander& a12) {
  return equal_up_to_unit(a12.numerator * a1.denominator * a2.denominator,
                          a1.numerator * a2.numerator * a12.denominator * a12.denominator);
}

std::string display(const TwistedAlexander& a) {
  return "(" + normalized(a.numerator).to_string() + ") / (" + normalized(a.denominator).to_string() + ")";
}

nlohmann::json to_json(const TwistedAlexander& a) {
  const bool monic = is_monic(a);
  return {
      {"numerator", to_json(a.numerator)},
      {"denominator", to_json(a.denominator)},
      {"display", display(a)},
      {"drop_generator", a.drop_gen},
      {"drop_relators", a.drop_rels},
      {"monic", monic},
      {"fibring", monic ? "no obstruction" : "not fibred"},
  };
}

}  // namespace nk
