#pragma once

// Twisted Alexander invariant as a Reidemeister torsion quotient
//   tau = det(Jacobian minor) / det(rho(s_k) t^xi - I),
// kept as an exact numerator/denominator pair, defined up to +-t^k.

#include "nk/novikov.hpp"

#include <optional>
#include <stdexcept>

namespace nk {

// The complex is not acyclic over Q(t), or the chosen generator block is singular.
class UndefinedInvariant : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TwistedAlexander {
  LaurentPoly numerator;
  LaurentPoly denominator;
  std::size_t drop_gen = 0;
  std::vector<std::size_t> drop_rels;
};

// Defaults: last generator, the presentation's redundant relators (last relator
// for a knot diagram). drop_rel replaces the last redundant relator.
TwistedAlexander twisted_alexander(const TwistedComplex& c, std::optional<std::size_t> drop_gen = std::nullopt,
                                   std::optional<std::size_t> drop_rel = std::nullopt);
TwistedAlexander twisted_alexander(const Presentation& p, const MatrixRep& r,
                                   std::optional<std::size_t> drop_gen = std::nullopt,
                                   std::optional<std::size_t> drop_rel = std::nullopt);

// Lowest coefficients of numerator and denominator are both +-1.
bool is_monic(const TwistedAlexander& a);

// a.num * b.den == b.num * a.den up to +-t^k.
bool same_invariant(const TwistedAlexander& a, const TwistedAlexander& b);

// Multiplicativity under connected sum. The summands are glued along an
// annulus around the meridian, whose torsion is 1 / det(rho(mu) t^xi - I); for
// knot diagrams every generator is a meridian, so that determinant is den12 and
//   num12 * den1 * den2 == num1 * num2 * den12 * den12   up to +-t^k,
// i.e. num12 == num1 * num2 once the common denominators cancel.
bool tau_product_check(const TwistedAlexander& a1, const TwistedAlexander& a2, const TwistedAlexander& a12);

// Normalized display form of numerator / denominator.
std::string display(const TwistedAlexander& a);

nlohmann::json to_json(const TwistedAlexander& a);

}  // namespace nk
