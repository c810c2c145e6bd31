#pragma once

// Twisted Novikov chain complex C0 <- C1 <- C2 of a presentation 2-complex
// and the homology numbers b_i (ranks) and q_i (torsion numbers) over Z((t)).
//
// Orientation: d1 is n x (n g), block j = t^{xi(s_j)} rho(s_j) - I.
// d2 is (n g) x (n r), block (j, i) = rho(d r_i / d s_j) twisted by t^xi.
// With a right representation this gives d1 * d2 = 0.

#include "nk/laurent.hpp"
#include "nk/matrix.hpp"
#include "nk/presentation.hpp"
#include "nk/reps.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nk {

// d1 * d2 != 0: the conventions are inconsistent somewhere.
class ChainLawError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct TwistedComplex {
  std::size_t n = 0;  // representation dimension
  std::size_t g = 0;  // generators
  std::size_t r = 0;  // relators
  PolyMatrix d1;
  PolyMatrix d2;
  std::vector<std::size_t> redundant;  // relators implied by the others

  PolyMatrix generator_block(std::size_t j) const { return d1.block(0, j * n, n, n); }
};

// Throws std::invalid_argument if r does not satisfy the relators, ChainLawError on d1 d2 != 0.
TwistedComplex build_complex(const Presentation& p, const MatrixRep& r);

struct EpiWitness {
  bool epi = false;
  std::optional<std::size_t> generator;  // block with a Novikov-unit determinant (last one found)
  LaurentPoly determinant;
};
EpiWitness d1_epi_check(const TwistedComplex& c);

// Presentation matrix of H1: d2 with the block row of generator `gen` removed.
// Valid when that generator's d1 block is a Novikov unit.
PolyMatrix homology_presentation(const TwistedComplex& c, std::size_t gen);

// Relator blocks dropped for the square torsion minor: the redundant set, with
// its last entry replaced by `drop_rel` when given.
std::vector<std::size_t> dropped_relators(const TwistedComplex& c, std::optional<std::size_t> drop_rel);

// homology_presentation with the dropped relator block columns removed.
PolyMatrix torsion_minor(const TwistedComplex& c, std::size_t gen, const std::vector<std::size_t>& dropped);

enum class CertificateKind { kAcyclic, kTorsionNonUnit, kModEllFitting, kUnitPivotReduction, kScaled };
std::string to_string(CertificateKind k);
CertificateKind parse_certificate_kind(const std::string& s);

struct Certificate {
  CertificateKind kind = CertificateKind::kAcyclic;
  std::size_t generator = 0;                   // removed generator block
  std::vector<std::size_t> dropped_relators;   // acyclic / torsion-non-unit
  std::optional<LaurentPoly> polynomial;       // minor determinant
  std::uint64_t prime = 0;                     // mod-ell-fitting
  std::size_t rows = 0;                        // rows of the H1 presentation matrix
  std::size_t rank_mod = 0;
  std::size_t b1 = 0;
  std::vector<LaurentPoly> diagonal;           // unit-pivot-reduction: non-unit survivors
  std::size_t free_rank = 0;                   // unit-pivot-reduction: zero rows left
  std::size_t pivots = 0;
  bool diagonalized = false;
  std::size_t scale = 1;                       // scaled: copies
  int q_lower = 0;                             // bound this certificate implies for q1
  std::optional<int> q_exact;
};

struct NovikovProfile {
  std::size_t n = 0;
  int b0 = 0, b1 = 0, b2 = 0;
  int q1_lower = 0;
  std::optional<int> q1_exact;
  bool d1_epi = false;
  bool euler_consistent = true;  // b2 computed from the complex agrees with b1
  std::vector<Certificate> certificates;
  std::vector<std::string> notes;
};

struct ProfileOptions {
  std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
  std::optional<std::size_t> drop_gen;  // 0-based
  std::optional<std::size_t> drop_rel;  // 0-based
  bool reduction = true;
  int reduction_span_limit = 400;  // give up once an entry spans more degrees
};

NovikovProfile compute_profile(const TwistedComplex& c, const ProfileOptions& opt = {});

// Recomputes the certificate from the complex.
bool verify_certificate(const Certificate& cert, const TwistedComplex& c);

// Unit-pivot reduction of a presentation matrix: rows are generators of the
// module, columns relations. Pivots through Novikov units and drops them.
struct PivotReduction {
  PolyMatrix remainder;
  std::size_t pivots = 0;
  bool aborted = false;
};
PivotReduction unit_pivot_reduce(PolyMatrix a, int span_limit);

// ---- JSON ----------------------------------------------------------------------------

nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);
nlohmann::json to_json(const NovikovProfile& p);
NovikovProfile profile_from_json(const nlohmann::json& j);

}  // namespace nk
