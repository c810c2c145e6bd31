#pragma once

// Representations of presented groups: permutation representations found by
// backtracking, and integer matrix representations used to twist chains.
//
// Permutations compose left to right: (a * b)(i) = b(a(i)), so a word
// x1 x2 ... xm maps to "apply x1 first". Matrix representations are right
// representations, rho(g1 g2) = rho(g2) rho(g1); see Convention.

#include "nk/foxcalc.hpp"
#include "nk/matrix.hpp"
#include "nk/presentation.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nk {

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // throws if not a bijection on 0..k-1
  static Permutation identity(std::size_t k);
  // "(253)(14)" with 1-based points; digits may be space separated, "()" is the identity.
  static Permutation parse_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  // Apply *this first, then b.
  Permutation then(const Permutation& b) const;
  Permutation conjugate_by(const Permutation& c) const;  // c^-1 * this * c
  bool is_identity() const;

  // Cycle lengths in decreasing order, fixed points included.
  std::vector<int> cycle_type() const;
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// All permutations of {0..k-1} in lexicographic order of images.
std::vector<Permutation> all_permutations(std::size_t k);

// "3cycle" -> {3,1,...}, "identity", or nontrivial lengths "2,2". Padded to degree k.
std::vector<int> parse_cycle_type(std::string_view text, std::size_t k);

struct PermutationRep {
  std::size_t degree = 0;
  std::vector<Permutation> images;  // indexed by GeneratorId
  bool verified = false;
};

Permutation evaluate_word(const PermutationRep& r, const FreeWord& w);
bool verify_rep(const Presentation& p, const PermutationRep& r);

// Lexicographically least simultaneous conjugate.
PermutationRep canonical_conjugate(const PermutationRep& r);
bool conjugate_reps(const PermutationRep& a, const PermutationRep& b);

struct SearchOptions {
  std::size_t degree = 1;
  std::optional<std::vector<int>> cycle_type;  // all generators in this class
  std::size_t limit = 10;
};

// Homomorphisms to S_k up to simultaneous conjugation, canonical forms in
// increasing order, truncated to `limit`. Every result is verified.
std::vector<PermutationRep> search_permutation_reps(const Presentation& p, const SearchOptions& opt);

// How a right representation is realised from the stored matrices M(s):
//   kAsGiven:    rho(x1...xm) = M(xm) ... M(x1)
//   kTransposed: rho(x1...xm) = (M(x1) ... M(xm))^T
enum class Convention { kAsGiven, kTransposed };

std::string to_string(Convention c);
Convention parse_convention(std::string_view s);

class MatrixRep {
 public:
  MatrixRep() = default;
  // Throws std::invalid_argument unless every matrix is n x n with determinant +-1.
  MatrixRep(std::size_t n, std::vector<IntMatrix> matrices, Convention conv = Convention::kAsGiven);

  static MatrixRep trivial(std::size_t generator_count, std::size_t n = 1);

  std::size_t dimension() const { return n_; }
  std::size_t generator_count() const { return matrices_.size(); }
  Convention convention() const { return conv_; }
  const std::vector<IntMatrix>& matrices() const { return matrices_; }

  // rho(w) over the integers.
  IntMatrix evaluate(const FreeWord& w) const;

  friend bool operator==(const MatrixRep& a, const MatrixRep& b) {
    return a.n_ == b.n_ && a.conv_ == b.conv_ && a.matrices_ == b.matrices_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<IntMatrix> matrices_;
  std::vector<IntMatrix> inverses_;
  Convention conv_ = Convention::kAsGiven;
};

bool verify_rep(const Presentation& p, const MatrixRep& r);

// Permutation matrices, P e_i = e_{sigma(i)}; stored transposed under
// kTransposed so that both conventions give the same rho.
// Throws std::invalid_argument for an unverified input.
MatrixRep perm_to_matrix(const PermutationRep& r, Convention conv = Convention::kAsGiven);

// Representation of p1 # p2 (see connected_sum) from representations agreeing
// on the meridians. Throws std::invalid_argument on mismatch or failed verification.
MatrixRep product_rep(const MatrixRep& r1, const Presentation& p1, const MatrixRep& r2, const Presentation& p2,
                      const Presentation& psum);

// t^{xi(w)} rho(w).
PolyMatrix evaluate_word(const MatrixRep& r, const std::vector<int>& xi, const FreeWord& w);
// Linear extension to the group ring.
PolyMatrix evaluate(const MatrixRep& r, const std::vector<int>& xi, const GroupRingElem& a);

// ---- representation files --------------------------------------------------------

// Either a permutation representation or a matrix representation.
struct RepresentationFile {
  std::optional<PermutationRep> perm;
  std::optional<MatrixRep> matrix;
};

// Lines "sK: (a b c)(d e)" or "sK: [row-major integers]", optional
// "degree: k" and "convention: as-given|transposed". Every generator of p
// must be assigned. Permutation representations are verified on p.
RepresentationFile parse_representation(std::string_view text, const Presentation& p);
RepresentationFile load_representation(const std::string& path, const Presentation& p);
std::string to_text(const PermutationRep& r, const Presentation& p);
std::string to_text(const MatrixRep& r, const Presentation& p);

}  // namespace nk
