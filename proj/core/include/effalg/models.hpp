#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "effalg/effect_algebra.hpp"
#include "effalg/rational.hpp"

namespace effalg {

// Exact element of Q(i, w) with w = exp(2 pi i / 3), stored as a + b w where a and b are
// Gaussian rationals. Uses w^2 = -1 - w.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(Rational re, Rational im = 0) : ar_(std::move(re)), ai_(std::move(im)) {}
  Cyclotomic(Rational ar, Rational ai, Rational br, Rational bi)
      : ar_(std::move(ar)), ai_(std::move(ai)), br_(std::move(br)), bi_(std::move(bi)) {}

  // (re + i im) * w^k, k taken mod 3.
  static Cyclotomic from_triple(const Rational& re, const Rational& im, int omega_power);
  static Cyclotomic omega() { return Cyclotomic(0, 0, 1, 0); }

  friend Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y);
  friend bool operator==(const Cyclotomic& x, const Cyclotomic& y) = default;
  // Arbitrary but fixed total order, for use as a map key.
  friend bool operator<(const Cyclotomic& x, const Cyclotomic& y);

  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  Rational ar_, ai_, br_, bi_;
};

using CyclotomicVector = std::vector<Cyclotomic>;

struct VerificationResult {
  bool ok = true;
  std::string reason;               // empty when ok
  std::vector<ElementId> witness;   // offending element(s)

  explicit operator bool() const { return ok; }
  static VerificationResult failure(std::string reason, std::vector<ElementId> witness = {});
};

// Elements mapped to vectors (all the same length) with componentwise multiplication.
struct MultiplicativeModel {
  std::vector<CyclotomicVector> assignment;  // indexed by ElementId
};

// For every ordered pair, including 0 and 1: the product lies in the image iff the sum is
// defined, and then it is the image of the sum. The assignment must be injective.
// Throws std::invalid_argument on size or component-count mismatch.
VerificationResult verify_multiplicative(const EffectAlgebra& algebra, const MultiplicativeModel& model);

struct FuzzyAssignment {
  std::vector<RationalVector> assignment;  // indexed by ElementId, entries in [0,1]
};

// 0 -> zeros, 1 -> ones, injective, values in [0,1]. Strict: a sum is defined iff the
// componentwise sum stays <= 1, and then equals the image of the sum. Weak: only
// "defined implies <= 1 with the right image". Throws std::invalid_argument on size or
// component-count mismatch.
VerificationResult verify_fuzzy(const EffectAlgebra& algebra, const FuzzyAssignment& fuzzy, bool weak = false);

// map[x] is the ambient image of sub element x. Checks that 0 and 1 are preserved, the map
// is injective and every defined sum in `sub` is defined in `ambient` with the mapped
// value. Without `weak`, sums defined in the ambient algebra between images must also be
// defined in `sub` (subalgebra rather than weak subalgebra).
VerificationResult verify_embedding(const EffectAlgebra& sub, const EffectAlgebra& ambient,
                                    const std::vector<ElementId>& map, bool weak = false);

struct DimensionBoundResult {
  bool exists = false;
  // True when impossibility was shown by the pigeonhole argument: more than m nontrivial
  // effects summing to 1, each with e + e undefined, need more than m coordinates.
  bool analytic = false;
  std::vector<ElementId> pigeonhole_set;
  std::optional<FuzzyAssignment> witness;
  int max_denominator = 0;
};

// Searches for a strict fuzzy assignment of dimension m. Impossibility comes either from
// the pigeonhole argument or from exhausting states whose values all have denominator
// <= max_denominator; the latter only says no such assignment exists on that grid.
// Throws std::invalid_argument unless 1 <= m <= 3 and max_denominator >= 1.
DimensionBoundResult fuzzy_dimension_search(const EffectAlgebra& algebra, int m, int max_denominator = 12);
bool verify_fuzzy_dimension_bound(const EffectAlgebra& algebra, int m, int max_denominator = 12);

using ComplexMatrix = std::vector<std::vector<std::complex<double>>>;

// Floating-point check of a matrix model: every image is Hermitian with spectrum in
// [0,1], images are pairwise distinct, and for each pair the sum is defined iff
// M_e + M_f <= I, matching the image of the sum entrywise when defined. All comparisons
// use tol. Throws std::invalid_argument on size/dimension mismatch, non-Hermitian input or
// tol <= 0.
VerificationResult verify_quantum_matrices(const EffectAlgebra& algebra, const std::vector<ComplexMatrix>& assignment,
                                           double tol = 1e-9);

}  // namespace effalg
