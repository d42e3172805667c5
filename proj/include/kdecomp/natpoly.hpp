#ifndef KDECOMP_NATPOLY_HPP
#define KDECOMP_NATPOLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kdecomp/errors.hpp"

namespace kdecomp {

/// Polynomial over the nonnegative integers, coefficients indexed by
/// degree, normalized (no trailing zeros; the zero polynomial has no
/// coefficients). All arithmetic is exact and overflow-checked.
class NatPoly {
 public:
  NatPoly() = default;
  explicit NatPoly(std::vector<std::uint64_t> coefficients);
  static NatPoly monomial(std::uint64_t coefficient, int degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept {
    return static_cast<int>(coeffs_.size()) - 1;  // -1 for zero
  }
  std::uint64_t coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[i] : 0;
  }
  const std::vector<std::uint64_t>& coeffs() const noexcept {
    return coeffs_;
  }

  /// Ascending powers, e.g. "2 + 9x + 5x^2"; "0" for the zero polynomial.
  std::string to_string() const;

  friend bool operator==(const NatPoly& a, const NatPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const NatPoly& a, const NatPoly& b) {
    return !(a == b);
  }

 private:
  std::vector<std::uint64_t> coeffs_;
};

NatPoly poly_add(const NatPoly& f, const NatPoly& g);
NatPoly poly_mul(const NatPoly& f, const NatPoly& g);

/// Cofactor h with f = g*h and h over the nonnegative integers, if it
/// exists. Exact integer-polynomial division: ascending-power when g has a
/// nonzero constant term, descending otherwise; membership fails when a
/// division step is inexact, a forced coefficient is negative, or a
/// remainder survives. Throws ZeroDivisor when g = 0.
std::optional<NatPoly> principal_membership(const NatPoly& f,
                                            const NatPoly& g);

/// h with f + h = g or g + h = f, if either exists (exactly when one
/// polynomial dominates the other coefficientwise).
std::optional<NatPoly> yoked_pair_check(const NatPoly& f, const NatPoly& g);

/// Machine-checked certificate that the principal ideal <g> with g = 1+x
/// is not subtractive: u = g^3 and v = 3x*g lie in <g>, u = w + v with
/// w = 1 + x^3, yet w has no cofactor. validate() recomputes every claim
/// from scratch.
struct PrincipalNotKCertificate {
  NatPoly g;           // 1 + x
  NatPoly u;           // g^3
  NatPoly v;           // 3x * g
  NatPoly w;           // 1 + x^3
  NatPoly u_cofactor;  // (1 + x)^2
  NatPoly v_cofactor;  // 3x

  /// True iff u = g*u_cofactor, v = g*v_cofactor, u = w + v, and w is not
  /// a multiple of g. On failure `why` (when given) names the first
  /// violated claim.
  bool validate(std::string* why = nullptr) const;
};

PrincipalNotKCertificate principal_not_k_witness();

/// Bounded verification that the multiples of a are subtractive in the
/// natural numbers: for all x, y <= bound, a | x+y and a | x force a | y.
struct BoundedSubtractivityReport {
  std::uint64_t a = 0;
  std::uint64_t bound = 0;
  std::uint64_t pairs_checked = 0;
  bool passed = false;
  std::uint64_t counterexample_x = 0;  // meaningful only when !passed
  std::uint64_t counterexample_y = 0;
};

/// Requires a >= 1 and bound >= a (InputError otherwise).
BoundedSubtractivityReport principal_k_check(std::uint64_t a,
                                             std::uint64_t bound);

/// Certificate that the multiples of a and of b are each subtractive but
/// their sum S = {ia + jb} is not: x in S, y outside S, x + y in S.
/// Membership in S is decided by direct search below (a-1)(b-1) and is
/// automatic at or above it.
struct SumNotKCertificate {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t x = 0;      // member
  std::uint64_t y = 0;      // smallest positive non-member
  std::uint64_t x_i = 0, x_j = 0;      // x = i*a + j*b
  std::uint64_t sum_i = 0, sum_j = 0;  // x + y = i*a + j*b

  /// Recomputes the memberships, the non-membership scan for y, and the
  /// bounded subtractivity of both generators.
  bool validate(std::string* why = nullptr) const;
};

/// Requires a, b >= 2 (InputError) and coprime (NotCoprime).
SumNotKCertificate sum_not_k_witness(std::uint64_t a = 2,
                                     std::uint64_t b = 3);

}  // namespace kdecomp

#endif  // KDECOMP_NATPOLY_HPP
