#ifndef KDECOMP_IDEAL_HPP
#define KDECOMP_IDEAL_HPP

#include <string>
#include <vector>

#include "kdecomp/semiring.hpp"

namespace kdecomp {

/// Does the mask describe an ideal of S (contains 0, closed under addition,
/// absorbs multiplication by every element)?
bool mask_is_ideal(const FiniteSemiring& s, SubsetMask mask);

/// Is the mask a subtractive ideal: an ideal such that whenever x and x+y
/// both lie in it, y does too?
bool mask_is_k_ideal(const FiniteSemiring& s, SubsetMask mask);

/// An ideal of a finite commutative semiring, stored as an element mask.
///
/// The constructor validates the ideal property, so every instance is a
/// genuine ideal of its carrier. Subtractivity is a runtime refinement
/// recorded in is_k(); operations that require a k-ideal check it and
/// throw NotKIdeal.
class Ideal {
 public:
  /// Throws NotAnIdeal (with a witness) if the mask is not an ideal of s.
  Ideal(Semiring carrier, SubsetMask members);

  static Ideal from_elements(Semiring carrier,
                             const std::vector<ElementIndex>& elements);

  const Semiring& carrier() const noexcept { return carrier_; }
  const FiniteSemiring& semiring() const noexcept { return *carrier_; }
  SubsetMask bits() const noexcept { return bits_; }
  bool is_k() const noexcept { return is_k_; }
  bool proper() const noexcept {
    return bits_ != full_mask(carrier_->order());
  }
  bool contains(ElementIndex a) const;
  int count() const noexcept;
  std::vector<ElementIndex> elements() const { return mask_elements(bits_); }
  std::string to_string() const { return mask_to_string(bits_); }

  bool subset_of(const Ideal& other) const;

  friend bool operator==(const Ideal& a, const Ideal& b) {
    a.check_same_carrier(b);
    return a.bits_ == b.bits_;
  }
  friend bool operator!=(const Ideal& a, const Ideal& b) { return !(a == b); }
  /// Orders ideals of one semiring by their mask value (not by inclusion).
  friend bool operator<(const Ideal& a, const Ideal& b) {
    a.check_same_carrier(b);
    return a.bits_ < b.bits_;
  }

 private:
  void check_same_carrier(const Ideal& other) const;

  Semiring carrier_;
  SubsetMask bits_;
  bool is_k_;
};

/// {0}, always an ideal (and in fact always a k-ideal).
Ideal zero_ideal(const Semiring& s);

/// The whole semiring as an ideal.
Ideal unit_ideal(const Semiring& s);

/// Smallest ideal containing the generators: all finite sums of multiples
/// r*g of generators g.
Ideal generated_ideal(const Semiring& s,
                      const std::vector<ElementIndex>& generators);

/// Smallest k-ideal containing I: { x | x + b = c for some b, c in I }.
/// Always contains I and is always a k-ideal; ClosureNotKIdeal is thrown
/// only if that provable fact fails in this implementation.
Ideal k_closure(const Ideal& ideal);

/// { a | a^k lies in I for some 1 <= k <= order }. The exponent bound is
/// sufficient: the power sequence of any element revisits a value within
/// order steps.
Ideal radical(const Ideal& ideal);

/// Elementwise sums { a + b | a in I, b in J }. Always an ideal; not
/// necessarily subtractive even when both inputs are.
Ideal ideal_sum(const Ideal& lhs, const Ideal& rhs);

/// Set intersection. An ideal; subtractive whenever both inputs are.
Ideal ideal_intersection(const Ideal& lhs, const Ideal& rhs);

/// Colon ideal (I : x) = { r | r*x lies in I }.
Ideal colon(const Ideal& ideal, ElementIndex x);

/// The ascending chain (Q : a), (Q : a^2), ... of a k-ideal Q, computed up
/// to and including its first stabilization index m (the least m >= 1 with
/// (Q : a^m) = (Q : a^(m+1))). Stabilization is permanent from m on, and
/// m <= order.
struct ColonChain {
  std::vector<Ideal> links;  // (Q : a^1) .. (Q : a^m)
  int stabilization = 0;     // m
};
ColonChain colon_power_chain(const Ideal& q, ElementIndex a);

/// Proper k-ideals maximal under inclusion among proper k-ideals, in
/// ascending mask order.
std::vector<Ideal> maximal_k_ideals(const Semiring& s);

/// Intersection of all maximal k-ideals containing `ideal`; the whole
/// semiring if none do.
Ideal jacobson_radical(const Ideal& ideal);

/// Jacobson radical of the semiring itself (= jacobson_radical of {0}).
Ideal jacobson_radical(const Semiring& s);

/// All ideals of s, ascending mask order.
std::vector<Ideal> all_ideals(const Semiring& s);

/// All k-ideals of s, ascending mask order.
std::vector<Ideal> all_k_ideals(const Semiring& s);

namespace detail {
/// Exhaustive scan of all 2^(order-1) subsets containing 0.
IdealLattice compute_lattice(const FiniteSemiring& s);
}  // namespace detail

}  // namespace kdecomp

#endif  // KDECOMP_IDEAL_HPP
