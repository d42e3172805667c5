#ifndef KDECOMP_CLASSIFY_HPP
#define KDECOMP_CLASSIFY_HPP

#include <optional>
#include <string>

#include "kdecomp/ideal.hpp"

namespace kdecomp {

/// Proper, and a*b in I implies a in I or b in I.
bool is_prime(const Ideal& ideal);

/// Proper, and x*y in I implies x in I or some power of y lies in I.
bool is_primary(const Ideal& ideal);

/// Radical of a primary ideal, with its primality verified on the way out.
/// Throws RadicalNotPrime if `ideal` is primary but the radical fails the
/// primality scan (no such finite commutative semiring instance is known;
/// the check guards the implementation).
Ideal primary_radical(const Ideal& ideal);

/// Is I P-primary, i.e. primary with radical exactly P?
bool is_p_primary(const Ideal& ideal, const Ideal& prime);

/// Proper k-ideal that is not an intersection of two strictly larger
/// k-ideals. Throws NotKIdeal / NotProper when the question does not apply.
bool is_k_irreducible(const Ideal& ideal);

struct IdealClass {
  bool proper = false;
  bool is_k = false;
  bool prime = false;
  bool primary = false;
  SubsetMask radical_bits = 0;
  /// Engaged only when the notion applies (proper k-ideals).
  std::optional<bool> k_irreducible;
};

IdealClass classify_ideal(const Ideal& ideal);

/// Checks that (Q : x) is P-primary for a primary Q with radical P and an
/// element x outside Q, and that the two bracketing laws hold:
/// x in Q implies (Q : x) = R, and x outside the radical implies
/// (Q : x) = Q. Produced for every (Q, x) pair during verification sweeps.
struct ColonPrimaryReport {
  SubsetMask q_bits = 0;
  ElementIndex x = -1;
  SubsetMask colon_bits = 0;
  SubsetMask radical_bits = 0;        // radical of (Q : x)
  SubsetMask expected_radical = 0;    // radical of Q
  bool colon_is_primary = false;
  bool radical_matches = false;
  bool passed = false;
  std::string detail;
};

ColonPrimaryReport colon_primary_report(const Ideal& q, ElementIndex x);

}  // namespace kdecomp

#endif  // KDECOMP_CLASSIFY_HPP
