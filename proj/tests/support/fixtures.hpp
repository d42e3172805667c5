#ifndef KDECOMP_TESTS_FIXTURES_HPP
#define KDECOMP_TESTS_FIXTURES_HPP

#include "kdecomp/semiring.hpp"

namespace fixtures {

/// Two-element semiring with idempotent addition (1 + 1 = 1).
inline kdecomp::Semiring boolean() {
  return kdecomp::FiniteSemiring::validate("B", {{0, 1}, {1, 1}},
                                           {{0, 0}, {0, 1}});
}

/// The two-element field viewed as a semiring (1 + 1 = 0).
inline kdecomp::Semiring z2() {
  return kdecomp::FiniteSemiring::validate("Z2", {{0, 1}, {1, 0}},
                                           {{0, 0}, {0, 1}});
}

/// Three-element chain with join as addition and meet as multiplication.
/// Index convention pins 0 = bottom (additive identity) and 1 = top
/// (multiplicative identity), so the middle element gets index 2 and the
/// chain order is 0 < 2 < 1.
inline kdecomp::Semiring chain3() {
  return kdecomp::FiniteSemiring::validate(
      "C3", {{0, 1, 2}, {1, 1, 1}, {2, 1, 2}},
      {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}});
}

/// Integers modulo 4 (a ring, hence in particular a semiring).
inline kdecomp::Semiring z4() {
  kdecomp::Table add(4, std::vector<int>(4));
  kdecomp::Table mul(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      add[i][j] = (i + j) % 4;
      mul[i][j] = (i * j) % 4;
    }
  }
  return kdecomp::FiniteSemiring::validate("Z4", add, mul);
}

/// Direct product of the idempotent two-element semiring with itself.
/// Labels: 0 = (0,0), 1 = (1,1), 2 = (0,1), 3 = (1,0); addition and
/// multiplication are componentwise or / and.
inline kdecomp::Semiring bxb() {
  return kdecomp::FiniteSemiring::validate(
      "BxB",
      {{0, 1, 2, 3}, {1, 1, 1, 1}, {2, 1, 2, 1}, {3, 1, 1, 3}},
      {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 2, 0}, {0, 3, 0, 3}});
}

/// Natural numbers saturated at 2: {0, 1, "2 or more"} with capped
/// addition and multiplication. Its ideal {0,2} is not subtractive
/// (1 + 2 = 2), which makes this the go-to fixture for k-closure.
inline kdecomp::Semiring sat3() {
  return kdecomp::FiniteSemiring::validate(
      "N-sat3", {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}},
      {{0, 0, 0}, {0, 1, 2}, {0, 2, 2}});
}

}  // namespace fixtures

#endif  // KDECOMP_TESTS_FIXTURES_HPP
