#ifndef KDECOMP_ENUMERATE_HPP
#define KDECOMP_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "kdecomp/semiring.hpp"

namespace kdecomp {

struct EnumerationOptions {
  bool up_to_iso = false;
  /// Lifts the order <= 4 exhaustive-mode cap (orders 5+ are a deliberate
  /// excursion; the hard table-format cap of 16 still applies).
  bool allow_large = false;
};

/// Streams every commutative semiring with identity of the given order,
/// exactly once (once per isomorphism class when up_to_iso), in ascending
/// lexicographic order of the flattened (add, mul) table pair. Emitted
/// semirings are named "<order>_<sequence>" with the sequence counting
/// emitted structures from 0.
///
/// Search: backtracking over the addition upper triangle (commutative
/// monoid with identity 0, associativity pruned on partial tables), then
/// over the multiplication upper triangle (identity 1, absorbing 0,
/// associativity and distributivity pruned incrementally).
void enumerate_semirings(int order, const EnumerationOptions& options,
                         const std::function<void(const Semiring&)>& sink);

std::vector<Semiring> enumerate_semirings(
    int order, const EnumerationOptions& options = {});

/// Isomorphism class via explicit relabeling: the lexicographically least
/// flattened (add, mul) pair over all permutations of indices fixing 0
/// and 1.
struct IsoClass {
  std::vector<std::uint8_t> canonical_add;
  std::vector<std::uint8_t> canonical_mul;
  Semiring representative;  // semiring with the canonical tables
};

IsoClass canonicalize(const Semiring& s);

}  // namespace kdecomp

#endif  // KDECOMP_ENUMERATE_HPP
