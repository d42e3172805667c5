#ifndef KDECOMP_DECOMPOSE_HPP
#define KDECOMP_DECOMPOSE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "kdecomp/classify.hpp"
#include "kdecomp/ideal.hpp"

namespace kdecomp {

/// One node split performed by the irreducible-decomposition recursion.
struct SplitStep {
  SubsetMask node = 0;
  SubsetMask left = 0;
  SubsetMask right = 0;
};

struct DecompositionResult {
  SubsetMask input = 0;
  std::vector<Ideal> components;  // primary k-ideals, reduced
  std::vector<Ideal> radicals;    // parallel to components, each prime
  bool reduced = false;
  std::vector<SplitStep> provenance;  // splits of the irreducible phase
};

struct AssociatedPrime {
  Ideal prime;
  ElementIndex witness;  // smallest x with radical(colon(I, x)) = prime
};

/// Splits a proper k-ideal into k-irreducible k-ideals whose intersection
/// is the input. Split choice is deterministic: among pairs (J, K) of
/// k-ideals strictly containing the node with J cap K = node, minimize
/// |J| + |K|, then take the lexicographically least (J, K) mask pair.
std::vector<Ideal> decompose_irreducible(const Ideal& ideal);

/// Def-of-reduced cleanup: (a) repeatedly delete the lowest-index component
/// containing the intersection of the others, (b) merge components sharing
/// a radical into their intersection, (c) re-verify each merged component
/// is primary with the shared radical (GroupNotPrimary otherwise), looping
/// until stable. Preserves the overall intersection and first-occurrence
/// order.
std::vector<Ideal> reduce_components(const std::vector<Ideal>& components);

/// Full pipeline: irreducible decomposition, primality verification of
/// every component (TheoremViolation with a witness if one fails), then
/// reduction. Every component of the result is a primary k-ideal, radicals
/// are pairwise distinct primes, no component is redundant, and the
/// intersection is the input.
DecompositionResult primary_decomposition(const Ideal& ideal);

/// The primes among { radical(colon(I, x)) : x in R }, each with its
/// smallest witness, in ascending mask order. Independent of any
/// particular decomposition of I.
std::vector<AssociatedPrime> associated_primes(const Ideal& ideal);

/// Exhaustive oracle: every subset of the primary k-ideals containing I
/// whose intersection is I and which satisfies the reduced conditions
/// (pairwise distinct radicals, no redundant member). Subsets are scanned
/// in ascending bitmask order over the candidate pool (itself in ascending
/// ideal-mask order), so the output is deterministic.
///
/// max_size < 0 means "no size bound". Throws SearchSpaceTooLarge when the
/// pool would require more than `budget` subset tests.
std::vector<std::vector<Ideal>> brute_force_decompositions(
    const Ideal& ideal, int max_size = -1,
    std::uint64_t budget = std::uint64_t{1} << 20);

struct UniquenessReport {
  SubsetMask input = 0;
  std::vector<std::vector<SubsetMask>> decompositions;  // component masks
  std::vector<std::vector<SubsetMask>> radical_sets;    // sorted, parallel
  std::vector<SubsetMask> associated;                   // sorted prime masks
  bool all_radical_sets_equal = false;
  bool matches_associated_primes = false;
  bool passed = false;
  std::string detail;
};

/// Checks that every reduced decomposition found by the brute-force oracle
/// has the same radical set and that it equals the associated primes.
UniquenessReport verify_uniqueness(const Ideal& ideal);

/// One replayed identity of the proof that k-irreducible k-ideals are
/// primary. Rigorous steps throw StepFailed when violated (they hold by
/// proofs valid in any finite commutative semiring); heuristic steps are
/// claims the source argument makes without proof, so a failure is
/// recorded in `held` and reported, never thrown.
struct TraceStep {
  std::string id;
  bool rigorous = false;
  bool held = false;
  std::string detail;
};

struct IrreduciblePrimaryTrace {
  SubsetMask q = 0;
  ElementIndex a = -1;
  ElementIndex b = -1;
  int m = 0;                     // stabilization index of (Q : a^i)
  std::vector<SubsetMask> chain; // (Q : a^1) .. (Q : a^m)
  SubsetMask i_sum = 0;          // <a^m> + Q
  SubsetMask j_sum = 0;          // <b> + Q
  SubsetMask i_closure = 0;
  SubsetMask j_closure = 0;
  SubsetMask jac_q = 0;
  SubsetMask jac_i = 0;          // Jac of k_closure(<a^m> + Q)
  SubsetMask jac_j = 0;
  SubsetMask jac_r = 0;          // Jac of the whole semiring
  bool concluded = false;        // a^m landed in Q
  std::vector<TraceStep> steps;
};

/// Replays, on one concrete (Q, a, b) with ab in Q and b outside Q, the
/// argument that a k-irreducible k-ideal is primary: builds the colon
/// power chain, the ideals <a^m> + Q and <b> + Q, their k-closures, and
/// the Jacobson-radical comparison, recording every intermediate set and
/// whether each claimed identity held. The conclusion a^m in Q is
/// rigorous; failures of it throw StepFailed.
IrreduciblePrimaryTrace irreducible_primary_trace(const Ideal& q,
                                                  ElementIndex a,
                                                  ElementIndex b);

}  // namespace kdecomp

#endif  // KDECOMP_DECOMPOSE_HPP
