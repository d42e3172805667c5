#ifndef KDECOMP_SEMIRING_HPP
#define KDECOMP_SEMIRING_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "kdecomp/errors.hpp"

namespace kdecomp {

/// Elements of a finite semiring are their indices into the Cayley tables.
/// Index 0 is always the additive identity, index 1 the multiplicative
/// identity.
using ElementIndex = int;

/// A subset of a semiring of order <= 16, one bit per element.
using SubsetMask = std::uint32_t;

/// Cayley table as given by callers (row-major, rows of equal length).
using Table = std::vector<std::vector<int>>;

class FiniteSemiring;

/// Shared immutable handle; every ideal keeps its carrier alive through one
/// of these.
using Semiring = std::shared_ptr<const FiniteSemiring>;

/// Structural properties determined by exhaustive scan of the tables.
struct StructuralFlags {
  bool additively_cancellative = false;  // a+x = a+y implies x = y
  bool yoked = false;       // for all a,b some r has a+r = b or b+r = a
  bool zerosumfree = false; // a+b = 0 implies a = b = 0
  bool is_ring = false;     // every element has an additive inverse
};

/// Precomputed ideal lattice of a semiring, stored as element masks in
/// ascending mask order.
struct IdealLattice {
  std::vector<SubsetMask> ideals;
  std::vector<SubsetMask> k_ideals;
  std::vector<SubsetMask> maximal_k_ideals;  // maximal among proper k-ideals
};

/// A finite commutative semiring with identity, represented by explicit
/// addition and multiplication tables over {0, ..., n-1}.
///
/// Instances are immutable and always satisfy all axioms: the only way to
/// obtain one is through validate(), which checks every axiom exhaustively
/// and throws on the first failure.
class FiniteSemiring {
 public:
  static constexpr int kMaxOrder = 16;

  /// Checks the tables exhaustively and returns a validated instance.
  ///
  /// Checks run in a fixed order and the first failure is reported:
  /// table shape and entry range (InvalidTables), additive identity,
  /// additive commutativity, additive associativity, multiplicative
  /// identity, multiplicative associativity (all AxiomViolation),
  /// multiplicative commutativity (NotCommutative), distributivity and
  /// zero absorption (AxiomViolation). The convention 0 = additive
  /// identity != multiplicative identity = 1 makes 0 != 1 automatic.
  static Semiring validate(std::string name, const Table& add,
                           const Table& mul);

  ~FiniteSemiring();

  int order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }

  ElementIndex add(ElementIndex a, ElementIndex b) const {
    check_index(a);
    check_index(b);
    return add_[static_cast<std::size_t>(a) * order_ + b];
  }

  ElementIndex mul(ElementIndex a, ElementIndex b) const {
    check_index(a);
    check_index(b);
    return mul_[static_cast<std::size_t>(a) * order_ + b];
  }

  /// a^k for k >= 1 (a^1 = a).
  ElementIndex pow(ElementIndex a, int k) const;

  /// Flattened row-major tables (entries are valid element indices).
  const std::vector<std::uint8_t>& add_table() const noexcept { return add_; }
  const std::vector<std::uint8_t>& mul_table() const noexcept { return mul_; }

  /// Exhaustively determined structural properties (computed once, cached).
  const StructuralFlags& flags() const;

  /// Complete lattice of ideals and k-ideals (computed once, cached).
  const IdealLattice& lattice() const;

  /// FNV-1a digest of (order, add table, mul table); name excluded.
  std::uint64_t structure_hash() const noexcept { return hash_; }

  /// Same order and identical tables (names may differ).
  bool same_structure(const FiniteSemiring& other) const noexcept {
    return order_ == other.order_ && add_ == other.add_ && mul_ == other.mul_;
  }

  FiniteSemiring(const FiniteSemiring&) = delete;
  FiniteSemiring& operator=(const FiniteSemiring&) = delete;

 private:
  FiniteSemiring(std::string name, int order, std::vector<std::uint8_t> add,
                 std::vector<std::uint8_t> mul);

  void check_index(ElementIndex a) const {
    if (a < 0 || a >= order_) {
      throw IndexOutOfRange("element index " + std::to_string(a) +
                            " out of range for semiring of order " +
                            std::to_string(order_));
    }
  }

  std::string name_;
  int order_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::uint64_t hash_;

  mutable std::once_flag flags_once_;
  mutable StructuralFlags flags_cache_;
  mutable std::once_flag lattice_once_;
  mutable std::unique_ptr<IdealLattice> lattice_cache_;
};

/// All elements of S as a mask: bits 0..order-1 set.
inline SubsetMask full_mask(int order) {
  return (order >= 32) ? ~SubsetMask{0} : ((SubsetMask{1} << order) - 1);
}

/// Renders a mask as "{0,2,3}" (ascending element order, no spaces).
std::string mask_to_string(SubsetMask mask);

/// Elements of a mask in ascending order.
std::vector<ElementIndex> mask_elements(SubsetMask mask);

}  // namespace kdecomp

#endif  // KDECOMP_SEMIRING_HPP
