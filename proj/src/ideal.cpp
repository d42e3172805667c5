#include "kdecomp/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace kdecomp {

namespace {

inline bool has(SubsetMask m, int i) { return (m >> i) & 1u; }

/// Returns a witness description for why mask is not an ideal, or an empty
/// string if it is one.
std::string ideal_defect(const FiniteSemiring& s, SubsetMask mask) {
  const int n = s.order();
  if (mask & ~full_mask(n)) {
    return "mask has bits outside the carrier";
  }
  if (!has(mask, 0)) {
    return "does not contain 0";
  }
  for (int a = 0; a < n; ++a) {
    if (!has(mask, a)) continue;
    for (int b = 0; b < n; ++b) {
      if (!has(mask, b)) continue;
      int sum = s.add(a, b);
      if (!has(mask, sum)) {
        return "not closed under addition: " + std::to_string(a) + "+" +
               std::to_string(b) + "=" + std::to_string(sum) +
               " is outside";
      }
    }
    for (int r = 0; r < n; ++r) {
      int prod = s.mul(r, a);
      if (!has(mask, prod)) {
        return "does not absorb multiplication: " + std::to_string(r) + "*" +
               std::to_string(a) + "=" + std::to_string(prod) +
               " is outside";
      }
    }
  }
  return {};
}

}  // namespace

bool mask_is_ideal(const FiniteSemiring& s, SubsetMask mask) {
  return ideal_defect(s, mask).empty();
}

bool mask_is_k_ideal(const FiniteSemiring& s, SubsetMask mask) {
  if (!mask_is_ideal(s, mask)) return false;
  const int n = s.order();
  for (int x = 0; x < n; ++x) {
    if (!has(mask, x)) continue;
    for (int y = 0; y < n; ++y) {
      if (has(mask, y)) continue;
      if (has(mask, s.add(x, y))) return false;
    }
  }
  return true;
}

Ideal::Ideal(Semiring carrier, SubsetMask members)
    : carrier_(std::move(carrier)), bits_(members) {
  if (!carrier_) {
    throw std::invalid_argument("Ideal requires a non-null carrier");
  }
  std::string defect = ideal_defect(*carrier_, bits_);
  if (!defect.empty()) {
    throw NotAnIdeal("subset " + mask_to_string(bits_) + " of " +
                     carrier_->name() + " is not an ideal: " + defect);
  }
  is_k_ = mask_is_k_ideal(*carrier_, bits_);
}

Ideal Ideal::from_elements(Semiring carrier,
                           const std::vector<ElementIndex>& elements) {
  SubsetMask m = 0;
  int order = carrier ? carrier->order() : 0;
  for (ElementIndex e : elements) {
    if (e < 0 || e >= order) {
      throw IndexOutOfRange("element " + std::to_string(e) +
                            " out of range for semiring of order " +
                            std::to_string(order));
    }
    m |= SubsetMask{1} << e;
  }
  return Ideal(std::move(carrier), m);
}

bool Ideal::contains(ElementIndex a) const {
  if (a < 0 || a >= carrier_->order()) {
    throw IndexOutOfRange("element " + std::to_string(a) +
                          " out of range for semiring of order " +
                          std::to_string(carrier_->order()));
  }
  return has(bits_, a);
}

int Ideal::count() const noexcept {
  return static_cast<int>(__builtin_popcount(bits_));
}

bool Ideal::subset_of(const Ideal& other) const {
  check_same_carrier(other);
  return (bits_ & ~other.bits_) == 0;
}

void Ideal::check_same_carrier(const Ideal& other) const {
  if (carrier_.get() != other.carrier_.get() &&
      !carrier_->same_structure(*other.carrier_)) {
    throw CarrierMismatch("ideals of different semirings (" +
                          carrier_->name() + " vs " + other.carrier_->name() +
                          ") cannot be combined");
  }
}

Ideal zero_ideal(const Semiring& s) { return Ideal(s, SubsetMask{1}); }

Ideal unit_ideal(const Semiring& s) { return Ideal(s, full_mask(s->order())); }

Ideal generated_ideal(const Semiring& s,
                      const std::vector<ElementIndex>& generators) {
  const int n = s->order();
  SubsetMask m = SubsetMask{1};  // 0 is the empty sum
  for (ElementIndex g : generators) {
    if (g < 0 || g >= n) {
      throw IndexOutOfRange("generator " + std::to_string(g) +
                            " out of range for semiring of order " +
                            std::to_string(n));
    }
    for (int r = 0; r < n; ++r) {
      m |= SubsetMask{1} << s->mul(r, g);
    }
  }
  // Close under addition; multiples of generators are already absorbing,
  // and sums of absorbing elements stay absorbing by distributivity.
  bool changed = true;
  while (changed) {
    changed = false;
    SubsetMask next = m;
    for (int a = 0; a < n; ++a) {
      if (!has(m, a)) continue;
      for (int b = a; b < n; ++b) {
        if (!has(m, b)) continue;
        next |= SubsetMask{1} << s->add(a, b);
      }
    }
    if (next != m) {
      m = next;
      changed = true;
    }
  }
  return Ideal(s, m);
}

Ideal k_closure(const Ideal& ideal) {
  const FiniteSemiring& s = ideal.semiring();
  const int n = s.order();
  const SubsetMask in = ideal.bits();
  SubsetMask out = 0;
  for (int x = 0; x < n; ++x) {
    bool member = false;
    for (int b = 0; b < n && !member; ++b) {
      if (!has(in, b)) continue;
      if (has(in, s.add(x, b))) member = true;
    }
    if (member) out |= SubsetMask{1} << x;
  }
  if ((in & ~out) != 0) {
    throw ClosureNotKIdeal("k-closure of " + ideal.to_string() +
                           " lost elements of the input: got " +
                           mask_to_string(out));
  }
  Ideal closed(ideal.carrier(), out);
  if (!closed.is_k()) {
    throw ClosureNotKIdeal("k-closure of " + ideal.to_string() +
                           " produced the non-subtractive set " +
                           closed.to_string());
  }
  return closed;
}

Ideal radical(const Ideal& ideal) {
  const FiniteSemiring& s = ideal.semiring();
  const int n = s.order();
  SubsetMask out = 0;
  for (int a = 0; a < n; ++a) {
    ElementIndex p = a;
    for (int k = 1; k <= n; ++k) {
      if (ideal.contains(p)) {
        out |= SubsetMask{1} << a;
        break;
      }
      p = s.mul(p, a);
    }
  }
  return Ideal(ideal.carrier(), out);
}

Ideal ideal_sum(const Ideal& lhs, const Ideal& rhs) {
  if (lhs.carrier().get() != rhs.carrier().get() &&
      !lhs.semiring().same_structure(rhs.semiring())) {
    throw CarrierMismatch("ideal_sum requires ideals of the same semiring");
  }
  const FiniteSemiring& s = lhs.semiring();
  const int n = s.order();
  SubsetMask out = 0;
  for (int a = 0; a < n; ++a) {
    if (!lhs.contains(a)) continue;
    for (int b = 0; b < n; ++b) {
      if (!rhs.contains(b)) continue;
      out |= SubsetMask{1} << s.add(a, b);
    }
  }
  return Ideal(lhs.carrier(), out);
}

Ideal ideal_intersection(const Ideal& lhs, const Ideal& rhs) {
  if (lhs.carrier().get() != rhs.carrier().get() &&
      !lhs.semiring().same_structure(rhs.semiring())) {
    throw CarrierMismatch(
        "ideal_intersection requires ideals of the same semiring");
  }
  return Ideal(lhs.carrier(), lhs.bits() & rhs.bits());
}

Ideal colon(const Ideal& ideal, ElementIndex x) {
  const FiniteSemiring& s = ideal.semiring();
  const int n = s.order();
  if (x < 0 || x >= n) {
    throw IndexOutOfRange("colon element " + std::to_string(x) +
                          " out of range for semiring of order " +
                          std::to_string(n));
  }
  SubsetMask out = 0;
  for (int r = 0; r < n; ++r) {
    if (ideal.contains(s.mul(r, x))) out |= SubsetMask{1} << r;
  }
  return Ideal(ideal.carrier(), out);
}

ColonChain colon_power_chain(const Ideal& q, ElementIndex a) {
  if (!q.is_k()) {
    throw NotKIdeal("colon_power_chain requires a k-ideal, got " +
                    q.to_string());
  }
  const FiniteSemiring& s = q.semiring();
  const int n = s.order();
  if (a < 0 || a >= n) {
    throw IndexOutOfRange("chain element " + std::to_string(a) +
                          " out of range for semiring of order " +
                          std::to_string(n));
  }
  ColonChain chain;
  ElementIndex power = a;
  Ideal prev = colon(q, power);
  chain.links.push_back(prev);
  for (int m = 1; m <= n + 1; ++m) {
    power = s.mul(power, a);  // a^(m+1)
    Ideal next = colon(q, power);
    if ((prev.bits() & ~next.bits()) != 0) {
      throw std::logic_error("colon power chain of " + q.to_string() +
                             " at a=" + std::to_string(a) +
                             " is not ascending");
    }
    if (next.bits() == prev.bits()) {
      chain.stabilization = m;
      return chain;
    }
    chain.links.push_back(next);
    prev = next;
  }
  // A strictly ascending chain of subsets of an n-element set has length
  // at most n, so stabilization within n steps is guaranteed.
  throw std::logic_error("colon power chain of " + q.to_string() +
                         " did not stabilize within order+1 steps");
}

std::vector<Ideal> maximal_k_ideals(const Semiring& s) {
  const IdealLattice& lat = s->lattice();
  std::vector<Ideal> out;
  for (SubsetMask m : lat.maximal_k_ideals) {
    out.emplace_back(s, m);
  }
  return out;
}

Ideal jacobson_radical(const Ideal& ideal) {
  const Semiring& s = ideal.carrier();
  const IdealLattice& lat = s->lattice();
  SubsetMask acc = full_mask(s->order());
  for (SubsetMask m : lat.maximal_k_ideals) {
    if ((ideal.bits() & ~m) == 0) acc &= m;
  }
  return Ideal(s, acc);
}

Ideal jacobson_radical(const Semiring& s) {
  return jacobson_radical(zero_ideal(s));
}

std::vector<Ideal> all_ideals(const Semiring& s) {
  std::vector<Ideal> out;
  for (SubsetMask m : s->lattice().ideals) out.emplace_back(s, m);
  return out;
}

std::vector<Ideal> all_k_ideals(const Semiring& s) {
  std::vector<Ideal> out;
  for (SubsetMask m : s->lattice().k_ideals) out.emplace_back(s, m);
  return out;
}

namespace detail {

IdealLattice compute_lattice(const FiniteSemiring& s) {
  const int n = s.order();
  IdealLattice lat;
  const SubsetMask top = full_mask(n);
  // Every ideal contains 0, so scan masks with bit 0 set.
  for (SubsetMask m = 1; m <= top; m += 2) {
    if (!mask_is_ideal(s, m)) continue;
    lat.ideals.push_back(m);
    if (mask_is_k_ideal(s, m)) lat.k_ideals.push_back(m);
  }
  for (SubsetMask m : lat.k_ideals) {
    if (m == top) continue;
    bool maximal = true;
    for (SubsetMask other : lat.k_ideals) {
      if (other == top || other == m) continue;
      if ((m & ~other) == 0) {  // m strictly below another proper k-ideal
        maximal = false;
        break;
      }
    }
    if (maximal) lat.maximal_k_ideals.push_back(m);
  }
  return lat;
}

}  // namespace detail

}  // namespace kdecomp
