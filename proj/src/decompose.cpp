#include "kdecomp/decompose.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace kdecomp {

namespace {

int popcount(SubsetMask m) { return __builtin_popcount(m); }

void require_proper_k(const Ideal& ideal, const char* who) {
  if (!ideal.is_k()) {
    throw NotKIdeal(std::string(who) + " requires a k-ideal, got " +
                    ideal.to_string());
  }
  if (!ideal.proper()) {
    throw NotProper(std::string(who) + " requires a proper ideal");
  }
}

/// Best (J, K) split of `node`: both k-ideals strictly above it meeting in
/// it, minimizing |J|+|K| and then the (J, K) mask pair. Empty when the
/// node is k-irreducible.
std::optional<std::pair<SubsetMask, SubsetMask>> find_split(
    const IdealLattice& lat, SubsetMask node) {
  std::vector<SubsetMask> above;
  for (SubsetMask m : lat.k_ideals) {
    if (m != node && (node & ~m) == 0) above.push_back(m);
  }
  std::optional<std::pair<SubsetMask, SubsetMask>> best;
  int best_size = 0;
  for (std::size_t i = 0; i < above.size(); ++i) {
    for (std::size_t j = i + 1; j < above.size(); ++j) {
      if ((above[i] & above[j]) != node) continue;
      int size = popcount(above[i]) + popcount(above[j]);
      if (!best || size < best_size ||
          (size == best_size &&
           std::make_pair(above[i], above[j]) < *best)) {
        best = std::make_pair(above[i], above[j]);
        best_size = size;
      }
    }
  }
  return best;
}

/// Depth-first splitting; leaves in first-visit order, duplicates dropped.
void split_recursive(const IdealLattice& lat, SubsetMask node,
                     std::vector<SubsetMask>& leaves,
                     std::vector<SplitStep>& steps) {
  auto split = find_split(lat, node);
  if (!split) {
    if (std::find(leaves.begin(), leaves.end(), node) == leaves.end()) {
      leaves.push_back(node);
    }
    return;
  }
  steps.push_back({node, split->first, split->second});
  split_recursive(lat, split->first, leaves, steps);
  split_recursive(lat, split->second, leaves, steps);
}

std::string primary_witness(const Ideal& ideal) {
  const FiniteSemiring& s = ideal.semiring();
  const int n = s.order();
  const SubsetMask rad = radical(ideal).bits();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (ideal.contains(s.mul(x, y)) && !ideal.contains(x) &&
          !((rad >> y) & 1u)) {
        return "x=" + std::to_string(x) + " y=" + std::to_string(y) +
               " with x*y=" + std::to_string(s.mul(x, y)) + " in " +
               ideal.to_string() + ", x outside it, y outside radical " +
               mask_to_string(rad);
      }
    }
  }
  return "no witness (ideal is primary)";
}

SubsetMask intersect_all(const std::vector<SubsetMask>& masks, int order) {
  SubsetMask acc = full_mask(order);
  for (SubsetMask m : masks) acc &= m;
  return acc;
}

}  // namespace

std::vector<Ideal> decompose_irreducible(const Ideal& ideal) {
  require_proper_k(ideal, "decompose_irreducible");
  std::vector<SubsetMask> leaves;
  std::vector<SplitStep> steps;
  split_recursive(ideal.semiring().lattice(), ideal.bits(), leaves, steps);
  std::vector<Ideal> out;
  out.reserve(leaves.size());
  for (SubsetMask m : leaves) out.emplace_back(ideal.carrier(), m);
  return out;
}

std::vector<Ideal> reduce_components(const std::vector<Ideal>& components) {
  if (components.empty()) {
    throw std::invalid_argument("reduce_components requires at least one ideal");
  }
  const Semiring& carrier = components.front().carrier();
  const int order = carrier->order();
  std::vector<SubsetMask> work;
  for (const Ideal& c : components) {
    if (c.carrier().get() != carrier.get() &&
        !c.semiring().same_structure(*carrier)) {
      throw CarrierMismatch("reduce_components requires a common carrier");
    }
    if (!is_primary(c)) {
      throw Error("reduce_components requires primary components; " +
                  c.to_string() + " is not primary");
    }
    work.push_back(c.bits());
  }
  const SubsetMask target = intersect_all(work, order);

  bool changed = true;
  while (changed) {
    changed = false;

    // (a) Delete redundant components, lowest index first, rescanning
    // after every deletion.
    bool deleted = true;
    while (deleted && work.size() > 1) {
      deleted = false;
      for (std::size_t j = 0; j < work.size(); ++j) {
        SubsetMask others = full_mask(order);
        for (std::size_t i = 0; i < work.size(); ++i) {
          if (i != j) others &= work[i];
        }
        if ((others & ~work[j]) == 0) {  // work[j] contains the rest
          work.erase(work.begin() + static_cast<std::ptrdiff_t>(j));
          deleted = true;
          changed = true;
          break;
        }
      }
    }

    // (b) Merge groups sharing a radical into their intersection, keeping
    // first-occurrence order.
    std::vector<SubsetMask> radicals;
    radicals.reserve(work.size());
    for (SubsetMask m : work) {
      radicals.push_back(radical(Ideal(carrier, m)).bits());
    }
    std::vector<SubsetMask> merged;
    std::vector<SubsetMask> merged_radical;
    std::vector<bool> grouped;
    for (std::size_t i = 0; i < work.size(); ++i) {
      auto at = std::find(merged_radical.begin(), merged_radical.end(),
                          radicals[i]);
      if (at == merged_radical.end()) {
        merged.push_back(work[i]);
        merged_radical.push_back(radicals[i]);
        grouped.push_back(false);
      } else {
        std::size_t k =
            static_cast<std::size_t>(at - merged_radical.begin());
        merged[k] &= work[i];
        grouped[k] = true;
        changed = true;
      }
    }

    // (c) Every merged intersection must still be primary with the shared
    // radical.
    for (std::size_t k = 0; k < merged.size(); ++k) {
      if (!grouped[k]) continue;
      Ideal m(carrier, merged[k]);
      if (!is_primary(m)) {
        throw GroupNotPrimary(
            "intersection " + m.to_string() +
            " of components sharing radical " +
            mask_to_string(merged_radical[k]) +
            " is not primary: " + primary_witness(m));
      }
      SubsetMask rad = radical(m).bits();
      if (rad != merged_radical[k]) {
        throw std::logic_error(
            "radical of grouped intersection " + m.to_string() + " is " +
            mask_to_string(rad) + ", expected the shared radical " +
            mask_to_string(merged_radical[k]));
      }
    }
    work = std::move(merged);
  }

  if (intersect_all(work, order) != target) {
    throw std::logic_error("reduction changed the intersection from " +
                           mask_to_string(target) + " to " +
                           mask_to_string(intersect_all(work, order)));
  }
  std::vector<Ideal> out;
  out.reserve(work.size());
  for (SubsetMask m : work) out.emplace_back(carrier, m);
  return out;
}

DecompositionResult primary_decomposition(const Ideal& ideal) {
  require_proper_k(ideal, "primary_decomposition");
  const Semiring& carrier = ideal.carrier();
  const int order = carrier->order();

  DecompositionResult result;
  result.input = ideal.bits();

  std::vector<SubsetMask> leaves;
  split_recursive(carrier->lattice(), ideal.bits(), leaves, result.provenance);

  std::vector<Ideal> components;
  components.reserve(leaves.size());
  for (SubsetMask m : leaves) {
    Ideal component(carrier, m);
    if (!component.is_k()) {
      throw std::logic_error("irreducible component " +
                             component.to_string() + " is not a k-ideal");
    }
    if (!is_primary(component)) {
      throw TheoremViolation(
          "k-irreducible k-ideal " + component.to_string() + " of " +
          carrier->name() + " is not primary: " +
          primary_witness(component) +
          " (component of the decomposition of " + ideal.to_string() + ")");
    }
    components.push_back(std::move(component));
  }

  result.components = reduce_components(components);
  for (const Ideal& c : result.components) {
    result.radicals.push_back(primary_radical(c));
  }

  // Independent re-check of the reduced-decomposition invariants.
  SubsetMask meet = full_mask(order);
  for (const Ideal& c : result.components) meet &= c.bits();
  if (meet != ideal.bits()) {
    throw std::logic_error("components of " + ideal.to_string() +
                           " intersect to " + mask_to_string(meet));
  }
  for (std::size_t i = 0; i < result.radicals.size(); ++i) {
    for (std::size_t j = i + 1; j < result.radicals.size(); ++j) {
      if (result.radicals[i].bits() == result.radicals[j].bits()) {
        throw std::logic_error("reduced components share the radical " +
                               result.radicals[i].to_string());
      }
    }
  }
  for (std::size_t j = 0; j < result.components.size(); ++j) {
    if (result.components.size() == 1) break;
    SubsetMask others = full_mask(order);
    for (std::size_t i = 0; i < result.components.size(); ++i) {
      if (i != j) others &= result.components[i].bits();
    }
    if ((others & ~result.components[j].bits()) == 0) {
      throw std::logic_error("component " +
                             result.components[j].to_string() +
                             " is redundant after reduction");
    }
  }
  result.reduced = true;
  return result;
}

std::vector<AssociatedPrime> associated_primes(const Ideal& ideal) {
  require_proper_k(ideal, "associated_primes");
  const int n = ideal.semiring().order();
  std::map<SubsetMask, ElementIndex> first_witness;
  for (int x = 0; x < n; ++x) {
    Ideal rad = radical(colon(ideal, x));
    if (!is_prime(rad)) continue;
    first_witness.emplace(rad.bits(), x);  // keeps the smallest witness
  }
  std::vector<AssociatedPrime> out;
  for (const auto& [mask, witness] : first_witness) {
    out.push_back({Ideal(ideal.carrier(), mask), witness});
  }
  return out;
}

std::vector<std::vector<Ideal>> brute_force_decompositions(
    const Ideal& ideal, int max_size, std::uint64_t budget) {
  require_proper_k(ideal, "brute_force_decompositions");
  const Semiring& carrier = ideal.carrier();
  const int order = carrier->order();
  const SubsetMask full = full_mask(order);

  std::vector<SubsetMask> pool;
  std::vector<SubsetMask> pool_radicals;
  for (SubsetMask m : carrier->lattice().k_ideals) {
    if (m == full) continue;
    if ((ideal.bits() & ~m) != 0) continue;  // must contain the input
    Ideal candidate(carrier, m);
    if (!is_primary(candidate)) continue;
    pool.push_back(m);
    pool_radicals.push_back(radical(candidate).bits());
  }
  const std::size_t np = pool.size();
  if (max_size < 0) max_size = static_cast<int>(np);
  if (np >= 63 || (std::uint64_t{1} << np) > budget) {
    throw SearchSpaceTooLarge(
        "brute-force search over " + std::to_string(np) +
        " primary k-ideals exceeds the budget of " + std::to_string(budget) +
        " subsets");
  }

  std::vector<std::vector<Ideal>> results;
  const std::uint64_t limit = std::uint64_t{1} << np;
  for (std::uint64_t sub = 1; sub < limit; ++sub) {
    if (__builtin_popcountll(sub) > max_size) continue;
    SubsetMask meet = full;
    for (std::size_t i = 0; i < np; ++i) {
      if (sub & (std::uint64_t{1} << i)) meet &= pool[i];
    }
    if (meet != ideal.bits()) continue;

    bool ok = true;
    // Pairwise distinct radicals.
    for (std::size_t i = 0; i < np && ok; ++i) {
      if (!(sub & (std::uint64_t{1} << i))) continue;
      for (std::size_t j = i + 1; j < np && ok; ++j) {
        if (!(sub & (std::uint64_t{1} << j))) continue;
        if (pool_radicals[i] == pool_radicals[j]) ok = false;
      }
    }
    // No redundant member.
    if (ok && __builtin_popcountll(sub) > 1) {
      for (std::size_t j = 0; j < np && ok; ++j) {
        if (!(sub & (std::uint64_t{1} << j))) continue;
        SubsetMask others = full;
        for (std::size_t i = 0; i < np; ++i) {
          if (i != j && (sub & (std::uint64_t{1} << i))) others &= pool[i];
        }
        if ((others & ~pool[j]) == 0) ok = false;
      }
    }
    if (!ok) continue;

    std::vector<Ideal> dec;
    for (std::size_t i = 0; i < np; ++i) {
      if (sub & (std::uint64_t{1} << i)) dec.emplace_back(carrier, pool[i]);
    }
    results.push_back(std::move(dec));
  }
  return results;
}

UniquenessReport verify_uniqueness(const Ideal& ideal) {
  UniquenessReport report;
  report.input = ideal.bits();

  auto decs = brute_force_decompositions(ideal);
  for (const auto& dec : decs) {
    std::vector<SubsetMask> comps;
    std::vector<SubsetMask> rads;
    for (const Ideal& q : dec) {
      comps.push_back(q.bits());
      rads.push_back(radical(q).bits());
    }
    std::sort(rads.begin(), rads.end());
    report.decompositions.push_back(std::move(comps));
    report.radical_sets.push_back(std::move(rads));
  }
  for (const AssociatedPrime& ap : associated_primes(ideal)) {
    report.associated.push_back(ap.prime.bits());
  }
  std::sort(report.associated.begin(), report.associated.end());

  report.all_radical_sets_equal = true;
  for (const auto& rs : report.radical_sets) {
    if (rs != report.radical_sets.front()) {
      report.all_radical_sets_equal = false;
      break;
    }
  }
  report.matches_associated_primes =
      !report.radical_sets.empty() && report.all_radical_sets_equal &&
      report.radical_sets.front() == report.associated;
  report.passed = !report.decompositions.empty() &&
                  report.all_radical_sets_equal &&
                  report.matches_associated_primes;
  if (report.decompositions.empty()) {
    report.detail = "oracle found no reduced primary decomposition of " +
                    ideal.to_string();
  } else if (!report.all_radical_sets_equal) {
    report.detail = "decompositions of " + ideal.to_string() +
                    " have differing radical sets";
  } else if (!report.matches_associated_primes) {
    std::string got = "{";
    for (std::size_t i = 0; i < report.radical_sets.front().size(); ++i) {
      if (i) got += ", ";
      got += mask_to_string(report.radical_sets.front()[i]);
    }
    got += "}";
    std::string expect = "{";
    for (std::size_t i = 0; i < report.associated.size(); ++i) {
      if (i) expect += ", ";
      expect += mask_to_string(report.associated[i]);
    }
    expect += "}";
    report.detail = "common radical set " + got +
                    " differs from associated primes " + expect;
  } else {
    report.detail = "all " + std::to_string(report.decompositions.size()) +
                    " reduced decompositions share the associated primes";
  }
  return report;
}

IrreduciblePrimaryTrace irreducible_primary_trace(const Ideal& q,
                                                  ElementIndex a,
                                                  ElementIndex b) {
  require_proper_k(q, "irreducible_primary_trace");
  const Semiring& carrier = q.carrier();
  const FiniteSemiring& s = *carrier;
  const int n = s.order();
  if (a < 0 || a >= n || b < 0 || b >= n) {
    throw IndexOutOfRange("trace elements must lie in [0, " +
                          std::to_string(n) + ")");
  }
  if (!is_k_irreducible(q)) {
    throw Error("irreducible_primary_trace requires a k-irreducible ideal, " +
                q.to_string() + " splits");
  }
  if (!q.contains(s.mul(a, b))) {
    throw Error("irreducible_primary_trace requires a*b inside the ideal");
  }
  if (q.contains(b)) {
    throw Error("irreducible_primary_trace requires b outside the ideal");
  }

  IrreduciblePrimaryTrace trace;
  trace.q = q.bits();
  trace.a = a;
  trace.b = b;

  auto step = [&trace](const std::string& id, bool rigorous, bool held,
                       const std::string& detail) {
    trace.steps.push_back({id, rigorous, held, detail});
    if (rigorous && !held) {
      throw StepFailed(id, detail);
    }
  };

  // Ascending colon chain (Q : a^i), stabilizing at m.
  ColonChain chain = colon_power_chain(q, a);
  trace.m = chain.stabilization;
  for (const Ideal& link : chain.links) trace.chain.push_back(link.bits());
  step("chain-stabilizes", true, true,
       "(Q : a^i) stabilizes at i=" + std::to_string(trace.m) +
           " with value " + chain.links.back().to_string());

  // I = <a^m> + Q and J = <b> + Q recover Q as their intersection.
  const ElementIndex am = s.pow(a, trace.m);
  Ideal i_sum = ideal_sum(generated_ideal(carrier, {am}), q);
  Ideal j_sum = ideal_sum(generated_ideal(carrier, {b}), q);
  trace.i_sum = i_sum.bits();
  trace.j_sum = j_sum.bits();
  step("intersection-recovers-q", true,
       (i_sum.bits() & j_sum.bits()) == q.bits(),
       "I = " + i_sum.to_string() + ", J = " + j_sum.to_string() +
           ", I cap J = " + mask_to_string(i_sum.bits() & j_sum.bits()) +
           ", Q = " + q.to_string());

  Ideal i_bar = k_closure(i_sum);
  Ideal j_bar = k_closure(j_sum);
  trace.i_closure = i_bar.bits();
  trace.j_closure = j_bar.bits();

  Ideal jac_q = jacobson_radical(q);
  Ideal jac_i = jacobson_radical(i_bar);
  Ideal jac_j = jacobson_radical(j_bar);
  Ideal jac_r = jacobson_radical(carrier);
  trace.jac_q = jac_q.bits();
  trace.jac_i = jac_i.bits();
  trace.jac_j = jac_j.bits();
  trace.jac_r = jac_r.bits();

  // Jac distributes over this intersection (maximal k-ideals are prime, so
  // one above the intersection is above a factor).
  Ideal meet = ideal_intersection(i_bar, j_bar);
  Ideal jac_meet = jacobson_radical(meet);
  step("jac-of-intersection", true,
       jac_meet.bits() == (jac_i.bits() & jac_j.bits()),
       "Jac(Ibar cap Jbar) = " + jac_meet.to_string() +
           ", Jac(Ibar) cap Jac(Jbar) = " +
           mask_to_string(jac_i.bits() & jac_j.bits()));

  // The source argument's unproven claims, recorded but never thrown.
  step("closure-intersection-recovers-q", false, meet.bits() == q.bits(),
       "Ibar cap Jbar = " + meet.to_string() + ", Q = " + q.to_string());
  step("jac-q-equals-closure-jacs", false,
       jac_q.bits() == (jac_i.bits() & jac_j.bits()),
       "Jac(Q) = " + jac_q.to_string() + ", Jac(Ibar) cap Jac(Jbar) = " +
           mask_to_string(jac_i.bits() & jac_j.bits()));
  step("jac-q-eq-q-cap-jac-r", false,
       jac_q.bits() == (q.bits() & jac_r.bits()),
       "Jac(Q) = " + jac_q.to_string() + ", Q cap Jac(R) = " +
           mask_to_string(q.bits() & jac_r.bits()));
  step("jac-q-neq-jac-r", false, jac_q.bits() != jac_r.bits(),
       "Jac(Q) = " + jac_q.to_string() + ", Jac(R) = " + jac_r.to_string());
  {
    bool held = false;
    std::string detail;
    if (!Ideal(carrier, trace.jac_q).proper()) {
      detail = "Jac(Q) = R is not proper";
    } else {
      Ideal jq(carrier, trace.jac_q);
      if (!jq.is_k()) {
        detail = "Jac(Q) = " + jq.to_string() + " is not a k-ideal";
      } else {
        held = is_k_irreducible(jq);
        detail = "Jac(Q) = " + jq.to_string() +
                 (held ? " is k-irreducible" : " splits");
      }
    }
    step("jac-q-k-irreducible", false, held, detail);
  }
  step("jac-q-eq-q", false, jac_q.bits() == q.bits(),
       "Jac(Q) = " + jac_q.to_string() + ", Q = " + q.to_string());
  step("q-matches-jac-i-or-jac-j", false,
       q.bits() == jac_i.bits() || q.bits() == jac_j.bits(),
       "Q = " + q.to_string() + ", Jac(Ibar) = " + jac_i.to_string() +
           ", Jac(Jbar) = " + jac_j.to_string());

  // b witnesses Q != Jac(Jbar).
  step("b-in-jac-j", true, jac_j.contains(b),
       "b = " + std::to_string(b) + ", Jac(Jbar) = " + jac_j.to_string());

  // What the trace is meant to establish at this instance: a^m landed in Q.
  trace.concluded = q.contains(am);
  step("conclusion-power-in-q", true, trace.concluded,
       "a^" + std::to_string(trace.m) + " = " + std::to_string(am) +
           (trace.concluded ? " lies in Q = " : " is outside Q = ") +
           q.to_string());
  return trace;
}

}  // namespace kdecomp
