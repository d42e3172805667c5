#include "kdecomp/verify.hpp"

#include <algorithm>

#include "kdecomp/classify.hpp"

namespace kdecomp {

namespace {

const char* const kFlaggedStepIds[] = {
    "closure-intersection-recovers-q", "jac-q-equals-closure-jacs",
    "jac-q-eq-q-cap-jac-r",            "jac-q-neq-jac-r",
    "jac-q-k-irreducible",             "jac-q-eq-q",
    "q-matches-jac-i-or-jac-j",
};

std::string masks_to_string(const std::vector<SubsetMask>& masks) {
  std::string out = "{";
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (i) out += ", ";
    out += mask_to_string(masks[i]);
  }
  out += "}";
  return out;
}

}  // namespace

VerificationReport verify_semiring(const Semiring& s) {
  VerificationReport rep;
  rep.semiring_name = s->name();
  rep.order = s->order();
  rep.digest = s->structure_hash();
  rep.flags = s->flags();
  rep.lemma_hypotheses_satisfied = rep.flags.additively_cancellative &&
                                   rep.flags.yoked && rep.flags.zerosumfree;
  for (const char* id : kFlaggedStepIds) {
    rep.step_stats.push_back({id, 0, 0, ""});
  }
  auto finding = [&rep](const std::string& id, const std::string& subject,
                        const std::string& detail) {
    rep.findings.push_back({id, subject, detail});
  };
  auto note = [&rep](const std::string& id, const std::string& subject,
                     const std::string& detail) {
    rep.notes.push_back({id, subject, detail});
  };

  const int n = s->order();
  const SubsetMask full = full_mask(n);
  const std::vector<Ideal> ideals = all_ideals(s);
  const std::vector<Ideal> k_ideals = all_k_ideals(s);
  rep.ideal_count = static_cast<int>(ideals.size());
  rep.k_ideal_count = static_cast<int>(k_ideals.size());

  // --- Closure-operator laws for k_closure and radical, all ideals. ---
  for (const Ideal& ideal : ideals) {
    Ideal closed = [&]() -> Ideal {
      try {
        return k_closure(ideal);
      } catch (const ClosureNotKIdeal& e) {
        finding("closure-not-k", ideal.to_string(), e.what());
        return unit_ideal(s);
      }
    }();
    ++rep.closure_checks;
    if ((ideal.bits() & ~closed.bits()) != 0) {
      finding("closure-not-extensive", ideal.to_string(),
              "k-closure " + closed.to_string() + " does not contain " +
                  ideal.to_string());
    }
    Ideal twice = k_closure(closed);
    ++rep.closure_checks;
    if (twice.bits() != closed.bits()) {
      finding("closure-not-idempotent", ideal.to_string(),
              "closure " + closed.to_string() + " recloses to " +
                  twice.to_string());
    }
    // Least k-ideal above the input.
    SubsetMask least = full;
    for (const Ideal& k : k_ideals) {
      if ((ideal.bits() & ~k.bits()) == 0 &&
          __builtin_popcount(k.bits()) < __builtin_popcount(least)) {
        least = k.bits();
      }
    }
    ++rep.closure_checks;
    if (closed.bits() != least) {
      finding("closure-not-least", ideal.to_string(),
              "k-closure is " + closed.to_string() +
                  " but the smallest k-ideal containing the input is " +
                  mask_to_string(least));
    }
    ++rep.closure_checks;
    if (ideal.is_k() != (closed.bits() == ideal.bits())) {
      finding("closure-fixpoint-mismatch", ideal.to_string(),
              std::string("is_k_ideal = ") + (ideal.is_k() ? "true" : "false") +
                  " but k-closure = " + closed.to_string());
    }

    Ideal rad = radical(ideal);
    ++rep.radical_checks;
    if ((ideal.bits() & ~rad.bits()) != 0) {
      finding("radical-not-extensive", ideal.to_string(),
              "radical " + rad.to_string() + " does not contain the ideal");
    }
    ++rep.radical_checks;
    Ideal rad2 = radical(rad);
    if (rad2.bits() != rad.bits()) {
      finding("radical-not-idempotent", ideal.to_string(),
              "radical " + rad.to_string() + " re-radicals to " +
                  rad2.to_string());
    }
    if (ideal.is_k() && !rad.is_k()) {
      ++rep.radical_of_k_not_k;
      note("radical-of-k-ideal-not-k", ideal.to_string(),
           "radical " + rad.to_string() + " of the k-ideal " +
               ideal.to_string() + " is not subtractive");
    }
  }

  // Monotonicity and binary laws over ideal pairs.
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    for (std::size_t j = 0; j < ideals.size(); ++j) {
      if (i == j) continue;
      const Ideal& a = ideals[i];
      const Ideal& b = ideals[j];
      if ((a.bits() & ~b.bits()) == 0) {  // a subset of b
        ++rep.closure_checks;
        if ((k_closure(a).bits() & ~k_closure(b).bits()) != 0) {
          finding("closure-not-monotone",
                  a.to_string() + " within " + b.to_string(),
                  "closures " + k_closure(a).to_string() + " and " +
                      k_closure(b).to_string() + " are not nested");
        }
        ++rep.radical_checks;
        if ((radical(a).bits() & ~radical(b).bits()) != 0) {
          finding("radical-not-monotone",
                  a.to_string() + " within " + b.to_string(),
                  "radicals " + radical(a).to_string() + " and " +
                      radical(b).to_string() + " are not nested");
        }
      }
      if (i < j) {
        SubsetMask lhs = radical(ideal_intersection(a, b)).bits();
        SubsetMask rhs = radical(a).bits() & radical(b).bits();
        ++rep.radical_checks;
        if (a.is_k() && b.is_k()) {
          if (lhs != rhs) {
            finding("radical-intersection-k",
                    a.to_string() + " cap " + b.to_string(),
                    "radical of intersection " + mask_to_string(lhs) +
                        " differs from intersection of radicals " +
                        mask_to_string(rhs));
          }
        } else if (lhs != rhs) {
          note("radical-intersection-ideals",
               a.to_string() + " cap " + b.to_string(),
               "radical of intersection " + mask_to_string(lhs) +
                   " differs from intersection of radicals " +
                   mask_to_string(rhs) + " (inputs not both k-ideals)");
        }
      }
    }
  }

  // k-ideal pair laws: intersections stay subtractive, sums need not.
  for (std::size_t i = 0; i < k_ideals.size(); ++i) {
    for (std::size_t j = i + 1; j < k_ideals.size(); ++j) {
      Ideal meet = ideal_intersection(k_ideals[i], k_ideals[j]);
      if (!meet.is_k()) {
        finding("k-intersection-not-k",
                k_ideals[i].to_string() + " cap " + k_ideals[j].to_string(),
                "intersection " + meet.to_string() + " is not subtractive");
      }
      Ideal sum = ideal_sum(k_ideals[i], k_ideals[j]);
      ++rep.k_ideal_sums_checked;
      if (!sum.is_k()) ++rep.k_ideal_sums_not_k;
    }
  }

  // Jacobson sanity: Jac contains its argument; proper k-ideals always
  // sit under some maximal k-ideal.
  {
    Ideal whole = unit_ideal(s);
    if (jacobson_radical(whole).bits() != full) {
      finding("jacobson-of-whole", whole.to_string(),
              "Jac(R) over the improper ideal must be R");
    }
    const auto maximal = maximal_k_ideals(s);
    for (const Ideal& k : k_ideals) {
      if (!k.proper()) continue;
      if ((k.bits() & ~jacobson_radical(k).bits()) != 0) {
        finding("jacobson-not-containing", k.to_string(),
                "Jac = " + jacobson_radical(k).to_string());
      }
      bool below_maximal = false;
      for (const Ideal& m : maximal) {
        if ((k.bits() & ~m.bits()) == 0) {
          below_maximal = true;
          break;
        }
      }
      if (!below_maximal) {
        finding("maximal-missing", k.to_string(),
                "no maximal k-ideal contains this proper k-ideal");
      }
    }
  }

  // --- Colon bracketing laws on every primary ideal. ---
  for (const Ideal& q : ideals) {
    if (is_prime(q)) ++rep.prime_count;
    if (!is_primary(q)) continue;
    ++rep.primary_count;
    try {
      primary_radical(q);
    } catch (const RadicalNotPrime& e) {
      finding("primary-radical-not-prime", q.to_string(), e.what());
    }
    const SubsetMask rad = radical(q).bits();
    for (int x = 0; x < n; ++x) {
      ++rep.colon_checks;
      Ideal c = colon(q, x);  // construction re-checks the ideal laws
      if (q.contains(x)) {
        if (c.bits() != full) {
          finding("colon-of-member-not-whole",
                  q.to_string() + " : " + std::to_string(x),
                  "colon is " + c.to_string() + ", expected R");
        }
      }
      if (!((rad >> x) & 1u) && c.bits() != q.bits()) {
        finding("colon-outside-radical-not-q",
                q.to_string() + " : " + std::to_string(x),
                "x is outside the radical but colon is " + c.to_string());
      }
      if (!q.contains(x)) {
        ColonPrimaryReport report = colon_primary_report(q, x);
        if (!report.passed) {
          finding("colon-not-primary",
                  q.to_string() + " : " + std::to_string(x), report.detail);
        }
      }
    }
  }

  // --- Decomposition sweep over proper k-ideals. ---
  for (const Ideal& ideal : k_ideals) {
    if (!ideal.proper()) continue;
    ++rep.proper_k_ideal_count;

    bool irreducible = is_k_irreducible(ideal);
    if (irreducible) ++rep.k_irreducible_count;
    if (irreducible && !is_primary(ideal)) {
      // The central claim: k-irreducible k-ideals are primary.
      const FiniteSemiring& ss = *s;
      std::string witness;
      const SubsetMask rad = radical(ideal).bits();
      for (int x = 0; x < n && witness.empty(); ++x) {
        for (int y = 0; y < n; ++y) {
          if (ideal.contains(ss.mul(x, y)) && !ideal.contains(x) &&
              !((rad >> y) & 1u)) {
            witness = "x=" + std::to_string(x) + " y=" + std::to_string(y);
            break;
          }
        }
      }
      finding("irreducible-not-primary", ideal.to_string(), witness);
    }

    DecompositionResult dec;
    bool dec_ok = true;
    try {
      dec = primary_decomposition(ideal);
      ++rep.decomposition_count;
    } catch (const TheoremViolation& e) {
      finding("irreducible-not-primary", ideal.to_string(), e.what());
      dec_ok = false;
    } catch (const GroupNotPrimary& e) {
      finding("group-not-primary", ideal.to_string(), e.what());
      dec_ok = false;
    } catch (const RadicalNotPrime& e) {
      finding("primary-radical-not-prime", ideal.to_string(), e.what());
      dec_ok = false;
    }

    std::vector<SubsetMask> dec_radicals;
    if (dec_ok) {
      SubsetMask meet = full;
      for (const Ideal& c : dec.components) {
        meet &= c.bits();
        if (!is_primary(c)) {
          finding("component-not-primary", ideal.to_string(),
                  "component " + c.to_string());
        }
        if (!c.is_k()) {
          finding("component-not-k", ideal.to_string(),
                  "component " + c.to_string());
        }
      }
      if (meet != ideal.bits()) {
        finding("decomposition-intersection-mismatch", ideal.to_string(),
                "components meet in " + mask_to_string(meet));
      }
      for (const Ideal& r : dec.radicals) dec_radicals.push_back(r.bits());
      std::sort(dec_radicals.begin(), dec_radicals.end());
      if (std::adjacent_find(dec_radicals.begin(), dec_radicals.end()) !=
          dec_radicals.end()) {
        finding("radicals-not-distinct", ideal.to_string(),
                masks_to_string(dec_radicals));
      }
    }

    // Associated primes: decomposition-independent prime set.
    std::vector<AssociatedPrime> assoc = associated_primes(ideal);
    std::vector<SubsetMask> assoc_masks;
    for (const AssociatedPrime& ap : assoc) assoc_masks.push_back(ap.prime.bits());
    std::sort(assoc_masks.begin(), assoc_masks.end());
    if (dec_ok && assoc_masks != dec_radicals) {
      finding("associated-primes-mismatch", ideal.to_string(),
              "decomposition radicals " + masks_to_string(dec_radicals) +
                  " vs associated primes " + masks_to_string(assoc_masks));
    }

    // Colon laws relative to the decomposition: radical(I : x) equals the
    // meet of the component radicals avoiding x, and colon grows I.
    for (int x = 0; x < n; ++x) {
      Ideal c = colon(ideal, x);
      ++rep.colon_checks;
      if ((ideal.bits() & ~c.bits()) != 0) {
        finding("colon-not-containing",
                ideal.to_string() + " : " + std::to_string(x),
                "colon " + c.to_string() + " does not contain the ideal");
      }
      if (dec_ok) {
        SubsetMask expect = full;
        for (std::size_t ci = 0; ci < dec.components.size(); ++ci) {
          if (!dec.components[ci].contains(x)) {
            expect &= dec.radicals[ci].bits();
          }
        }
        if (radical(c).bits() != expect) {
          finding("radical-colon-containment",
                  ideal.to_string() + " : " + std::to_string(x),
                  "radical of colon is " + radical(c).to_string() +
                      ", meet of avoiding radicals is " +
                      mask_to_string(expect));
        }
      }
      bool outside_all = true;
      for (const AssociatedPrime& ap : assoc) {
        if (ap.prime.contains(x)) {
          outside_all = false;
          break;
        }
      }
      if (outside_all && c.bits() != ideal.bits()) {
        finding("colon-outside-primes-not-equal",
                ideal.to_string() + " : " + std::to_string(x),
                "x avoids every associated prime but colon is " +
                    c.to_string());
      }
    }

    UniquenessReport uni = verify_uniqueness(ideal);
    ++rep.uniqueness_checks;
    if (!uni.passed) {
      finding("uniqueness-failed", ideal.to_string(), uni.detail);
    }

    // Replay the irreducibility-implies-primary argument on every
    // admissible (a, b) pair.
    if (irreducible) {
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (!ideal.contains(s->mul(a, b)) || ideal.contains(b)) continue;
          try {
            IrreduciblePrimaryTrace trace =
                irreducible_primary_trace(ideal, a, b);
            ++rep.trace_count;
            for (const TraceStep& st : trace.steps) {
              if (st.rigorous) continue;
              for (FlaggedStepStats& stats : rep.step_stats) {
                if (stats.id != st.id) continue;
                if (st.held) {
                  ++stats.held;
                } else {
                  ++stats.failed;
                  if (stats.first_failure.empty()) {
                    stats.first_failure =
                        "Q=" + ideal.to_string() + " a=" + std::to_string(a) +
                        " b=" + std::to_string(b) + ": " + st.detail;
                  }
                }
                break;
              }
            }
          } catch (const StepFailed& e) {
            finding("trace-step-failed",
                    "Q=" + ideal.to_string() + " a=" + std::to_string(a) +
                        " b=" + std::to_string(b),
                    e.what());
          }
        }
      }
    }
  }

  // Aggregate notes for the source argument's unproven steps.
  for (const FlaggedStepStats& stats : rep.step_stats) {
    if (stats.failed > 0) {
      note("trace-step-not-held", stats.id,
           std::to_string(stats.failed) + " of " +
               std::to_string(stats.held + stats.failed) +
               " traces; first: " + stats.first_failure);
    }
  }
  return rep;
}

CensusRecord census_record(const Semiring& s) {
  CensusRecord record;
  record.semiring = s;
  record.flags = s->flags();
  record.k_ideal_count = static_cast<int>(s->lattice().k_ideals.size());
  for (const Ideal& ideal : all_k_ideals(s)) {
    if (!ideal.proper()) continue;
    DecompositionResult dec = primary_decomposition(ideal);
    IdealSummary summary;
    summary.ideal = ideal.bits();
    summary.component_count = static_cast<int>(dec.components.size());
    summary.associated_prime_count =
        static_cast<int>(associated_primes(ideal).size());
    record.summaries.push_back(summary);
  }
  return record;
}

}  // namespace kdecomp
