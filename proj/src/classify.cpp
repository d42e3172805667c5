#include "kdecomp/classify.hpp"

namespace kdecomp {

bool is_prime(const Ideal& ideal) {
  if (!ideal.proper()) return false;
  const FiniteSemiring& s = ideal.semiring();
  const int n = s.order();
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      if (ideal.contains(s.mul(a, b)) && !ideal.contains(a) &&
          !ideal.contains(b)) {
        return false;
      }
    }
  }
  return true;
}

bool is_primary(const Ideal& ideal) {
  if (!ideal.proper()) return false;
  const FiniteSemiring& s = ideal.semiring();
  const int n = s.order();
  const SubsetMask rad = radical(ideal).bits();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (ideal.contains(s.mul(x, y)) && !ideal.contains(x) &&
          !((rad >> y) & 1u)) {
        return false;
      }
    }
  }
  return true;
}

Ideal primary_radical(const Ideal& ideal) {
  if (!is_primary(ideal)) {
    throw Error("primary_radical requires a primary ideal, got " +
                ideal.to_string());
  }
  Ideal rad = radical(ideal);
  if (!is_prime(rad)) {
    // Find the witness pair for the report.
    const FiniteSemiring& s = ideal.semiring();
    const int n = s.order();
    for (int a = 0; a < n; ++a) {
      for (int b = a; b < n; ++b) {
        if (rad.contains(s.mul(a, b)) && !rad.contains(a) &&
            !rad.contains(b)) {
          throw RadicalNotPrime(
              "radical " + rad.to_string() + " of primary ideal " +
              ideal.to_string() + " is not prime: " + std::to_string(a) +
              "*" + std::to_string(b) + "=" +
              std::to_string(s.mul(a, b)) + " lies inside but neither " +
              "factor does");
        }
      }
    }
    throw RadicalNotPrime("radical " + rad.to_string() + " of " +
                          ideal.to_string() +
                          " is not prime (improper radical)");
  }
  return rad;
}

bool is_p_primary(const Ideal& ideal, const Ideal& prime) {
  if (ideal.carrier().get() != prime.carrier().get() &&
      !ideal.semiring().same_structure(prime.semiring())) {
    throw CarrierMismatch("is_p_primary requires ideals of one semiring");
  }
  return is_primary(ideal) && radical(ideal).bits() == prime.bits();
}

bool is_k_irreducible(const Ideal& ideal) {
  if (!ideal.is_k()) {
    throw NotKIdeal("k-irreducibility is defined only for k-ideals; " +
                    ideal.to_string() + " is not subtractive");
  }
  if (!ideal.proper()) {
    throw NotProper("k-irreducibility is defined only for proper ideals");
  }
  const SubsetMask self = ideal.bits();
  const IdealLattice& lat = ideal.semiring().lattice();
  std::vector<SubsetMask> above;
  for (SubsetMask m : lat.k_ideals) {
    if (m != self && (self & ~m) == 0) above.push_back(m);
  }
  for (std::size_t i = 0; i < above.size(); ++i) {
    for (std::size_t j = i; j < above.size(); ++j) {
      if ((above[i] & above[j]) == self) return false;
    }
  }
  return true;
}

IdealClass classify_ideal(const Ideal& ideal) {
  IdealClass c;
  c.proper = ideal.proper();
  c.is_k = ideal.is_k();
  c.prime = is_prime(ideal);
  c.primary = is_primary(ideal);
  c.radical_bits = radical(ideal).bits();
  if (c.proper && c.is_k) {
    c.k_irreducible = is_k_irreducible(ideal);
  }
  return c;
}

ColonPrimaryReport colon_primary_report(const Ideal& q, ElementIndex x) {
  if (!is_primary(q)) {
    throw Error("colon_primary_report requires a primary ideal, got " +
                q.to_string());
  }
  ColonPrimaryReport report;
  report.q_bits = q.bits();
  report.x = x;
  Ideal c = colon(q, x);
  report.colon_bits = c.bits();
  report.radical_bits = radical(c).bits();
  report.expected_radical = radical(q).bits();

  const SubsetMask full = full_mask(q.semiring().order());
  if (q.contains(x)) {
    // x inside Q: the colon must be the whole semiring.
    report.colon_is_primary = is_primary(c);
    report.radical_matches = false;
    report.passed = (c.bits() == full);
    report.detail = report.passed
                        ? "x in Q and (Q:x) = R"
                        : "x in Q but (Q:x) = " + c.to_string() + " != R";
    return report;
  }

  report.colon_is_primary = is_primary(c);
  report.radical_matches = (report.radical_bits == report.expected_radical);
  bool outside_radical = !((report.expected_radical >> x) & 1u);
  bool colon_equals_q = (c.bits() == q.bits());
  report.passed = report.colon_is_primary && report.radical_matches &&
                  (!outside_radical || colon_equals_q);
  if (report.passed) {
    report.detail = outside_radical
                        ? "x outside radical(Q): (Q:x) = Q, primary"
                        : "(Q:x) primary with radical(Q:x) = radical(Q)";
  } else if (!report.colon_is_primary) {
    report.detail = "(Q:x) = " + c.to_string() + " is not primary";
  } else if (!report.radical_matches) {
    report.detail = "radical of (Q:x) is " +
                    mask_to_string(report.radical_bits) + ", expected " +
                    mask_to_string(report.expected_radical);
  } else {
    report.detail = "x outside radical(Q) but (Q:x) = " + c.to_string() +
                    " differs from Q = " + q.to_string();
  }
  return report;
}

}  // namespace kdecomp
