#include "kdecomp/natpoly.hpp"

#include <numeric>
#include <sstream>

namespace kdecomp {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error("coefficient overflow in polynomial addition");
  }
  return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error("coefficient overflow in polynomial multiplication");
  }
  return r;
}

/// Exact division of f by g in integer polynomials, with the additional
/// requirement that the quotient be nonnegative. The quotient coefficients
/// are forced one at a time (from the constant term up when g(0) != 0,
/// from the leading term down otherwise), so the first inexact or negative
/// step refutes membership.
std::optional<std::vector<std::uint64_t>> exact_nonneg_quotient(
    const NatPoly& f, const NatPoly& g) {
  const int df = f.degree();
  const int dg = g.degree();
  const int dq = df - dg;
  std::vector<__int128> rem(static_cast<std::size_t>(df) + 1);
  for (int i = 0; i <= df; ++i) rem[i] = static_cast<__int128>(f.coeff(i));
  std::vector<__int128> quot(static_cast<std::size_t>(dq) + 1, 0);

  auto subtract_term = [&](int k, __int128 q) {
    for (int i = 0; i <= dg; ++i) {
      rem[k + i] -= q * static_cast<__int128>(g.coeff(i));
    }
  };

  if (g.coeff(0) != 0) {
    const __int128 g0 = static_cast<__int128>(g.coeff(0));
    for (int k = 0; k <= dq; ++k) {
      if (rem[k] % g0 != 0) return std::nullopt;
      __int128 q = rem[k] / g0;
      if (q < 0) return std::nullopt;
      quot[k] = q;
      subtract_term(k, q);
    }
  } else {
    const __int128 glead = static_cast<__int128>(g.coeff(dg));
    for (int k = dq; k >= 0; --k) {
      if (rem[k + dg] % glead != 0) return std::nullopt;
      __int128 q = rem[k + dg] / glead;
      if (q < 0) return std::nullopt;
      quot[k] = q;
      subtract_term(k, q);
    }
  }
  for (const __int128& r : rem) {
    if (r != 0) return std::nullopt;
  }
  std::vector<std::uint64_t> out(quot.size());
  for (std::size_t i = 0; i < quot.size(); ++i) {
    out[i] = static_cast<std::uint64_t>(quot[i]);
  }
  return out;
}

}  // namespace

NatPoly::NatPoly(std::vector<std::uint64_t> coefficients)
    : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

NatPoly NatPoly::monomial(std::uint64_t coefficient, int degree) {
  if (degree < 0) {
    throw Error("monomial degree must be nonnegative");
  }
  if (coefficient == 0) return NatPoly();
  std::vector<std::uint64_t> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = coefficient;
  return NatPoly(std::move(c));
}

std::string NatPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    std::uint64_t c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!first) out << " + ";
    if (i == 0) {
      out << c;
    } else {
      if (c != 1) out << c;
      out << 'x';
      if (i > 1) out << '^' << i;
    }
    first = false;
  }
  return out.str();
}

NatPoly poly_add(const NatPoly& f, const NatPoly& g) {
  std::vector<std::uint64_t> out(
      static_cast<std::size_t>(std::max(f.degree(), g.degree()) + 1), 0);
  for (int i = 0; i < static_cast<int>(out.size()); ++i) {
    out[static_cast<std::size_t>(i)] = checked_add(f.coeff(i), g.coeff(i));
  }
  return NatPoly(std::move(out));
}

NatPoly poly_mul(const NatPoly& f, const NatPoly& g) {
  if (f.is_zero() || g.is_zero()) return NatPoly();
  std::vector<std::uint64_t> out(
      static_cast<std::size_t>(f.degree() + g.degree() + 1), 0);
  for (int i = 0; i <= f.degree(); ++i) {
    for (int j = 0; j <= g.degree(); ++j) {
      std::size_t k = static_cast<std::size_t>(i + j);
      out[k] = checked_add(out[k], checked_mul(f.coeff(i), g.coeff(j)));
    }
  }
  return NatPoly(std::move(out));
}

std::optional<NatPoly> principal_membership(const NatPoly& f,
                                            const NatPoly& g) {
  if (g.is_zero()) {
    throw ZeroDivisor("membership in <0> is division by zero");
  }
  if (f.is_zero()) return NatPoly();  // f = g * 0
  if (f.degree() < g.degree()) return std::nullopt;
  auto quotient = exact_nonneg_quotient(f, g);
  if (!quotient) return std::nullopt;
  return NatPoly(std::move(*quotient));
}

std::optional<NatPoly> yoked_pair_check(const NatPoly& f, const NatPoly& g) {
  const int top = std::max(f.degree(), g.degree());
  bool f_dominates = true;
  bool g_dominates = true;
  for (int i = 0; i <= top; ++i) {
    if (f.coeff(i) < g.coeff(i)) f_dominates = false;
    if (g.coeff(i) < f.coeff(i)) g_dominates = false;
  }
  if (!f_dominates && !g_dominates) return std::nullopt;
  const NatPoly& big = f_dominates ? f : g;
  const NatPoly& small = f_dominates ? g : f;
  std::vector<std::uint64_t> diff(static_cast<std::size_t>(top + 1), 0);
  for (int i = 0; i <= top; ++i) {
    diff[static_cast<std::size_t>(i)] = big.coeff(i) - small.coeff(i);
  }
  return NatPoly(std::move(diff));
}

bool PrincipalNotKCertificate::validate(std::string* why) const {
  auto fail = [why](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (poly_mul(g, u_cofactor) != u) {
    return fail("u is not g times its stated cofactor: g * (" +
                u_cofactor.to_string() + ") = " +
                poly_mul(g, u_cofactor).to_string() + " but u = " +
                u.to_string());
  }
  if (poly_mul(g, v_cofactor) != v) {
    return fail("v is not g times its stated cofactor: g * (" +
                v_cofactor.to_string() + ") = " +
                poly_mul(g, v_cofactor).to_string() + " but v = " +
                v.to_string());
  }
  if (poly_add(w, v) != u) {
    return fail("w + v = " + poly_add(w, v).to_string() +
                " does not equal u = " + u.to_string());
  }
  if (principal_membership(w, g).has_value()) {
    return fail("w = " + w.to_string() +
                " unexpectedly has a nonnegative cofactor over g");
  }
  if (why) *why = "all claims verified";
  return true;
}

PrincipalNotKCertificate principal_not_k_witness() {
  PrincipalNotKCertificate cert;
  cert.g = NatPoly({1, 1});
  cert.u_cofactor = poly_mul(cert.g, cert.g);        // (1+x)^2
  cert.u = poly_mul(cert.g, cert.u_cofactor);        // (1+x)^3
  cert.v_cofactor = NatPoly({0, 3});                 // 3x
  cert.v = poly_mul(cert.g, cert.v_cofactor);        // 3x + 3x^2
  cert.w = NatPoly({1, 0, 0, 1});                    // 1 + x^3
  return cert;
}

BoundedSubtractivityReport principal_k_check(std::uint64_t a,
                                             std::uint64_t bound) {
  if (a < 1) {
    throw InputError("principal_k_check requires a >= 1");
  }
  if (bound < a) {
    throw InputError("principal_k_check requires bound >= a");
  }
  BoundedSubtractivityReport report;
  report.a = a;
  report.bound = bound;
  report.passed = true;
  for (std::uint64_t x = 0; x <= bound; ++x) {
    for (std::uint64_t y = 0; y <= bound; ++y) {
      ++report.pairs_checked;
      if ((x + y) % a == 0 && x % a == 0 && y % a != 0) {
        report.passed = false;
        report.counterexample_x = x;
        report.counterexample_y = y;
        return report;
      }
    }
  }
  return report;
}

namespace {

/// Is v = i*a + j*b for nonnegative i, j? Everything at or above the
/// Frobenius bound (a-1)(b-1) is, for coprime a, b.
bool sum_member(std::uint64_t v, std::uint64_t a, std::uint64_t b) {
  if (v >= (a - 1) * (b - 1)) return true;
  for (std::uint64_t j = 0; j * b <= v; ++j) {
    if ((v - j * b) % a == 0) return true;
  }
  return false;
}

}  // namespace

bool SumNotKCertificate::validate(std::string* why) const {
  auto fail = [why](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (a < 2 || b < 2 || std::gcd(a, b) != 1) {
    return fail("generators must be coprime and at least 2");
  }
  if (x_i * a + x_j * b != x) {
    return fail("stated decomposition of x does not reproduce it");
  }
  if (sum_i * a + sum_j * b != x + y) {
    return fail("stated decomposition of x + y does not reproduce it");
  }
  if (!sum_member(x, a, b)) return fail("x is not a member");
  if (sum_member(y, a, b)) {
    return fail("y = " + std::to_string(y) + " is a member after all");
  }
  if (!sum_member(x + y, a, b)) return fail("x + y is not a member");
  if (!principal_k_check(a, 1000).passed) {
    return fail("multiples of a fail bounded subtractivity");
  }
  if (!principal_k_check(b, 1000).passed) {
    return fail("multiples of b fail bounded subtractivity");
  }
  if (why) *why = "all claims verified";
  return true;
}

SumNotKCertificate sum_not_k_witness(std::uint64_t a, std::uint64_t b) {
  if (a < 2 || b < 2) {
    throw InputError("sum_not_k_witness requires generators >= 2");
  }
  if (std::gcd(a, b) != 1) {
    throw NotCoprime("generators " + std::to_string(a) + " and " +
                     std::to_string(b) + " share the factor " +
                     std::to_string(std::gcd(a, b)));
  }
  SumNotKCertificate cert;
  cert.a = a;
  cert.b = b;
  // Smallest positive non-member, then the smallest positive member whose
  // sum with it lands back inside.
  std::uint64_t y = 1;
  while (sum_member(y, a, b)) ++y;
  cert.y = y;
  std::uint64_t x = 1;
  while (!(sum_member(x, a, b) && sum_member(x + y, a, b))) ++x;
  cert.x = x;
  auto decompose = [&](std::uint64_t v, std::uint64_t& out_i,
                       std::uint64_t& out_j) {
    for (std::uint64_t i = 0; i * a <= v; ++i) {
      if ((v - i * a) % b == 0) {
        out_i = i;
        out_j = (v - i * a) / b;
        return;
      }
    }
    throw std::logic_error("member " + std::to_string(v) +
                           " has no decomposition");
  };
  decompose(cert.x, cert.x_i, cert.x_j);
  decompose(cert.x + cert.y, cert.sum_i, cert.sum_j);
  return cert;
}

}  // namespace kdecomp
