// Python bindings for the semiring ideal toolkit: table validation, ideal
// lattices, closure/radical/colon operators, classification, primary
// decomposition, census enumeration, and the natural-number certificates.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kdecomp/classify.hpp"
#include "kdecomp/decompose.hpp"
#include "kdecomp/enumerate.hpp"
#include "kdecomp/errors.hpp"
#include "kdecomp/ideal.hpp"
#include "kdecomp/natpoly.hpp"
#include "kdecomp/semiring.hpp"
#include "kdecomp/srs.hpp"
#include "kdecomp/verify.hpp"

namespace py = pybind11;
using namespace kdecomp;

namespace {

using SemiringHandle = std::shared_ptr<FiniteSemiring>;

SemiringHandle unconst(const Semiring& s) {
  return std::const_pointer_cast<FiniteSemiring>(s);
}

SubsetMask to_mask(const FiniteSemiring& s, const std::vector<int>& elements) {
  SubsetMask mask = 0;
  for (int e : elements) {
    if (e < 0 || e >= s.order()) {
      throw IndexOutOfRange("element index " + std::to_string(e) +
                            " out of range for order " +
                            std::to_string(s.order()));
    }
    mask |= SubsetMask{1} << e;
  }
  return mask;
}

py::dict flags_dict(const StructuralFlags& f) {
  py::dict d;
  d["cancellative"] = f.additively_cancellative;
  d["yoked"] = f.yoked;
  d["zerosumfree"] = f.zerosumfree;
  d["ring"] = f.is_ring;
  return d;
}

py::dict finding_dict(const Finding& f) {
  py::dict d;
  d["id"] = f.id;
  d["subject"] = f.subject;
  d["detail"] = f.detail;
  return d;
}

}  // namespace

PYBIND11_MODULE(_kdecomp, m) {
  m.doc() = "finite commutative semiring ideal toolkit";

  py::register_exception<Error>(m, "KdecompError");

  py::class_<FiniteSemiring, SemiringHandle>(m, "Semiring")
      .def_property_readonly("name", &FiniteSemiring::name)
      .def_property_readonly("order", &FiniteSemiring::order)
      .def("add", &FiniteSemiring::add)
      .def("mul", &FiniteSemiring::mul)
      .def("pow", &FiniteSemiring::pow)
      .def_property_readonly(
          "flags", [](const FiniteSemiring& s) { return flags_dict(s.flags()); })
      .def_property_readonly(
          "structure_hash",
          [](const FiniteSemiring& s) {
            char buf[17];
            std::snprintf(buf, sizeof(buf), "%016llx",
                          static_cast<unsigned long long>(s.structure_hash()));
            return std::string(buf);
          })
      .def("to_srs", [](const FiniteSemiring& s) { return to_srs(s); })
      .def("__repr__", [](const FiniteSemiring& s) {
        return "<Semiring " + s.name() + " order " +
               std::to_string(s.order()) + ">";
      });

  m.def(
      "validate",
      [](const std::string& name, const Table& add, const Table& mul) {
        return unconst(FiniteSemiring::validate(name, add, mul));
      },
      py::arg("name"), py::arg("add"), py::arg("mul"),
      "Check the axioms exhaustively and return the semiring.");

  m.def(
      "load",
      [](const std::string& path) { return unconst(load_srs_file(path)); },
      py::arg("path"));

  m.def(
      "parse",
      [](const std::string& text, const std::string& source) {
        return unconst(parse_srs_string(text, source));
      },
      py::arg("text"), py::arg("source") = "<string>");

  m.def(
      "ideals",
      [](const SemiringHandle& s, bool k_only) {
        const IdealLattice& lat = s->lattice();
        const auto& masks = k_only ? lat.k_ideals : lat.ideals;
        std::vector<std::vector<int>> out;
        out.reserve(masks.size());
        for (SubsetMask mask : masks) out.push_back(mask_elements(mask));
        return out;
      },
      py::arg("semiring"), py::arg("k_only") = false);

  m.def(
      "is_ideal",
      [](const SemiringHandle& s, const std::vector<int>& elements) {
        return mask_is_ideal(*s, to_mask(*s, elements));
      },
      py::arg("semiring"), py::arg("elements"));

  m.def(
      "is_k_ideal",
      [](const SemiringHandle& s, const std::vector<int>& elements) {
        return mask_is_k_ideal(*s, to_mask(*s, elements));
      },
      py::arg("semiring"), py::arg("elements"));

  m.def(
      "k_closure",
      [](const SemiringHandle& s, const std::vector<int>& elements) {
        return k_closure(Ideal(s, to_mask(*s, elements))).elements();
      },
      py::arg("semiring"), py::arg("elements"));

  m.def(
      "radical",
      [](const SemiringHandle& s, const std::vector<int>& elements) {
        return radical(Ideal(s, to_mask(*s, elements))).elements();
      },
      py::arg("semiring"), py::arg("elements"));

  m.def(
      "colon",
      [](const SemiringHandle& s, const std::vector<int>& elements, int x) {
        return colon(Ideal(s, to_mask(*s, elements)), x).elements();
      },
      py::arg("semiring"), py::arg("elements"), py::arg("x"));

  m.def(
      "classify",
      [](const SemiringHandle& s, const std::vector<int>& elements) {
        IdealClass c = classify_ideal(Ideal(s, to_mask(*s, elements)));
        py::dict d;
        d["proper"] = c.proper;
        d["is_k"] = c.is_k;
        d["prime"] = c.prime;
        d["primary"] = c.primary;
        d["radical"] = mask_elements(c.radical_bits);
        if (c.k_irreducible) {
          d["k_irreducible"] = *c.k_irreducible;
        } else {
          d["k_irreducible"] = py::none();
        }
        return d;
      },
      py::arg("semiring"), py::arg("elements"));

  m.def(
      "decompose",
      [](const SemiringHandle& s, const std::vector<int>& elements) {
        Ideal ideal(s, to_mask(*s, elements));
        DecompositionResult res = primary_decomposition(ideal);
        py::list components;
        py::list radicals;
        for (std::size_t i = 0; i < res.components.size(); ++i) {
          components.append(res.components[i].elements());
          radicals.append(res.radicals[i].elements());
        }
        py::list primes;
        for (const AssociatedPrime& p : associated_primes(ideal)) {
          py::dict entry;
          entry["prime"] = p.prime.elements();
          entry["witness"] = p.witness;
          primes.append(entry);
        }
        py::dict d;
        d["input"] = mask_elements(res.input);
        d["components"] = components;
        d["radicals"] = radicals;
        d["reduced"] = res.reduced;
        d["associated_primes"] = primes;
        return d;
      },
      py::arg("semiring"), py::arg("elements"));

  m.def(
      "verify",
      [](const SemiringHandle& s) {
        VerificationReport v = verify_semiring(s);
        py::list findings;
        for (const Finding& f : v.findings) findings.append(finding_dict(f));
        py::list notes;
        for (const Finding& f : v.notes) notes.append(finding_dict(f));
        py::dict d;
        d["name"] = v.semiring_name;
        d["order"] = v.order;
        d["flags"] = flags_dict(v.flags);
        d["passed"] = v.passed();
        d["findings"] = findings;
        d["notes"] = notes;
        py::dict counts;
        counts["ideals"] = v.ideal_count;
        counts["k_ideals"] = v.k_ideal_count;
        counts["proper_k"] = v.proper_k_ideal_count;
        counts["primary"] = v.primary_count;
        counts["prime"] = v.prime_count;
        counts["k_irreducible"] = v.k_irreducible_count;
        d["counts"] = counts;
        return d;
      },
      py::arg("semiring"));

  m.def(
      "enumerate_semirings",
      [](int order, bool iso) {
        EnumerationOptions options;
        options.up_to_iso = iso;
        std::vector<SemiringHandle> out;
        enumerate_semirings(order, options, [&](const Semiring& s) {
          out.push_back(unconst(s));
        });
        return out;
      },
      py::arg("order"), py::arg("iso") = true);

  // Natural-number and polynomial certificates.
  m.def("poly_to_string", [](const std::vector<std::uint64_t>& coeffs) {
    return NatPoly(coeffs).to_string();
  });

  m.def(
      "principal_membership",
      [](const std::vector<std::uint64_t>& f,
         const std::vector<std::uint64_t>& g)
          -> std::optional<std::vector<std::uint64_t>> {
        std::optional<NatPoly> h =
            principal_membership(NatPoly(f), NatPoly(g));
        if (!h) return std::nullopt;
        return h->coeffs();
      },
      py::arg("f"), py::arg("g"));

  m.def(
      "yoked_difference",
      [](const std::vector<std::uint64_t>& f,
         const std::vector<std::uint64_t>& g)
          -> std::optional<std::vector<std::uint64_t>> {
        std::optional<NatPoly> h = yoked_pair_check(NatPoly(f), NatPoly(g));
        if (!h) return std::nullopt;
        return h->coeffs();
      },
      py::arg("f"), py::arg("g"));

  m.def("golan_certificate", [] {
    PrincipalNotKCertificate cert = principal_not_k_witness();
    std::string why;
    py::dict d;
    d["g"] = cert.g.to_string();
    d["u"] = cert.u.to_string();
    d["v"] = cert.v.to_string();
    d["w"] = cert.w.to_string();
    d["u_cofactor"] = cert.u_cofactor.to_string();
    d["v_cofactor"] = cert.v_cofactor.to_string();
    d["valid"] = cert.validate(&why);
    return d;
  });

  m.def(
      "sum_witness",
      [](std::uint64_t a, std::uint64_t b) {
        SumNotKCertificate cert = sum_not_k_witness(a, b);
        std::string why;
        py::dict d;
        d["a"] = cert.a;
        d["b"] = cert.b;
        d["x"] = cert.x;
        d["y"] = cert.y;
        d["valid"] = cert.validate(&why);
        return d;
      },
      py::arg("a") = 2, py::arg("b") = 3);

  m.def(
      "principal_k_check",
      [](std::uint64_t a, std::uint64_t bound) {
        BoundedSubtractivityReport rep = principal_k_check(a, bound);
        py::dict d;
        d["a"] = rep.a;
        d["bound"] = rep.bound;
        d["pairs_checked"] = rep.pairs_checked;
        d["passed"] = rep.passed;
        return d;
      },
      py::arg("a"), py::arg("bound"));
}
