#ifndef KDECOMP_SRS_HPP
#define KDECOMP_SRS_HPP

#include <iosfwd>
#include <string>

#include "kdecomp/semiring.hpp"

namespace kdecomp {

/// Parses the .srs semiring table format:
///
///   # comment (anywhere; runs to end of line)
///   semiring NAME
///   order N
///   add
///   <N rows of N whitespace-separated entries>
///   mul
///   <N rows of N whitespace-separated entries>
///
/// Parsing is strict: wrong directive order, wrong row/entry counts,
/// non-integer or out-of-range entries, and trailing content all raise
/// SrsParseError (with the line number). The parsed tables then go through
/// full axiom validation, so semiring axiom failures surface as
/// AxiomViolation / NotCommutative rather than parse errors.
Semiring parse_srs(std::istream& in, const std::string& source_name);

Semiring parse_srs_string(const std::string& text,
                          const std::string& source_name = "<string>");

Semiring load_srs_file(const std::string& path);

/// Canonical .srs rendering; parse_srs_string(to_srs(s)) reproduces s
/// exactly (same name, same tables).
std::string to_srs(const FiniteSemiring& s);

}  // namespace kdecomp

#endif  // KDECOMP_SRS_HPP
