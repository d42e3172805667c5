#ifndef KDECOMP_ERRORS_HPP
#define KDECOMP_ERRORS_HPP

#include <array>
#include <stdexcept>
#include <string>

namespace kdecomp {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input: bad table shape, bad .srs file, bad CLI arguments.
/// Maps to CLI exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Table shape or entry-range problems detected before axiom checking.
class InvalidTables : public InputError {
 public:
  using InputError::InputError;
};

/// .srs parse failure (wrong counts, unknown directive, range error).
class SrsParseError : public InputError {
 public:
  using InputError::InputError;
};

/// A semiring axiom failed. Carries the axiom id and the witness elements
/// (unused slots are -1).
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::array<int, 3> witness,
                 const std::string& detail)
      : Error("axiom " + axiom + " violated: " + detail),
        axiom_(std::move(axiom)),
        witness_(witness) {}
  const std::string& axiom() const noexcept { return axiom_; }
  const std::array<int, 3>& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::array<int, 3> witness_;
};

/// Multiplication is not commutative (only commutative semirings are
/// accepted).
class NotCommutative : public Error {
 public:
  NotCommutative(int a, int b, const std::string& detail)
      : Error("multiplication not commutative: " + detail), a_(a), b_(b) {}
  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }

 private:
  int a_;
  int b_;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Two ideals (or an ideal and an element) from structurally different
/// semirings were combined.
class CarrierMismatch : public Error {
 public:
  using Error::Error;
};

class NotAnIdeal : public Error {
 public:
  using Error::Error;
};

class NotKIdeal : public Error {
 public:
  using Error::Error;
};

class NotProper : public Error {
 public:
  using Error::Error;
};

/// k_closure produced a set that is not a k-ideal. Provably impossible;
/// thrown only to surface an implementation discrepancy loudly.
class ClosureNotKIdeal : public Error {
 public:
  using Error::Error;
};

/// A primary ideal whose radical is not prime.
class RadicalNotPrime : public Error {
 public:
  using Error::Error;
};

/// A k-irreducible component failed the primary test. The most important
/// possible finding of the verification engine; carries the full witness.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// Intersection of same-radical primaries failed the primary re-check
/// during reduction.
class GroupNotPrimary : public Error {
 public:
  using Error::Error;
};

class OrderTooLarge : public Error {
 public:
  using Error::Error;
};

class SearchSpaceTooLarge : public Error {
 public:
  using Error::Error;
};

class ZeroDivisor : public Error {
 public:
  using Error::Error;
};

class NotCoprime : public Error {
 public:
  using Error::Error;
};

/// An identity that the underlying proof establishes rigorously failed on a
/// concrete instance while replaying it.
class StepFailed : public Error {
 public:
  StepFailed(std::string step, const std::string& detail)
      : Error("proof step '" + step + "' failed: " + detail),
        step_(std::move(step)) {}
  const std::string& step() const noexcept { return step_; }

 private:
  std::string step_;
};

}  // namespace kdecomp

#endif  // KDECOMP_ERRORS_HPP
