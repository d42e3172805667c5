#include "kdecomp/semiring.hpp"

#include <sstream>

#include "kdecomp/ideal.hpp"

namespace kdecomp {

namespace {

std::uint64_t fnv1a64(std::uint64_t h, const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;

}  // namespace

FiniteSemiring::FiniteSemiring(std::string name, int order,
                               std::vector<std::uint8_t> add,
                               std::vector<std::uint8_t> mul)
    : name_(std::move(name)),
      order_(order),
      add_(std::move(add)),
      mul_(std::move(mul)) {
  std::uint8_t n = static_cast<std::uint8_t>(order_);
  std::uint64_t h = fnv1a64(kFnvOffset, &n, 1);
  h = fnv1a64(h, add_.data(), add_.size());
  h = fnv1a64(h, mul_.data(), mul_.size());
  hash_ = h;
}

FiniteSemiring::~FiniteSemiring() = default;

Semiring FiniteSemiring::validate(std::string name, const Table& add,
                                  const Table& mul) {
  const std::size_t n = add.size();
  if (n < 2) {
    throw InvalidTables("semiring order must be at least 2, got " +
                        std::to_string(n));
  }
  if (n > static_cast<std::size_t>(kMaxOrder)) {
    throw InvalidTables("semiring order " + std::to_string(n) +
                        " exceeds the supported maximum of " +
                        std::to_string(kMaxOrder));
  }
  if (mul.size() != n) {
    throw InvalidTables("addition table has " + std::to_string(n) +
                        " rows but multiplication table has " +
                        std::to_string(mul.size()));
  }
  for (const Table* t : {&add, &mul}) {
    const char* which = (t == &add) ? "addition" : "multiplication";
    for (std::size_t i = 0; i < n; ++i) {
      if ((*t)[i].size() != n) {
        throw InvalidTables(std::string(which) + " table row " +
                            std::to_string(i) + " has " +
                            std::to_string((*t)[i].size()) +
                            " entries, expected " + std::to_string(n));
      }
      for (std::size_t j = 0; j < n; ++j) {
        int v = (*t)[i][j];
        if (v < 0 || v >= static_cast<int>(n)) {
          throw InvalidTables(std::string(which) + " table entry [" +
                              std::to_string(i) + "][" + std::to_string(j) +
                              "] = " + std::to_string(v) +
                              " is outside [0, " + std::to_string(n) + ")");
        }
      }
    }
  }

  const int order = static_cast<int>(n);
  auto A = [&](int a, int b) { return add[a][b]; };
  auto M = [&](int a, int b) { return mul[a][b]; };

  // Additive identity: 0 + a = a + 0 = a.
  for (int a = 0; a < order; ++a) {
    if (A(0, a) != a || A(a, 0) != a) {
      throw AxiomViolation("add-identity", {a, -1, -1},
                           "0+" + std::to_string(a) + "=" +
                               std::to_string(A(0, a)) + ", " +
                               std::to_string(a) + "+0=" +
                               std::to_string(A(a, 0)));
    }
  }
  // Additive commutativity.
  for (int a = 0; a < order; ++a) {
    for (int b = a + 1; b < order; ++b) {
      if (A(a, b) != A(b, a)) {
        throw AxiomViolation(
            "add-commutative", {a, b, -1},
            std::to_string(a) + "+" + std::to_string(b) + "=" +
                std::to_string(A(a, b)) + " but " + std::to_string(b) + "+" +
                std::to_string(a) + "=" + std::to_string(A(b, a)));
      }
    }
  }
  // Additive associativity.
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      for (int c = 0; c < order; ++c) {
        if (A(A(a, b), c) != A(a, A(b, c))) {
          throw AxiomViolation(
              "add-associative", {a, b, c},
              "(" + std::to_string(a) + "+" + std::to_string(b) + ")+" +
                  std::to_string(c) + "=" + std::to_string(A(A(a, b), c)) +
                  " but " + std::to_string(a) + "+(" + std::to_string(b) +
                  "+" + std::to_string(c) + ")=" +
                  std::to_string(A(a, A(b, c))));
        }
      }
    }
  }
  // Multiplicative identity: 1 * a = a * 1 = a.
  for (int a = 0; a < order; ++a) {
    if (M(1, a) != a || M(a, 1) != a) {
      throw AxiomViolation("mul-identity", {a, -1, -1},
                           "1*" + std::to_string(a) + "=" +
                               std::to_string(M(1, a)) + ", " +
                               std::to_string(a) + "*1=" +
                               std::to_string(M(a, 1)) + ", expected " +
                               std::to_string(a));
    }
  }
  // Multiplicative associativity.
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      for (int c = 0; c < order; ++c) {
        if (M(M(a, b), c) != M(a, M(b, c))) {
          throw AxiomViolation(
              "mul-associative", {a, b, c},
              "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                  std::to_string(c) + "=" + std::to_string(M(M(a, b), c)) +
                  " but " + std::to_string(a) + "*(" + std::to_string(b) +
                  "*" + std::to_string(c) + ")=" +
                  std::to_string(M(a, M(b, c))));
        }
      }
    }
  }
  // Multiplicative commutativity (required: only commutative semirings are
  // modelled).
  for (int a = 0; a < order; ++a) {
    for (int b = a + 1; b < order; ++b) {
      if (M(a, b) != M(b, a)) {
        throw NotCommutative(
            a, b,
            std::to_string(a) + "*" + std::to_string(b) + "=" +
                std::to_string(M(a, b)) + " but " + std::to_string(b) + "*" +
                std::to_string(a) + "=" + std::to_string(M(b, a)));
      }
    }
  }
  // Distributivity on both sides.
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      for (int c = 0; c < order; ++c) {
        if (M(a, A(b, c)) != A(M(a, b), M(a, c))) {
          throw AxiomViolation(
              "distributive-left", {a, b, c},
              std::to_string(a) + "*(" + std::to_string(b) + "+" +
                  std::to_string(c) + ")=" + std::to_string(M(a, A(b, c))) +
                  " but " + std::to_string(a) + "*" + std::to_string(b) +
                  "+" + std::to_string(a) + "*" + std::to_string(c) + "=" +
                  std::to_string(A(M(a, b), M(a, c))));
        }
        if (M(A(b, c), a) != A(M(b, a), M(c, a))) {
          throw AxiomViolation(
              "distributive-right", {a, b, c},
              "(" + std::to_string(b) + "+" + std::to_string(c) + ")*" +
                  std::to_string(a) + "=" + std::to_string(M(A(b, c), a)) +
                  " but " + std::to_string(b) + "*" + std::to_string(a) +
                  "+" + std::to_string(c) + "*" + std::to_string(a) + "=" +
                  std::to_string(A(M(b, a), M(c, a))));
        }
      }
    }
  }
  // Zero absorbs: 0 * a = a * 0 = 0.
  for (int a = 0; a < order; ++a) {
    if (M(0, a) != 0 || M(a, 0) != 0) {
      throw AxiomViolation("zero-absorbing", {a, -1, -1},
                           "0*" + std::to_string(a) + "=" +
                               std::to_string(M(0, a)) + ", " +
                               std::to_string(a) + "*0=" +
                               std::to_string(M(a, 0)));
    }
  }

  std::vector<std::uint8_t> flat_add(n * n);
  std::vector<std::uint8_t> flat_mul(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      flat_add[i * n + j] = static_cast<std::uint8_t>(add[i][j]);
      flat_mul[i * n + j] = static_cast<std::uint8_t>(mul[i][j]);
    }
  }
  return Semiring(new FiniteSemiring(std::move(name), order,
                                     std::move(flat_add),
                                     std::move(flat_mul)));
}

ElementIndex FiniteSemiring::pow(ElementIndex a, int k) const {
  check_index(a);
  if (k < 1) {
    throw IndexOutOfRange("pow exponent must be >= 1, got " +
                          std::to_string(k));
  }
  ElementIndex r = a;
  for (int i = 1; i < k; ++i) {
    r = mul_[static_cast<std::size_t>(r) * order_ + a];
  }
  return r;
}

const StructuralFlags& FiniteSemiring::flags() const {
  std::call_once(flags_once_, [this] {
    const int n = order_;
    StructuralFlags f;
    f.additively_cancellative = true;
    for (int a = 0; a < n && f.additively_cancellative; ++a) {
      for (int x = 0; x < n && f.additively_cancellative; ++x) {
        for (int y = x + 1; y < n; ++y) {
          if (add_[a * n + x] == add_[a * n + y]) {
            f.additively_cancellative = false;
            break;
          }
        }
      }
    }
    f.yoked = true;
    for (int a = 0; a < n && f.yoked; ++a) {
      for (int b = 0; b < n && f.yoked; ++b) {
        bool found = false;
        for (int r = 0; r < n; ++r) {
          if (add_[a * n + r] == b || add_[b * n + r] == a) {
            found = true;
            break;
          }
        }
        if (!found) f.yoked = false;
      }
    }
    f.zerosumfree = true;
    for (int a = 0; a < n && f.zerosumfree; ++a) {
      for (int b = 0; b < n; ++b) {
        if (add_[a * n + b] == 0 && (a != 0 || b != 0)) {
          f.zerosumfree = false;
          break;
        }
      }
    }
    f.is_ring = true;
    for (int a = 0; a < n && f.is_ring; ++a) {
      bool inv = false;
      for (int b = 0; b < n; ++b) {
        if (add_[a * n + b] == 0) {
          inv = true;
          break;
        }
      }
      if (!inv) f.is_ring = false;
    }
    flags_cache_ = f;
  });
  return flags_cache_;
}

const IdealLattice& FiniteSemiring::lattice() const {
  std::call_once(lattice_once_, [this] {
    lattice_cache_ =
        std::make_unique<IdealLattice>(detail::compute_lattice(*this));
  });
  return *lattice_cache_;
}

std::string mask_to_string(SubsetMask mask) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (mask & (SubsetMask{1} << i)) {
      if (!first) out << ',';
      out << i;
      first = false;
    }
  }
  out << '}';
  return out.str();
}

std::vector<ElementIndex> mask_elements(SubsetMask mask) {
  std::vector<ElementIndex> out;
  for (int i = 0; i < 32; ++i) {
    if (mask & (SubsetMask{1} << i)) out.push_back(i);
  }
  return out;
}

}  // namespace kdecomp
