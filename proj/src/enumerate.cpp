#include "kdecomp/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace kdecomp {

namespace {

constexpr std::uint8_t kUnset = 0xFF;

/// Partial-table associativity check: every triple whose four lookups are
/// all defined must associate. Tables are n*n row-major with kUnset holes.
bool associative_so_far(const std::vector<std::uint8_t>& t, int n) {
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::uint8_t ab = t[a * n + b];
      if (ab == kUnset) continue;
      for (int c = 0; c < n; ++c) {
        std::uint8_t bc = t[b * n + c];
        if (bc == kUnset) continue;
        std::uint8_t ab_c = t[ab * n + c];
        std::uint8_t a_bc = t[a * n + bc];
        if (ab_c == kUnset || a_bc == kUnset) continue;
        if (ab_c != a_bc) return false;
      }
    }
  }
  return true;
}

/// Distributivity on partial multiplication tables over a complete
/// addition table (one side suffices: mul is symmetric by construction).
bool distributive_so_far(const std::vector<std::uint8_t>& mul,
                         const std::vector<std::uint8_t>& add, int n) {
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      std::uint8_t ab = mul[a * n + b];
      if (ab == kUnset) continue;
      for (int c = 0; c < n; ++c) {
        std::uint8_t ac = mul[a * n + c];
        if (ac == kUnset) continue;
        std::uint8_t a_bc = mul[a * n + add[b * n + c]];
        if (a_bc == kUnset) continue;
        if (a_bc != add[ab * n + ac]) return false;
      }
    }
  }
  return true;
}

struct Generator {
  int n;
  const EnumerationOptions& options;
  const std::function<void(const Semiring&)>& sink;
  std::vector<std::uint8_t> add;
  std::vector<std::uint8_t> mul;
  std::vector<std::pair<int, int>> add_cells;  // upper triangle, row-major
  std::vector<std::pair<int, int>> mul_cells;
  long long sequence = 0;

  Generator(int order, const EnumerationOptions& opts,
            const std::function<void(const Semiring&)>& s)
      : n(order), options(opts), sink(s) {
    add.assign(static_cast<std::size_t>(n) * n, kUnset);
    mul.assign(static_cast<std::size_t>(n) * n, kUnset);
    for (int j = 0; j < n; ++j) {  // identity 0 for addition
      add[0 * n + j] = static_cast<std::uint8_t>(j);
      add[j * n + 0] = static_cast<std::uint8_t>(j);
    }
    for (int j = 0; j < n; ++j) {  // absorbing 0 and identity 1
      mul[0 * n + j] = 0;
      mul[j * n + 0] = 0;
      mul[1 * n + j] = static_cast<std::uint8_t>(j);
      mul[j * n + 1] = static_cast<std::uint8_t>(j);
    }
    for (int i = 1; i < n; ++i) {
      for (int j = i; j < n; ++j) add_cells.emplace_back(i, j);
    }
    for (int i = 2; i < n; ++i) {
      for (int j = i; j < n; ++j) mul_cells.emplace_back(i, j);
    }
  }

  void fill_add(std::size_t cell) {
    if (cell == add_cells.size()) {
      fill_mul(0);
      return;
    }
    auto [i, j] = add_cells[cell];
    for (int v = 0; v < n; ++v) {
      add[i * n + j] = static_cast<std::uint8_t>(v);
      add[j * n + i] = static_cast<std::uint8_t>(v);
      if (associative_so_far(add, n)) fill_add(cell + 1);
    }
    add[i * n + j] = kUnset;
    add[j * n + i] = kUnset;
  }

  void fill_mul(std::size_t cell) {
    if (cell == mul_cells.size()) {
      emit();
      return;
    }
    auto [i, j] = mul_cells[cell];
    for (int v = 0; v < n; ++v) {
      mul[i * n + j] = static_cast<std::uint8_t>(v);
      mul[j * n + i] = static_cast<std::uint8_t>(v);
      if (associative_so_far(mul, n) && distributive_so_far(mul, add, n)) {
        fill_mul(cell + 1);
      }
    }
    mul[i * n + j] = kUnset;
    mul[j * n + i] = kUnset;
  }

  void emit() {
    Table add_rows(n, std::vector<int>(n));
    Table mul_rows(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        add_rows[i][j] = add[i * n + j];
        mul_rows[i][j] = mul[i * n + j];
      }
    }
    Semiring s = FiniteSemiring::validate(
        std::to_string(n) + "_" + std::to_string(sequence), add_rows,
        mul_rows);
    if (options.up_to_iso) {
      IsoClass iso = canonicalize(s);
      if (iso.canonical_add != s->add_table() ||
          iso.canonical_mul != s->mul_table()) {
        return;  // not the least-labeled member of its class
      }
    }
    ++sequence;
    sink(s);
  }
};

}  // namespace

void enumerate_semirings(int order, const EnumerationOptions& options,
                         const std::function<void(const Semiring&)>& sink) {
  if (order < 2 || order > FiniteSemiring::kMaxOrder) {
    throw OrderTooLarge("enumeration order must be in [2, " +
                        std::to_string(FiniteSemiring::kMaxOrder) +
                        "], got " + std::to_string(order));
  }
  if (order > 4 && !options.allow_large) {
    throw OrderTooLarge(
        "exhaustive enumeration is capped at order 4; pass the override to "
        "search order " +
        std::to_string(order));
  }
  Generator gen(order, options, sink);
  gen.fill_add(0);
}

std::vector<Semiring> enumerate_semirings(int order,
                                          const EnumerationOptions& options) {
  std::vector<Semiring> out;
  enumerate_semirings(order, options,
                      [&out](const Semiring& s) { out.push_back(s); });
  return out;
}

IsoClass canonicalize(const Semiring& s) {
  const int n = s->order();
  if (n > 10) {
    throw OrderTooLarge(
        "canonicalize enumerates (order-2)! permutations; order " +
        std::to_string(n) + " is beyond the supported range");
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> tail(perm.begin() + 2, perm.end());

  std::vector<std::uint8_t> best_add = s->add_table();
  std::vector<std::uint8_t> best_mul = s->mul_table();
  std::vector<std::uint8_t> cand_add(best_add.size());
  std::vector<std::uint8_t> cand_mul(best_mul.size());
  do {
    std::copy(tail.begin(), tail.end(), perm.begin() + 2);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        cand_add[perm[i] * n + perm[j]] =
            static_cast<std::uint8_t>(perm[s->add_table()[i * n + j]]);
        cand_mul[perm[i] * n + perm[j]] =
            static_cast<std::uint8_t>(perm[s->mul_table()[i * n + j]]);
      }
    }
    if (cand_add < best_add ||
        (cand_add == best_add && cand_mul < best_mul)) {
      best_add = cand_add;
      best_mul = cand_mul;
    }
  } while (std::next_permutation(tail.begin(), tail.end()));

  IsoClass iso;
  iso.canonical_add = best_add;
  iso.canonical_mul = best_mul;
  Table add_rows(n, std::vector<int>(n));
  Table mul_rows(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      add_rows[i][j] = best_add[i * n + j];
      mul_rows[i][j] = best_mul[i * n + j];
    }
  }
  iso.representative =
      FiniteSemiring::validate(s->name(), add_rows, mul_rows);
  return iso;
}

}  // namespace kdecomp
