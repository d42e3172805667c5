#include <vector>

#include "doctest.h"
#include "kdecomp/classify.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace kdecomp;

namespace {

std::vector<Semiring> all_fixtures() {
  return {fixtures::boolean(), fixtures::z2(),  fixtures::chain3(),
          fixtures::z4(),      fixtures::bxb(), fixtures::sat3()};
}

}  // namespace

TEST_CASE("prime ideals") {
  Semiring p = fixtures::bxb();
  CHECK(is_prime(Ideal(p, 0b1001)));        // B x 0
  CHECK(is_prime(Ideal(p, 0b0101)));        // 0 x B
  CHECK_FALSE(is_prime(zero_ideal(p)));     // (0,1)*(1,0) = (0,0)
  CHECK_FALSE(is_prime(zero_ideal(fixtures::z4())));  // 2*2 = 0
  // The whole semiring is never prime (properness is part of the notion).
  for (const Semiring& s : all_fixtures()) {
    CHECK_FALSE(is_prime(unit_ideal(s)));
    CHECK_FALSE(is_primary(unit_ideal(s)));
  }
}

TEST_CASE("primary ideals") {
  Semiring z4 = fixtures::z4();
  CHECK(is_primary(zero_ideal(z4)));
  CHECK(radical(zero_ideal(z4)).bits() == 0b0101);
  CHECK_FALSE(is_primary(zero_ideal(fixtures::bxb())));

  SUBCASE("prime implies primary on every fixture ideal") {
    for (const Semiring& s : all_fixtures()) {
      for (const Ideal& i : all_ideals(s)) {
        if (is_prime(i)) CHECK(is_primary(i));
      }
    }
  }
  SUBCASE("agreement with the by-definition oracle") {
    for (const Semiring& s : all_fixtures()) {
      for (const Ideal& i : all_ideals(s)) {
        CHECK(is_primary(i) == oracles::primary_by_definition(*s, i.bits()));
      }
    }
  }
}

TEST_CASE("primary radical is prime, and guarded") {
  Semiring z4 = fixtures::z4();
  Ideal rad = primary_radical(zero_ideal(z4));
  CHECK(rad.bits() == 0b0101);
  CHECK(is_prime(rad));
  CHECK(is_p_primary(zero_ideal(z4), rad));
  CHECK_FALSE(is_p_primary(zero_ideal(z4), zero_ideal(z4)));
  CHECK_THROWS_AS(primary_radical(zero_ideal(fixtures::bxb())), Error);
  // Prime ideals are their own radical.
  for (const Semiring& s : all_fixtures()) {
    for (const Ideal& i : all_ideals(s)) {
      if (!is_prime(i)) continue;
      CHECK(radical(i).bits() == i.bits());
      CHECK(primary_radical(i).bits() == i.bits());
    }
  }
}

TEST_CASE("k-irreducibility") {
  CHECK_FALSE(is_k_irreducible(zero_ideal(fixtures::bxb())));
  CHECK(is_k_irreducible(Ideal(fixtures::chain3(), 0b101)));
  CHECK(is_k_irreducible(Ideal(fixtures::z4(), 0b0101)));
  CHECK(is_k_irreducible(zero_ideal(fixtures::z4())));

  SUBCASE("domain guards") {
    CHECK_THROWS_AS(is_k_irreducible(unit_ideal(fixtures::z4())), NotProper);
    CHECK_THROWS_AS(is_k_irreducible(Ideal(fixtures::sat3(), 0b101)),
                    NotKIdeal);
  }
  SUBCASE("agreement with the pair-scan oracle") {
    for (const Semiring& s : all_fixtures()) {
      for (const Ideal& i : all_k_ideals(s)) {
        if (!i.proper()) continue;
        CHECK(is_k_irreducible(i) ==
              oracles::k_irreducible_pairscan(*s, i.bits()));
      }
    }
  }
}

TEST_CASE("classification records") {
  SUBCASE("Z4 zero ideal") {
    IdealClass c = classify_ideal(zero_ideal(fixtures::z4()));
    CHECK(c.proper);
    CHECK(c.is_k);
    CHECK_FALSE(c.prime);
    CHECK(c.primary);
    CHECK(c.radical_bits == 0b0101);
    REQUIRE(c.k_irreducible.has_value());
    CHECK(*c.k_irreducible);
  }
  SUBCASE("whole semiring") {
    IdealClass c = classify_ideal(unit_ideal(fixtures::z4()));
    CHECK_FALSE(c.proper);
    CHECK_FALSE(c.prime);
    CHECK_FALSE(c.primary);
    CHECK_FALSE(c.k_irreducible.has_value());
  }
  SUBCASE("proper non-subtractive ideal leaves irreducibility undefined") {
    IdealClass c = classify_ideal(Ideal(fixtures::sat3(), 0b101));
    CHECK(c.proper);
    CHECK_FALSE(c.is_k);
    CHECK_FALSE(c.k_irreducible.has_value());
  }
  SUBCASE("prime implies primary with the ideal as its own radical") {
    IdealClass c = classify_ideal(Ideal(fixtures::bxb(), 0b1001));
    CHECK(c.prime);
    CHECK(c.primary);
    CHECK(c.radical_bits == 0b1001);
  }
}

TEST_CASE("colon bracketing laws for primary ideals") {
  SUBCASE("Z4, Q = {0}, x = 2") {
    ColonPrimaryReport rep = colon_primary_report(zero_ideal(fixtures::z4()), 2);
    CHECK(rep.colon_bits == 0b0101);
    CHECK(rep.colon_is_primary);
    CHECK(rep.radical_bits == 0b0101);
    CHECK(rep.radical_matches);
    CHECK(rep.passed);
  }
  SUBCASE("x inside Q gives the whole semiring") {
    ColonPrimaryReport rep = colon_primary_report(zero_ideal(fixtures::z4()), 0);
    CHECK(rep.colon_bits == 0b1111);
    CHECK(rep.passed);
  }
  SUBCASE("B, Q = {0}, x = 1") {
    ColonPrimaryReport rep =
        colon_primary_report(zero_ideal(fixtures::boolean()), 1);
    CHECK(rep.colon_bits == 0b01);
    CHECK(rep.colon_is_primary);
    CHECK(rep.passed);
  }
  SUBCASE("full sweep over every primary ideal of every fixture") {
    for (const Semiring& s : all_fixtures()) {
      for (const Ideal& q : all_ideals(s)) {
        if (!is_primary(q)) continue;
        const SubsetMask rad = radical(q).bits();
        for (int x = 0; x < s->order(); ++x) {
          ColonPrimaryReport rep = colon_primary_report(q, x);
          CHECK(rep.passed);
          if (q.contains(x)) {
            CHECK(rep.colon_bits == full_mask(s->order()));
          } else if (!((rad >> x) & 1u)) {
            // Outside the radical: the colon collapses back to Q.
            CHECK(rep.colon_bits == q.bits());
          }
        }
      }
    }
  }
}
