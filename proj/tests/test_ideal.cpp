#include <vector>

#include "doctest.h"
#include "kdecomp/ideal.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace kdecomp;

namespace {

std::vector<Semiring> all_fixtures() {
  return {fixtures::boolean(), fixtures::z2(),  fixtures::chain3(),
          fixtures::z4(),      fixtures::bxb(), fixtures::sat3()};
}

}  // namespace

TEST_CASE("ideal construction validates the defining properties") {
  Semiring z4 = fixtures::z4();
  CHECK_NOTHROW(Ideal(z4, 0b0101));                 // {0,2}
  CHECK_THROWS_AS(Ideal(z4, 0b0011), NotAnIdeal);   // {0,1}: 1+1=2 escapes
  CHECK_THROWS_AS(Ideal(z4, 0b0100), NotAnIdeal);   // {2}: no zero
  Semiring b = fixtures::boolean();
  CHECK_THROWS_AS(Ideal(b, 0b10), NotAnIdeal);      // {1}: no zero
}

TEST_CASE("ideal lattices of the fixtures are complete and correct") {
  // Independent subset scan against the library's lattice.
  for (const Semiring& s : all_fixtures()) {
    std::vector<SubsetMask> expected_ideals;
    std::vector<SubsetMask> expected_k;
    for (SubsetMask m = 1; m <= full_mask(s->order()); m += 2) {
      if (oracles::ideal_scan(*s, m)) expected_ideals.push_back(m);
      if (oracles::k_ideal_scan(*s, m)) expected_k.push_back(m);
    }
    std::vector<SubsetMask> got_ideals;
    for (const Ideal& i : all_ideals(s)) got_ideals.push_back(i.bits());
    std::vector<SubsetMask> got_k;
    for (const Ideal& i : all_k_ideals(s)) got_k.push_back(i.bits());
    CHECK(got_ideals == expected_ideals);
    CHECK(got_k == expected_k);
  }
}

TEST_CASE("specific ideal lattices") {
  // B: {0} and B, both subtractive.
  Semiring b = fixtures::boolean();
  CHECK(b->lattice().ideals == std::vector<SubsetMask>{0b01, 0b11});
  CHECK(b->lattice().k_ideals == std::vector<SubsetMask>{0b01, 0b11});

  // Chain 0 < 2 < 1: downsets {0}, {0,2}, C3, all subtractive.
  Semiring c3 = fixtures::chain3();
  CHECK(c3->lattice().ideals ==
        std::vector<SubsetMask>{0b001, 0b101, 0b111});
  CHECK(c3->lattice().k_ideals ==
        std::vector<SubsetMask>{0b001, 0b101, 0b111});

  // B x B with 2 = (0,1), 3 = (1,0): {0}, 0xB, Bx0, everything.
  Semiring p = fixtures::bxb();
  CHECK(p->lattice().ideals ==
        std::vector<SubsetMask>{0b0001, 0b0101, 0b1001, 0b1111});
  CHECK(p->lattice().k_ideals == p->lattice().ideals);

  // Saturated naturals: {0,2} is an ideal but not subtractive (1+2=2).
  Semiring sat = fixtures::sat3();
  CHECK(mask_is_ideal(*sat, 0b101));
  CHECK_FALSE(mask_is_k_ideal(*sat, 0b101));
  CHECK(sat->lattice().ideals ==
        std::vector<SubsetMask>{0b001, 0b101, 0b111});
  CHECK(sat->lattice().k_ideals == std::vector<SubsetMask>{0b001, 0b111});
}

TEST_CASE("generated ideals") {
  CHECK(generated_ideal(fixtures::boolean(), {1}).bits() == 0b11);
  // Chain: the middle element (index 2) generates the downset {0,2}.
  CHECK(generated_ideal(fixtures::chain3(), {2}).bits() == 0b101);
  CHECK(generated_ideal(fixtures::z4(), {2}).bits() == 0b0101);
  CHECK(generated_ideal(fixtures::z4(), {}).bits() == 0b0001);
  CHECK(generated_ideal(fixtures::bxb(), {2, 3}).bits() == 0b1111);
}

TEST_CASE("k-closure on the pinned examples") {
  SUBCASE("already subtractive inputs are fixed points") {
    for (const Semiring& s : all_fixtures()) {
      for (const Ideal& i : all_k_ideals(s)) {
        CHECK(k_closure(i).bits() == i.bits());
      }
    }
  }
  SUBCASE("B: closure of the zero ideal is itself") {
    CHECK(k_closure(zero_ideal(fixtures::boolean())).bits() == 0b01);
  }
  SUBCASE("Z4: {0,2} is already subtractive") {
    CHECK(k_closure(Ideal(fixtures::z4(), 0b0101)).bits() == 0b0101);
  }
  SUBCASE("saturated naturals: {0,2} closes up to everything") {
    // 1 + 2 = 2 with 2 in the ideal forces 1 into the closure.
    Ideal i(fixtures::sat3(), 0b101);
    CHECK_FALSE(i.is_k());
    Ideal closed = k_closure(i);
    CHECK(closed.bits() == 0b111);
    CHECK(closed.is_k());
  }
}

TEST_CASE("k-closure is the least k-ideal above, for every fixture ideal") {
  for (const Semiring& s : all_fixtures()) {
    for (const Ideal& i : all_ideals(s)) {
      CHECK(k_closure(i).bits() == oracles::least_k_ideal_above(*s, i.bits()));
    }
  }
}

TEST_CASE("closure-operator laws for k_closure and radical") {
  for (const Semiring& s : all_fixtures()) {
    std::vector<Ideal> ideals = all_ideals(s);
    for (const Ideal& i : ideals) {
      Ideal ci = k_closure(i);
      CHECK((ci.bits() & i.bits()) == i.bits());          // extensive
      CHECK(k_closure(ci).bits() == ci.bits());           // idempotent
      Ideal ri = radical(i);
      CHECK((ri.bits() & i.bits()) == i.bits());
      CHECK(radical(ri).bits() == ri.bits());
      for (const Ideal& j : ideals) {
        if ((i.bits() & j.bits()) != i.bits()) continue;  // need i <= j
        CHECK((k_closure(j).bits() & ci.bits()) == ci.bits());
        CHECK((radical(j).bits() & ri.bits()) == ri.bits());
      }
    }
  }
}

TEST_CASE("radical on the pinned examples and against the unbounded oracle") {
  CHECK(radical(zero_ideal(fixtures::z4())).bits() == 0b0101);
  CHECK(radical(zero_ideal(fixtures::boolean())).bits() == 0b01);
  // Chain: idempotent multiplication makes every ideal its own radical.
  CHECK(radical(Ideal(fixtures::chain3(), 0b101)).bits() == 0b101);
  for (const Semiring& s : all_fixtures()) {
    for (const Ideal& i : all_ideals(s)) {
      CHECK(radical(i).bits() == oracles::radical_unbounded(*s, i.bits()));
    }
  }
}

TEST_CASE("radical of an intersection of k-ideals") {
  for (const Semiring& s : all_fixtures()) {
    std::vector<Ideal> k = all_k_ideals(s);
    for (const Ideal& i : k) {
      for (const Ideal& j : k) {
        CHECK(radical(ideal_intersection(i, j)).bits() ==
              (radical(i).bits() & radical(j).bits()));
      }
    }
  }
}

TEST_CASE("sums and intersections") {
  Semiring p = fixtures::bxb();
  Ideal left(p, 0b1001);   // B x 0
  Ideal right(p, 0b0101);  // 0 x B
  CHECK(ideal_intersection(left, right).bits() == 0b0001);
  CHECK(ideal_sum(left, zero_ideal(p)).bits() == left.bits());
  CHECK(ideal_sum(left, right).bits() == 0b1111);

  Semiring c3 = fixtures::chain3();
  CHECK(ideal_sum(Ideal(c3, 0b101), zero_ideal(c3)).bits() == 0b101);

  // Intersections of k-ideals stay subtractive on every fixture.
  for (const Semiring& s : all_fixtures()) {
    for (const Ideal& i : all_k_ideals(s)) {
      for (const Ideal& j : all_k_ideals(s)) {
        CHECK(ideal_intersection(i, j).is_k());
      }
    }
  }
}

TEST_CASE("carrier mismatch is rejected even for equal orders") {
  Ideal b_zero = zero_ideal(fixtures::boolean());
  Ideal z_zero = zero_ideal(fixtures::z2());
  CHECK_THROWS_AS(ideal_sum(b_zero, z_zero), CarrierMismatch);
  CHECK_THROWS_AS((void)(b_zero == z_zero), CarrierMismatch);
}

TEST_CASE("colon ideals") {
  Semiring z4 = fixtures::z4();
  // x inside the ideal gives the whole semiring.
  for (const Semiring& s : all_fixtures()) {
    for (const Ideal& q : all_ideals(s)) {
      for (ElementIndex x : q.elements()) {
        CHECK(colon(q, x).bits() == full_mask(s->order()));
      }
      for (int x = 0; x < s->order(); ++x) {
        CHECK((colon(q, x).bits() & q.bits()) == q.bits());  // contains Q
      }
    }
  }
  CHECK(colon(zero_ideal(z4), 2).bits() == 0b0101);
  CHECK(colon(zero_ideal(fixtures::bxb()), 3).bits() == 0b0101);  // 0 x B
}

TEST_CASE("colon power chains") {
  Semiring z4 = fixtures::z4();
  SUBCASE("a inside Q stabilizes immediately at the whole semiring") {
    ColonChain chain = colon_power_chain(Ideal(z4, 0b0101), 2);
    CHECK(chain.stabilization == 1);
    CHECK(chain.links.size() == 1);
    CHECK(chain.links[0].bits() == 0b1111);
  }
  SUBCASE("Z4: colon powers of 2 at the zero ideal") {
    ColonChain chain = colon_power_chain(zero_ideal(z4), 2);
    CHECK(chain.stabilization == 2);
    REQUIRE(chain.links.size() == 2);
    CHECK(chain.links[0].bits() == 0b0101);
    CHECK(chain.links[1].bits() == 0b1111);
  }
  SUBCASE("B: the identity fixes the zero ideal") {
    ColonChain chain = colon_power_chain(zero_ideal(fixtures::boolean()), 1);
    CHECK(chain.stabilization == 1);
    CHECK(chain.links[0].bits() == 0b01);
  }
  SUBCASE("chains ascend and stabilize within the order bound") {
    for (const Semiring& s : all_fixtures()) {
      for (const Ideal& q : all_k_ideals(s)) {
        for (int a = 0; a < s->order(); ++a) {
          ColonChain chain = colon_power_chain(q, a);
          CHECK(chain.stabilization >= 1);
          CHECK(chain.stabilization <= s->order());
          for (std::size_t i = 1; i < chain.links.size(); ++i) {
            CHECK(chain.links[i - 1].subset_of(chain.links[i]));
          }
        }
      }
    }
  }
  SUBCASE("non-subtractive inputs are rejected") {
    CHECK_THROWS_AS(colon_power_chain(Ideal(fixtures::sat3(), 0b101), 2),
                    NotKIdeal);
  }
}

TEST_CASE("maximal k-ideals and Jacobson radicals") {
  Semiring b = fixtures::boolean();
  {
    std::vector<Ideal> max = maximal_k_ideals(b);
    REQUIRE(max.size() == 1);
    CHECK(max[0].bits() == 0b01);
    CHECK(jacobson_radical(zero_ideal(b)).bits() == 0b01);
  }
  Semiring p = fixtures::bxb();
  {
    std::vector<Ideal> max = maximal_k_ideals(p);
    REQUIRE(max.size() == 2);
    CHECK(max[0].bits() == 0b0101);
    CHECK(max[1].bits() == 0b1001);
    CHECK(jacobson_radical(zero_ideal(p)).bits() == 0b0001);
  }
  Semiring c3 = fixtures::chain3();
  {
    std::vector<Ideal> max = maximal_k_ideals(c3);
    REQUIRE(max.size() == 1);
    CHECK(max[0].bits() == 0b101);
    CHECK(jacobson_radical(zero_ideal(c3)).bits() == 0b101);
  }
  // No maximal k-ideal contains R, so Jac(R) = R by convention.
  for (const Semiring& s : all_fixtures()) {
    CHECK(jacobson_radical(unit_ideal(s)).bits() == full_mask(s->order()));
  }
}

TEST_CASE("jacobson radical of the semiring matches the zero-ideal form") {
  for (const Semiring& s : all_fixtures()) {
    CHECK(jacobson_radical(s).bits() ==
          jacobson_radical(zero_ideal(s)).bits());
  }
}
