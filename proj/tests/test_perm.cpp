#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "common.hpp"
#include "gts/perm.hpp"

using namespace gts;

TEST_CASE("composition applies the right factor first") {
  Perm p = parse_cycles("(1,2)", 3), q = parse_cycles("(2,3)", 3);
  // (p*q)(1) = p(q(1)) = p(1) = 2
  CHECK((p * q).image1(1) == 2);
  CHECK((p * q).to_cycles() == "(1,2,3)");
  CHECK((q * p).to_cycles() == "(1,3,2)");
}

TEST_CASE("cycle and one-line parsing") {
  CHECK(parse_cycles("(1,3,2)(4,6,5)", 9).to_cycles() == "(1,3,2)(4,6,5)");
  CHECK(parse_cycles("(2,1)", 2).to_cycles() == "(1,2)");
  CHECK(parse_cycles("()", 4).is_identity());
  CHECK(parse_cycles("[3 1 2]", 3).to_cycles() == "(1,3,2)");
  CHECK(parse_cycles("(1,3,2)", 3).to_oneline() == "[3 1 2]");
  CHECK_THROWS_AS(parse_cycles("(1,1)", 3), PermError);
  CHECK_THROWS_AS(parse_cycles("(1,4)", 3), PermError);
  CHECK_THROWS_AS(parse_cycles("(1,2", 3), PermError);
  CHECK_THROWS_AS(parse_cycles("[1 1 2]", 3), PermError);
}

TEST_CASE("order, power and inverse") {
  Perm p = parse_cycles("(1,2,3)(4,5)", 6);
  CHECK(p.order() == 6);
  CHECK(p.pow(6).is_identity());
  CHECK(p.pow(-1) == p.inverse());
  CHECK(p.pow(7) == p);
  CHECK(Perm(5).order() == 1);
}

TEST_CASE("random algebraic identities") {
  std::mt19937_64 rng(7);
  for (uint32_t n : {1u, 2u, 9u, 40u, 300u}) {
    for (int t = 0; t < 20; ++t) {
      Perm a = testutil::random_perm(rng, n), b = testutil::random_perm(rng, n), c = testutil::random_perm(rng, n);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a * b).inverse() == b.inverse() * a.inverse());
      CHECK((a * a.inverse()).is_identity());
      CHECK(a.conj(b) == b.inverse() * a * b);
      if (n <= 9) {
        // order by brute iteration
        uint64_t k = 1;
        for (Perm x = a; !x.is_identity(); x = x * a) ++k;
        CHECK(a.order() == k);
      }
      CHECK(parse_cycles(a.to_cycles(), n) == a);
      CHECK(a.pow(-3) == a.inverse() * a.inverse() * a.inverse());
    }
  }
}

TEST_CASE("narrow and wide storage agree") {
  std::mt19937_64 rng(3);
  Perm a = testutil::random_perm(rng, 257);
  CHECK(!a.narrow());
  CHECK(Perm::from_images0(a.images0()) == a);
  CHECK(Perm(256).narrow());
}

TEST_CASE("direct sum and block restriction") {
  Perm p = parse_cycles("(1,2)", 2), q = parse_cycles("(1,2,3)", 3);
  Perm s = direct_sum(p, q);
  CHECK(s.to_cycles() == "(1,2)(3,4,5)");
  CHECK(restrict_block(s, 0, 2) == p);
  CHECK(restrict_block(s, 2, 3) == q);
  CHECK_THROWS(restrict_block(parse_cycles("(1,3)", 3), 0, 2));
}

TEST_CASE("perm tuples") {
  std::vector<uint32_t> deg{2, 3};
  PermTuple t({parse_cycles("(1,2)", 2), parse_cycles("(1,2,3)", 3)});
  CHECK(t.order() == 6);
  CHECK(PermTuple::unflatten(t.flatten(), deg) == t);
  CHECK((t * t.inverse()).is_identity());
  CHECK(t.pow(3) == PermTuple({parse_cycles("(1,2)", 2), Perm(3)}));
  CHECK(gcd64(12, 18) == 6);
  CHECK(lcm64(4, 6) == 12);
}
