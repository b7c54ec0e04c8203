#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "common.hpp"
#include "gts/groupoid.hpp"
#include "gts/shadows.hpp"

using namespace gts;

namespace {
SubgroupSpec ab(uint32_t q) { return make_cyclic_spec(q); }
SubgroupSpec fx(const char* n) { return load_spec(testutil::fixture(n)); }
}  // namespace

TEST_CASE("kernel equality and containment") {
  auto P = fx("philadelphia.spec"), M = fx("mighty_dandy.spec");
  CHECK(same_kernel(P, P));
  CHECK(!same_kernel(P, M));
  CHECK(same_kernel(intersect(ab(2), ab(3)), ab(6)));
  CHECK(subgroup_leq(ab(6), ab(2)));
  CHECK(!subgroup_leq(ab(2), ab(6)));
  CHECK(subgroup_leq(P, P));
  CHECK(subgroup_leq(P, make_trivial_spec()));
  CHECK(same_kernel(intersect(P, P), P));
  CHECK(same_kernel(intersect(make_trivial_spec(), P), P));
  CHECK(intersect(ab(2), ab(3)).degree == 5);
}

TEST_CASE("kernel equality is an equivalence on a small catalog") {
  std::vector<SubgroupSpec> c{ab(2), ab(3), ab(6), intersect(ab(2), ab(3)), intersect(ab(3), ab(2)), ab(4), intersect(ab(4), ab(2)),
                              fx("philadelphia.spec"), intersect(fx("philadelphia.spec"), ab(2))};
  for (size_t i = 0; i < c.size(); ++i)
    for (size_t j = 0; j < c.size(); ++j) {
      CHECK(same_kernel(c[i], c[j]) == same_kernel(c[j], c[i]));
      for (size_t k = 0; k < c.size(); ++k)
        if (same_kernel(c[i], c[j]) && same_kernel(c[j], c[k])) CHECK(same_kernel(c[i], c[k]));
    }
  // associativity up to kernel equality
  CHECK(same_kernel(intersect(intersect(ab(2), ab(3)), ab(4)), intersect(ab(2), intersect(ab(3), ab(4)))));
}

TEST_CASE("catalog memoization") {
  Catalog cat;
  cat.add(ab(6));
  auto i23 = intersect(ab(2), ab(3));
  i23.name = "i23";
  cat.add(i23);
  cat.add(ab(4));
  CHECK(cat.same_kernel("AB6", "i23"));
  CHECK(cat.same_kernel("i23", "AB6"));
  CHECK(!cat.same_kernel("AB6", "AB4"));
  CHECK(!cat.same_kernel("AB4", "i23"));
  CHECK(cat.quotients("AB6") == cat.quotients("AB6"));
  CHECK_THROWS(cat.add(ab(4)));
  CHECK(cat.names().size() == 3);
}

TEST_CASE("canonicalization keeps the kernel") {
  auto s = intersect(intersect(ab(2), ab(6)), intersect(ab(3), make_trivial_spec()));
  auto c = canonicalize(s);
  CHECK(same_kernel(s, c));
  CHECK(c.degree == 6);
  auto p = intersect(fx("philadelphia.spec"), fx("philadelphia.spec"));
  CHECK(canonicalize(p).degree == 9);
}

TEST_CASE("isolation and components") {
  auto P = testutil::load_q("philadelphia.spec");
  CHECK(is_isolated(P, IsolationScope::Charming, 1));
  auto c = connected_component(P, 1);
  CHECK(c.objects.size() == 1);
  CHECK(c.objects[0].charming_count == 12);
  CHECK(same_kernel(n_sharp(c), P->spec()));
  auto A4 = Quotients::build(ab(4));
  CHECK(is_isolated(A4, IsolationScope::Charming, 1));
  CHECK(is_isolated(A4, IsolationScope::AllPractical, 1));
  auto c4 = connected_component(A4, 1);
  CHECK(c4.objects.size() == 1);
  CHECK(c4.objects[0].charming_count == 4);
  CHECK(same_kernel(n_sharp(c4), ab(4)));
  CHECK(is_isolated(Quotients::build(n_sharp(c)), IsolationScope::Charming, 1));
  CHECK(is_settled(*P, identity_shadow(P)));
}

TEST_CASE("intersections of isolated specs are isolated") {
  std::vector<SubgroupSpec> iso{ab(2), ab(3), ab(4), fx("philadelphia.spec")};
  for (size_t i = 0; i < iso.size(); ++i)
    for (size_t j = i + 1; j < iso.size(); ++j) {
      auto Q = Quotients::build(canonicalize(intersect(iso[i], iso[j])));
      CHECK_MESSAGE(is_isolated(Q, IsolationScope::Charming, 1), iso[i].name << " " << iso[j].name);
    }
}

TEST_CASE("sources keep N_ord") {
  auto P = testutil::load_q("philadelphia.spec");
  for (const auto& s : enumerate_shadows(P, EnumMode::Practical, 1)) CHECK(Quotients::build(source_spec(*P, s))->n_ord() == P->n_ord());
}

TEST_CASE("projection and survival") {
  auto N = Quotients::build(ab(2));
  auto K = Quotients::build(canonicalize(intersect(ab(2), ab(6))));
  auto id = identity_shadow(N);
  CHECK(survives(id, K, 1));
  CHECK(survives(id, N, 1));
  for (const auto& s : enumerate_shadows(N, EnumMode::Charming, 1)) CHECK(survives(s, K, 1));
  // projection from K onto N is a homomorphism and onto
  auto GK = enumerate_shadows(K, EnumMode::Charming, 1);
  auto GN = enumerate_shadows(N, EnumMode::Charming, 1);
  auto TK = shadow_group(GK);
  auto TN = shadow_group(GN);
  std::vector<int64_t> img;
  for (const auto& s : GK) {
    auto p = project_shadow(s, N);
    img.push_back(TN.find(p.m, p.f_elem));
    CHECK(img.back() >= 0);
  }
  for (uint32_t a = 0; a < GK.size(); ++a)
    for (uint32_t b = 0; b < GK.size(); ++b) CHECK(img[TK.table[a][b]] == TN.table[static_cast<size_t>(img[a])][static_cast<size_t>(img[b])]);
  // projecting over K = N is the identity
  for (const auto& s : GN) CHECK(project_shadow(s, N).same_element(s));
  CHECK_THROWS(project_shadow(identity_shadow(N), K));
  // nested triple: ML functoriality on an abelian chain
  auto L = Quotients::build(ab(8));
  auto M4 = Quotients::build(ab(4));
  for (const auto& s : enumerate_shadows(L, EnumMode::Charming, 1))
    CHECK(project_shadow(project_shadow(s, M4), N).same_element(project_shadow(s, N)));
}

TEST_CASE("Hurwitz specs are valid") {
  int built = 0;
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    auto s = random_hurwitz_spec(seed, 3, 60);
    if (!s) continue;
    ++built;
    CHECK(validate_spec(*s).empty());
  }
  CHECK(built > 0);
}
