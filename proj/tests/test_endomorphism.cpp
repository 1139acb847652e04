#include <gtest/gtest.h>

#include "mcg/endomorphism.hpp"
#include "mcg/homology.hpp"
#include "mcg/random.hpp"

using namespace mcg;

namespace {

Word descending_b(Genus g) {
  WordBuilder b(g);
  for (int k = g.value(); k >= 1; --k) b.append(Word::generator(g, {GenKind::B, k}));
  return std::move(b).build();
}

Word A(Genus g, int k) { return Word::generator(g, {GenKind::A, k}); }
Word B(Genus g, int k) { return Word::generator(g, {GenKind::B, k}); }

}  // namespace

TEST(Endomorphism, ApplyExamples) {
  const Genus g(3);
  Rng rng(1);
  const Word x = random_word(g, 20, rng);
  EXPECT_EQ(apply(Endo::identity(g), x), x);

  const Word y = random_word(g, 20, rng);
  EXPECT_EQ(apply(inner(x), y), x * y * x.inverse());

  const Auto iota = jablow(g);
  WordBuilder bk(g);
  for (int k = 1; k <= 3; ++k) {
    WordBuilder head(g);
    for (int j = 3; j >= k; --j) head.append(B(g, j));
    head.append(A(g, k));
    const Word expect = commutator(std::move(head).build(), B(g, k).inverse()) * B(g, k).inverse();
    EXPECT_EQ(apply(iota, B(g, k)), expect);
  }
}

TEST(Endomorphism, JablowGenusTwoImages) {
  const Genus g(2);
  const Auto iota = jablow(g);
  EXPECT_EQ(apply(iota, B(g, 2)), Word::parse(g, "B2 A2 b2 a2 b2"));
  EXPECT_THROW(jablow(Genus(1)), std::invalid_argument);
}

TEST(Endomorphism, JablowIsAnInvolutionConjugatingZeta) {
  for (int gv = 2; gv <= 6; ++gv) {
    const Genus g(gv);
    const Auto iota = jablow(g);
    EXPECT_TRUE(compose(iota.forward(), iota.forward()).is_identity());
    const Word u = descending_b(g);
    EXPECT_EQ(apply(iota, zeta(g)), u * zeta(g) * u.inverse());
    EXPECT_FALSE(in_M_g1(iota));
    const auto w = in_N(iota);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->conjugator, u);
  }
}

TEST(Endomorphism, ComposeOrder) {
  const Genus g(2);
  const Auto iota = jablow(g);
  const Auto t = twist(g, 1, "a");
  // compose(outer, inner) applies inner first
  const Word x = Word::parse(g, "A1 B2");
  EXPECT_EQ(apply(compose(iota, t), x), apply(iota, apply(t, x)));
  EXPECT_EQ(compose(iota.forward(), Endo::identity(g)), iota.forward());
  EXPECT_TRUE(compose(iota, iota).forward().is_identity());
}

TEST(Endomorphism, XBTimesIotaFixesZeta) {
  for (int gv = 2; gv <= 6; ++gv) {
    const Genus g(gv);
    const Auto fixed = compose(inner(descending_b(g).inverse()), jablow(g));
    EXPECT_TRUE(in_M_g1(fixed));
    EXPECT_EQ(apply(fixed, zeta(g)), zeta(g));
  }
}

TEST(Endomorphism, Inner) {
  const Genus g(2);
  EXPECT_TRUE(inner(Word(g)).forward().is_identity());
  EXPECT_EQ(apply(inner(A(g, 1)), B(g, 1)), Word::parse(g, "A1 B1 a1"));
  const Word x = Word::parse(g, "B1 A2 A2 b1");
  const auto w = in_N(inner(x));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->conjugator, x);
  EXPECT_EQ(induced_matrix(inner(x)), SpMat::identity(g));
}

TEST(Endomorphism, Membership) {
  const Genus g(3);
  EXPECT_TRUE(in_M_g1(Endo::identity(g)));
  EXPECT_TRUE(in_N(Endo::identity(g)));

  // A_k -> A_k, B_g -> 1: abelian image is fine but zeta maps to a shorter word
  std::vector<Word> images = Endo::identity(g).images();
  images[static_cast<std::size_t>(Generator{GenKind::B, 3}.slot(g))] = Word(g);
  const Endo killer(g, images);
  EXPECT_FALSE(in_N(killer));
  EXPECT_FALSE(in_M_g1(killer));
}

TEST(Endomorphism, AutoRejectsNonInverses) {
  const Genus g(2);
  const Auto t = twist(g, 1, "a");
  EXPECT_THROW(Auto(t.forward(), t.forward()), std::invalid_argument);
  EXPECT_NO_THROW(Auto(t.forward(), t.backward()));
  EXPECT_THROW(Endo(g, {Word(g)}), std::invalid_argument);
}

TEST(Endomorphism, TwistCatalog) {
  for (int gv = 2; gv <= 5; ++gv) {
    const Genus g(gv);
    const auto catalog = twist_catalog(g);
    EXPECT_EQ(catalog.size(), static_cast<std::size_t>(4 * gv));
    for (const Twist& t : catalog) {
      EXPECT_EQ(apply(t.map, zeta(g)), zeta(g));
      EXPECT_TRUE(compose(t.map.forward(), t.map.backward()).is_identity());
      const SpMat m = induced_matrix(t.map);
      EXPECT_TRUE(is_symplectic(m));
      EXPECT_NE(m, SpMat::identity(g));
    }
  }
  // [A1 B1, B1] reduces to [A1, B1]
  const Genus g(2);
  EXPECT_EQ(commutator(Word::parse(g, "A1 B1"), B(g, 1)), commutator(A(g, 1), B(g, 1)));
  EXPECT_EQ(apply(twist(g, 1, "a"), A(g, 1)), Word::parse(g, "A1 B1"));
  EXPECT_THROW(twist(g, 3, "a"), std::invalid_argument);
  EXPECT_THROW(twist(g, 1, "c"), std::invalid_argument);
}

TEST(Endomorphism, RandomElement) {
  const Genus g(3);
  EXPECT_TRUE(random_element(g, 0, 42).forward().is_identity());
  EXPECT_EQ(random_element(g, 6, 42).forward(), random_element(g, 6, 42).forward());
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Auto a = random_element(g, 6, seed);
    const auto w = in_N(a);
    ASSERT_TRUE(w) << seed;
    ASSERT_TRUE(is_witness(a, w->conjugator));
    ASSERT_TRUE(compose(a.forward(), a.backward()).is_identity());
  }
}

TEST(EndomorphismProperties, HomomorphismAndAssociativity) {
  Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    const Genus g(rng.between(2, 5));
    const Auto p = random_element(g, 4, rng.next());
    const Auto q = random_element(g, 4, rng.next());
    const Auto r = random_element(g, 4, rng.next());
    const Word x = random_word(g, 50, rng), y = random_word(g, 50, rng);
    ASSERT_EQ(apply(p, x * y), apply(p, x) * apply(p, y));
    ASSERT_EQ(compose(compose(p, q), r).forward(), compose(p, compose(q, r)).forward());
    ASSERT_EQ(apply(compose(p, q), x), apply(p, apply(q, x)));
  }
}
