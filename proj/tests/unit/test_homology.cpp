#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "scarflab/homology.hpp"

using namespace scarflab;

namespace {

Face F(std::initializer_list<int> idx) { return Face::from_indices(idx); }

SimplicialComplex facets(std::vector<Face> fs) { return SimplicialComplex::from_facets(fs); }

SimplicialComplex pentagon() { return facets({F({0, 1}), F({1, 2}), F({2, 3}), F({3, 4}), F({0, 4})}); }

// Six-vertex real projective plane.
SimplicialComplex rp2() {
  return facets({F({0, 1, 3}), F({0, 1, 5}), F({0, 2, 4}), F({0, 2, 5}), F({0, 3, 4}), F({1, 2, 3}),
                 F({1, 2, 4}), F({1, 4, 5}), F({2, 3, 5}), F({3, 4, 5})});
}

SimplicialComplex random_complex(std::mt19937& rng, int n, int facet_count, int max_size) {
  std::vector<Face> fs;
  for (int i = 0; i < facet_count; ++i) {
    Face f;
    const int size = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_size));
    while (f.size() < size) f = f.with(static_cast<int>(rng() % static_cast<unsigned>(n)));
    fs.push_back(f);
  }
  return facets(fs);
}

std::vector<FieldSpec> all_fields() {
  return {FieldSpec::prime(2), FieldSpec::prime(32003), FieldSpec::rationals()};
}

}  // namespace

TEST(Boundary, EdgeAndAugmentation) {
  const auto edge = facets({F({0, 1})});
  const auto d1 = boundary_matrix(edge, 1);
  ASSERT_EQ(d1.rows, 2u);
  ASSERT_EQ(d1.cols, 1u);
  EXPECT_EQ(d1.at(0, 0), -1);
  EXPECT_EQ(d1.at(1, 0), 1);

  const auto d0 = boundary_matrix(edge, 0);
  ASSERT_EQ(d0.rows, 1u);
  ASSERT_EQ(d0.cols, 2u);
  EXPECT_EQ(d0.data, (std::vector<int>{1, 1}));
  EXPECT_EQ(boundary_matrix(edge, 2).cols, 0u);
  EXPECT_THROW(boundary_matrix(edge, -1), Error);
}

TEST(Boundary, TriangleSigns) {
  const auto d2 = boundary_matrix(facets({F({0, 1, 2})}), 2);
  // Edges in order {0,1}, {0,2}, {1,2}.
  EXPECT_EQ(d2.data, (std::vector<int>{1, -1, 1}));
}

TEST(Rank, FieldsDiffer) {
  IntMatrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(1, 1) = 2;
  EXPECT_EQ(rank_mod_p(m, 2), 0u);
  EXPECT_EQ(rank_mod_p(m, 3), 2u);
  EXPECT_EQ(rank_rational(m), 2u);
  EXPECT_EQ(rank_over(IntMatrix(0, 4), FieldSpec::rationals()), 0u);

  IntMatrix big(3, 3);
  const int vals[] = {1000000, 999999, 3, 999999, 999998, 7, 2, 1, 1};
  std::copy(std::begin(vals), std::end(vals), big.data.begin());
  EXPECT_EQ(rank_rational(big), 3u);
}

TEST(Betti, Pentagon) {
  EXPECT_EQ(rank_over(boundary_matrix(pentagon(), 1), FieldSpec::prime(2)), 4u);
  for (const FieldSpec& f : all_fields()) {
    const auto p = reduced_betti(pentagon(), f);
    EXPECT_EQ(p.betti, (std::vector<int>{0, 1}));
    EXPECT_EQ(p.reduced_minus_one, 0);
    EXPECT_FALSE(p.trivial());
  }
}

TEST(Betti, SimpleCases) {
  const FieldSpec gf2 = FieldSpec::prime(2);
  EXPECT_TRUE(reduced_betti(facets({F({0, 1, 2, 3})}), gf2).trivial());
  EXPECT_EQ(reduced_betti(facets({F({0}), F({1}), F({2})}), gf2).betti, (std::vector<int>{2}));
  EXPECT_THROW(reduced_betti(SimplicialComplex({Face()}), gf2), Error);

  const auto hollow = facets({F({0, 1, 2}), F({0, 1, 3}), F({0, 2, 3}), F({1, 2, 3})});
  EXPECT_EQ(reduced_betti(hollow, gf2).betti, (std::vector<int>{0, 0, 1}));
}

TEST(Acyclic, Verdicts) {
  const auto fields = all_fields();
  for (const auto& v : is_acyclic(SimplicialComplex({Face()}), fields)) {
    EXPECT_EQ(v.status, Acyclicity::Empty);
    EXPECT_TRUE(v.betti.empty());
  }
  EXPECT_EQ(is_acyclic(SimplicialComplex(), FieldSpec::prime(2)).status, Acyclicity::Empty);
  EXPECT_EQ(is_acyclic(facets({F({0, 1})}), FieldSpec::prime(2)).status, Acyclicity::Acyclic);
  EXPECT_EQ(is_acyclic(pentagon(), FieldSpec::rationals()).status, Acyclicity::NotAcyclic);
}

TEST(Betti, ProjectivePlaneSeesTheCharacteristic) {
  EXPECT_EQ(reduced_betti(rp2(), FieldSpec::prime(2)).betti, (std::vector<int>{0, 1, 1}));
  EXPECT_TRUE(reduced_betti(rp2(), FieldSpec::prime(32003)).trivial());
  EXPECT_TRUE(reduced_betti(rp2(), FieldSpec::rationals()).trivial());
  EXPECT_EQ(oracle::reduced_euler(rp2()), 0);
}

TEST(Boundary, SquaresToZero) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto c = random_complex(rng, 8, 6, 5);
    for (int d = 1; d <= c.dimension(); ++d) {
      const auto prod = multiply(boundary_matrix(c, d - 1), boundary_matrix(c, d));
      for (int v : prod.data) ASSERT_EQ(v, 0);
    }
  }
}

TEST(Betti, EulerPoincare) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    const auto c = random_complex(rng, 8, 1 + static_cast<int>(rng() % 7), 4);
    for (const FieldSpec& f : all_fields()) {
      const auto p = reduced_betti(c, f);
      long chi = -p.reduced_minus_one;
      for (std::size_t i = 0; i < p.betti.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * p.betti[i];
      ASSERT_EQ(chi, oracle::reduced_euler(c));
    }
  }
}

TEST(Betti, FieldsAgreeOnSmallComplexes) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    const auto c = random_complex(rng, 7, 1 + static_cast<int>(rng() % 6), 4);
    const auto q = reduced_betti(c, FieldSpec::rationals()).betti;
    EXPECT_EQ(reduced_betti(c, FieldSpec::prime(32003)).betti, q);
  }
}

TEST(Betti, ConesAreAcyclic) {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const auto c = random_complex(rng, 7, 5, 4);
    const auto coned = cone(20, c);
    for (const FieldSpec& f : all_fields()) EXPECT_TRUE(reduced_betti(coned, f).trivial());
  }
}

TEST(Fields, Parsing) {
  EXPECT_EQ(parse_field("gf2"), FieldSpec::prime(2));
  EXPECT_EQ(parse_field("gf32003"), FieldSpec::prime(32003));
  EXPECT_EQ(parse_field("q"), FieldSpec::rationals());
  EXPECT_EQ(to_string(FieldSpec::prime(7)), "gf7");
  EXPECT_EQ(to_string(FieldSpec::rationals()), "q");
  EXPECT_THROW(parse_field("gf4"), Error);
  EXPECT_THROW(parse_field("gf1"), Error);
  EXPECT_THROW(parse_field("r"), Error);
  EXPECT_THROW(FieldSpec::prime(9), Error);
  EXPECT_EQ(parse_field_list("gf2,q"), (std::vector<FieldSpec>{FieldSpec::prime(2), FieldSpec::rationals()}));
  EXPECT_THROW(parse_field_list(""), Error);
  EXPECT_EQ(default_field_battery(), (std::vector<FieldSpec>{FieldSpec::prime(2), FieldSpec::prime(32003)}));
}
