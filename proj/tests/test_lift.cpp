#include <gtest/gtest.h>

#include "alglift/lift.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace alglift;
using alglift::testing::Gen;

namespace {

KMatrix kmat(const std::vector<std::vector<std::string>>& rows, const SymbolBasis& b) {
  KMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = parse_knumber(rows[i][j], b);
  return m;
}

const SymbolBasis kLambda({"λ"});

AlgebroidPresentation am() { return {kLambda, kmat({{"1"}, {"λ"}}, kLambda), true}; }

AlgebroidPresentation am_with_source() {
  return AlgebroidPresentation::from_cochain(kLambda, alglift::testing::cellular_s2xs2(),
                                             Cochain{2, kmat({{"1"}, {"λ"}}, kLambda)}, true);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::IoError;
}

// Oracle: fewest nonzero rows of u * a over all u with entries in [-b, b].
std::size_t brute_min_rows(const KMatrix& a, long b) {
  const std::size_t r = a.rows();
  std::size_t best = r;
  std::size_t cells = r * r;
  std::vector<long> e(cells, -b);
  while (true) {
    ZMatrix u(r, r);
    for (std::size_t i = 0; i < cells; ++i) u(i / r, i % r) = e[i];
    if (is_unimodular(u)) {
      KMatrix t = u * a;
      std::size_t nz = 0;
      for (std::size_t i = 0; i < r; ++i) nz += t.row_is_zero(i) ? 0 : 1;
      best = std::min(best, nz);
    }
    std::size_t i = 0;
    while (i < cells && e[i] == b) e[i++] = -b;
    if (i == cells) break;
    ++e[i];
  }
  return best;
}

}  // namespace

TEST(NOfB, Examples) {
  NOfBResult a = n_of_b(am());
  EXPECT_EQ(a.n, 2u);
  EXPECT_EQ(a.u, ZMatrix::identity(2));

  NOfBResult b = n_of_b({kLambda, kmat({{"1"}, {"2"}}, kLambda), true});
  EXPECT_EQ(b.n, 1u);
  EXPECT_TRUE(is_unimodular(b.u));
  EXPECT_EQ(abs(b.transformed_periods(0, 0).rational_part()), 1);  // generates Z + 2Z = Z
  EXPECT_TRUE(b.transformed_periods.row_is_zero(1));

  NOfBResult z = n_of_b({kLambda, KMatrix(3, 2), true});
  EXPECT_EQ(z.n, 0u);
  EXPECT_TRUE(z.transformed_periods.is_zero());
}

TEST(NOfB, MinimalityAgainstSmallSearch) {
  Gen g(41);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = static_cast<std::size_t>(g.integer(1, 2));
    KMatrix base = g.kmatrix(1 + static_cast<std::size_t>(g.integer(0, 1)), 2, 1, 0.5);
    KMatrix a = g.zmatrix(r, base.rows(), 2) * base;
    NOfBResult nb = n_of_b({kLambda, a, true});
    EXPECT_TRUE(is_unimodular(nb.u));
    EXPECT_EQ(nb.transformed_periods, nb.u * a);
    for (std::size_t i = 0; i < r; ++i) EXPECT_EQ(nb.transformed_periods.row_is_zero(i), i >= nb.n);
    EXPECT_EQ(saturated_left_kernel(a).rows(), r - nb.n);
    EXPECT_EQ(nb.n, brute_min_rows(a, 2));
  }
}

TEST(AlmeidaMolino, PaperExample) {
  LiftResult lr = almeida_molino_lift(am());
  EXPECT_EQ(lr.n, 2u);
  EXPECT_EQ(lr.total.periods(), kmat({{"1", "0"}, {"0", "λ"}}, kLambda));
  EXPECT_EQ(lr.fiber_map, kmat({{"1", "1"}}, kLambda));
  EXPECT_EQ(lr.kernel_basis, kmat({{"1", "-1"}}, kLambda));
  EXPECT_TRUE(lr.certificate.discrete);
  EXPECT_FALSE(lr.degenerate);
  EXPECT_TRUE(verify_lift(lr));
}

TEST(AlmeidaMolino, DegenerateWhenNIsOne) {
  AlgebroidPresentation p(kLambda, kmat({{"1"}, {"2"}}, kLambda), true);
  LiftResult lr = almeida_molino_lift(p);
  EXPECT_EQ(lr.n, 1u);
  EXPECT_TRUE(lr.degenerate);
  EXPECT_EQ(lr.total.periods(), lr.base.periods());
  EXPECT_EQ(lr.base.periods(), lr.u * p.periods());
  EXPECT_EQ(lr.fiber_map, KMatrix(convert<KNumber>(ZMatrix::identity(1))));
  EXPECT_EQ(lr.kernel_basis.rows(), 0u);
  EXPECT_TRUE(verify_lift(lr));

  LiftResult single = almeida_molino_lift({kLambda, kmat({{"λ"}}, kLambda), true});
  EXPECT_EQ(single.n, 1u);
  EXPECT_EQ(single.total.periods(), kmat({{"λ"}}, kLambda));
  EXPECT_TRUE(verify_lift(single));
}

TEST(AlmeidaMolino, Errors) {
  EXPECT_EQ(code_of([] { almeida_molino_lift({kLambda, KMatrix(2, 1), true}); }), ErrorCode::TrivialClass);
  EXPECT_EQ(code_of([] { almeida_molino_lift({kLambda, kmat({{"1"}}, kLambda), false}); }),
            ErrorCode::NotSimplyConnected);
}

TEST(AlmeidaMolino, CochainLevelMorphism) {
  LiftResult lr = almeida_molino_lift(am_with_source());
  ASSERT_TRUE(lr.total.source());
  EXPECT_TRUE(is_closed(lr.total.source()->complex, lr.total.source()->curvature));
  EXPECT_TRUE(verify_lift(lr));
  // tampering with the total curvature breaks the cochain-level check only
  LiftResult bad = lr;
  auto src = *bad.total.source();
  src.curvature.values(0, 0) += KNumber(1);
  src.curvature.values(0, 1) -= KNumber(1);
  bad.total = AlgebroidPresentation(kLambda, bad.total.periods() + kmat({{"1", "-1"}, {"0", "0"}}, kLambda), true, src);
  EXPECT_TRUE(verify_morphism_functoriality(bad.total, bad.base, bad.fiber_map));
  bad.certificate = is_discrete(bad.total.periods());
  EXPECT_TRUE(verify_lift(bad));  // still a lift: mu(omega_bar) unchanged
  src.curvature.values(0, 0) += KNumber(1);
  bad.total = AlgebroidPresentation(kLambda, bad.total.periods() + kmat({{"1", "0"}, {"0", "0"}}, kLambda), true, src);
  bad.certificate = is_discrete(bad.total.periods());
  EXPECT_FALSE(verify_lift(bad));
}

TEST(AlmeidaMolino, CochainSourceOnTorusLikeBases) {
  // random classes on the S^2 x S^2 cells and on the tetrahedron boundary
  Gen g(55);
  SymbolBasis b = alglift::testing::basis_with(2);
  std::vector<ChainComplex> complexes = {alglift::testing::cellular_s2xs2(),
                                         from_simplicial(alglift::testing::tetra_boundary()),
                                         alglift::testing::sphere_wedge(3)};
  for (const auto& c : complexes)
    for (int t = 0; t < 10; ++t) {
      Cochain f{2, g.kmatrix(c.dim(2), 2, 2, 0.5)};
      if (!is_closed(c, f)) continue;
      auto p = AlgebroidPresentation::from_cochain(b, c, f, true);
      if (p.periods().is_zero()) continue;
      LiftResult am_lift = almeida_molino_lift(p);
      EXPECT_TRUE(verify_lift(am_lift));
      EXPECT_TRUE(verify_lift(derham_lift(p)));
    }
}

TEST(DerhamPresentation, Examples) {
  ChainComplex s = alglift::testing::cellular_s2xs2();
  auto [p, theta] = derham_presentation(s, homology(s, 2), true);
  EXPECT_EQ(p.periods(), KMatrix(convert<KNumber>(ZMatrix::identity(2))));
  EXPECT_EQ(theta.values, KMatrix(convert<KNumber>(ZMatrix::identity(2))));

  ChainComplex t = from_simplicial(alglift::testing::tetra_boundary());
  auto [pt, theta_t] = derham_presentation(t, homology(t, 2), true);
  EXPECT_EQ(pt.periods(), KMatrix(convert<KNumber>(ZMatrix::identity(1))));
  EXPECT_TRUE(is_closed(t, theta_t));
  EXPECT_EQ(periods(t, theta_t, homology(t, 2)), pt.periods());

  ChainComplex solid = from_simplicial(alglift::testing::solid_tetra());
  auto [p0, theta0] = derham_presentation(solid, homology(solid, 2), true);
  EXPECT_EQ(p0.r(), 0u);
  EXPECT_TRUE(is_integrable(p0).discrete);

  EXPECT_EQ(code_of([&] { derham_presentation(t, homology(t, 1), true); }), ErrorCode::DegreeMismatch);
}

TEST(DerhamPresentation, TorusHasIntegralDualCocycle) {
  ChainComplex t = from_simplicial(alglift::testing::torus7());
  HomologyResult h = homology(t, 2);
  auto [p, theta] = derham_presentation(t, h, true);
  EXPECT_EQ(periods(t, theta, h), p.periods());
}

TEST(DerhamLift, PaperExample) {
  LiftResult lr = derham_lift(am());
  EXPECT_EQ(lr.total.periods(), kmat({{"1", "0", "1"}, {"0", "1", "λ"}}, kLambda));
  EXPECT_EQ(lr.fiber_map, kmat({{"0", "0", "1"}}, kLambda));
  EXPECT_EQ(lr.kernel_basis, kmat({{"1", "0", "0"}, {"0", "1", "0"}}, kLambda));
  EXPECT_TRUE(lr.certificate.discrete);
  EXPECT_TRUE(verify_lift(lr));
  // the map (x, y, z) -> x + λy is also a morphism onto the base
  EXPECT_TRUE(verify_morphism_functoriality(lr.total, lr.base, kmat({{"1", "λ", "0"}}, kLambda)));
  EXPECT_TRUE(verify_lift(derham_lift(am_with_source())));
}

TEST(DerhamLift, ZeroAndRational) {
  LiftResult z = derham_lift({kLambda, KMatrix(1, 1), true});
  EXPECT_EQ(z.total.periods(), kmat({{"1", "0"}}, kLambda));
  EXPECT_TRUE(z.certificate.discrete);
  EXPECT_TRUE(verify_lift(z));

  Gen g(61);
  LiftResult q = derham_lift({kLambda, g.kmatrix(2, 2, 0, 0.0), true});
  EXPECT_TRUE(q.certificate.discrete);
  EXPECT_EQ(q.kernel_basis.rows(), 2u);
  EXPECT_EQ(function_field_rank(q.kernel_basis), 2u);
  EXPECT_TRUE(verify_lift(q));
  EXPECT_EQ(code_of([] { derham_lift({kLambda, KMatrix(1, 1), false}); }), ErrorCode::NotSimplyConnected);
}

TEST(VerifyLift, RejectsZeroFiberMap) {
  LiftResult lr = almeida_molino_lift(am());
  lr.fiber_map = KMatrix(lr.fiber_map.rows(), lr.fiber_map.cols());
  EXPECT_FALSE(verify_lift(lr));
  LiftResult dr = derham_lift(am());
  dr.kernel_basis = KMatrix(2, 3);
  EXPECT_FALSE(verify_lift(dr));
}

TEST(LiftProperties, RandomPresentations) {
  Gen g(71);
  SymbolBasis b = alglift::testing::basis_with(3);
  for (int t = 0; t < 120; ++t) {
    std::size_t r = static_cast<std::size_t>(g.integer(1, 5));
    std::size_t ell = static_cast<std::size_t>(g.integer(1, 3));
    KMatrix a = g.kmatrix(r, ell, static_cast<std::size_t>(g.integer(0, 3)), 0.5);
    if (g.coin(0.3) && r > 1) a = stack(a.row_block(0, 1), g.zmatrix(r - 1, 1, 3) * a.row_block(0, 1));
    AlgebroidPresentation p(b, a, true);

    LiftResult dr = derham_lift(p);
    EXPECT_TRUE(dr.certificate.discrete);
    EXPECT_EQ(dr.certificate.free_rank, r);
    EXPECT_EQ(dr.certificate.real_span_dim, r);
    EXPECT_TRUE(verify_lift(dr));

    if (a.is_zero()) continue;
    LiftResult lr = almeida_molino_lift(p);
    EXPECT_TRUE(lr.certificate.discrete);
    EXPECT_EQ(lr.certificate.free_rank, lr.n);
    EXPECT_EQ(lr.certificate.real_span_dim, lr.n);
    EXPECT_TRUE(verify_lift(lr));
    // period functoriality and the sum-map identity, exactly
    EXPECT_EQ(exact_product(lr.total.periods(), lr.fiber_map.transpose()), lr.base.periods());
    EXPECT_EQ(lr.base.periods(), lr.u * p.periods());
    if (lr.n == 1) {
      EXPECT_TRUE(is_integrable(p).discrete);
    }
  }
}
