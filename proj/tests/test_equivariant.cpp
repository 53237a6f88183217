#include <gtest/gtest.h>

#include "alglift/equivariant.hpp"
#include "alglift/lift.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace alglift;
using alglift::testing::Gen;

namespace {

Cochain scalar(std::vector<long> values) {
  Cochain f{2, KMatrix(values.size(), 1)};
  for (std::size_t i = 0; i < values.size(); ++i) f.values(i, 0) = values[i];
  return f;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::IoError;
}

GroupAction trivial_group(const ChainComplex& c) {
  GroupAction::Element id;
  for (std::size_t k = 0; k <= c.top(); ++k) id.push_back(ZMatrix::identity(c.dim(k)));
  return GroupAction(c, {id}, {{0}});
}

/// Independent subset of the orbits of the given forms.
FormSubspace orbit_span(const GroupAction& a, const std::vector<Cochain>& seeds) {
  std::vector<Cochain> basis;
  for (const auto& s : seeds)
    for (std::size_t g = 0; g < a.order(); ++g) {
      Cochain f = a.act(g, s);
      std::vector<Cochain> trial = basis;
      trial.push_back(f);
      try {
        FormSubspace(a.complex(), 2, trial);
        basis = trial;
      } catch (const Error&) {
      }
    }
  return FormSubspace(a.complex(), 2, basis);
}

}  // namespace

TEST(GroupAction, ValidatesStructure) {
  ChainComplex c = alglift::testing::cellular_s2xs2();
  GroupAction::Element id = {ZMatrix::identity(1), ZMatrix(0, 0), ZMatrix::identity(2), ZMatrix(0, 0),
                             ZMatrix::identity(1)};
  GroupAction::Element doubled = id;
  doubled[2] = ZMatrix{{2, 0}, {0, 1}};
  EXPECT_EQ(code_of([&] { GroupAction(c, {id, doubled}, {{0, 1}, {1, 0}}); }), ErrorCode::InvalidGroupAction);
  GroupAction::Element swap = alglift::testing::swap_s2xs2().element(1);
  EXPECT_EQ(code_of([&] { GroupAction(c, {id, swap}, {{0, 1}, {1, 1}}); }), ErrorCode::InvalidGroupAction);
  EXPECT_EQ(code_of([&] { GroupAction(c, {swap, id}, {{0, 1}, {1, 0}}); }), ErrorCode::InvalidGroupAction);
  // not a chain map: vertex swap on an edge complex with a non-matching edge map
  ChainComplex seg = from_simplicial({2, {{0, 1}}});
  GroupAction::Element flip = {ZMatrix{{0, 1}, {1, 0}}, ZMatrix{{1}}};
  EXPECT_EQ(code_of([&] { GroupAction(seg, {trivial_group(seg).element(0), flip}, {{0, 1}, {1, 0}}); }),
            ErrorCode::InvalidGroupAction);
  GroupAction::Element flip_ok = {ZMatrix{{0, 1}, {1, 0}}, ZMatrix{{-1}}};
  EXPECT_NO_THROW(GroupAction(seg, {trivial_group(seg).element(0), flip_ok}, {{0, 1}, {1, 0}}));
}

TEST(GroupAction, InducedActionsAreGroups) {
  EXPECT_EQ(alglift::testing::z2_tetra().order(), 2u);
  GroupAction z3 = alglift::testing::z3_tetra();
  EXPECT_EQ(z3.order(), 3u);
  EXPECT_EQ(z3.inverse(1), 2u);
  EXPECT_THROW(induced_action(alglift::testing::tetra_boundary(), {{0, 1, 2, 3}, {0, 2, 3, 1}}), Error);
}

TEST(AverageCochain, Examples) {
  GroupAction swap = alglift::testing::swap_s2xs2();
  EXPECT_EQ(average_cochain(swap, scalar({1, 3})), scalar({2, 2}));
  EXPECT_EQ(average_cochain(swap, scalar({5, 5})), scalar({5, 5}));
  ChainComplex t = from_simplicial(alglift::testing::tetra_boundary());
  Cochain f = scalar({1, -2, 7, 0});
  EXPECT_EQ(average_cochain(trivial_group(t), f), f);
}

TEST(AverageCochain, IdempotentInvariantAndCommutesWithCoboundary) {
  Gen g(81);
  for (const GroupAction& a : {alglift::testing::z2_tetra(), alglift::testing::z3_tetra()}) {
    for (int t = 0; t < 15; ++t) {
      for (std::size_t deg = 0; deg <= 1; ++deg) {
        Cochain f{deg, g.kmatrix(a.complex().dim(deg), 2, 2)};
        Cochain avg = average_cochain(a, f);
        EXPECT_EQ(average_cochain(a, avg), avg);
        for (std::size_t i = 0; i < a.order(); ++i) EXPECT_EQ(a.act(i, avg), avg);
        EXPECT_EQ(coboundary(a.complex(), avg), average_cochain(a, coboundary(a.complex(), f)));
      }
    }
  }
}

TEST(FormSubspace, RejectsDependentOrOpenForms) {
  ChainComplex c = alglift::testing::cellular_s2xs2();
  EXPECT_EQ(code_of([&] { FormSubspace(c, 2, {scalar({1, 0}), scalar({0, 1}), scalar({1, 1})}); }),
            ErrorCode::LinearlyDependent);
  ChainComplex solid = from_simplicial(alglift::testing::solid_tetra());
  EXPECT_EQ(code_of([&] { FormSubspace(solid, 2, {scalar({1, 0, 0, 0})}); }), ErrorCode::NotClosed);
}

TEST(CheckAssumptions, Examples) {
  ChainComplex t = from_simplicial(alglift::testing::tetra_boundary());
  HomologyResult ht = homology(t, 2);
  // full cocycle space, trivial group
  FormSubspace full(t, 2, {scalar({1, 0, 0, 0}), scalar({0, 1, 0, 0}), scalar({0, 0, 1, 0}), scalar({0, 0, 0, 1})});
  EXPECT_TRUE(check_assumptions(trivial_group(t), full, ht));
  // {0}
  EXPECT_FALSE(check_assumptions(trivial_group(t), FormSubspace(t, 2, {}), ht));

  GroupAction swap = alglift::testing::swap_s2xs2();
  FormSubspace e(swap.complex(), 2, {scalar({1, 0}), scalar({0, 1})});
  EXPECT_TRUE(check_assumptions(swap, e, homology(swap.complex(), 2)));
  // span(omega_1) alone is not invariant
  EXPECT_FALSE(check_assumptions(swap, FormSubspace(swap.complex(), 2, {scalar({1, 0})}), homology(swap.complex(), 2)));
}

TEST(EquivariantCertificate, SwapExample) {
  GroupAction swap = alglift::testing::swap_s2xs2();
  HomologyResult h = homology(swap.complex(), 2);
  FormSubspace e(swap.complex(), 2, {scalar({1, 0}), scalar({0, 1})});
  EquivariantCertificate cert = equivariant_derham_certificate(swap, e, h);
  EXPECT_EQ(cert.periods, KMatrix(convert<KNumber>(ZMatrix::identity(2))));
  EXPECT_TRUE(cert.report.discrete);
  EXPECT_TRUE(check_equivariance(swap, e, cert.theta));
}

TEST(EquivariantCertificate, RedundantFormsStillDiscrete) {
  ChainComplex t = from_simplicial(alglift::testing::tetra_boundary());
  HomologyResult h = homology(t, 2);
  FormSubspace e(t, 2, {scalar({1, 0, 0, 0}), scalar({0, 1, 0, 0})});
  EquivariantCertificate cert = equivariant_derham_certificate(trivial_group(t), e, h);
  EXPECT_EQ(cert.periods.rows(), 1u);
  EXPECT_EQ(cert.periods.cols(), 2u);
  EXPECT_TRUE(cert.report.discrete);
  EXPECT_EQ(cert.report.free_rank, 1u);
}

TEST(EquivariantCertificate, TrivialGroupMatchesDeRham) {
  ChainComplex s = alglift::testing::cellular_s2xs2();
  HomologyResult h = homology(s, 2);
  auto [p, theta] = derham_presentation(s, h, true);
  std::vector<Cochain> forms;
  for (std::size_t j = 0; j < theta.fiber_dim(); ++j) forms.push_back({2, theta.values.col_block(j, 1)});
  EquivariantCertificate cert = equivariant_derham_certificate(trivial_group(s), FormSubspace(s, 2, forms), h);
  EXPECT_EQ(cert.periods, p.periods());
  EXPECT_EQ(cert.report, is_integrable(p));
}

TEST(EquivariantCertificate, AssumptionsFailed) {
  GroupAction swap = alglift::testing::swap_s2xs2();
  FormSubspace e(swap.complex(), 2, {scalar({1, 0})});
  EXPECT_EQ(code_of([&] { equivariant_derham_certificate(swap, e, homology(swap.complex(), 2)); }),
            ErrorCode::AssumptionsFailed);
}

TEST(CheckEquivariance, DetectsNonInvariantCochains) {
  GroupAction swap = alglift::testing::swap_s2xs2();
  FormSubspace e(swap.complex(), 2, {scalar({1, 0}), scalar({0, 1})});
  Cochain w{2, KMatrix(2, 2)};
  w.values(0, 0) = 1;  // <w(cell 0), phi_1> = 1, everything else 0
  EXPECT_FALSE(check_equivariance(swap, e, w));
  ChainComplex t = from_simplicial(alglift::testing::tetra_boundary());
  FormSubspace et(t, 2, {scalar({1, 0, 0, 0})});
  Cochain any{2, KMatrix(4, 1)};
  any.values(2, 0) = KNumber(7);
  EXPECT_TRUE(check_equivariance(trivial_group(t), et, any));
  EXPECT_EQ(code_of([&] {
              check_equivariance(swap, FormSubspace(swap.complex(), 2, {scalar({1, 0})}), Cochain{2, KMatrix(2, 1)});
            }),
            ErrorCode::CoefficientActionUndefined);
}

TEST(EquivariantCertificate, RandomActionsAlwaysDiscrete) {
  Gen g(91);
  std::vector<GroupAction> actions = {alglift::testing::swap_s2xs2(), alglift::testing::cyclic_wedge(3),
                                      alglift::testing::cyclic_wedge(2), alglift::testing::z2_tetra(),
                                      alglift::testing::z3_tetra()};
  int passed = 0;
  for (const auto& a : actions) {
    HomologyResult h = homology(a.complex(), 2);
    for (int t = 0; t < 20; ++t) {
      std::vector<Cochain> seeds;
      for (int k = 0; k < g.integer(1, 2); ++k) {
        Cochain f{2, g.kmatrix(a.complex().dim(2), 1, static_cast<std::size_t>(g.integer(0, 2)), 0.5)};
        if (is_closed(a.complex(), f)) seeds.push_back(f);
      }
      FormSubspace e = orbit_span(a, seeds);
      if (!check_assumptions(a, e, h)) continue;
      EquivariantCertificate cert = equivariant_derham_certificate(a, e, h);
      EXPECT_TRUE(cert.report.discrete);
      EXPECT_EQ(cert.report.free_rank, h.betti);
      EXPECT_TRUE(check_equivariance(a, e, cert.theta));
      ++passed;
    }
  }
  EXPECT_GT(passed, 30);
}

TEST(Sections, RoundTripAndAveraging) {
  for (const GroupAction& a : {alglift::testing::z2_tetra(), alglift::testing::z3_tetra(),
                               alglift::testing::swap_s2xs2()}) {
    const ChainComplex& c = a.complex();
    HomologyResult h = homology(c, 2);
    Cochain theta = derham_presentation(c, h, true).second;
    std::vector<Cochain> section = section_from_theta(c, h, theta);
    EXPECT_EQ(theta_from_section(c, h, section), theta);

    std::vector<Cochain> avg = average_section(a, h, section);
    Cochain theta_avg = theta_from_section(c, h, avg);  // still a section
    EXPECT_EQ(section_from_theta(c, h, theta_avg), avg);
    FormSubspace e(c, 2, avg);
    EXPECT_TRUE(check_assumptions(a, e, h));
    EXPECT_TRUE(check_equivariance(a, e, theta_avg));
    EXPECT_TRUE(equivariant_derham_certificate(a, e, h).report.discrete);
  }
  ChainComplex t = from_simplicial(alglift::testing::tetra_boundary());
  HomologyResult h = homology(t, 2);
  EXPECT_EQ(code_of([&] { theta_from_section(t, h, {scalar({2, 0, 0, 0})}); }), ErrorCode::NotASection);
}
