#include "qhopf/catalog.hpp"
#include "qhopf/comodule.hpp"
#include "qhopf/twist.hpp"

#include <gtest/gtest.h>

using namespace qhopf;

namespace {

const Field Q = Field::rational();

std::string failure_name(const Report& r)
{
    const auto* c = r.first_failure();
    return c ? c->name + " at " + ::testing::PrintToString(c->witness) : "";
}

} // namespace

TEST(GaugeTwist, IdentityTwistChangesNothing)
{
    const auto H = make_h2tw();
    const auto one = kron(H.one(), H.one());
    const auto A = quasi_smash(H, regular_comodule(H)).algebra;
    const auto g = gauge_twist(H, A, one);
    EXPECT_TRUE(g.report.passed()) << failure_name(g.report);
    EXPECT_EQ(g.H_F.phi(), H.phi());
    EXPECT_EQ(g.H_F.comul(), H.comul());
    EXPECT_EQ(g.A_twisted.algebra().table(), A.algebra().table());
    EXPECT_EQ(g.smash_iso, Matrix::identity(Q, A.dim() * H.dim()));
}

TEST(GaugeTwist, Kz2QuasiSmash)
{
    const auto H = make_kz2();
    const auto [F, Finv] = z2_twist();
    const auto g = gauge_twist(H, quasi_smash(H, trivial_comodule(H)).algebra, F, Finv);
    EXPECT_TRUE(g.report.passed()) << failure_name(g.report);
    EXPECT_TRUE(g.galois_before);
    EXPECT_TRUE(g.galois_after);
    EXPECT_TRUE(g.total_integral_after);
    // KZ2 is commutative, so F is a coboundary there: Delta and phi survive.
    EXPECT_EQ(g.H_F.comul(), H.comul());
    EXPECT_EQ(g.H_F.phi(), H.phi());
}

TEST(GaugeTwist, H2twRegularQuasiSmash)
{
    const auto H = make_h2tw();
    const auto [F, Finv] = z2_twist();
    const auto g = gauge_twist(H, quasi_smash(H, regular_comodule(H)).algebra, F, Finv);
    EXPECT_TRUE(g.report.passed()) << failure_name(g.report);
    EXPECT_TRUE(g.galois_after);
}

TEST(GaugeTwist, TrivialModuleAlgebraKeepsNegativeVerdict)
{
    const auto H = make_kz2();
    const auto [F, Finv] = z2_twist();
    const auto g = gauge_twist(H, trivial_module_algebra(H), F, Finv);
    EXPECT_TRUE(g.report.passed()) << failure_name(g.report);
    EXPECT_FALSE(g.galois_before);
    EXPECT_FALSE(g.galois_after);
}

TEST(GaugeTwist, Sw4QuasiSmashWithComputedInverse)
{
    const auto H = make_sw4();
    const auto [F, Finv] = sw4_twist();
    const auto g = gauge_twist(H, quasi_smash(H, trivial_comodule(H)).algebra, F);
    EXPECT_EQ(g.F_inv, Finv);
    // x(x)x commutes with Delta(H) but is not a 2-cocycle: H_F is a genuine
    // quasi-Hopf algebra with the same comultiplication.
    EXPECT_EQ(g.H_F.comul(), H.comul());
    EXPECT_NE(g.H_F.phi(), H.phi());
    EXPECT_TRUE(g.report.passed()) << failure_name(g.report);
    EXPECT_TRUE(g.galois_after);
}

TEST(GaugeTwist, RejectsUnnormalizedF)
{
    const auto H = make_kz2();
    const auto F = Q.from_int(2) * kron(H.one(), H.one());
    EXPECT_THROW(gauge_twist(H, trivial_module_algebra(H), F), PreconditionError);
}

TEST(GaugeTwist, RejectsWrongInverse)
{
    const auto H = make_kz2();
    const auto [F, Finv] = z2_twist();
    EXPECT_THROW(gauge_twist(H, trivial_module_algebra(H), F, F), PreconditionError);
}
