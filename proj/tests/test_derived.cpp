#include "oracles.hpp"
#include "qhopf/catalog.hpp"
#include "qhopf/derived.hpp"

#include <gtest/gtest.h>

using namespace qhopf;

namespace {

const Field Q = Field::rational();

std::vector<std::string> coords(const Tensor& t) { return to_strings(t.coords()); }

} // namespace

TEST(PQ, Kz2AllTrivial)
{
    const auto H = make_kz2();
    const auto D = compute_pq(H);
    const auto one2 = H.unit_tensor(2);
    EXPECT_EQ(D.p_L, one2);
    EXPECT_EQ(D.q_L, one2);
    EXPECT_EQ(D.p_R, one2);
    EXPECT_EQ(D.q_R, one2);
}

TEST(PQ, H2twHandValues)
{
    const auto H = make_h2tw();
    const auto D = compute_pq(H);
    const auto p = z2_idempotent(Q);
    const auto two = Q.from_int(2);
    // p_L = 1 (x) 1 - 2 p (x) p, q_L = g (x) 1 + 2 p (x) p
    EXPECT_EQ(D.p_L, H.unit_tensor(2) - two * kron(p, p));
    EXPECT_EQ(D.q_L, kron(H.e(1), H.e(0)) + two * kron(p, p));
}

TEST(PQ, MatchIndependentOracle)
{
    const std::vector<std::pair<QuasiHopfAlgebra, oracle::Alg>> cases = {
        {make_kz2(), oracle::kz2()}, {make_h2tw(), oracle::h2tw()}, {make_sw4(), oracle::sw4()}};
    for (const auto& [H, A] : cases) {
        const auto D = compute_pq(H);
        const auto O = oracle::pq(A);
        EXPECT_EQ(coords(D.p_L), oracle::strs(O.pL));
        EXPECT_EQ(coords(D.q_L), oracle::strs(O.qL));
        EXPECT_EQ(coords(D.p_R), oracle::strs(O.pR));
        EXPECT_EQ(coords(D.q_R), oracle::strs(O.qR));
    }
}

TEST(PQ, TwelveIdentitiesHold)
{
    for (const auto& H : {make_kz2(), make_h2tw(), make_sw4(), make_h2tw(Field::prime(7))}) {
        const auto r = verify_pq_identities(H, compute_pq(H));
        EXPECT_EQ(r.checks().size(), 12u);
        EXPECT_TRUE(r.passed()) << r.first_failure()->name;
    }
}

TEST(PQ, IdentitiesHoldOnVariants)
{
    // In H^op the roles of the left and right elements interchange; the
    // identities must hold for the variant's own elements.
    for (const auto& H : {make_h2tw(), make_sw4()}) {
        for (auto v : {Variant::op, Variant::cop, Variant::opcop}) {
            const auto V = op_cop_variant(H, v);
            const auto r = verify_pq_identities(V, compute_pq(V));
            EXPECT_TRUE(r.passed()) << r.first_failure()->name;
        }
    }
}

TEST(PQ, CorruptedPLFailsQlpl)
{
    const auto H = make_h2tw();
    auto D = compute_pq(H);
    D.p_L = H.unit_tensor(2);
    const auto r = verify_pq_identities(H, D);
    ASSERT_NE(r.first_failure(), nullptr);
    EXPECT_EQ(r.first_failure()->name, "qlpl");
}

TEST(UV, Kz2URIsOne)
{
    const auto H = make_kz2();
    const auto E = compute_UV(H, compute_gauge_f(H), compute_pq(H));
    EXPECT_EQ(E.U_R, H.unit_tensor(2));
    EXPECT_TRUE(verify_UV(H, E).passed());
}

TEST(UV, RelationsHold)
{
    for (const auto& H : {make_h2tw(), make_sw4()}) {
        const auto r = verify_UV(H, compute_UV(H, compute_gauge_f(H), compute_pq(H)));
        EXPECT_TRUE(r.passed()) << r.first_failure()->name;
    }
}

TEST(UV, ZeroVLFailsGuard)
{
    const auto H = make_h2tw();
    auto E = compute_UV(H, compute_gauge_f(H), compute_pq(H));
    E.V_L = Tensor(Q, {2, 2});
    const auto r = verify_UV(H, E);
    EXPECT_FALSE(r.find("V_L-nonzero")->passed);
    EXPECT_TRUE(r.find("VL-relation")->passed);
}

TEST(UV, LegSwapIsInvolution)
{
    const auto H = make_sw4();
    const auto E = compute_UV(H, compute_gauge_f(H), compute_pq(H));
    EXPECT_EQ(permute(permute(E.V_L, {1, 0}), {1, 0}), E.V_L);
}
