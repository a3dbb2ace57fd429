#include "qhopf/catalog.hpp"
#include "qhopf/quasismash.hpp"

#include <gtest/gtest.h>

using namespace qhopf;

namespace {

std::string failure_name(const Report& r)
{
    const auto* c = r.first_failure();
    return c ? c->name : "";
}

struct Case {
    std::string name;
    QuasiHopfAlgebra H;
    ComoduleAlgebra C;
};

std::vector<Case> cases()
{
    std::vector<Case> out;
    out.push_back({"QS(k,KZ2)", make_kz2(), trivial_comodule(make_kz2())});
    out.push_back({"QS(k,SW4)", make_sw4(), trivial_comodule(make_sw4())});
    out.push_back({"QS(KZ2,KZ2)", make_kz2(), regular_comodule(make_kz2())});
    out.push_back({"QS(H2TW,H2TW)", make_h2tw(), regular_comodule(make_h2tw())});
    return out;
}

} // namespace

TEST(QuasiSmashGalois, ExplicitInverseIsTwoSided)
{
    for (const auto& c : cases()) {
        const auto qs = quasi_smash(c.H, c.C);
        const auto g = can_maps(make_setting(c.H, qs.algebra));
        const auto inv = quasismash_can_inverse(c.H, c.C, qs, g);
        EXPECT_TRUE(inv.two_sided) << c.name << " " << failure_name(inv.report);
        EXPECT_EQ(inv.two_sided, g.bijective) << c.name;
    }
}

TEST(QuasiSmashGalois, TotalIntegralIsUnitTimesDual)
{
    for (const auto& c : cases()) {
        const auto qs = quasi_smash(c.H, c.C);
        const auto r = quasismash_total_integral(c.H, c.C, qs);
        EXPECT_TRUE(r.passed()) << c.name << " " << failure_name(r);
    }
}

TEST(QuasiSmashGalois, GroundFieldOverH2twIsRejected)
{
    const auto H = make_h2tw();
    const auto qs = quasi_smash(H, trivial_comodule(H));
    EXPECT_FALSE(qs.report.passed());
}
