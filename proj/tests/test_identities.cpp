#include <catch2/catch_amalgamated.hpp>

#include "mop/identities.hpp"
#include "mop/verify.hpp"

using namespace mop;
using namespace mop::hypergeo;

TEST_CASE("pfaff-saalschutz hand-expanded point") {
    // both sides equal -1/2 at (n=1, a=2, b=3, c=4, d=1)
    ParamMap p{{"n", Rat(1)}, {"a", Rat(2)}, {"b", Rat(3)}, {"c", Rat(4)}, {"d", Rat(1)}};
    CHECK(pfq<Rat>({{Rat(-1), Rat(2), Rat(3)}, {Rat(4), Rat(1)}, Rat(1)}) == parse_rat("-1/2"));
    CHECK(identity_residual(IdentityId::PfaffSaalschutz, p) == 0);
}

TEST_CASE("pfaff-saalschutz balance hypothesis") {
    ParamMap p{{"n", Rat(1)}, {"a", Rat(2)}, {"b", Rat(3)}, {"c", Rat(4)}, {"d", Rat(2)}};
    CHECK_THROWS_AS(identity_residual(IdentityId::PfaffSaalschutz, p), hypothesis_error);
}

TEST_CASE("chu-vandermonde at l = 2") {
    for (const char* b : {"7/5", "-3/2", "9/7"})
        for (const char* c : {"13/3", "5/4"}) {
            ParamMap p{{"l", Rat(2)}, {"b", parse_rat(b)}, {"c", parse_rat(c)}};
            CAPTURE(b, c);
            REQUIRE(identity_residual(IdentityId::ChuVandermonde, p) == 0);
        }
}

TEST_CASE("hahn reduction with n_a = 1 is trivially exact") {
    ParamMap p{{"na", Rat(1)},        {"nh", Rat(2)},          {"alpha", parse_rat("1/2")},
               {"alphahat", parse_rat("1/3")}, {"beta", parse_rat("1/4")}, {"N", parse_rat("17/2")},
               {"j", parse_rat("3/7")}};
    CHECK(identity_residual(IdentityId::HahnReduction, p) == 0);
}

TEST_CASE("missing parameters are usage errors") {
    CHECK_THROWS_AS(identity_residual(IdentityId::ChuVandermonde, {}), usage_error);
    ParamMap p{{"l", parse_rat("1/2")}, {"b", Rat(1)}, {"c", Rat(2)}};
    CHECK_THROWS_AS(identity_residual(IdentityId::ChuVandermonde, p), usage_error);  // non-integer l
}

TEST_CASE("seeded draws: every identity vanishes exactly") {
    // smaller replica of the acceptance sweep
    verify::detail::Rng rng(42);
    for (const auto& [name, id] : identity_names()) {
        long checked = 0;
        for (long i = 0; i < 40; ++i) {
            for (int attempt = 0; attempt < 200; ++attempt) {
                const auto params = verify::sample_identity(id, rng);
                Rat residual;
                try {
                    residual = identity_residual(id, params);
                } catch (const pole_error&) {
                    continue;  // rejection: redraw
                } catch (const hypothesis_error&) {
                    continue;
                }
                CAPTURE(name, i);
                REQUIRE(residual == 0);
                ++checked;
                break;
            }
        }
        CAPTURE(name);
        REQUIRE(checked == 40);
    }
}

TEST_CASE("determinism of the samplers") {
    verify::detail::Rng a(7), b(7);
    for (int i = 0; i < 20; ++i) {
        const auto pa = verify::sample_identity(IdentityId::RakhaRathie, a);
        const auto pb = verify::sample_identity(IdentityId::RakhaRathie, b);
        REQUIRE(pa == pb);
    }
}
