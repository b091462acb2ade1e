#include <catch2/catch_amalgamated.hpp>

#include "mop/limits.hpp"
#include "mop/verify.hpp"

using namespace mop;
using namespace mop::limits;

TEST_CASE("constant route at (0,0) is exact") {
    precision_guard guard(128);
    const auto target = verify::default_family_params(families::FamilyId::JacobiPineiro);
    const Real r = limit_residual(Route::HahnToJacobiPineiro, {0, 0}, Real(50), target, Kind::type2,
                                  default_eval_points(Route::HahnToJacobiPineiro));
    CHECK(r == 0);
}

TEST_CASE("residuals shrink along every route") {
    precision_guard guard(192);
    for (const auto& [name, route] : route_names()) {
        const auto target = verify::default_family_params(route_target(route));
        const auto pts = default_eval_points(route);
        for (Kind kind : {Kind::type2, Kind::type1}) {
            const Real r1 = limit_residual(route, {2, 1}, Real(60), target, kind, pts);
            const Real r2 = limit_residual(route, {2, 1}, Real(600), target, kind, pts);
            CAPTURE(name, kind == Kind::type1);
            REQUIRE(r2 < r1);
        }
    }
}

TEST_CASE("fitted order is ~1 on a short sweep") {
    precision_guard guard(192);
    const auto target = verify::default_family_params(families::FamilyId::Kravchuk);
    const auto res = convergence_study(Route::HahnToKravchuk, {2, 1}, Kind::type1,
                                       {Real(100), Real(1000), Real(10000)}, target,
                                       default_eval_points(Route::HahnToKravchuk));
    REQUIRE(res.order_defined);
    CHECK(std::abs(res.fitted_order - 1.0) < 0.2);
}

TEST_CASE("convergence study flags undefined order on the constant route") {
    precision_guard guard(128);
    const auto target = verify::default_family_params(families::FamilyId::JacobiPineiro);
    const auto res = convergence_study(Route::HahnToJacobiPineiro, {0, 0}, Kind::type2,
                                       {Real(100), Real(1000), Real(10000)}, target,
                                       default_eval_points(Route::HahnToJacobiPineiro));
    CHECK(!res.order_defined);
    for (const auto& r : res.residuals) CHECK(r <= float_tolerance());
}

TEST_CASE("coefficient limits approach the closed-form family coefficients") {
    precision_guard guard(192);
    for (const auto& [name, route] : route_names()) {
        const auto target = verify::default_family_params(route_target(route));
        const Real r1 = recursion_limit_residual(route, {2, 1}, Real(100), target);
        const Real r2 = recursion_limit_residual(route, {2, 1}, Real(1000), target);
        CAPTURE(name);
        REQUIRE(r2 < r1);
    }
}

TEST_CASE("usage guards") {
    precision_guard guard(128);
    const auto wrong = verify::default_family_params(families::FamilyId::Charlier);
    CHECK_THROWS_AS(limit_residual(Route::HahnToJacobiPineiro, {1, 1}, Real(100), wrong, Kind::type2,
                                   default_eval_points(Route::HahnToJacobiPineiro)),
                    usage_error);
    const auto target = verify::default_family_params(families::FamilyId::JacobiPineiro);
    CHECK_THROWS_AS(limit_residual(Route::HahnToJacobiPineiro, {1, 0}, Real(100), target, Kind::type1,
                                   default_eval_points(Route::HahnToJacobiPineiro)),
                    usage_error);
    CHECK_THROWS_AS(convergence_study(Route::HahnToJacobiPineiro, {1, 1}, Kind::type2, {Real(10), Real(5), Real(20)},
                                      target, default_eval_points(Route::HahnToJacobiPineiro)),
                    usage_error);
    // integer beta puts the Meixner I route prefactor on a Gamma pole
    const auto bad_mi = families::make_params(families::FamilyId::MeixnerI,
                                              {{"beta", Rat(2)}, {"c1", parse_rat("1/3")}, {"c2", parse_rat("1/2")}});
    CHECK_THROWS_AS(limit_residual(Route::HahnToMeixnerI, {1, 1}, Real(100), bad_mi, Kind::type1,
                                   default_eval_points(Route::HahnToMeixnerI)),
                    usage_error);
}

TEST_CASE("the two Laguerre I routes agree at matched parameters") {
    precision_guard guard(256);
    const auto target = verify::default_family_params(families::FamilyId::LaguerreI);
    const Real t = pow(Real(10), 30);
    Real worst(0);
    for (const auto& xq : default_eval_points(Route::JacobiPineiroToLaguerreI)) {
        const Real x = to_real(xq);
        const auto s1 = scaled_source(Route::JacobiPineiroToLaguerreI, {2, 1}, t, target, x);
        const auto s2 = scaled_source(Route::MeixnerIIToLaguerreI, {2, 1}, t, target, x);
        worst = std::max({worst, Real(abs(s1.type2 - s2.type2)), Real(abs(s1.type1_1 - s2.type1_1)),
                          Real(abs(s1.type1_2 - s2.type1_2))});
    }
    CHECK(worst < pow(Real(10), -25));
}
