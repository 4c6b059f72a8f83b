#include "netrobust/privacy.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"

using namespace netrobust;

namespace {

// 12-significant-digit comparison against an independently computed value.
void check_sig12(double actual, double expected) {
    CHECK(std::abs(actual - expected) <= std::abs(expected) * 1e-12);
}

}  // namespace

TEST_CASE("paalec alpha is exp(epsilon / Delta)") {
    PrivacyParams p;
    p.epsilon = 1.0;
    p.Delta = 1.0;
    p.delta = 0.5;
    p.s = 1.0;
    const auto out = paalec_params(p);
    check_sig12(out.alpha, 2.718281828459045235);  // e
}

TEST_CASE("paalec beta is 2 ln(1/delta) / s") {
    PrivacyParams p;
    p.epsilon = 1.0;
    p.Delta = 1.0;
    p.delta = std::exp(-1.0);
    p.s = 2.0;
    const auto out = paalec_params(p);
    check_sig12(out.beta, 1.0);
}

TEST_CASE("paalec params against a high-precision reference") {
    PrivacyParams p;
    p.epsilon = 0.5;
    p.Delta = 2.0;
    p.delta = 1e-5;
    p.s = 100.0;
    const auto out = paalec_params(p);
    check_sig12(out.alpha, 1.284025416687741484);   // exp(1/4)
    check_sig12(out.beta, 0.230258509299404568402); // 2 ln(1e5) / 100
}

TEST_CASE("beta is undefined at delta = 0") {
    PrivacyParams p;
    p.delta = 0.0;
    CHECK_THROWS_AS(paalec_params(p), std::invalid_argument);
}

TEST_CASE("full strength keeps the component guarantee for everyone") {
    PrivacyParams p;
    p.epsilon = 0.7;
    p.delta = 0.01;
    p.xi = 1.0;
    const auto g = dp_guarantee(p);
    CHECK(g.epsilon_any == 0.7);
    CHECK(g.delta_any == doctest::Approx(0.01));
    CHECK(g.delta_component == doctest::Approx(0.01));
}

TEST_CASE("delta degrades by the mass outside the component") {
    PrivacyParams p;
    p.epsilon = 1.0;
    p.delta = 0.01;
    p.xi = 0.9;
    const auto g = dp_guarantee(p);
    check_sig12(g.delta_any, 0.11);
    CHECK(g.epsilon_any == 1.0);
}

TEST_CASE("delta_any clamps at 1 and decreases with xi") {
    PrivacyParams p;
    p.epsilon = 1.0;
    p.delta = 0.5;
    p.xi = 0.1;
    CHECK(dp_guarantee(p).delta_any == 1.0);  // 0.5 + 0.9 clamped

    double prev = 2.0;
    for (double xi : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        p.xi = xi;
        const auto g = dp_guarantee(p);
        CHECK(g.delta_any <= prev);
        CHECK(g.epsilon_any == 1.0);  // independent of xi
        prev = g.delta_any;
    }
}

TEST_CASE("parameter validation") {
    PrivacyParams p;
    p.epsilon = -1.0;
    CHECK_THROWS_AS(dp_guarantee(p), std::invalid_argument);
    p.epsilon = 1.0;
    p.delta = 1.0;
    CHECK_THROWS_AS(dp_guarantee(p), std::invalid_argument);
    p.delta = 0.0;
    p.xi = 1.5;
    CHECK_THROWS_AS(dp_guarantee(p), std::invalid_argument);
}

TEST_CASE("noiseless aggregation advisory compares xi * honest to the threshold") {
    CHECK(noiseless_aggregation_plausible(0.9, 1000, 900));
    CHECK_FALSE(noiseless_aggregation_plausible(0.9, 1000, 901));
}
