#include <gtest/gtest.h>

#include <cmath>

#include "ductflow/errors.hpp"
#include "ductflow/riemann.hpp"
#include "oracles.hpp"
#include "sampling.hpp"

using namespace ductflow;

namespace {

const GasConstants kGas(2.0);

oracle::Prim prim(const GasState& s) { return {s.rho, s.u, s.p}; }

void expect_fan_valid(const WaveFan& fan) {
    ASSERT_EQ(fan.states.size(), fan.waves.size() + 1);
    EXPECT_TRUE(speeds_monotone(fan));
    for (std::size_t i = 0; i < fan.waves.size(); ++i) {
        EXPECT_EQ(fan.waves[i].left, fan.states[i]);
        EXPECT_EQ(fan.waves[i].right, fan.states[i + 1]);
        EXPECT_LE(wave_residual(fan.waves[i], kGas), 1e-9) << fan.pattern() << " wave " << i;
    }
}

}  // namespace

TEST(StarRegion, SymmetricTwoShocks) {
    const GasState l{1.0, 1.0, 1.0};
    const GasState r{1.0, -1.0, 1.0};
    const auto star = star_region(l, r, kGas);
    ASSERT_TRUE(star);
    EXPECT_NEAR(star->p, (7.0 + std::sqrt(41.0)) / 4.0, 1e-10);
    EXPECT_NEAR(star->u, 0.0, 1e-12);
    const WaveFan fan = solve_constant_area(l, r, kGas);
    EXPECT_EQ(fan.pattern(), "S1 S3");
    expect_fan_valid(fan);
}

TEST(StarRegion, VacuumCase) {
    const GasState l{1.0, -3.17, 1.0};
    const GasState r{1.0, 3.17, 1.0};
    EXPECT_TRUE(generates_vacuum(l, r, kGas));
    EXPECT_FALSE(star_region(l, r, kGas));
    const WaveFan fan = solve_constant_area(l, r, kGas);
    EXPECT_EQ(fan.pattern(), "R1 Vac R3");
    ASSERT_TRUE(fan.vacuum);
    EXPECT_NEAR(fan.vacuum->lo, -3.17 + 2.0 * std::sqrt(2.0), 1e-14);
    EXPECT_NEAR(fan.vacuum->hi, 3.17 - 2.0 * std::sqrt(2.0), 1e-14);
    EXPECT_TRUE(sample(fan, 0.0, kGas).is_vacuum());
    EXPECT_EQ(sample(fan, 0.0, kGas).u, 0.0);
    expect_fan_valid(fan);
}

TEST(ConstantArea, IdentityGivesEmptyFan) {
    const GasState s{1.3, 0.4, 2.2};
    const WaveFan fan = solve_constant_area(s, s, kGas);
    EXPECT_TRUE(fan.waves.empty());
    EXPECT_EQ(fan.states.size(), 1u);
    EXPECT_EQ(sample(fan, -5.0, kGas), s);
}

TEST(ConstantArea, PureContact) {
    const GasState l{1.0, 0.5, 1.0};
    const GasState r{0.25, 0.5, 1.0};
    const WaveFan fan = solve_constant_area(l, r, kGas);
    EXPECT_EQ(fan.pattern(), "J");
    EXPECT_EQ(sample(fan, 0.49, kGas), l);
    EXPECT_EQ(sample(fan, 0.5, kGas), r);
}

TEST(ConstantArea, RejectsMixedAreas) {
    EXPECT_THROW(solve_constant_area({1, 0, 1, 1.0}, {1, 0, 1, 2.0}, kGas), DomainError);
}

TEST(Sample, FarFieldAndRarefactionInterior) {
    const GasState l{1.0, 0.0, 1.0};
    const GasState r{0.125, 0.0, 0.1};
    const WaveFan fan = solve_constant_area(l, r, kGas);
    EXPECT_EQ(fan.pattern(), "R1 J S3");
    EXPECT_EQ(sample(fan, -100.0, kGas), l);
    EXPECT_EQ(sample(fan, 100.0, kGas), r);
    const Wave& rw = fan.waves.front();
    const double xi = 0.5 * (rw.speed_lo + rw.speed_hi);
    const GasState in = sample(fan, xi, kGas);
    const GasState ref = fan_state(xi, l, WaveFamily::R1, kGas);
    EXPECT_NEAR(in.rho, ref.rho, 1e-12);
    EXPECT_NEAR(in.u, ref.u, 1e-12);
    EXPECT_NEAR(in.p, ref.p, 1e-12);
}

TEST(Properties, NewtonMatchesBisectionOracle) {
    auto rng = std::mt19937_64(41);
    int solved = 0;
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const GasState l = sampling::any_state(rng, 2.0);
        const GasState r = sampling::any_state(rng, 2.0);
        if (generates_vacuum(l, r, kGas)) continue;
        const auto star = star_region(l, r, kGas);
        ASSERT_TRUE(star);
        const double ref = oracle::star_pressure_bisection(prim(l), prim(r), 2.0);
        worst = std::max(worst, std::abs(star->p - ref) / std::max(1.0, ref));
        EXPECT_NEAR(star->u, oracle::star_velocity(ref, prim(l), prim(r), 2.0),
                    1e-9 * (std::abs(star->u) + sound_speed(l, kGas) + sound_speed(r, kGas)));
        ++solved;
    }
    EXPECT_LE(worst, 1e-11);
    EXPECT_GT(solved, 800);
}

TEST(Properties, FansValidAndReflectionSymmetric) {
    auto rng = std::mt19937_64(42);
    for (double g : {1.2, 1.4, 2.0, 2.6}) {
        const GasConstants gas(g);
        for (int i = 0; i < 300; ++i) {
            const GasState l = sampling::any_state(rng, g);
            const GasState r = sampling::any_state(rng, g);
            const WaveFan fan = solve_constant_area(l, r, gas);
            EXPECT_TRUE(speeds_monotone(fan));
            for (const Wave& w : fan.waves) EXPECT_LE(wave_residual(w, gas), 1e-9) << fan.pattern();
            EXPECT_EQ(fan.leftmost(), l);
            EXPECT_EQ(fan.rightmost(), r);

            const auto a = star_region(l, r, gas);
            const auto b = star_region(mirror(r), mirror(l), gas);
            ASSERT_EQ(a.has_value(), b.has_value());
            if (a) {
                EXPECT_NEAR(a->p, b->p, 1e-12 * std::max(1.0, a->p));
                EXPECT_NEAR(a->u, -b->u, 1e-12 * std::max(1.0, std::abs(a->u) + a->p));
            }
        }
    }
}

TEST(Mirror, FlipsFamiliesAndSpeeds) {
    const WaveFan fan = solve_constant_area({1.0, 0.0, 1.0}, {0.125, 0.0, 0.1}, kGas);
    const WaveFan m = mirror(fan);
    EXPECT_EQ(m.pattern(), "S1 J R3");
    EXPECT_TRUE(m.mirrored);
    EXPECT_TRUE(speeds_monotone(m));
    const GasState a = sample(fan, 0.3, kGas);
    const GasState b = sample(m, -0.3, kGas);
    EXPECT_NEAR(a.rho, b.rho, 1e-14);
    EXPECT_NEAR(a.u, -b.u, 1e-14);
    for (const Wave& w : m.waves) EXPECT_LE(wave_residual(w, kGas), 1e-9);
}
