#include <gtest/gtest.h>

#include <cmath>

#include "ductflow/errors.hpp"
#include "ductflow/riemann.hpp"
#include "ductflow/stationary.hpp"
#include "sampling.hpp"

using namespace ductflow;

namespace {

const GasConstants kGas(2.0);

void expect_admissible(const WaveFan& fan, const GasState& left, const GasState& right) {
    EXPECT_TRUE(fan_admissible(fan, kGas)) << fan.pattern();
    EXPECT_TRUE(stationary_waves_admissible(fan, kGas));
    EXPECT_EQ(fan.leftmost().rho, left.rho);
    EXPECT_EQ(fan.rightmost().p, right.p);
    for (const Wave& w : fan.waves) EXPECT_LE(wave_residual(w, kGas), 1e-9) << fan.pattern();
}

}  // namespace

TEST(Duct, EqualAreasReduceToClassical) {
    const GasState l{1.0, 0.3, 2.0};
    const GasState r{0.5, -0.2, 1.0};
    const DuctRiemannSolutions sol = solve_duct(l, 1.0, r, 1.0, kGas);
    ASSERT_EQ(sol.solutions.size(), 1u);
    const WaveFan ref = solve_constant_area(l, r, kGas);
    EXPECT_EQ(sol.solutions[0].pattern(), ref.pattern());
    for (std::size_t i = 0; i < ref.states.size(); ++i) EXPECT_EQ(sol.solutions[0].states[i], ref.states[i]);
}

TEST(Duct, SecondPresetStationaryFirst) {
    const GasState l{0.75, 5.0, 5.0};
    const GasState r{0.688168, 5.589, 2.3679};
    const DuctRiemannSolutions sol = solve_duct(l, 1.0, r, 1.3, kGas);
    ASSERT_EQ(sol.solutions.size(), 1u);
    EXPECT_EQ(sol.solutions[0].pattern(), "S0 S1 J S3");
    EXPECT_EQ(sol.solutions[0].origin, FanOrigin::StationaryFirst);
    expect_admissible(sol.solutions[0], l, r);
}

TEST(Duct, SeventhPresetResonant) {
    // No wave-first closure exists for this data; the admissible fan stacks a
    // standing 1-shock between two stationary jumps.
    const GasState l{1.5, 4.0, 10.0};
    const GasState r{1.63872, 1.9527, 18.6486};
    EXPECT_TRUE(duct_fans(DuctConfiguration::WaveFirst, l, 1.0, r, 1.5, kGas).empty());
    const DuctRiemannSolutions sol = solve_duct(l, 1.0, r, 1.5, kGas);
    ASSERT_EQ(sol.solutions.size(), 1u);
    const WaveFan& fan = sol.solutions[0];
    EXPECT_EQ(fan.pattern(), "S0 S1 S0 J S3");
    EXPECT_EQ(fan.origin, FanOrigin::Resonant);
    EXPECT_EQ(fan.waves[1].speed_lo, 0.0);
    const double a_mid = fan.states[1].a;
    EXPECT_GT(a_mid, 1.0);
    EXPECT_LT(a_mid, 1.5);
    expect_admissible(fan, l, r);
    EXPECT_LE(rankine_hugoniot_residual(fan.waves[1].left, fan.waves[1].right, 0.0, kGas).max(), 1e-10);
}

TEST(Duct, WaveFirstClosureLandsOnForwardCurve) {
    const GasState l{1.0, 4.0, 10.0};
    const GasState r{1.63872, 1.9527, 18.6486};
    const auto fans = duct_fans(DuctConfiguration::WaveFirst, l, 1.0, r, 1.5, kGas);
    ASSERT_EQ(fans.size(), 1u);
    const WaveFan& fan = fans[0];
    EXPECT_EQ(fan.pattern(), "S1 S0 J R3");
    const GasState& after_jump = fan.states[2];
    EXPECT_NEAR(after_jump.u, w3(after_jump.p, r.with_area(1.5), kGas), 1e-10);
    EXPECT_LE(fan.waves[0].speed_hi, 0.0);
}

TEST(Duct, SonicAttachedFan) {
    const GasState l{0.25, 5.0, 5.0};
    const GasState r{0.688168, 5.589, 2.3679};
    const auto fans = duct_fans(DuctConfiguration::SonicAttached, l, 1.0, r, 1.5, kGas);
    ASSERT_EQ(fans.size(), 1u);
    EXPECT_EQ(fans[0].pattern(), "R1 S0 S1 J S3");
    const GasState& sonic = fans[0].states[1];
    EXPECT_EQ(classify_region(sonic, kGas), Region::GammaPlus);
    EXPECT_EQ(fans[0].waves[0].speed_hi, 0.0);
    EXPECT_NEAR(sound_speed(sonic, kGas), (5.0 + 2.0 * std::sqrt(40.0)) / 3.0, 1e-12);
}

TEST(Duct, ReflectedProblemMirrorsSolution) {
    const GasState l{0.75, 5.0, 5.0};
    const GasState r{0.688168, 5.589, 2.3679};
    const DuctRiemannSolutions sol = solve_duct(mirror(r), 1.3, mirror(l), 1.0, kGas);
    ASSERT_EQ(sol.solutions.size(), 1u);
    EXPECT_EQ(sol.solutions[0].pattern(), "S1 J S3 S0");
    EXPECT_TRUE(sol.solutions[0].mirrored);
    const WaveFan direct = solve_duct(l, 1.0, r, 1.3, kGas).solutions[0];
    const GasState a = sample(direct, 1.0, kGas);
    const GasState b = sample(sol.solutions[0], -1.0, kGas);
    EXPECT_NEAR(a.p, b.p, 1e-12 * a.p);
    EXPECT_NEAR(a.u, -b.u, 1e-12 * std::abs(a.u));
}

TEST(Duct, NoSolutionCarriesDiagnostics) {
    // supersonic inflow into a throat below a_min, with a right state that no
    // subsonic branch can reach either
    const GasState l{1.0, 5.0, 5.0};
    const GasState r{1.0, 5.0, 5.0};
    try {
        const auto sol = solve_duct(l, 1.0, r, 0.5, kGas);
        for (const WaveFan& f : sol.solutions) EXPECT_TRUE(fan_admissible(f, kGas));
    } catch (const NoSolution& e) {
        EXPECT_NE(std::string(e.what()).find("a_min"), std::string::npos);
    }
}

TEST(Duct, SampleIsRightContinuousAtJump) {
    const GasState l{0.75, 5.0, 5.0};
    const GasState r{0.688168, 5.589, 2.3679};
    const WaveFan fan = solve_duct(l, 1.0, r, 1.3, kGas).solutions[0];
    EXPECT_EQ(sample(fan, 0.0, kGas), fan.states[1]);
    EXPECT_EQ(sample(fan, -1e-12, kGas), fan.states[0]);
}

TEST(Properties, RandomDuctProblemsReturnAdmissibleFans) {
    auto rng = std::mt19937_64(51);
    int solved = 0;
    for (int i = 0; i < 1000; ++i) {
        const GasState l = sampling::state_with_mach(rng, -2.5, 2.5, 2.0);
        const GasState r = sampling::state_with_mach(rng, -2.5, 2.5, 2.0);
        const double a_l = sampling::uniform(rng, 0.6, 1.6);
        const double a_r = sampling::uniform(rng, 0.6, 1.6);
        try {
            const DuctRiemannSolutions sol = solve_duct(l, a_l, r, a_r, kGas);
            ASSERT_GE(sol.solutions.size(), 1u);
            EXPECT_LE(sol.solutions.size(), 3u) << sol.multiplicity_note;
            for (const WaveFan& f : sol.solutions) {
                EXPECT_TRUE(fan_admissible(f, kGas)) << f.pattern();
                EXPECT_NEAR(f.leftmost().rho, l.rho, 0.0);
                EXPECT_NEAR(f.rightmost().rho, r.rho, 0.0);
                EXPECT_EQ(f.leftmost().a, a_l);
                EXPECT_EQ(f.rightmost().a, a_r);
                for (const GasState& s : f.states) {
                    if (!s.is_vacuum()) EXPECT_TRUE(s.a == a_l || s.a == a_r || f.origin == FanOrigin::Resonant);
                }
            }
            ++solved;
        } catch (const NoSolution&) {
        }
    }
    EXPECT_GT(solved, 500);
}
