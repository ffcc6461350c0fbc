#include "catch2/catch_amalgamated.hpp"

#include <cmath>
#include <random>

#include "xmon/error.hpp"
#include "xmon/readout_budget.hpp"

using namespace xmon;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double H = 6.62607015e-34;
constexpr double KB = 1.380649e-23;

double oracle_quantum_limit(double nu) { return H * nu / (2 * KB); }

NoiseChain two_stage() {
    NoiseChain c;
    c.signal_freq = 11.3e9;
    c.stages.push_back(ChainStage::amplifier("TWPA", 20.0, oracle_quantum_limit(11.3e9)));
    c.stages.push_back(ChainStage::amplifier("HEMT1", 41.0, 4.2, 4.0));
    return c;
}

}  // namespace

TEST_CASE("quantum limit temperature", "[readout]") {
    CHECK_THAT(quantum_limit_temperature(11.3e9), WithinRel(0.271, 5e-3));
    CHECK_THAT(quantum_limit_temperature(11.3e9), WithinRel(0.27116, 1e-4));
    CHECK_THAT(quantum_limit_temperature(7.2e9), WithinRel(0.173, 5e-3));
    CHECK_THAT(quantum_limit_temperature(22.6e9), WithinRel(2 * quantum_limit_temperature(11.3e9), 1e-15));
}

TEST_CASE("single stage is the identity", "[readout]") {
    NoiseChain c;
    c.stages.push_back(ChainStage::amplifier("HEMT1", 41.0, 4.2));
    const auto b = cascade_noise_temperature(c);
    CHECK_THAT(b.t_sys, WithinRel(4.2, 1e-15));
    REQUIRE(b.stages.size() == 1);
    CHECK_THAT(b.stages[0].fraction, WithinRel(1.0, 1e-15));
}

TEST_CASE("TWPA plus HEMT cascade", "[readout]") {
    const auto b = cascade_noise_temperature(two_stage());
    CHECK_THAT(b.t_sys, WithinRel(0.313, 1e-3));
    CHECK_THAT(b.t_sys, WithinRel(oracle_quantum_limit(11.3e9) + 4.2 / 100.0, 1e-12));
    CHECK_THAT(b.total_gain_db, WithinAbs(61.0, 1e-12));
    CHECK_THAT(b.stages[0].fraction + b.stages[1].fraction, WithinRel(1.0, 1e-12));
    CHECK_THAT(b.stages[1].input_referred, WithinRel(0.042, 1e-12));
}

TEST_CASE("default chain", "[readout]") {
    const auto c = default_readout_chain(11.3e9);
    REQUIRE(c.stages.size() == 3);
    CHECK(c.stages[0].name == "TWPA");
    CHECK_THAT(c.stages[2].noise_temp, WithinRel(nf_to_temp(1.3), 1e-12));
    const auto b = cascade_noise_temperature(c);
    CHECK_THAT(b.t_sys, WithinRel(0.31316 + nf_to_temp(1.3) / std::pow(10.0, 6.1), 1e-4));
}

TEST_CASE("noise figure conversion", "[readout]") {
    CHECK_THAT(nf_to_temp(0.06), WithinRel(290.0 * (std::pow(10.0, 0.006) - 1.0), 1e-12));
    CHECK_THAT(nf_to_temp(0.06), WithinRel(4.03, 2e-3));
    CHECK_THAT(nf_to_temp(0.0), WithinAbs(0.0, 1e-15));
    CHECK_THAT(nf_to_temp(3.0103), WithinRel(290.0, 1e-4));
    for (double t : {0.01, 0.271, 4.2, 35.0, 290.0, 1e4}) {
        CHECK_THAT(nf_to_temp(temp_to_nf(t)), WithinRel(t, 1e-10));
    }
    CHECK_THAT(db_to_linear(20.0), WithinRel(100.0, 1e-15));
    CHECK_THAT(linear_to_db(db_to_linear(-3.7)), WithinRel(-3.7, 1e-14));
}

TEST_CASE("attenuators", "[readout]") {
    const auto zero = ChainStage::attenuator("cable", 0.0, 4.0);
    CHECK(zero.noise_temp == 0.0);
    const auto att = ChainStage::attenuator("att", -3.0, 4.0);
    CHECK_THAT(att.noise_temp, WithinRel((1.0 / db_to_linear(-3.0) - 1.0) * 4.0, 1e-12));
    CHECK_THROWS_AS(ChainStage::attenuator("bad", 2.0, 4.0), InvalidParameter);

    NoiseChain c = two_stage();
    c.stages.insert(c.stages.begin(), ChainStage::attenuator("isolator", -0.5, 0.02));
    const auto b = cascade_noise_temperature(c);
    const double g0 = db_to_linear(-0.5);
    CHECK_THAT(b.t_sys, WithinRel(c.stages[0].noise_temp + (0.27116 + 0.042) / g0, 1e-4));
}

TEST_CASE("chain configuration errors", "[readout][errors]") {
    NoiseChain empty;
    CHECK_THROWS_AS(cascade_noise_temperature(empty), ConfigurationError);
    NoiseChain flat;
    flat.stages.push_back(ChainStage::amplifier("dead", 0.0, 1.0));
    CHECK_THROWS_AS(cascade_noise_temperature(flat), ConfigurationError);
    NoiseChain neg;
    neg.stages.push_back(ChainStage::amplifier("x", 10.0, 1.0));
    neg.stages[0].noise_temp = -1.0;
    CHECK_THROWS_AS(cascade_noise_temperature(neg), ConfigurationError);
}

TEST_CASE("later-stage insensitivity bound", "[readout][property]") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> gain(0.5, 45.0), temp(0.05, 300.0);
    for (int trial = 0; trial < 200; ++trial) {
        NoiseChain c;
        for (int s = 0; s < 3; ++s) c.stages.push_back(ChainStage::amplifier("A", gain(rng), temp(rng)));
        const double base = cascade_noise_temperature(c).t_sys;
        double g_before = 1.0;
        for (int s = 0; s < 3; ++s) {
            NoiseChain scaled = c;
            scaled.stages[s].noise_temp *= 10.0;
            const double delta = cascade_noise_temperature(scaled).t_sys - base;
            const double bound = 10.0 * c.stages[s].noise_temp / g_before;
            CHECK(delta < bound);
            // delta is a difference of two T_sys values; allow for the cancellation.
            CHECK_THAT(delta, WithinAbs(9.0 * c.stages[s].noise_temp / g_before, 1e-12 * cascade_noise_temperature(scaled).t_sys));
            g_before *= c.stages[s].gain();
        }
        CHECK(base >= c.stages[0].noise_temp);
    }
}

TEST_CASE("moving the quietest amplifier later never helps at equal gain", "[readout][property]") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> gain(3.0, 40.0), temp(0.1, 300.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double g = gain(rng);
        NoiseChain c;
        for (int s = 0; s < 3; ++s) c.stages.push_back(ChainStage::amplifier("A", g, temp(rng)));
        std::sort(c.stages.begin(), c.stages.end(),
                  [](const ChainStage& a, const ChainStage& b) { return a.noise_temp < b.noise_temp; });
        const double best = cascade_noise_temperature(c).t_sys;
        std::vector<int> order{0, 1, 2};
        while (std::next_permutation(order.begin(), order.end())) {
            NoiseChain p;
            for (int i : order) p.stages.push_back(c.stages[i]);
            CHECK(cascade_noise_temperature(p).t_sys >= best * (1 - 1e-12));
        }
    }
}

TEST_CASE("unequal gains: a quiet low-gain stage belongs later", "[readout][property]") {
    // Counterexample to ordering by noise temperature alone.
    NoiseChain quiet_first;
    quiet_first.stages = {ChainStage::amplifier("quiet", 0.05, 1.0), ChainStage::amplifier("loud", 30.0, 2.0)};
    NoiseChain quiet_last;
    quiet_last.stages = {quiet_first.stages[1], quiet_first.stages[0]};
    CHECK(cascade_noise_temperature(quiet_last).t_sys < cascade_noise_temperature(quiet_first).t_sys);
}

TEST_CASE("SNR estimate", "[readout]") {
    const double nu = 11.3e9;
    const double tq = oracle_quantum_limit(nu);
    CHECK_THAT(snr_from_temperature(tq, nu, 0.5, 1e6, 1e-6), WithinRel(1.0, 1e-12));
    CHECK_THAT(snr_from_temperature(tq, nu, 0.5, 4e6, 1e-6), WithinRel(2.0, 1e-12));
    const double s1 = snr_from_temperature(0.313, nu, 1.0, 1e6, 1e-6);
    CHECK_THAT(s1, WithinRel(1.73, 5e-3));
    CHECK_THAT(snr_from_temperature(0.313, nu, 1.0, 1e6, 2e-6), WithinRel(s1 * std::sqrt(2.0), 1e-12));
    const auto chain = two_stage();
    CHECK_THAT(snr_estimate(chain, 1.0, 1e6, 1e-6),
               WithinRel(snr_from_temperature(cascade_noise_temperature(chain).t_sys, nu, 1.0, 1e6, 1e-6), 1e-12));
    CHECK_THROWS_AS(snr_from_temperature(0.313, nu, 0.0, 1e6, 1e-6), InvalidParameter);
}
