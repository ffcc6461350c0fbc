#include "catch2/catch_amalgamated.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "xmon/constants.hpp"
#include "xmon/core_params.hpp"
#include "xmon/dynamics.hpp"
#include "xmon/error.hpp"
#include "xmon/spectrum.hpp"

using namespace xmon;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double PI = 3.14159265358979323846;
const double omega_q = 2 * PI * 11.3e9;

// Oracle: driven two-level RWA solution from the ground state.
double rabi_p1(double rabi, double detuning, double t) {
    const double w = std::sqrt(rabi * rabi + detuning * detuning);
    const double s = std::sin(0.5 * w * t);
    return rabi * rabi / (w * w) * s * s;
}

DriveSpec resonant(double rabi_hz, double duration, Frame frame = Frame::rotating) {
    DriveSpec d;
    d.omega_d = omega_q;
    d.rabi = 2 * PI * rabi_hz;
    d.duration = duration;
    d.frame = frame;
    return d;
}

QubitModel three_level() {
    const auto en = energies_from_frequencies(41.4e9, 414e6);
    return QubitModel::from_spectrum(diagonalize(en), 3);
}

}  // namespace

TEST_CASE("resonant pi pulse at 25 MHz", "[dynamics]") {
    const auto model = QubitModel::two_level(omega_q);
    const auto drive = resonant(25e6, 40e-9);
    const auto g = gate_time(model, drive);
    CHECK_THAT(g.pi_pulse_time, WithinRel(20e-9, 0.01));
    CHECK_THAT(g.pi_pulse_time, WithinRel(PI / drive.rabi, 1e-4));
    CHECK(g.leakage == 0.0);

    DriveSpec pulse = drive;
    pulse.duration = PI / drive.rabi;
    const auto r = evolve(model, pulse, default_step(model, pulse));
    CHECK(r.populations.back()[1] >= 0.999);
}

TEST_CASE("lab-frame pi time ignores counter-rotating wiggles", "[dynamics]") {
    const auto model = QubitModel::two_level(omega_q);
    const auto drive = resonant(25e6, 40e-9, Frame::lab);
    const auto r = evolve(model, drive, default_step(model, drive));
    REQUIRE(r.pi_pulse_time.has_value());
    CHECK_THAT(*r.pi_pulse_time, WithinRel(20e-9, 0.01));
}

TEST_CASE("rotating frame follows the analytic Rabi formula", "[dynamics][oracle]") {
    const auto model = QubitModel::two_level(omega_q);
    for (double det_hz : {0.0, 10e6, -30e6}) {
        DriveSpec d = resonant(25e6, 60e-9);
        d.omega_d = omega_q + 2 * PI * det_hz;
        const auto r = evolve(model, d, default_step(model, d), 10);
        for (std::size_t i = 0; i < r.times.size(); ++i) {
            CHECK_THAT(r.populations[i][1], WithinAbs(rabi_p1(d.rabi, 2 * PI * det_hz, r.times[i]), 1e-8));
        }
    }
}

TEST_CASE("unitarity over 100 Rabi periods", "[dynamics]") {
    const auto model = QubitModel::two_level(omega_q);
    const auto d = resonant(25e6, 100 * 40e-9);
    const auto r = evolve(model, d, default_step(model, d), 100);
    CHECK(r.norm_drift < 1e-8);
    for (double e : r.norm_error) CHECK(e < 1e-8);
}

TEST_CASE("halving the step cuts the error at least eightfold", "[dynamics][property]") {
    const auto model = QubitModel::two_level(omega_q);
    const auto d = resonant(25e6, 3 * 40e-9);
    const double exact = rabi_p1(d.rabi, 0.0, d.duration);
    const double period = 2 * PI / d.rabi;
    const auto coarse = propagate(model, d, period / 20);
    const auto fine = propagate(model, d, period / 40);
    const double e1 = std::abs(coarse.populations.back()[1] - exact) + coarse.norm_drift;
    const double e2 = std::abs(fine.populations.back()[1] - exact) + fine.norm_drift;
    REQUIRE(e2 > 0.0);
    CHECK(e1 / e2 >= 8.0);
}

TEST_CASE("pi time scales inversely with the drive", "[dynamics][property]") {
    const auto model = QubitModel::two_level(omega_q);
    for (double rabi_hz : {5e6, 12.5e6, 25e6, 50e6}) {
        const auto d = resonant(rabi_hz, 2.0 / rabi_hz);
        CHECK_THAT(gate_time(model, d).pi_pulse_time * rabi_hz, WithinRel(0.5, 1e-4));
    }
}

TEST_CASE("lab and rotating frames agree to the counter-rotating correction", "[dynamics][property]") {
    const auto model = QubitModel::two_level(omega_q);
    const auto rot = resonant(25e6, 20e-9);
    const auto lab = resonant(25e6, 20e-9, Frame::lab);
    const double period = 2 * PI / omega_q;
    const auto r_lab = evolve(model, lab, period / 60, 1);
    const auto r_rot = evolve(model, rot, default_step(model, rot));
    const double tol = 4.0 * lab.rabi / omega_q;
    CHECK_THAT(r_lab.populations.back()[1], WithinAbs(r_rot.populations.back()[1], tol));
    CHECK(r_lab.norm_drift < 1e-8);
}

TEST_CASE("leakage out of the qubit subspace drops with weaker drive", "[dynamics]") {
    const auto model = three_level();
    const auto strong = gate_time(model, [&] {
        DriveSpec d = resonant(25e6, 40e-9);
        d.omega_d = model.omega_q;
        return d;
    }());
    const auto weak = gate_time(model, [&] {
        DriveSpec d = resonant(12.5e6, 80e-9);
        d.omega_d = model.omega_q;
        return d;
    }());
    CHECK(strong.leakage > 0.0);
    CHECK(weak.leakage < strong.leakage);
}

TEST_CASE("strong drive warning", "[dynamics]") {
    const auto model = QubitModel::two_level(omega_q);
    const auto r = propagate(model, resonant(0.1 * 11.3e9, 1e-9), 1e-12);
    CHECK_FALSE(r.warnings.empty());
    CHECK(propagate(model, resonant(25e6, 1e-9), 1e-11).warnings.empty());
}

TEST_CASE("dynamics input errors", "[dynamics][errors]") {
    const auto model = QubitModel::two_level(omega_q);
    const double period = 2 * PI / omega_q;
    CHECK_THROWS_AS(evolve(model, resonant(25e6, 1e-9, Frame::lab), period / 10), InvalidParameter);
    CHECK_THROWS_AS(evolve(model, resonant(25e6, 0.0), 1e-12), InvalidParameter);
    CHECK_THROWS_AS(evolve(model, resonant(25e6, 40e-9), -1.0), InvalidParameter);
    CHECK_THROWS_AS(evolve(model, resonant(25e6, 400e-9), 10e-9), AccuracyError);
    DriveSpec off = resonant(25e6, 40e-9);
    off.omega_d *= 1.01;
    CHECK_THROWS_AS(gate_time(model, off), InvalidParameter);
    CHECK_THROWS_AS(gate_time(model, resonant(25e6, 10e-9)), DurationError);
    QubitModel broken = model;
    broken.level_energies = {0.0};
    CHECK_THROWS_AS(broken.validate(), InvalidParameter);
    CHECK_THROWS_AS(QubitModel::from_spectrum(diagonalize(energies_from_frequencies(41.4e9, 414e6)), 1),
                    InvalidParameter);
}

TEST_CASE("rotating-frame Hamiltonian structure", "[dynamics]") {
    const auto model = three_level();
    DriveSpec d = resonant(25e6, 1e-9);
    d.omega_d = model.omega_q;
    const auto h = rotating_frame_transform(model, d);
    const double hbar = codata2018.hbar;
    CHECK_THAT(h(0, 0), WithinAbs(0.0, 1e-40));
    CHECK_THAT(h(1, 1) / hbar, WithinAbs(0.0, 1e-3 * model.omega_q));
    CHECK_THAT(h(0, 1) / hbar, WithinRel(0.5 * d.rabi, 1e-12));
    CHECK_THAT(h(1, 2) / hbar, WithinRel(0.5 * d.rabi * std::sqrt(2.0), 1e-12));
    // Third level sits at minus the anharmonicity in the drive frame.
    const double alpha = (2 * model.level_energies[1] - model.level_energies[2] - model.level_energies[0]) / hbar;
    CHECK_THAT(h(2, 2) / hbar, WithinRel(-alpha, 1e-9));
}

TEST_CASE("population CSV layout", "[dynamics]") {
    const auto model = QubitModel::two_level(omega_q);
    const auto r = propagate(model, resonant(25e6, 1e-9), 1e-10, 5);
    std::ostringstream os;
    write_population_csv(r, os);
    std::istringstream is(os.str());
    std::string header;
    std::getline(is, header);
    CHECK(header == "time_s,p0,p1,norm_drift");
    int rows = 0;
    for (std::string line; std::getline(is, line);) ++rows;
    CHECK(rows == static_cast<int>(r.times.size()));
    CHECK(r.times.size() == 3);  // t = 0, after 5 steps, after 10 steps
}
