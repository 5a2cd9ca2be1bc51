#pragma once

#include <cstdint>
#include <vector>

#include "riscov/rng.hpp"

namespace riscov::geometry {

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

// Full parameter set of the network model. Powers are carried in dBm (the
// unit the configuration files use) and converted once via the accessors.
struct SystemParams {
    double lambda_b = 1.0 / (300.0 * 300.0 * 3.14159265358979323846);  // BS per m^2
    double p_t_dbm = 20.0;
    double noise_dbm = -90.0;
    double alpha_t = 4.0;
    double alpha_c = 4.0;
    double a_c = 0.6;
    double a_t = 0.4;
    int n = 5;            // RIS elements
    double beta = 1.0;    // RIS power-consumption coefficient
    double rho_i = 0.5;   // fraction of interfering BSs reaching through the RIS
    double r_c = 50.0;    // fixed connected-user distance, m
    double amplitude_gain = 1.0;  // A
    double c_t = 1.0;     // typical-link intercept
    double c_c = 1.0;     // connected-link intercept
    double gamma_sic_th = 1e-2;
    double gamma_t_th = 1e-2;
    double gamma_c_th = 1e-2;
    double window_radius = 0.0;  // 0 = use default_window_radius()

    double p_t_watts() const { return dbm_to_watts(p_t_dbm); }
    double noise_watts() const { return dbm_to_watts(noise_dbm); }
    // ten mean nearest-neighbor scales; keeps interference truncation below 1%
    double default_window_radius() const;
    double effective_window_radius() const;

    // Structural invariants only (a_c + a_t = 1, a_c > a_t, path-loss
    // exponents > 2, positive densities and distances, ...). Throws
    // std::invalid_argument on violation.
    void validate_structure() const;

    // validate_structure plus threshold feasibility (a_c - th a_t > 0 for the
    // SIC and connected thresholds). Configuration loading uses this; the
    // estimators accept infeasible thresholds and report zero coverage.
    void validate() const;
};

// One sampled network as seen from the typical user: nearest-BS distance and
// the sorted interferer distances (all strictly beyond the serving one).
struct NetworkRealization {
    double d_serving = 0.0;
    std::vector<double> d_interferers;
};

// Distances of a homogeneous PPP of the given density restricted to a disk,
// sorted ascending. May be empty.
std::vector<double> sample_hppp_distances(double lambda, double window_radius,
                                          RandomStream& rng);

// Density of the distance to the k-th nearest point of an HPPP:
//   f(x) = 2 (pi lambda)^k / (k-1)! x^{2k-1} exp(-pi lambda x^2).
double nearest_distance_pdf(double x, int k, double lambda);

// Samples a network realization (resamples internally while empty).
NetworkRealization sample_network(const SystemParams& params, RandomStream& rng);

}  // namespace riscov::geometry
