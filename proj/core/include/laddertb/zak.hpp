#ifndef LADDERTB_ZAK_HPP
#define LADDERTB_ZAK_HPP

#include <optional>
#include <tuple>
#include <vector>

#include "laddertb/hamiltonian.hpp"
#include "laddertb/lattice.hpp"

namespace laddertb {

// Eigenvectors of one band over the closed k-grid. The first n_k - 1 entries
// are eigenvectors of H(k) with arbitrary phases; the endpoint entry is the
// k = 0 vector multiplied componentwise by e^{-2 pi i x_frac}, which fixes
// the periodic gauge.
struct GaugeFrame {
    int band = 0;
    int n_k = 0;
    double lattice_constant = 0.0;
    std::vector<CVector> vectors;
};

// Throws std::runtime_error("degeneracy on grid ...") if the band comes
// within 1e-10 of a neighbor anywhere on the grid.
GaugeFrame periodic_gauge_frame(const BlochOperator& op, const CellGeometry& geometry,
                                int band, int n_k);

struct ZakResult {
    int band = 0;
    double phase = 0.0;        // in [0, 2 pi)
    int n_k = 0;
    double convergence = 0.0;  // |phase(n_k) - phase(n_k/2)|, circularly wrapped
    std::optional<double> quantized_to;  // pi - pi/N_c or 2 pi - pi/N_c
};

// Discrete Wilson loop: phase = -Im ln prod_j <u_j|u_{j+1}> over consecutive
// grid pairs including the gauge-fixed endpoint, single log of the full
// product, wrapped to [0, 2 pi). Throws std::runtime_error("vanishing
// overlap ...") if any |<u_j|u_{j+1}>| < 1e-8. The convergence field is not
// filled here (single grid); see compute_zak.
ZakResult zak_phase(const GaugeFrame& frame, double quantization_tol = 1e-3);

// Frames at n_k and n_k/2, with the convergence estimate filled in.
ZakResult compute_zak(const BlochOperator& op, const CellGeometry& geometry,
                      int band, int n_k, double quantization_tol = 1e-3);

std::vector<ZakResult> zak_all_bands(const BlochOperator& op, const CellGeometry& geometry,
                                     int n_k);

// (t_i, phi_lower, phi_upper) of the central pair along a t_i sweep.
std::vector<std::tuple<double, double, double>> zak_transition(
    const CellSpec& spec, const GroupPreset& preset, const std::vector<double>& ti_values,
    int n_k);

// Circular helpers on [0, 2 pi).
double wrap_phase(double phi);
double circular_distance(double a, double b);

}  // namespace laddertb

#endif
