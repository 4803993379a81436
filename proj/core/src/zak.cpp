#include "laddertb/zak.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "laddertb/bands.hpp"

namespace laddertb {

double wrap_phase(double phi) {
    const double two_pi = 2.0 * std::numbers::pi;
    double w = std::fmod(phi, two_pi);
    if (w < 0.0) w += two_pi;
    return w;
}

double circular_distance(double a, double b) {
    const double two_pi = 2.0 * std::numbers::pi;
    double d = std::fabs(wrap_phase(a) - wrap_phase(b));
    return std::min(d, two_pi - d);
}

GaugeFrame periodic_gauge_frame(const BlochOperator& op, const CellGeometry& geometry,
                                int band, int n_k) {
    if (n_k < 3) throw std::invalid_argument("n_k must be >= 3");
    const int d = op.dim();
    if (band < 0 || band >= d) throw std::invalid_argument("band index out of range");
    GaugeFrame frame;
    frame.band = band;
    frame.n_k = n_k;
    frame.lattice_constant = op.lattice_constant;
    frame.vectors.reserve(static_cast<size_t>(n_k));
    const double kmax = 2.0 * std::numbers::pi / op.lattice_constant;
    Eigen::SelfAdjointEigenSolver<CMatrix> solver;
    for (int j = 0; j < n_k - 1; ++j) {
        const double k = kmax * j / (n_k - 1);
        solver.compute(bloch_hamiltonian(op, k));
        const Vector& ev = solver.eigenvalues();
        const double spacing_below = band > 0 ? ev(band) - ev(band - 1) : 1.0;
        const double spacing_above = band + 1 < d ? ev(band + 1) - ev(band) : 1.0;
        if (std::min(spacing_below, spacing_above) < 1e-10) {
            std::ostringstream msg;
            msg << "degeneracy on grid at k = " << k << " for band " << band;
            throw std::runtime_error(msg.str());
        }
        frame.vectors.push_back(solver.eigenvectors().col(band));
    }
    CVector endpoint = frame.vectors.front();
    for (const Site& s : geometry.sites) {
        const std::complex<double> factor =
            std::exp(std::complex<double>(0.0, -2.0 * std::numbers::pi * s.x_frac));
        endpoint(s.index) *= factor;
    }
    frame.vectors.push_back(endpoint);
    return frame;
}

ZakResult zak_phase(const GaugeFrame& frame, double quantization_tol) {
    std::complex<double> product(1.0, 0.0);
    for (size_t j = 0; j + 1 < frame.vectors.size(); ++j) {
        const std::complex<double> overlap = frame.vectors[j].dot(frame.vectors[j + 1]);
        if (std::abs(overlap) < 1e-8) {
            std::ostringstream msg;
            msg << "vanishing overlap at step " << j << " (grid too coarse or band crossing)";
            throw std::runtime_error(msg.str());
        }
        product *= overlap;
    }
    ZakResult res;
    res.band = frame.band;
    res.n_k = frame.n_k;
    res.phase = wrap_phase(-std::arg(product));
    const double n_c = frame.lattice_constant;  // a = N_c with d = 1
    const double pi = std::numbers::pi;
    for (double target : {pi - pi / n_c, 2.0 * pi - pi / n_c})
        if (circular_distance(res.phase, target) < quantization_tol) res.quantized_to = target;
    return res;
}

ZakResult compute_zak(const BlochOperator& op, const CellGeometry& geometry,
                      int band, int n_k, double quantization_tol) {
    ZakResult fine = zak_phase(periodic_gauge_frame(op, geometry, band, n_k), quantization_tol);
    const ZakResult coarse =
        zak_phase(periodic_gauge_frame(op, geometry, band, n_k / 2), quantization_tol);
    fine.convergence = circular_distance(fine.phase, coarse.phase);
    return fine;
}

std::vector<ZakResult> zak_all_bands(const BlochOperator& op, const CellGeometry& geometry,
                                     int n_k) {
    std::vector<ZakResult> out;
    out.reserve(static_cast<size_t>(op.dim()));
    for (int band = 0; band < op.dim(); ++band)
        out.push_back(compute_zak(op, geometry, band, n_k));
    return out;
}

std::vector<std::tuple<double, double, double>> zak_transition(
    const CellSpec& spec, const GroupPreset& preset, const std::vector<double>& ti_values,
    int n_k) {
    const CellSpec base = apply_texture(spec, preset);
    const CellGeometry g = build_geometry(base);
    std::vector<std::tuple<double, double, double>> out;
    out.reserve(ti_values.size());
    for (double ti : ti_values) {
        CellSpec s = base;
        s.t_i = ti;
        const BlochOperator op = make_bloch_operator(g, s);
        const auto [lower, upper] = central_pair_indices(band_structure(op, 65));
        const ZakResult lo = compute_zak(op, g, lower, n_k);
        const ZakResult hi = compute_zak(op, g, upper, n_k);
        out.emplace_back(ti, lo.phase, hi.phase);
    }
    return out;
}

}  // namespace laddertb
