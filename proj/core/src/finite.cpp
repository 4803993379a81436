#include "laddertb/finite.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>
#include <stdexcept>

#include "laddertb/bands.hpp"
#include "laddertb/symmetry.hpp"

namespace laddertb {

FiniteSpectrum finite_spectrum(const CellSpec& spec, int n_cells) {
    const CellGeometry g = build_geometry(spec);
    FiniteSpectrum fs;
    fs.spec = spec;
    fs.n_cells = n_cells;
    fs.dim_cell = g.dim();
    Eigen::SelfAdjointEigenSolver<Matrix> solver(build_finite(g, spec, n_cells));
    fs.energies = solver.eigenvalues();
    fs.states = solver.eigenvectors();
    return fs;
}

LdosMap ldos(const FiniteSpectrum& fs, int state) {
    if (state < 0 || state >= fs.dim()) throw std::out_of_range("state index out of range");
    LdosMap map;
    map.state = state;
    map.weights = fs.states.col(state).cwiseAbs2();
    return map;
}

std::pair<double, double> gap_window(const CellSpec& spec, int n_k) {
    const CellGeometry g = build_geometry(spec);
    const BandStructure bs = band_structure(make_bloch_operator(g, spec), n_k);
    const auto [lower, upper] = central_pair_indices(bs);
    return {bs.energies.col(lower).maxCoeff(), bs.energies.col(upper).minCoeff()};
}

std::vector<int> in_gap_states(const FiniteSpectrum& fs, double e_lo, double e_hi) {
    std::vector<int> out;
    if (!(e_lo < e_hi)) return out;
    for (int i = 0; i < fs.dim(); ++i)
        if (fs.energies(i) > e_lo && fs.energies(i) < e_hi) out.push_back(i);
    return out;
}

EdgeMetrics edge_metrics(const LdosMap& map, int n_cells) {
    if (n_cells < 3) throw std::invalid_argument("edge metrics need n_cells >= 3");
    const int d = static_cast<int>(map.weights.size()) / n_cells;
    const double w_left = map.weights.head(d).sum();
    const double w_right = map.weights.tail(d).sum();
    EdgeMetrics m;
    m.edge_fraction = w_left + w_right;
    const double denom = w_left + w_right;
    m.asymmetry = denom > 0.0 ? std::fabs(w_left - w_right) / denom : 0.0;
    return m;
}

std::pair<LdosMap, LdosMap> recombine_pair(const FiniteSpectrum& fs, int state_a, int state_b) {
    const int d = fs.dim_cell;
    const Vector psi_a = fs.states.col(state_a);
    const Vector psi_b = fs.states.col(state_b);
    // weight in the first cell as a 2x2 quadratic form on span{a, b}
    Eigen::Matrix2d w_left;
    const auto head_a = psi_a.head(d);
    const auto head_b = psi_b.head(d);
    w_left(0, 0) = head_a.squaredNorm();
    w_left(1, 1) = head_b.squaredNorm();
    w_left(0, 1) = w_left(1, 0) = head_a.dot(head_b);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(w_left);
    const Eigen::Vector2d c_left = solver.eigenvectors().col(1);   // max left weight
    const Eigen::Vector2d c_right = solver.eigenvectors().col(0);  // orthogonal partner
    LdosMap left, right;
    left.state = state_a;
    right.state = state_b;
    left.weights = (c_left(0) * psi_a + c_left(1) * psi_b).cwiseAbs2();
    right.weights = (c_right(0) * psi_a + c_right(1) * psi_b).cwiseAbs2();
    return {left, right};
}

namespace {

std::vector<int> protecting_orbit_partner(const CellGeometry& g, const CellSpec& spec) {
    const GroupLabel label = classify_group(spec);
    SymmetryKind kind = SymmetryKind::My;
    if (label.protecting == Protecting::PureInv) kind = SymmetryKind::Inv;
    else if (label.protecting == Protecting::None) kind = SymmetryKind::Identity;
    return op_permutation(g, kind).permutation;
}

}  // namespace

DisorderReport disorder_robustness(const CellSpec& spec, int n_cells, double amplitude,
                                   int trials, std::uint64_t seed, bool preserve_symmetry) {
    const CellGeometry g = build_geometry(spec);
    const int d = g.dim();
    const Matrix h1 = assemble_intercell(g, spec);
    const Matrix h0 = assemble_intracell(g, spec);
    const std::vector<int> partner =
        preserve_symmetry ? protecting_orbit_partner(g, spec) : std::vector<int>();

    DisorderReport rep;
    rep.trials = trials;
    double split_sum = 0.0;
    int split_count = 0;
    for (int trial = 0; trial < trials; ++trial) {
        // per-trial independent stream derived from the master seed
        std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(trial + 1));
        std::uniform_real_distribution<double> dist(-amplitude, amplitude);
        Vector noise(d);
        for (int i = 0; i < d; ++i) noise(i) = dist(rng);
        if (preserve_symmetry)
            for (int i = 0; i < d; ++i) {
                const int j = partner[static_cast<size_t>(i)];
                if (j > i) noise(j) = noise(i);
            }
        const Matrix h0_noisy = h0 + noise.asDiagonal().toDenseMatrix();

        // noisy bulk gap from the perturbed Bloch operator
        const BandStructure bs = band_structure({h0_noisy, h1, g.lattice_constant}, 129);
        const auto [lower, upper] = central_pair_indices(bs);
        const double e_lo = bs.energies.col(lower).maxCoeff();
        const double e_hi = bs.energies.col(upper).minCoeff();

        Matrix h_fin = Matrix::Zero(n_cells * d, n_cells * d);
        for (int n = 0; n < n_cells; ++n) {
            h_fin.block(n * d, n * d, d, d) = h0_noisy;
            if (n + 1 < n_cells) {
                h_fin.block(n * d, (n + 1) * d, d, d) = h1;
                h_fin.block((n + 1) * d, n * d, d, d) = h1.transpose();
            }
        }
        Eigen::SelfAdjointEigenSolver<Matrix> solver(h_fin, Eigen::EigenvaluesOnly);
        std::vector<double> in_gap;
        for (int i = 0; i < solver.eigenvalues().size(); ++i) {
            const double e = solver.eigenvalues()(i);
            if (e > e_lo && e < e_hi) in_gap.push_back(e);
        }
        if (in_gap.size() == 2) ++rep.persisted;
        if (in_gap.size() >= 2) {
            const double split = in_gap[1] - in_gap[0];
            rep.max_split = std::max(rep.max_split, split);
            split_sum += split;
            ++split_count;
        }
    }
    rep.persistence_fraction = trials > 0 ? static_cast<double>(rep.persisted) / trials : 0.0;
    rep.mean_split = split_count > 0 ? split_sum / split_count : 0.0;
    return rep;
}

}  // namespace laddertb
