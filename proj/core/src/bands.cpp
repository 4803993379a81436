#include "laddertb/bands.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "laddertb/symmetry.hpp"

namespace laddertb {

BandStructure band_structure(const BlochOperator& op, int n_k) {
    if (n_k < 2) throw std::invalid_argument("n_k must be >= 2");
    const int d = op.dim();
    BandStructure bs;
    bs.lattice_constant = op.lattice_constant;
    bs.k_grid.resize(n_k);
    bs.energies.resize(n_k, d);
    bs.frames.reserve(static_cast<size_t>(n_k));
    const double kmax = 2.0 * std::numbers::pi / op.lattice_constant;
    Eigen::SelfAdjointEigenSolver<CMatrix> solver;
    for (int j = 0; j < n_k; ++j) {
        const double k = kmax * j / (n_k - 1);
        bs.k_grid(j) = k;
        solver.compute(bloch_hamiltonian(op, k));
        bs.energies.row(j) = solver.eigenvalues().transpose();
        bs.frames.push_back(solver.eigenvectors());
    }
    return bs;
}

namespace {

// Greedy overlap matching: permutation mapping tracked band m to the column
// of `next` it continues into.
std::vector<int> match_frames(const CMatrix& prev, const CMatrix& next) {
    const int d = static_cast<int>(prev.cols());
    const Matrix overlap = (prev.adjoint() * next).cwiseAbs();
    std::vector<std::tuple<double, int, int>> entries;
    entries.reserve(static_cast<size_t>(d * d));
    for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) entries.emplace_back(overlap(m, n), m, n);
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return std::get<0>(a) > std::get<0>(b); });
    std::vector<int> perm(static_cast<size_t>(d), -1);
    std::vector<bool> used(static_cast<size_t>(d), false);
    int assigned = 0;
    for (const auto& [val, m, n] : entries) {
        if (perm[static_cast<size_t>(m)] >= 0 || used[static_cast<size_t>(n)]) continue;
        perm[static_cast<size_t>(m)] = n;
        used[static_cast<size_t>(n)] = true;
        if (++assigned == d) break;
    }
    return perm;
}

}  // namespace

Matrix tracked_band_energies(const BandStructure& bs) {
    const int nk = bs.n_k();
    const int d = bs.n_bands();
    Matrix out(nk, d);
    out.row(0) = bs.energies.row(0);
    // prev holds eigenvectors in tracked order (= sorted order at k = 0)
    CMatrix prev = bs.frames[0];
    for (int j = 1; j < nk; ++j) {
        const std::vector<int> perm = match_frames(prev, bs.frames[static_cast<size_t>(j)]);
        CMatrix reordered(prev.rows(), d);
        for (int m = 0; m < d; ++m) {
            const int col = perm[static_cast<size_t>(m)];
            out(j, m) = bs.energies(j, col);
            reordered.col(m) = bs.frames[static_cast<size_t>(j)].col(col);
        }
        prev = std::move(reordered);
    }
    return out;
}

std::vector<FlatBand> flat_band_scan(const BandStructure& bs, double tol) {
    if (tol <= 0) throw std::invalid_argument("flat-band tolerance must be positive");
    const Matrix tracked = tracked_band_energies(bs);
    std::vector<FlatBand> out;
    for (int n = 0; n < bs.n_bands(); ++n) {
        const double lo = tracked.col(n).minCoeff();
        const double hi = tracked.col(n).maxCoeff();
        if (hi - lo < tol) out.push_back({n, tracked.col(n).mean(), hi - lo});
    }
    return out;
}

std::pair<int, int> central_pair_indices(const BandStructure& bs) {
    if (bs.energies.minCoeff() > 0.0 || bs.energies.maxCoeff() < 0.0)
        throw std::runtime_error("no straddling pair");
    const Vector means = bs.energies.colwise().mean();
    const int d = bs.n_bands();
    int lower = -1;
    for (int n = 0; n + 1 < d; ++n)
        if (means(n) < 0.0 && means(n + 1) >= 0.0) lower = n;
    if (lower < 0) {
        double best = std::numeric_limits<double>::max();
        for (int n = 0; n + 1 < d; ++n) {
            const double score = std::abs(means(n)) + std::abs(means(n + 1));
            if (score < best) { best = score; lower = n; }
        }
    }
    return {lower, lower + 1};
}

namespace {

// Parity signs of band `band` of H(k) at k = 0 and k = pi/a under the
// permutation p (protecting symmetry).
std::pair<double, double> parity_signature(const BlochOperator& op, const Matrix& p, int band) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver;
    std::pair<double, double> out{0.0, 0.0};
    const double kpi = std::numbers::pi / op.lattice_constant;
    for (int which = 0; which < 2; ++which) {
        solver.compute(bloch_hamiltonian(op, which == 0 ? 0.0 : kpi));
        const CVector psi = solver.eigenvectors().col(band);
        const double val = (psi.adjoint() * p.cast<std::complex<double>>() * psi).value().real();
        (which == 0 ? out.first : out.second) = val >= 0.0 ? 1.0 : -1.0;
    }
    return out;
}

}  // namespace

GapReport central_pair_gap(const BandStructure& bs, const CellSpec& spec) {
    GapReport rep;
    std::tie(rep.lower_band, rep.upper_band) = central_pair_indices(bs);
    const Vector gaps = bs.energies.col(rep.upper_band) - bs.energies.col(rep.lower_band);
    Eigen::Index imin = 0;
    rep.min_gap = gaps.minCoeff(&imin);
    rep.argmin_k = bs.k_grid(imin);

    const GroupLabel label = classify_group(spec);
    if (label.protecting == Protecting::None) return rep;
    const SymmetryKind kind = (label.protecting == Protecting::PureInv)
                                  ? SymmetryKind::Inv
                                  : SymmetryKind::My;
    const CellGeometry g = build_geometry(spec);
    const Matrix p = op_permutation(g, kind).matrix();
    const BlochOperator op = make_bloch_operator(g, spec);
    const auto sig = parity_signature(op, p, rep.lower_band);

    CellSpec ref_spec = spec;
    ref_spec.t_i = 0.0;
    const BlochOperator ref_op = make_bloch_operator(g, ref_spec);
    const BandStructure ref_bs = band_structure(ref_op, 2);
    const auto [ref_lower, ref_upper] = central_pair_indices(ref_bs);
    (void)ref_upper;
    const auto ref_sig = parity_signature(ref_op, p, ref_lower);

    rep.inverted = (sig != ref_sig);
    return rep;
}

double critical_ti(const CellSpec& spec, const GroupPreset& preset,
                   double bracket_lo, double bracket_hi, double tol, int n_k) {
    if (!(bracket_lo < bracket_hi)) throw std::invalid_argument("bad bracket");
    const CellSpec base = apply_texture(spec, preset);
    const CellGeometry g = build_geometry(base);
    auto inverted_at = [&](double ti) {
        CellSpec s = base;
        s.t_i = ti;
        const BandStructure bs = band_structure(make_bloch_operator(g, s), n_k);
        return central_pair_gap(bs, s).inverted;
    };
    double lo = bracket_lo, hi = bracket_hi;
    const bool flo = inverted_at(lo);
    const bool fhi = inverted_at(hi);
    if (flo == fhi) throw std::runtime_error("no closing in bracket");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (inverted_at(mid) == flo) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<std::pair<double, double>> phase_diagram(
    const CellSpec& spec, GroupName group, const std::vector<double>& eps_list,
    double bracket_lo, double bracket_hi, double tol) {
    std::vector<std::pair<double, double>> out;
    out.reserve(eps_list.size());
    for (double eps : eps_list)
        out.emplace_back(eps, critical_ti(spec, {group, eps}, bracket_lo, bracket_hi, tol));
    return out;
}

}  // namespace laddertb
