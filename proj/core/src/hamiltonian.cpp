#include "laddertb/hamiltonian.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace laddertb {

namespace {

double onsite_of(const CellSpec& spec, SiteRole role) {
    switch (role) {
        case SiteRole::Chain: return spec.eps0;
        case SiteRole::ArmUL: return spec.eps_ul;
        case SiteRole::ArmDL: return spec.eps_dl;
        case SiteRole::ArmUR: return spec.eps_ur;
        case SiteRole::ArmDR: return spec.eps_dr;
    }
    return 0.0;
}

}  // namespace

Matrix assemble_intracell(const CellGeometry& g, const CellSpec& spec) {
    const int d = g.dim();
    Matrix h = Matrix::Zero(d, d);
    for (const Site& s : g.sites) h(s.index, s.index) = onsite_of(spec, s.role);
    for (int c = 0; c + 1 < g.n_chain; ++c) {
        int a = g.chain_site(c), b = g.chain_site(c + 1);
        h(a, b) = h(b, a) = spec.t_c;
    }
    struct ArmDesc { SiteRole role; int anchor_col; int sign; int length; };
    const ArmDesc arms[] = {
        {SiteRole::ArmUL, 0, +1, spec.n_arm_ul},
        {SiteRole::ArmDL, 0, -1, spec.n_arm_dl},
        {SiteRole::ArmUR, g.n_chain - 1, +1, spec.n_arm_ur},
        {SiteRole::ArmDR, g.n_chain - 1, -1, spec.n_arm_dr},
    };
    for (const ArmDesc& arm : arms) {
        if (arm.length == 0) continue;
        int anchor = g.chain_site(arm.anchor_col);
        int first = g.find(arm.role, arm.sign);
        h(anchor, first) = h(first, anchor) = spec.t_a;
        for (int r = 1; r < arm.length; ++r) {
            int a = g.find(arm.role, arm.sign * r);
            int b = g.find(arm.role, arm.sign * (r + 1));
            h(a, b) = h(b, a) = spec.t_a;
        }
    }
    return h;
}

Matrix assemble_intercell(const CellGeometry& g, const CellSpec& spec) {
    const int d = g.dim();
    Matrix h = Matrix::Zero(d, d);
    h(g.chain_site(g.n_chain - 1), g.chain_site(0)) = spec.t_i;
    if (spec.intercell_mode == IntercellMode::FullColumn) {
        for (int r = 1; r <= std::min(spec.n_arm_ur, spec.n_arm_ul); ++r)
            h(g.find(SiteRole::ArmUR, r), g.find(SiteRole::ArmUL, r)) = spec.t_i;
        for (int r = 1; r <= std::min(spec.n_arm_dr, spec.n_arm_dl); ++r)
            h(g.find(SiteRole::ArmDR, -r), g.find(SiteRole::ArmDL, -r)) = spec.t_i;
    }
    return h;
}

BlochOperator make_bloch_operator(const CellGeometry& g, const CellSpec& spec) {
    return {assemble_intracell(g, spec), assemble_intercell(g, spec), g.lattice_constant};
}

CMatrix bloch_hamiltonian(const BlochOperator& op, double k) {
    const std::complex<double> phase = std::exp(std::complex<double>(0.0, k * op.lattice_constant));
    CMatrix h = op.h0.cast<std::complex<double>>();
    h += op.h1.cast<std::complex<double>>() * phase;
    h += op.h1.transpose().cast<std::complex<double>>() * std::conj(phase);
    return h;
}

Matrix build_finite(const CellGeometry& g, const CellSpec& spec, int n_cells) {
    if (n_cells < 1) throw std::invalid_argument("n_cells must be >= 1");
    const int d = g.dim();
    const Matrix h0 = assemble_intracell(g, spec);
    const Matrix h1 = assemble_intercell(g, spec);
    Matrix h = Matrix::Zero(n_cells * d, n_cells * d);
    for (int n = 0; n < n_cells; ++n) {
        h.block(n * d, n * d, d, d) = h0;
        if (n + 1 < n_cells) {
            h.block(n * d, (n + 1) * d, d, d) = h1;
            h.block((n + 1) * d, n * d, d, d) = h1.transpose();
        }
    }
    return h;
}

Matrix build_finite_ring(const CellGeometry& g, const CellSpec& spec, int n_cells) {
    if (n_cells < 3) throw std::invalid_argument("ring needs n_cells >= 3");
    const int d = g.dim();
    const Matrix h1 = assemble_intercell(g, spec);
    Matrix h = build_finite(g, spec, n_cells);
    h.block((n_cells - 1) * d, 0, d, d) += h1;
    h.block(0, (n_cells - 1) * d, d, d) += h1.transpose();
    return h;
}

void export_triplets(const CMatrix& m, std::ostream& os) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != std::complex<double>(0.0, 0.0))
                os << i << " " << j << " " << m(i, j).real() << " " << m(i, j).imag() << "\n";
}

void export_triplets(const Matrix& m, std::ostream& os) {
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0.0) os << i << " " << j << " " << m(i, j) << " 0\n";
}

}  // namespace laddertb
