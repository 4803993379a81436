#include "laddertb/transport.hpp"

#include <Eigen/LU>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace laddertb {

std::complex<double> lead_surface_green(double energy, double hopping, double eta) {
    if (hopping == 0.0) throw std::invalid_argument("lead hopping must be nonzero");
    const std::complex<double> z(energy, eta);
    const double t2 = hopping * hopping;
    // roots of t^2 g^2 - z g + 1 = 0; the retarded (decaying) root has the
    // smaller modulus and Im g <= 0
    const std::complex<double> disc = std::sqrt(z * z - 4.0 * t2);
    const std::complex<double> g_minus = (z - disc) / (2.0 * t2);
    const std::complex<double> g_plus = (z + disc) / (2.0 * t2);
    return std::abs(g_minus) <= std::abs(g_plus) ? g_minus : g_plus;
}

namespace {

struct Attachments {
    int left;
    int right;
};

Attachments resolve_attachments(const CellGeometry& g, int n_cells, const LeadModel& left,
                                const LeadModel& right) {
    const int d = g.dim();
    Attachments a;
    a.left = left.attachment.value_or(g.chain_site(0));
    a.right = right.attachment.value_or((n_cells - 1) * d + g.chain_site(g.n_chain - 1));
    const int total = n_cells * d;
    if (a.left < 0 || a.left >= total || a.right < 0 || a.right >= total || a.left == a.right)
        throw std::invalid_argument("invalid lead attachment sites");
    return a;
}

}  // namespace

TransmissionCurve transmission(const CellSpec& spec, int n_cells, const LeadModel& left,
                               const LeadModel& right, const Vector& energy_grid, double eta) {
    const CellGeometry g = build_geometry(spec);
    const Matrix h = build_finite(g, spec, n_cells);
    const int n = static_cast<int>(h.rows());
    const Attachments at = resolve_attachments(g, n_cells, left, right);

    TransmissionCurve curve;
    curve.energies = energy_grid;
    curve.transmission.resize(energy_grid.size());
    CMatrix m(n, n);
    for (Eigen::Index j = 0; j < energy_grid.size(); ++j) {
        const double e = energy_grid(j);
        const std::complex<double> sigma_l =
            left.hopping * left.hopping * lead_surface_green(e - left.onsite, left.hopping, eta);
        const std::complex<double> sigma_r =
            right.hopping * right.hopping * lead_surface_green(e - right.onsite, right.hopping, eta);
        m = -h.cast<std::complex<double>>();
        m.diagonal().array() += std::complex<double>(e, eta);
        m(at.left, at.left) -= sigma_l;
        m(at.right, at.right) -= sigma_r;
        CVector rhs = CVector::Zero(n);
        rhs(at.right) = 1.0;
        const CVector col = Eigen::PartialPivLU<CMatrix>(m).solve(rhs);
        const std::complex<double> g_lr = col(at.left);
        const double gamma_l = -2.0 * sigma_l.imag();
        const double gamma_r = -2.0 * sigma_r.imag();
        curve.transmission(j) = gamma_l * gamma_r * std::norm(g_lr);
    }
    return curve;
}

Vector device_ldos(const CellSpec& spec, int n_cells, const LeadModel& left,
                   const LeadModel& right, double energy, double eta) {
    const CellGeometry g = build_geometry(spec);
    const Matrix h = build_finite(g, spec, n_cells);
    const int n = static_cast<int>(h.rows());
    const Attachments at = resolve_attachments(g, n_cells, left, right);
    const std::complex<double> sigma_l =
        left.hopping * left.hopping * lead_surface_green(energy - left.onsite, left.hopping, eta);
    const std::complex<double> sigma_r =
        right.hopping * right.hopping * lead_surface_green(energy - right.onsite, right.hopping, eta);
    CMatrix m = -h.cast<std::complex<double>>();
    m.diagonal().array() += std::complex<double>(energy, eta);
    m(at.left, at.left) -= sigma_l;
    m(at.right, at.right) -= sigma_r;
    const CMatrix green = Eigen::PartialPivLU<CMatrix>(m).inverse();
    Vector rho(n);
    for (int i = 0; i < n; ++i) rho(i) = -green(i, i).imag() / std::numbers::pi;
    return rho;
}

}  // namespace laddertb
