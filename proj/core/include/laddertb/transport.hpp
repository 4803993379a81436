#ifndef LADDERTB_TRANSPORT_HPP
#define LADDERTB_TRANSPORT_HPP

#include <complex>
#include <optional>

#include "laddertb/hamiltonian.hpp"
#include "laddertb/lattice.hpp"

namespace laddertb {

// Semi-infinite single-orbital chain lead, attached to one external chain
// site of the device.
struct LeadModel {
    double hopping = 1.0;
    double onsite = 0.0;
    // device site index; defaults to the leftmost/rightmost chain site
    std::optional<int> attachment;
};

// Retarded surface Green's function of the semi-infinite chain:
// g(E) = (E - i sqrt(4 t^2 - E^2)) / (2 t^2) inside the band, the decaying
// real root outside; Im g <= 0 always.
std::complex<double> lead_surface_green(double energy, double hopping, double eta = 1e-9);

struct TransmissionCurve {
    Vector energies;
    Vector transmission;
};

// Single-channel two-terminal transmission T = Gamma_L Gamma_R |G_LR|^2 with
// Sigma = t^2 g(E) on the attachment diagonal and Gamma = -2 Im Sigma.
TransmissionCurve transmission(const CellSpec& spec, int n_cells, const LeadModel& left,
                               const LeadModel& right, const Vector& energy_grid,
                               double eta = 1e-9);

// rho_i(E) = -Im G_ii(E) / pi with both leads attached.
Vector device_ldos(const CellSpec& spec, int n_cells, const LeadModel& left,
                   const LeadModel& right, double energy, double eta = 1e-9);

}  // namespace laddertb

#endif
