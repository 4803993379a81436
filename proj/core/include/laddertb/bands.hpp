#ifndef LADDERTB_BANDS_HPP
#define LADDERTB_BANDS_HPP

#include <utility>
#include <vector>

#include "laddertb/hamiltonian.hpp"
#include "laddertb/lattice.hpp"

namespace laddertb {

// Full spectrum over a uniform closed k-grid with n_k points including both
// endpoints 0 and 2*pi/a. Energies ascend at each k; frames hold the
// corresponding orthonormal eigenvector columns.
struct BandStructure {
    Vector k_grid;
    Matrix energies;                // n_k x dim
    std::vector<CMatrix> frames;    // n_k matrices, dim x dim
    double lattice_constant = 0.0;

    int n_k() const { return static_cast<int>(k_grid.size()); }
    int n_bands() const { return static_cast<int>(energies.cols()); }
};

BandStructure band_structure(const BlochOperator& op, int n_k);

struct FlatBand {
    int band;           // sorted index at k = 0
    double energy;      // mean energy over the grid
    double dispersion;  // max - min along the tracked band
};

// Detect k-independent bands. Band identities are followed through exact
// crossings by eigenvector-overlap continuity, so a flat band intersected by
// a dispersive one is still reported flat.
std::vector<FlatBand> flat_band_scan(const BandStructure& bs, double tol = 1e-9);

// Energies reordered by overlap continuity; column n follows the band that
// starts as sorted index n at k = 0.
Matrix tracked_band_energies(const BandStructure& bs);

struct GapReport {
    int lower_band = -1;
    int upper_band = -1;
    double min_gap = 0.0;
    double argmin_k = 0.0;
    bool inverted = false;
};

// The adjacent pair straddling E = 0 by mean band energy (nearest-zero pair
// when no mean changes sign). Throws std::runtime_error("no straddling pair")
// if the whole spectrum is strictly one-signed.
std::pair<int, int> central_pair_indices(const BandStructure& bs);

// Minimal direct gap of the central pair over k. The inverted flag compares
// the protecting-symmetry parities (My or inversion) of the lower band at
// k = 0 and k = pi/a against the isolated-cell (t_i -> 0) reference; it stays
// false for groups without a protecting symmetry.
GapReport central_pair_gap(const BandStructure& bs, const CellSpec& spec);

// Bisection on the inverted flag to tolerance tol in t_i. The bracket must
// straddle exactly one gap closing of the central pair; otherwise throws
// std::runtime_error("no closing in bracket").
double critical_ti(const CellSpec& spec, const GroupPreset& preset,
                   double bracket_lo, double bracket_hi, double tol = 1e-6,
                   int n_k = 129);

// critical_ti mapped over a detuning list; the Fig-style phase boundary.
std::vector<std::pair<double, double>> phase_diagram(
    const CellSpec& spec, GroupName group, const std::vector<double>& eps_list,
    double bracket_lo, double bracket_hi, double tol = 1e-6);

}  // namespace laddertb

#endif
