#ifndef LADDERTB_FINITE_HPP
#define LADDERTB_FINITE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "laddertb/hamiltonian.hpp"
#include "laddertb/lattice.hpp"

namespace laddertb {

struct FiniteSpectrum {
    CellSpec spec;
    int n_cells = 0;
    int dim_cell = 0;
    Vector energies;  // ascending
    Matrix states;    // orthonormal columns (real symmetric problem)

    int dim() const { return n_cells * dim_cell; }
};

FiniteSpectrum finite_spectrum(const CellSpec& spec, int n_cells);

struct LdosMap {
    int state = 0;
    Vector weights;  // |psi_i|^2 per site, summing to 1
};

LdosMap ldos(const FiniteSpectrum& fs, int state);

// Bulk gap window of the central pair: (max_k E_lower, min_k E_upper).
std::pair<double, double> gap_window(const CellSpec& spec, int n_k = 257);

// State indices with E_lo < E < E_hi; empty when the window is degenerate.
std::vector<int> in_gap_states(const FiniteSpectrum& fs, double e_lo, double e_hi);

struct EdgeMetrics {
    double edge_fraction = 0.0;  // weight in the first plus last cell
    double asymmetry = 0.0;      // |w_left - w_right| / (w_left + w_right)
};

EdgeMetrics edge_metrics(const LdosMap& map, int n_cells);

// Left/right-localized recombination of a near-degenerate pair: the 2x2
// rotation maximizing single-boundary weight, so edge metrics do not depend
// on how the solver mixed the pair.
std::pair<LdosMap, LdosMap> recombine_pair(const FiniteSpectrum& fs, int state_a, int state_b);

struct DisorderReport {
    int trials = 0;
    int persisted = 0;
    double persistence_fraction = 0.0;
    double max_split = 0.0;   // largest in-gap splitting seen
    double mean_split = 0.0;  // averaged over trials with >= 2 in-gap states
};

// Onsite noise of the given amplitude, repeated identically in every cell.
// With preserve_symmetry the noise is symmetrized over the orbits of the
// protecting operation (My or inversion), so the quantized phase survives;
// without it the noise is free and acts as the control experiment. A trial
// "persists" when exactly two states remain inside the noisy bulk gap.
DisorderReport disorder_robustness(const CellSpec& spec, int n_cells, double amplitude,
                                   int trials, std::uint64_t seed,
                                   bool preserve_symmetry = true);

}  // namespace laddertb

#endif
