#ifndef LADDERTB_HAMILTONIAN_HPP
#define LADDERTB_HAMILTONIAN_HPP

#include <Eigen/Dense>
#include <complex>
#include <iosfwd>

#include "laddertb/lattice.hpp"

namespace laddertb {

using Matrix = Eigen::MatrixXd;
using CMatrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXd;
using CVector = Eigen::VectorXcd;

// Intracell block h0 and intercell block h1 of the Bloch Hamiltonian
// H(k) = h0 + h1 e^{ika} + h1^T e^{-ika}. h1(i,j) is the hop from site i of
// one cell to site j of the next cell to the right.
struct BlochOperator {
    Matrix h0;
    Matrix h1;
    double lattice_constant = 0.0;

    int dim() const { return static_cast<int>(h0.rows()); }
};

// Onsite energies on the diagonal, t_c along the chain, t_a within each arm
// and on the anchor bond to the chain end.
Matrix assemble_intracell(const CellGeometry& geometry, const CellSpec& spec);

// ChainOnly: single t_i entry from the right chain end to the next cell's
// left chain end. FullColumn: additionally t_i between facing arm sites at
// equal rows; rows missing on either side are simply not coupled.
Matrix assemble_intercell(const CellGeometry& geometry, const CellSpec& spec);

BlochOperator make_bloch_operator(const CellGeometry& geometry, const CellSpec& spec);

CMatrix bloch_hamiltonian(const BlochOperator& op, double k);

// Block-tridiagonal open-boundary sample of n_cells repetitions.
Matrix build_finite(const CellGeometry& geometry, const CellSpec& spec, int n_cells);

// Same with a periodic wrap-around block, used for Bloch consistency checks.
// Requires n_cells >= 3 so the wrap bond is not duplicated.
Matrix build_finite_ring(const CellGeometry& geometry, const CellSpec& spec, int n_cells);

// Plain-text triplet dump (row, col, re, im) of the nonzero entries.
void export_triplets(const CMatrix& m, std::ostream& os);
void export_triplets(const Matrix& m, std::ostream& os);

}  // namespace laddertb

#endif
