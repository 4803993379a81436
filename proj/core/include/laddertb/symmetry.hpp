#ifndef LADDERTB_SYMMETRY_HPP
#define LADDERTB_SYMMETRY_HPP

#include <vector>

#include "laddertb/hamiltonian.hpp"
#include "laddertb/lattice.hpp"

namespace laddertb {

enum class SymmetryKind { Mx, My, Inv, Identity };

enum class MomentumAction { KToK, KToMinusK };

struct SymmetryOp {
    SymmetryKind kind;
    std::vector<int> permutation;  // site i maps to permutation[i]
    MomentumAction momentum_action;

    Matrix matrix() const;  // permutation matrix P with P * e_i = e_{perm[i]}
};

// Site bijection of the requested spatial operation. Throws
// std::invalid_argument("operation not geometric") when the arm lengths make
// the bijection impossible.
SymmetryOp op_permutation(const CellGeometry& geometry, SymmetryKind kind);

// True iff P H(k) P^{-1} = H(sigma k) on a fixed test grid, where for
// colored = true the right-hand side is rebuilt with all arm onsites negated
// (the two-color map C). Non-geometric operations yield false.
bool check_symmetry(const CellSpec& spec, SymmetryKind kind, bool colored,
                    double tol = 1e-12);

enum class Protecting { PureMy, PureInv, Both, None };

struct GroupLabel {
    GroupName label = GroupName::NoGroup;
    Protecting protecting = Protecting::None;
};

std::string protecting_name(Protecting p);

// Evaluates the {Mx, My, Inv} x {pure, colored} truth table and maps it to a
// two-color Frieze label; inconsistent tables give NoGroup.
GroupLabel classify_group(const CellSpec& spec);

// H(k) block-diagonalized in the +-1 eigenbasis of the Mx permutation. The
// antisymmetric block carries only arm degrees of freedom, ordered left arms
// row 1..N then right arms row 1..N.
struct MirrorSectors {
    BlochOperator symmetric;
    BlochOperator antisymmetric;
    Matrix basis_symmetric;      // dim x dim_sym, orthonormal columns
    Matrix basis_antisymmetric;  // dim x dim_anti
};

// Requires Mx to be a pure symmetry of the spec (P2'mm' or P2mm); otherwise
// throws std::invalid_argument("Mx not a pure symmetry").
MirrorSectors mirror_sector_split(const CellGeometry& geometry, const CellSpec& spec);

}  // namespace laddertb

#endif
