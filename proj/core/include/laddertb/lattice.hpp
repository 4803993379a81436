#ifndef LADDERTB_LATTICE_HPP
#define LADDERTB_LATTICE_HPP

#include <string>
#include <vector>

namespace laddertb {

enum class SiteRole { Chain, ArmUL, ArmDL, ArmUR, ArmDR };

enum class IntercellMode { ChainOnly, FullColumn };

// Two-color Frieze group labels. The primed forms follow the magnetic
// space-group convention: P2pmpm = P2'm'm, P2mpmp = P2m'm', P2pmmp = P2'mm'.
enum class GroupName { P2mm, P2pmpm, P2mpmp, P2pmmp, NoGroup };

std::string group_display_name(GroupName g);
GroupName parse_group_name(const std::string& s);  // accepts primed and ascii forms

std::string intercell_mode_name(IntercellMode m);
IntercellMode parse_intercell_mode(const std::string& s);

// Full parametric description of the H-shaped unit cell: a central chain of
// n_chain sites with four arms hanging off its two end sites. Energies are
// measured in units of t_a.
struct CellSpec {
    int n_chain = 4;
    int n_arm_ul = 3;
    int n_arm_dl = 3;
    int n_arm_ur = 3;
    int n_arm_dr = 3;
    double eps0 = 0.0;
    double eps_ul = 0.0;
    double eps_dl = 0.0;
    double eps_ur = 0.0;
    double eps_dr = 0.0;
    double t_c = 1.0;
    double t_a = 1.0;
    double t_i = 0.1;
    IntercellMode intercell_mode = IntercellMode::FullColumn;

    int site_count() const {
        return n_chain + n_arm_ul + n_arm_dl + n_arm_ur + n_arm_dr;
    }
    bool equal_arms() const {
        return n_arm_ul == n_arm_dl && n_arm_dl == n_arm_ur && n_arm_ur == n_arm_dr;
    }
    // Throws std::invalid_argument on violated invariants (n_chain < 2,
    // negative arm lengths, non-finite couplings).
    void validate() const;

    // Copy with all four arm onsites negated; this is the two-color map C.
    CellSpec color_flipped() const;
};

struct GroupPreset {
    GroupName label = GroupName::P2mm;
    double detuning = 0.0;  // |eps| >= 0
};

struct Site {
    int index;
    SiteRole role;
    int column;     // 0 .. n_chain-1
    int row;        // 0 on the chain, +r above, -r below
    double x_frac;  // column / n_chain, multiplies 2*pi in the Zak gauge
};

struct CellGeometry {
    std::vector<Site> sites;
    double lattice_constant = 0.0;  // a = n_chain * d with d = 1
    int n_chain = 0;

    int dim() const { return static_cast<int>(sites.size()); }
    // Index of the site with the given role and row, -1 if absent.
    int find(SiteRole role, int row) const;
    int chain_site(int column) const;  // row-0 site at the given column
};

// Deterministic site ordering: chain left to right, then ArmUL (anchor side
// to tip), ArmDL, ArmUR, ArmDR. Rejects n_chain < 2.
CellGeometry build_geometry(const CellSpec& spec);

// Overwrite the four arm onsites with the sign pattern fixed by the group
// label:
//   P2'm'm : upper arms +|eps|, lower arms -|eps|   (pure My)
//   P2m'm' : ul,dr +|eps|, dl,ur -|eps|             (pure inversion)
//   P2'mm' : left arms +|eps|, right arms -|eps|    (pure Mx)
//   P2mm   : all arms +|eps|
// Rejects negative detuning and the NoGroup label.
CellSpec apply_texture(const CellSpec& spec, const GroupPreset& preset);

}  // namespace laddertb

#endif
