#include "laddertb/symmetry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace laddertb {

Matrix SymmetryOp::matrix() const {
    const int d = static_cast<int>(permutation.size());
    Matrix p = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) p(permutation[i], i) = 1.0;
    return p;
}

namespace {

SiteRole mx_image(SiteRole r) {
    switch (r) {
        case SiteRole::ArmUL: return SiteRole::ArmDL;
        case SiteRole::ArmDL: return SiteRole::ArmUL;
        case SiteRole::ArmUR: return SiteRole::ArmDR;
        case SiteRole::ArmDR: return SiteRole::ArmUR;
        default: return SiteRole::Chain;
    }
}

SiteRole my_image(SiteRole r) {
    switch (r) {
        case SiteRole::ArmUL: return SiteRole::ArmUR;
        case SiteRole::ArmUR: return SiteRole::ArmUL;
        case SiteRole::ArmDL: return SiteRole::ArmDR;
        case SiteRole::ArmDR: return SiteRole::ArmDL;
        default: return SiteRole::Chain;
    }
}

SiteRole inv_image(SiteRole r) {
    switch (r) {
        case SiteRole::ArmUL: return SiteRole::ArmDR;
        case SiteRole::ArmDR: return SiteRole::ArmUL;
        case SiteRole::ArmDL: return SiteRole::ArmUR;
        case SiteRole::ArmUR: return SiteRole::ArmDL;
        default: return SiteRole::Chain;
    }
}

int image_index(const CellGeometry& g, const Site& s, SymmetryKind kind) {
    SiteRole role = s.role;
    int column = s.column;
    int row = s.row;
    switch (kind) {
        case SymmetryKind::Identity:
            break;
        case SymmetryKind::Mx:
            role = mx_image(s.role);
            row = -s.row;
            break;
        case SymmetryKind::My:
            role = my_image(s.role);
            column = g.n_chain - 1 - s.column;
            break;
        case SymmetryKind::Inv:
            role = inv_image(s.role);
            column = g.n_chain - 1 - s.column;
            row = -s.row;
            break;
    }
    for (const Site& t : g.sites)
        if (t.role == role && t.column == column && t.row == row) return t.index;
    return -1;
}

}  // namespace

SymmetryOp op_permutation(const CellGeometry& g, SymmetryKind kind) {
    SymmetryOp op;
    op.kind = kind;
    op.momentum_action = (kind == SymmetryKind::My || kind == SymmetryKind::Inv)
                             ? MomentumAction::KToMinusK
                             : MomentumAction::KToK;
    op.permutation.resize(static_cast<size_t>(g.dim()));
    for (const Site& s : g.sites) {
        int j = image_index(g, s, kind);
        if (j < 0) throw std::invalid_argument("operation not geometric");
        op.permutation[static_cast<size_t>(s.index)] = j;
    }
    return op;
}

bool check_symmetry(const CellSpec& spec, SymmetryKind kind, bool colored, double tol) {
    spec.validate();
    const CellGeometry g = build_geometry(spec);
    SymmetryOp op;
    try {
        op = op_permutation(g, kind);
    } catch (const std::invalid_argument&) {
        return false;
    }
    const Matrix p = op.matrix();
    const BlochOperator lhs = make_bloch_operator(g, spec);
    const CellSpec target_spec = colored ? spec.color_flipped() : spec;
    const BlochOperator rhs = make_bloch_operator(g, target_spec);
    const double a = g.lattice_constant;
    // irrational fractions of the zone plus both high-symmetry points
    const double fracs[] = {0.0, 0.1234567, 0.26391, 0.5, 0.717172, 0.93911};
    for (double f : fracs) {
        const double k = 2.0 * std::numbers::pi / a * f;
        const double sk = (op.momentum_action == MomentumAction::KToMinusK) ? -k : k;
        const CMatrix lk = bloch_hamiltonian(lhs, k);
        const CMatrix rk = bloch_hamiltonian(rhs, sk);
        const double err = (p * lk * p.transpose() - rk).cwiseAbs().maxCoeff();
        if (err > tol) return false;
    }
    return true;
}

std::string protecting_name(Protecting p) {
    switch (p) {
        case Protecting::PureMy: return "My";
        case Protecting::PureInv: return "inversion";
        case Protecting::Both: return "My and inversion";
        case Protecting::None: return "none";
    }
    return "none";
}

GroupLabel classify_group(const CellSpec& spec) {
    const bool px = check_symmetry(spec, SymmetryKind::Mx, false);
    const bool py = check_symmetry(spec, SymmetryKind::My, false);
    const bool pi = check_symmetry(spec, SymmetryKind::Inv, false);
    if (px && py && pi) return {GroupName::P2mm, Protecting::Both};
    const bool cx = check_symmetry(spec, SymmetryKind::Mx, true);
    const bool cy = check_symmetry(spec, SymmetryKind::My, true);
    const bool ci = check_symmetry(spec, SymmetryKind::Inv, true);
    if (py && !px && !pi && cx && ci) return {GroupName::P2pmpm, Protecting::PureMy};
    if (pi && !px && !py && cx && cy) return {GroupName::P2mpmp, Protecting::PureInv};
    if (px && !py && !pi && cy && ci) return {GroupName::P2pmmp, Protecting::None};
    return {GroupName::NoGroup, Protecting::None};
}

MirrorSectors mirror_sector_split(const CellGeometry& g, const CellSpec& spec) {
    if (!check_symmetry(spec, SymmetryKind::Mx, false))
        throw std::invalid_argument("Mx not a pure symmetry");
    const SymmetryOp mx = op_permutation(g, SymmetryKind::Mx);
    const int d = g.dim();

    std::vector<int> fixed;                    // chain sites
    std::vector<std::pair<int, int>> pairs;    // (upper, lower) arm partners
    for (int i = 0; i < d; ++i) {
        const int j = mx.permutation[static_cast<size_t>(i)];
        if (j == i) fixed.push_back(i);
        else if (i < j) pairs.emplace_back(i, j);
    }
    // order antisymmetric combinations: left arms by row, then right arms
    std::sort(pairs.begin(), pairs.end(), [&](auto a, auto b) {
        const Site& sa = g.sites[static_cast<size_t>(a.first)];
        const Site& sb = g.sites[static_cast<size_t>(b.first)];
        if (sa.column != sb.column) return sa.column < sb.column;
        return sa.row < sb.row;
    });

    const int n_sym = static_cast<int>(fixed.size() + pairs.size());
    const int n_anti = static_cast<int>(pairs.size());
    Matrix bs = Matrix::Zero(d, n_sym);
    Matrix ba = Matrix::Zero(d, n_anti);
    int col = 0;
    for (int i : fixed) bs(i, col++) = 1.0;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (size_t m = 0; m < pairs.size(); ++m) {
        bs(pairs[m].first, col) = inv_sqrt2;
        bs(pairs[m].second, col) = inv_sqrt2;
        ++col;
        ba(pairs[m].first, static_cast<Eigen::Index>(m)) = inv_sqrt2;
        ba(pairs[m].second, static_cast<Eigen::Index>(m)) = -inv_sqrt2;
    }

    const BlochOperator full = make_bloch_operator(g, spec);
    MirrorSectors out;
    out.symmetric = {bs.transpose() * full.h0 * bs, bs.transpose() * full.h1 * bs,
                     g.lattice_constant};
    out.antisymmetric = {ba.transpose() * full.h0 * ba, ba.transpose() * full.h1 * ba,
                         g.lattice_constant};
    out.basis_symmetric = std::move(bs);
    out.basis_antisymmetric = std::move(ba);
    return out;
}

}  // namespace laddertb
