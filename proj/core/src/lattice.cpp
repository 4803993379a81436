#include "laddertb/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace laddertb {

std::string group_display_name(GroupName g) {
    switch (g) {
        case GroupName::P2mm: return "P2mm";
        case GroupName::P2pmpm: return "P2'm'm";
        case GroupName::P2mpmp: return "P2m'm'";
        case GroupName::P2pmmp: return "P2'mm'";
        case GroupName::NoGroup: return "none";
    }
    return "none";
}

GroupName parse_group_name(const std::string& s) {
    std::string t;
    t.reserve(s.size());
    for (char c : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "p2mm") return GroupName::P2mm;
    if (t == "p2'm'm" || t == "p2pmpm") return GroupName::P2pmpm;
    if (t == "p2m'm'" || t == "p2mpmp") return GroupName::P2mpmp;
    if (t == "p2'mm'" || t == "p2pmmp") return GroupName::P2pmmp;
    if (t == "none" || t == "nogroup") return GroupName::NoGroup;
    throw std::invalid_argument("unknown group label '" + s + "'");
}

std::string intercell_mode_name(IntercellMode m) {
    return m == IntercellMode::ChainOnly ? "chain_only" : "full_column";
}

IntercellMode parse_intercell_mode(const std::string& s) {
    if (s == "chain_only" || s == "chain") return IntercellMode::ChainOnly;
    if (s == "full_column" || s == "full") return IntercellMode::FullColumn;
    throw std::invalid_argument("unknown intercell_mode '" + s + "'");
}

void CellSpec::validate() const {
    if (n_chain < 2)
        throw std::invalid_argument("n_chain must be >= 2 (arms attach to two distinct chain ends)");
    if (n_arm_ul < 0 || n_arm_dl < 0 || n_arm_ur < 0 || n_arm_dr < 0)
        throw std::invalid_argument("arm lengths must be non-negative");
    for (double v : {eps0, eps_ul, eps_dl, eps_ur, eps_dr, t_c, t_a, t_i})
        if (!std::isfinite(v)) throw std::invalid_argument("all energies and hoppings must be finite");
}

CellSpec CellSpec::color_flipped() const {
    CellSpec c = *this;
    c.eps_ul = -eps_ul;
    c.eps_dl = -eps_dl;
    c.eps_ur = -eps_ur;
    c.eps_dr = -eps_dr;
    return c;
}

int CellGeometry::find(SiteRole role, int row) const {
    for (const Site& s : sites)
        if (s.role == role && s.row == row) return s.index;
    return -1;
}

int CellGeometry::chain_site(int column) const {
    for (const Site& s : sites)
        if (s.role == SiteRole::Chain && s.column == column) return s.index;
    return -1;
}

CellGeometry build_geometry(const CellSpec& spec) {
    spec.validate();
    CellGeometry g;
    g.n_chain = spec.n_chain;
    g.lattice_constant = static_cast<double>(spec.n_chain);
    g.sites.reserve(static_cast<size_t>(spec.site_count()));
    int idx = 0;
    auto push = [&](SiteRole role, int column, int row) {
        g.sites.push_back({idx++, role, column, row, static_cast<double>(column) / spec.n_chain});
    };
    for (int c = 0; c < spec.n_chain; ++c) push(SiteRole::Chain, c, 0);
    for (int r = 1; r <= spec.n_arm_ul; ++r) push(SiteRole::ArmUL, 0, r);
    for (int r = 1; r <= spec.n_arm_dl; ++r) push(SiteRole::ArmDL, 0, -r);
    for (int r = 1; r <= spec.n_arm_ur; ++r) push(SiteRole::ArmUR, spec.n_chain - 1, r);
    for (int r = 1; r <= spec.n_arm_dr; ++r) push(SiteRole::ArmDR, spec.n_chain - 1, -r);
    return g;
}

CellSpec apply_texture(const CellSpec& spec, const GroupPreset& preset) {
    if (preset.detuning < 0.0) throw std::invalid_argument("detuning must be non-negative");
    if (preset.label == GroupName::NoGroup)
        throw std::invalid_argument("NoGroup carries no onsite texture");
    const double e = preset.detuning;
    CellSpec out = spec;
    switch (preset.label) {
        case GroupName::P2pmpm:  // P2'm'm, up/down coloring
            out.eps_ul = +e; out.eps_ur = +e;
            out.eps_dl = -e; out.eps_dr = -e;
            break;
        case GroupName::P2mpmp:  // P2m'm', diagonal coloring
            out.eps_ul = +e; out.eps_dr = +e;
            out.eps_dl = -e; out.eps_ur = -e;
            break;
        case GroupName::P2pmmp:  // P2'mm', left/right coloring
            out.eps_ul = +e; out.eps_dl = +e;
            out.eps_ur = -e; out.eps_dr = -e;
            break;
        case GroupName::P2mm:
            out.eps_ul = out.eps_dl = out.eps_ur = out.eps_dr = +e;
            break;
        case GroupName::NoGroup:
            break;
    }
    return out;
}

}  // namespace laddertb
