// laddertb command-line interface: every computation of the toolkit behind
// one executable with a structured-text config, CSV/JSON artifacts and a
// one-line JSON summary on stdout.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "laddertb/bands.hpp"
#include "laddertb/config.hpp"
#include "laddertb/finite.hpp"
#include "laddertb/hamiltonian.hpp"
#include "laddertb/lattice.hpp"
#include "laddertb/symmetry.hpp"
#include "laddertb/transport.hpp"
#include "laddertb/zak.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace laddertb;

namespace {

struct GlobalOpts {
    std::string config_path;
    std::string out;
    std::string format = "csv";
    std::uint64_t seed = 1;
    int n_k = 512;
    int n_cells = 6;
    double eta = 1e-9;
    double origin_shift = 0.0;
};

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Table artifact written either as CSV or JSON, atomically.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::initializer_list<std::string> cells) { rows.emplace_back(cells); }
};

void atomic_write(const std::string& path, const std::string& content) {
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot write '" + tmp.string() + "'");
        os << content;
    }
    fs::rename(tmp, target);
}

void write_table(const Table& t, const std::string& path, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        json j;
        j["columns"] = t.columns;
        j["rows"] = json::array();
        for (const auto& row : t.rows) j["rows"].push_back(row);
        os << j.dump(2) << "\n";
    } else {
        for (size_t i = 0; i < t.columns.size(); ++i)
            os << (i ? "," : "") << t.columns[i];
        os << "\n";
        for (const auto& row : t.rows) {
            for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
            os << "\n";
        }
    }
    atomic_write(path, os.str());
}

std::string artifact_name(const std::string& base, const std::string& format) {
    return base + (format == "json" ? ".json" : ".csv");
}

RunConfig load_effective_config(const GlobalOpts& g) {
    RunConfig cfg;
    if (!g.config_path.empty()) cfg = load_config(g.config_path);
    return cfg;
}

void print_summary(json j) {
    j["status"] = "ok";
    std::cout << j.dump() << std::endl;
}

std::string role_name(SiteRole r) {
    switch (r) {
        case SiteRole::Chain: return "chain";
        case SiteRole::ArmUL: return "arm_ul";
        case SiteRole::ArmDL: return "arm_dl";
        case SiteRole::ArmUR: return "arm_ur";
        case SiteRole::ArmDR: return "arm_dr";
    }
    return "chain";
}

// ---------------------------------------------------------------- classify

void run_classify(const GlobalOpts& g) {
    const RunConfig cfg = load_effective_config(g);
    const CellSpec cell = cfg.effective_cell();
    const GroupLabel label = classify_group(cell);
    json j;
    j["subcommand"] = "classify";
    j["label"] = group_display_name(label.label);
    j["protecting"] = protecting_name(label.protecting);
    j["result"] = group_display_name(label.label) + " / protecting: " + protecting_name(label.protecting);
    print_summary(j);
}

// ------------------------------------------------------------------- bands

void run_bands(const GlobalOpts& g) {
    const RunConfig cfg = load_effective_config(g);
    const CellSpec cell = cfg.effective_cell();
    const CellGeometry geom = build_geometry(cell);
    const BandStructure bs = band_structure(make_bloch_operator(geom, cell), g.n_k);
    Table t;
    t.columns.push_back("k");
    for (int n = 0; n < bs.n_bands(); ++n) t.columns.push_back("e" + std::to_string(n));
    for (int j = 0; j < bs.n_k(); ++j) {
        std::vector<std::string> row;
        row.push_back(fmt_double(bs.k_grid(j)));
        for (int n = 0; n < bs.n_bands(); ++n) row.push_back(fmt_double(bs.energies(j, n)));
        t.rows.push_back(std::move(row));
    }
    const std::string out = g.out.empty() ? artifact_name("bands", g.format) : g.out;
    write_table(t, out, g.format);
    json j;
    j["subcommand"] = "bands";
    j["out"] = out;
    j["n_k"] = bs.n_k();
    j["n_bands"] = bs.n_bands();
    print_summary(j);
}

// -------------------------------------------------------------------- flat

void run_flat(const GlobalOpts& g) {
    const RunConfig cfg = load_effective_config(g);
    const CellSpec cell = cfg.effective_cell();
    const double tol = cfg.run_value("flat_tol", 1e-9);
    const CellGeometry geom = build_geometry(cell);
    const BandStructure bs = band_structure(make_bloch_operator(geom, cell), g.n_k);
    const std::vector<FlatBand> flats = flat_band_scan(bs, tol);
    Table t;
    t.columns = {"band", "energy", "dispersion"};
    for (const FlatBand& f : flats)
        t.add_row({std::to_string(f.band), fmt_double(f.energy), fmt_double(f.dispersion)});
    const std::string out = g.out.empty() ? artifact_name("flat", g.format) : g.out;
    write_table(t, out, g.format);
    json j;
    j["subcommand"] = "flat";
    j["out"] = out;
    j["n_flat"] = flats.size();
    j["tol"] = tol;
    print_summary(j);
}

// ---------------------------------------------------------------- critical

void run_critical(const GlobalOpts& g) {
    const RunConfig cfg = load_effective_config(g);
    const GroupPreset preset = cfg.group.value_or(GroupPreset{GroupName::P2pmpm, 0.1});
    const double lo = cfg.run_value("bracket_lo", 1e-4);
    const double hi = cfg.run_value("bracket_hi", 0.15);
    const double tol = cfg.run_value("bisection_tol", 1e-6);
    const double ti_star = critical_ti(cfg.cell, preset, lo, hi, tol);
    Table t;
    t.columns = {"eps", "ti_star"};
    t.add_row({fmt_double(preset.detuning), fmt_double(ti_star)});
    const std::string out = g.out.empty() ? artifact_name("critical", g.format) : g.out;
    write_table(t, out, g.format);
    json j;
    j["subcommand"] = "critical";
    j["out"] = out;
    j["eps"] = preset.detuning;
    j["ti_star"] = ti_star;
    j["tol"] = tol;
    print_summary(j);
}

// ------------------------------------------------------------ phasediagram

void run_phasediagram(const GlobalOpts& g) {
    const RunConfig cfg = load_effective_config(g);
    const GroupName group = cfg.group ? cfg.group->label : GroupName::P2pmpm;
    const double e_min = cfg.run_value("eps_min", 0.05);
    const double e_max = cfg.run_value("eps_max", 0.2);
    const int steps = static_cast<int>(cfg.run_value("eps_steps", std::int64_t{4}));
    const double lo = cfg.run_value("bracket_lo", 1e-4);
    const double hi = cfg.run_value("bracket_hi", 0.15);
    std::vector<double> eps_list;
    for (int i = 0; i < steps; ++i)
        eps_list.push_back(steps == 1 ? e_min : e_min + (e_max - e_min) * i / (steps - 1));
    const auto curve = phase_diagram(cfg.cell, group, eps_list, lo, hi);
    Table t;
    t.columns = {"eps", "ti_star"};
    for (const auto& [eps, ti] : curve) t.add_row({fmt_double(eps), fmt_double(ti)});
    const std::string out = g.out.empty() ? artifact_name("phasediagram", g.format) : g.out;
    write_table(t, out, g.format);
    json j;
    j["subcommand"] = "phasediagram";
    j["out"] = out;
    j["n_points"] = curve.size();
    print_summary(j);
}

// --------------------------------------------------------------------- zak

void run_zak(const GlobalOpts& g) {
    const RunConfig cfg = load_effective_config(g);
    const CellSpec cell = cfg.effective_cell();
    const CellGeometry geom = build_geometry(cell);
    const BlochOperator op = make_bloch_operator(geom, cell);
    const double shift = 2.0 * std::numbers::pi * g.origin_shift / geom.lattice_constant;
    const std::vector<ZakResult> results = zak_all_bands(op, geom, g.n_k);
    Table t;
    t.columns = {"band", "phase", "convergence"};
    json phases = json::array(), quantized = json::array();
    for (const ZakResult& r : results) {
        const double phase = wrap_phase(r.phase + shift);
        t.add_row({std::to_string(r.band), fmt_double(phase), fmt_double(r.convergence)});
        phases.push_back(phase);
        quantized.push_back(r.quantized_to.has_value());
    }
    const std::string out = g.out.empty() ? artifact_name("zak", g.format) : g.out;
    write_table(t, out, g.format);
    const BandStructure bs = band_structure(op, 65);
    const auto [lower, upper] = central_pair_indices(bs);
    const bool pair_quantized = results[static_cast<size_t>(lower)].quantized_to.has_value() &&
                                results[static_cast<size_t>(upper)].quantized_to.has_value();
    json j;
    j["subcommand"] = "zak";
    j["out"] = out;
    j["phases"] = phases;
    j["quantized"] = quantized;
    j["central_pair"] = {lower, upper};
    j["verdict"] = pair_quantized ? "quantized" : "non-quantized";
    j["origin_shift"] = g.origin_shift;
    print_summary(j);
}

// ------------------------------------------------------------------ finite

void run_finite(const GlobalOpts& g) {
    const RunConfig cfg = load_effective_config(g);
    const CellSpec cell = cfg.effective_cell();
    const FiniteSpectrum fspec = finite_spectrum(cell, g.n_cells);
    Table t;
    t.columns = {"index", "energy"};
    for (int i = 0; i < fspec.dim(); ++i)
        t.add_row({std::to_string(i), fmt_double(fspec.energies(i))});
    const std::string out = g.out.empty() ? artifact_name("finite", g.format) : g.out;
    write_table(t, out, g.format);
    const auto [e_lo, e_hi] = gap_window(cell, g.n_k);
    const std::vector<int> gap_states = in_gap_states(fspec, e_lo, e_hi);
    json j;
    j["subcommand"] = "finite";
    j["out"] = out;
    j["n_cells"] = g.n_cells;
    j["dim"] = fspec.dim();
    j["gap_window"] = {e_lo, e_hi};
    j["in_gap"] = gap_states;
    print_summary(j);
}

// -------------------------------------------------------------------- ldos

void write_ldos_table(const CellGeometry& geom, const LdosMap& map, int n_cells,
                      const std::string& out, const std::string& format) {
    Table t;
    t.columns = {"cell", "site_index_in_cell", "role", "column", "row", "weight"};
    const int d = geom.dim();
    for (int n = 0; n < n_cells; ++n)
        for (const Site& s : geom.sites)
            t.add_row({std::to_string(n), std::to_string(s.index), role_name(s.role),
                       std::to_string(s.column), std::to_string(s.row),
                       fmt_double(map.weights(n * d + s.index))});
    write_table(t, out, format);
}

void run_ldos(const GlobalOpts& g, int state_arg) {
    const RunConfig cfg = load_effective_config(g);
    const CellSpec cell = cfg.effective_cell();
    const CellGeometry geom = build_geometry(cell);
    const FiniteSpectrum fspec = finite_spectrum(cell, g.n_cells);
    int state = state_arg;
    if (state < 0) {
        // default: lowest in-gap state if any, else the state nearest E = 0
        const auto [e_lo, e_hi] = gap_window(cell, g.n_k);
        const std::vector<int> gap_states = in_gap_states(fspec, e_lo, e_hi);
        if (!gap_states.empty()) state = gap_states.front();
        else {
            Eigen::Index imin = 0;
            fspec.energies.cwiseAbs().minCoeff(&imin);
            state = static_cast<int>(imin);
        }
    }
    const LdosMap map = ldos(fspec, state);
    const std::string out = g.out.empty() ? artifact_name("ldos", g.format) : g.out;
    write_ldos_table(geom, map, g.n_cells, out, g.format);
    const EdgeMetrics m = edge_metrics(map, g.n_cells);
    json j;
    j["subcommand"] = "ldos";
    j["out"] = out;
    j["state"] = state;
    j["energy"] = fspec.energies(state);
    j["edge_fraction"] = m.edge_fraction;
    j["asymmetry"] = m.asymmetry;
    print_summary(j);
}

// ------------------------------------------------------------ transmission

void run_transmission(const GlobalOpts& g) {
    const RunConfig cfg = load_effective_config(g);
    const CellSpec cell = cfg.effective_cell();
    const double e_min = cfg.run_value("e_min", -3.0);
    const double e_max = cfg.run_value("e_max", 3.0);
    const int n_e = static_cast<int>(cfg.run_value("n_e", std::int64_t{2001}));
    const double t_lead = cfg.run_value("lead_hopping", cell.t_a);
    Vector grid(n_e);
    for (int i = 0; i < n_e; ++i)
        grid(i) = n_e == 1 ? e_min : e_min + (e_max - e_min) * i / (n_e - 1);
    const LeadModel lead{t_lead, 0.0, std::nullopt};
    const TransmissionCurve curve = transmission(cell, g.n_cells, lead, lead, grid, g.eta);
    Table t;
    t.columns = {"E", "T"};
    for (Eigen::Index i = 0; i < curve.energies.size(); ++i)
        t.add_row({fmt_double(curve.energies(i)), fmt_double(curve.transmission(i))});
    const std::string out = g.out.empty() ? artifact_name("transmission", g.format) : g.out;
    write_table(t, out, g.format);
    json j;
    j["subcommand"] = "transmission";
    j["out"] = out;
    j["max_T"] = curve.transmission.maxCoeff();
    j["eta"] = g.eta;
    print_summary(j);
}

// ------------------------------------------------------------------- dldos

void run_dldos(const GlobalOpts& g) {
    const RunConfig cfg = load_effective_config(g);
    const CellSpec cell = cfg.effective_cell();
    const double e_min = cfg.run_value("e_min", 0.0);
    const double e_max = cfg.run_value("e_max", e_min);
    const int n_e = static_cast<int>(cfg.run_value("n_e", std::int64_t{1}));
    const double t_lead = cfg.run_value("lead_hopping", cell.t_a);
    const LeadModel lead{t_lead, 0.0, std::nullopt};
    Table t;
    t.columns = {"E", "site", "rho"};
    for (int i = 0; i < n_e; ++i) {
        const double e = n_e == 1 ? e_min : e_min + (e_max - e_min) * i / (n_e - 1);
        const Vector rho = device_ldos(cell, g.n_cells, lead, lead, e, g.eta);
        for (Eigen::Index s = 0; s < rho.size(); ++s)
            t.add_row({fmt_double(e), std::to_string(s), fmt_double(rho(s))});
    }
    const std::string out = g.out.empty() ? artifact_name("dldos", g.format) : g.out;
    write_table(t, out, g.format);
    json j;
    j["subcommand"] = "dldos";
    j["out"] = out;
    j["n_energies"] = n_e;
    print_summary(j);
}

// --------------------------------------------------------------- reproduce

CellSpec figure_cell(GroupName group, double eps, double ti) {
    CellSpec cell;
    cell.n_chain = 4;
    cell.n_arm_ul = cell.n_arm_dl = cell.n_arm_ur = cell.n_arm_dr = 3;
    cell.t_c = 1.0;
    cell.t_a = 1.0;
    cell.t_i = ti;
    cell.intercell_mode = IntercellMode::FullColumn;
    return apply_texture(cell, {group, eps});
}

void reproduce_fig1d(const GlobalOpts& g, const fs::path& dir, json& j) {
    std::vector<double> eps_list;
    for (int i = 0; i < 9; ++i) eps_list.push_back(0.04 + 0.02 * i);
    const auto curve = phase_diagram(figure_cell(GroupName::P2pmpm, 0.1, 0.01),
                                     GroupName::P2pmpm, eps_list, 1e-4, 0.15);
    Table t;
    t.columns = {"eps", "ti_star"};
    for (const auto& [eps, ti] : curve) t.add_row({fmt_double(eps), fmt_double(ti)});
    const std::string out = (dir / artifact_name("fig1d", g.format)).string();
    write_table(t, out, g.format);
    j["out"].push_back(out);
}

void reproduce_fig2(const GlobalOpts& g, const fs::path& dir, json& j) {
    const CellSpec cell = figure_cell(GroupName::P2pmpm, 0.01, 0.005);
    const CellGeometry geom = build_geometry(cell);
    const BandStructure bs = band_structure(make_bloch_operator(geom, cell), g.n_k);
    Table tb;
    tb.columns.push_back("k");
    for (int n = 0; n < bs.n_bands(); ++n) tb.columns.push_back("e" + std::to_string(n));
    for (int row = 0; row < bs.n_k(); ++row) {
        std::vector<std::string> r;
        r.push_back(fmt_double(bs.k_grid(row)));
        for (int n = 0; n < bs.n_bands(); ++n) r.push_back(fmt_double(bs.energies(row, n)));
        tb.rows.push_back(std::move(r));
    }
    const std::string out_bands = (dir / artifact_name("fig2_bands", g.format)).string();
    write_table(tb, out_bands, g.format);
    j["out"].push_back(out_bands);

    // evolution of the central pair with t_i
    Table ts;
    ts.columns = {"ti", "e_lower_min", "e_lower_max", "e_upper_min", "e_upper_max", "min_gap"};
    for (int i = 0; i <= 40; ++i) {
        CellSpec s = cell;
        s.t_i = 1e-6 + (0.02 - 1e-6) * i / 40.0;
        const BandStructure sweep = band_structure(make_bloch_operator(geom, s), 129);
        const auto [lower, upper] = central_pair_indices(sweep);
        const Vector gaps = sweep.energies.col(upper) - sweep.energies.col(lower);
        ts.add_row({fmt_double(s.t_i), fmt_double(sweep.energies.col(lower).minCoeff()),
                    fmt_double(sweep.energies.col(lower).maxCoeff()),
                    fmt_double(sweep.energies.col(upper).minCoeff()),
                    fmt_double(sweep.energies.col(upper).maxCoeff()), fmt_double(gaps.minCoeff())});
    }
    const std::string out_sweep = (dir / artifact_name("fig2_central_pair", g.format)).string();
    write_table(ts, out_sweep, g.format);
    j["out"].push_back(out_sweep);
}

void reproduce_fig3(const GlobalOpts& g, const fs::path& dir, const std::string& tag,
                    GroupName group, double ti, json& j) {
    const CellSpec cell = figure_cell(group, 0.1, ti);
    const CellGeometry geom = build_geometry(cell);
    const FiniteSpectrum fspec = finite_spectrum(cell, 6);
    Table t;
    t.columns = {"index", "energy"};
    for (int i = 0; i < fspec.dim(); ++i)
        t.add_row({std::to_string(i), fmt_double(fspec.energies(i))});
    const std::string out_spec = (dir / artifact_name(tag + "_spectrum", g.format)).string();
    write_table(t, out_spec, g.format);
    j["out"].push_back(out_spec);

    // LDOS of the lower in-gap state when present, otherwise the state with
    // the same ordinal index as in the topological run (states nearest zero)
    const auto [e_lo, e_hi] = gap_window(cell, 257);
    const std::vector<int> gap_states = in_gap_states(fspec, e_lo, e_hi);
    int state;
    if (!gap_states.empty()) state = gap_states.front();
    else state = fspec.dim() / 2 - 1;
    const LdosMap map = ldos(fspec, state);
    const std::string out_ldos = (dir / artifact_name(tag + "_ldos", g.format)).string();
    write_ldos_table(geom, map, 6, out_ldos, g.format);
    j["out"].push_back(out_ldos);
    j[tag + "_state"] = state;
    j[tag + "_in_gap"] = gap_states;
}

void run_reproduce(const GlobalOpts& g, const std::string& figure) {
    const fs::path dir = g.out.empty() ? fs::path(".") : fs::path(g.out);
    json j;
    j["subcommand"] = "reproduce";
    j["figure"] = figure;
    j["out"] = json::array();
    if (figure == "fig1d") reproduce_fig1d(g, dir, j);
    else if (figure == "fig2") reproduce_fig2(g, dir, j);
    else if (figure == "fig3a") reproduce_fig3(g, dir, "fig3a", GroupName::P2pmpm, 0.0015, j);
    else if (figure == "fig3b") reproduce_fig3(g, dir, "fig3b", GroupName::P2pmpm, 0.15, j);
    else if (figure == "fig3c") reproduce_fig3(g, dir, "fig3c", GroupName::P2pmmp, 0.09, j);
    else throw std::invalid_argument("unknown figure id '" + figure + "'");
    print_summary(j);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"laddertb: band structure, Zak phases, flat bands, finite spectra and "
                 "two-lead transmission of the H-cell ladder crystal"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--config", g.config_path, "structured-text configuration file");
    app.add_option("--seed", g.seed, "master RNG seed (64-bit)");
    app.add_option("--out", g.out, "output path (directory for reproduce)");
    app.add_option("--format", g.format, "artifact format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--nk", g.n_k, "k-points on the closed Brillouin-zone grid");
    app.add_option("--cells", g.n_cells, "number of unit cells in finite samples");
    app.add_option("--eta", g.eta, "retarded broadening for Green's functions");
    app.add_option("--origin-shift", g.origin_shift,
                   "real-space origin shift delta; adds 2*pi*delta/a to every Zak phase");

    app.add_subcommand("classify", "two-color Frieze group of the configured cell");
    app.add_subcommand("bands", "band structure over the Brillouin zone");
    app.add_subcommand("flat", "flat-band detection");
    app.add_subcommand("critical", "critical intercell hopping of the band inversion");
    app.add_subcommand("phasediagram", "critical t_i versus detuning curve");
    app.add_subcommand("zak", "per-band Zak phases with quantization verdict");
    app.add_subcommand("finite", "open-boundary finite-sample spectrum");
    auto* sub_ldos = app.add_subcommand("ldos", "per-site weight of one finite-sample state");
    int state_arg = -1;
    sub_ldos->add_option("--state", state_arg, "eigenstate index (default: lowest in-gap state)");
    app.add_subcommand("transmission", "two-lead transmission function");
    app.add_subcommand("dldos", "lead-coupled local density of states");
    auto* sub_rep = app.add_subcommand("reproduce", "emit the data behind a reference figure");
    std::string figure;
    sub_rep->add_option("figure", figure, "one of fig1d, fig2, fig3a, fig3b, fig3c")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand("classify")) run_classify(g);
        else if (app.got_subcommand("bands")) run_bands(g);
        else if (app.got_subcommand("flat")) run_flat(g);
        else if (app.got_subcommand("critical")) run_critical(g);
        else if (app.got_subcommand("phasediagram")) run_phasediagram(g);
        else if (app.got_subcommand("zak")) run_zak(g);
        else if (app.got_subcommand("finite")) run_finite(g);
        else if (app.got_subcommand("ldos")) run_ldos(g, state_arg);
        else if (app.got_subcommand("transmission")) run_transmission(g);
        else if (app.got_subcommand("dldos")) run_dldos(g);
        else if (app.got_subcommand("reproduce")) run_reproduce(g, figure);
    } catch (const std::exception& e) {
        json j;
        j["status"] = "error";
        j["error"] = e.what();
        std::cout << j.dump() << std::endl;
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
