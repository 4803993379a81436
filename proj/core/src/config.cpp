#include "laddertb/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace laddertb {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& what) {
    std::ostringstream msg;
    msg << "config error at line " << line << ": " << what;
    throw std::invalid_argument(msg.str());
}

double to_double(const std::string& v, const std::string& key, int line) {
    try {
        size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return x;
    } catch (const std::exception&) {
        fail(line, "invalid number '" + v + "' for key '" + key + "'");
    }
}

int to_int(const std::string& v, const std::string& key, int line) {
    try {
        size_t pos = 0;
        const long x = std::stol(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return static_cast<int>(x);
    } catch (const std::exception&) {
        fail(line, "invalid integer '" + v + "' for key '" + key + "'");
    }
}

}  // namespace

CellSpec RunConfig::effective_cell() const {
    return group ? apply_texture(cell, *group) : cell;
}

double RunConfig::run_value(const std::string& key, double fallback) const {
    const auto it = run.find(key);
    return it == run.end() ? fallback : std::stod(it->second);
}

std::int64_t RunConfig::run_value(const std::string& key, std::int64_t fallback) const {
    const auto it = run.find(key);
    return it == run.end() ? fallback : static_cast<std::int64_t>(std::stoll(it->second));
}

std::string RunConfig::run_value(const std::string& key, const std::string& fallback) const {
    const auto it = run.find(key);
    return it == run.end() ? fallback : it->second;
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    bool saw_group = false;
    GroupPreset preset;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        const auto hash = s.find('#');
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') fail(line, "unterminated section header '" + s + "'");
            section = trim(s.substr(1, s.size() - 2));
            if (section != "cell" && section != "group" && section != "run")
                fail(line, "unknown section [" + section + "]");
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) fail(line, "expected 'key = value', got '" + s + "'");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty()) fail(line, "empty key");
        if (section.empty()) fail(line, "key '" + key + "' outside any section");

        if (section == "cell") {
            CellSpec& c = cfg.cell;
            if (key == "n_chain") c.n_chain = to_int(value, key, line);
            else if (key == "n_arm_ul") c.n_arm_ul = to_int(value, key, line);
            else if (key == "n_arm_dl") c.n_arm_dl = to_int(value, key, line);
            else if (key == "n_arm_ur") c.n_arm_ur = to_int(value, key, line);
            else if (key == "n_arm_dr") c.n_arm_dr = to_int(value, key, line);
            else if (key == "eps0") c.eps0 = to_double(value, key, line);
            else if (key == "eps_ul") c.eps_ul = to_double(value, key, line);
            else if (key == "eps_dl") c.eps_dl = to_double(value, key, line);
            else if (key == "eps_ur") c.eps_ur = to_double(value, key, line);
            else if (key == "eps_dr") c.eps_dr = to_double(value, key, line);
            else if (key == "t_c") c.t_c = to_double(value, key, line);
            else if (key == "t_a") c.t_a = to_double(value, key, line);
            else if (key == "t_i") c.t_i = to_double(value, key, line);
            else if (key == "intercell_mode") {
                try {
                    c.intercell_mode = parse_intercell_mode(value);
                } catch (const std::exception& e) {
                    fail(line, e.what());
                }
            } else fail(line, "unknown key '" + key + "' in section [cell]");
        } else if (section == "group") {
            saw_group = true;
            if (key == "label") {
                try {
                    preset.label = parse_group_name(value);
                } catch (const std::exception& e) {
                    fail(line, e.what());
                }
            } else if (key == "detuning") preset.detuning = to_double(value, key, line);
            else fail(line, "unknown key '" + key + "' in section [group]");
        } else {  // run: free-form, validated by the consumer
            if (cfg.run.count(key)) fail(line, "duplicate key '" + key + "' in section [run]");
            cfg.run[key] = value;
        }
    }
    if (saw_group) cfg.group = preset;
    cfg.cell.validate();
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const RunConfig& cfg) {
    std::ostringstream os;
    os.precision(17);
    const CellSpec& c = cfg.cell;
    os << "[cell]\n";
    os << "n_chain = " << c.n_chain << "\n";
    os << "n_arm_ul = " << c.n_arm_ul << "\n";
    os << "n_arm_dl = " << c.n_arm_dl << "\n";
    os << "n_arm_ur = " << c.n_arm_ur << "\n";
    os << "n_arm_dr = " << c.n_arm_dr << "\n";
    os << "eps0 = " << c.eps0 << "\n";
    os << "eps_ul = " << c.eps_ul << "\n";
    os << "eps_dl = " << c.eps_dl << "\n";
    os << "eps_ur = " << c.eps_ur << "\n";
    os << "eps_dr = " << c.eps_dr << "\n";
    os << "t_c = " << c.t_c << "\n";
    os << "t_a = " << c.t_a << "\n";
    os << "t_i = " << c.t_i << "\n";
    os << "intercell_mode = " << intercell_mode_name(c.intercell_mode) << "\n";
    if (cfg.group) {
        os << "[group]\n";
        os << "label = " << group_display_name(cfg.group->label) << "\n";
        os << "detuning = " << cfg.group->detuning << "\n";
    }
    if (!cfg.run.empty()) {
        os << "[run]\n";
        for (const auto& [k, v] : cfg.run) os << k << " = " << v << "\n";
    }
    return os.str();
}

}  // namespace laddertb
