#ifndef LADDERTB_CONFIG_HPP
#define LADDERTB_CONFIG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "laddertb/lattice.hpp"

namespace laddertb {

// Structured-text run configuration:
//
//   [cell]
//   n_chain = 4
//   ...
//   intercell_mode = full_column
//   [group]
//   label = P2'm'm
//   detuning = 0.1
//   [run]
//   n_k = 512
//
// Keys mirror the CellSpec field names. Unknown keys are an error; parse
// errors report the offending key and line number. When a [group] section is
// present, its texture is applied on top of the [cell] onsites.
struct RunConfig {
    CellSpec cell;
    std::optional<GroupPreset> group;
    std::map<std::string, std::string> run;  // free-form [run] key-values

    // Cell with the group texture applied (if any).
    CellSpec effective_cell() const;

    double run_value(const std::string& key, double fallback) const;
    std::int64_t run_value(const std::string& key, std::int64_t fallback) const;
    std::string run_value(const std::string& key, const std::string& fallback) const;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

// Canonical text form; parse(serialize(c)) reproduces the cell exactly.
std::string serialize_config(const RunConfig& config);

}  // namespace laddertb

#endif
