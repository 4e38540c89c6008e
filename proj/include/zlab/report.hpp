#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zlab/types.hpp"
#include "zlab/zeta.hpp"

namespace zlab {

/// Runtime configuration: precision overrides, domain radius, output format
/// and path, parallelism degree and the RNG seed for property-check
/// sampling. Parsable from an INI-style key=value file; unknown keys are
/// rejected.
struct RunConfig {
    PrecisionConfig precision;
    double delta = 0.1;
    std::string format = "json";  // csv | json
    std::string out_path;
    int parallelism = 1;
    std::uint64_t seed = 12345;

    DomainSpec domain() const { return DomainSpec{delta}; }
    void validate() const;
};

/// Apply one key=value pair (shared by the INI loader and flag overrides).
void apply_config_entry(RunConfig& run, const std::string& key, const std::string& value);

RunConfig load_config_file(const std::string& path);

/// Decimal string with 15 significant digits; all report payloads go
/// through here so CSV and JSON emissions are byte-for-byte comparable.
std::string format_number(double v);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

using MetaList = std::vector<std::pair<std::string, std::string>>;

std::string render_json(const MetaList& meta, const Table& table);
std::string render_csv(const MetaList& meta, const Table& table);

/// Render in the configured format; write to run.out_path when set,
/// IoError on failure. Returns the rendered text.
std::string emit_report(const RunConfig& run, const MetaList& meta, const Table& table);

/// Config echo for report meta blocks.
MetaList config_meta(const RunConfig& run);

}  // namespace zlab
