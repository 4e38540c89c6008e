#pragma once

#include <string>
#include <vector>

#include "zlab/report.hpp"

namespace zlab {

struct CheckRow {
    std::string name;
    int samples = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;
};

/// The cross-module invariant suite, sampled deterministically from
/// run.seed. Rows with tolerance <= 0 are informational (always pass).
std::vector<CheckRow> run_selfcheck(const RunConfig& run);

Table selfcheck_table(const std::vector<CheckRow>& rows);

}  // namespace zlab
