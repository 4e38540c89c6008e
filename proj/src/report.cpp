#include "zlab/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace zlab {

void RunConfig::validate() const {
    precision.validate();
    DomainSpec{delta}.validate();
    if (format != "csv" && format != "json")
        throw DomainViolation("RunConfig: format must be csv or json");
    if (parallelism < 1) throw DomainViolation("RunConfig: parallelism must be >= 1");
}

namespace {

double parse_double(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw DomainViolation("config: bad numeric value for " + key + ": '" + value + "'");
    }
}

long parse_long(const std::string& key, const std::string& value) {
    try {
        size_t pos = 0;
        long v = std::stol(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw DomainViolation("config: bad integer value for " + key + ": '" + value + "'");
    }
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    size_t b = s.find_last_not_of(" \t\r\n");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

}  // namespace

void apply_config_entry(RunConfig& run, const std::string& key, const std::string& value) {
    if (key == "em_cutoff") run.precision.em_cutoff = static_cast<int>(parse_long(key, value));
    else if (key == "em_depth") run.precision.em_depth = static_cast<int>(parse_long(key, value));
    else if (key == "cauchy_radius") run.precision.cauchy_radius = parse_double(key, value);
    else if (key == "cauchy_nodes") run.precision.cauchy_nodes = static_cast<int>(parse_long(key, value));
    else if (key == "target_eps") run.precision.target_eps = parse_double(key, value);
    else if (key == "delta") run.delta = parse_double(key, value);
    else if (key == "format") run.format = value;
    else if (key == "out") run.out_path = value;
    else if (key == "parallelism") run.parallelism = static_cast<int>(parse_long(key, value));
    else if (key == "seed") run.seed = static_cast<std::uint64_t>(parse_long(key, value));
    else throw DomainViolation("config: unknown key '" + key + "'");
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("config: cannot open " + path);
    RunConfig run;
    std::string line;
    while (std::getline(in, line)) {
        std::string s = trim(line);
        if (s.empty() || s[0] == '#' || s[0] == ';') continue;
        size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw DomainViolation("config: expected key=value, got '" + s + "'");
        apply_config_entry(run, trim(s.substr(0, eq)), trim(s.substr(eq + 1)));
    }
    return run;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string render_json(const MetaList& meta, const Table& table) {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json m = nlohmann::ordered_json::object();
    for (const auto& [k, v] : meta) m[k] = v;
    doc["meta"] = m;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json r = nlohmann::ordered_json::object();
        for (size_t c = 0; c < table.columns.size(); ++c) r[table.columns[c]] = row[c];
        rows.push_back(r);
    }
    doc["data"] = rows;
    return doc.dump(1) + "\n";
}

std::string render_csv(const MetaList& meta, const Table& table) {
    std::ostringstream out;
    for (const auto& [k, v] : meta) out << "# " << k << "=" << v << "\n";
    for (size_t c = 0; c < table.columns.size(); ++c)
        out << table.columns[c] << (c + 1 == table.columns.size() ? "\n" : ",");
    for (const auto& row : table.rows)
        for (size_t c = 0; c < row.size(); ++c)
            out << row[c] << (c + 1 == row.size() ? "\n" : ",");
    return out.str();
}

std::string emit_report(const RunConfig& run, const MetaList& meta, const Table& table) {
    std::string text = run.format == "csv" ? render_csv(meta, table) : render_json(meta, table);
    if (!run.out_path.empty()) {
        std::ofstream out(run.out_path, std::ios::binary);
        if (!out) throw IoError("cannot open output file " + run.out_path);
        out << text;
        if (!out) throw IoError("failed writing " + run.out_path);
    }
    return text;
}

MetaList config_meta(const RunConfig& run) {
    return {
        {"tool", "zlab"},
        {"version", "1.0.0"},
        {"em_cutoff", std::to_string(run.precision.em_cutoff)},
        {"em_depth", std::to_string(run.precision.em_depth)},
        {"cauchy_radius", format_number(run.precision.cauchy_radius)},
        {"cauchy_nodes", std::to_string(run.precision.cauchy_nodes)},
        {"target_eps", format_number(run.precision.target_eps)},
        {"delta", format_number(run.delta)},
        {"format", run.format},
        {"parallelism", std::to_string(run.parallelism)},
        {"seed", std::to_string(run.seed)},
    };
}

}  // namespace zlab
