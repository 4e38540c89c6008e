// zlab -- command-line front end: evaluation, zero scans, interlacing,
// censuses, windings, self-checks and plot-data emission.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "zlab/hardy.hpp"
#include "zlab/report.hpp"
#include "zlab/selfcheck.hpp"
#include "zlab/special_functions.hpp"
#include "zlab/zeros.hpp"

namespace {

using namespace zlab;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

ComplexPoint parse_point(std::string text) {
    for (char& c : text)
        if (c == 'j' || c == 'J' || c == 'I') c = 'i';
    // forms: "a", "a,b", "a+bi" / "a-bi"
    try {
        size_t comma = text.find(',');
        if (comma != std::string::npos)
            return ComplexPoint(std::stod(text.substr(0, comma)),
                                std::stod(text.substr(comma + 1)));
        size_t ipos = text.find('i');
        if (ipos == std::string::npos) return ComplexPoint(std::stod(text), 0.0);
        size_t split = text.find_last_of("+-", ipos);
        if (split == std::string::npos || split == 0)
            throw DomainViolation("bad point syntax: " + text);
        std::string imtxt = text.substr(split, ipos - split);
        if (imtxt == "+") imtxt = "1";
        if (imtxt == "-") imtxt = "-1";
        return ComplexPoint(std::stod(text.substr(0, split)), std::stod(imtxt));
    } catch (const std::invalid_argument&) {
        throw DomainViolation("bad point syntax: '" + text + "'");
    } catch (const std::out_of_range&) {
        throw DomainViolation("bad point syntax: '" + text + "'");
    }
}

std::pair<double, double> parse_range(const std::string& text) {
    size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw DomainViolation("range must be lo:hi, got '" + text + "'");
    try {
        double lo = std::stod(text.substr(0, colon));
        double hi = std::stod(text.substr(colon + 1));
        if (!(lo < hi)) throw DomainViolation("range requires lo < hi, got '" + text + "'");
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw DomainViolation("bad range: '" + text + "'");
    }
}

void push_value_row(Table& t, const std::string& quantity, int k, Complex v,
                    const std::string& quality = {}) {
    t.rows.push_back({quantity, std::to_string(k), format_number(v.real()),
                      format_number(v.imag()), quality});
}

struct CliState {
    RunConfig run;
    std::string config_path;
    std::vector<std::string> overrides;  // key=value pairs from flags

    void finalize() {
        if (!config_path.empty()) run = load_config_file(config_path);
        for (const std::string& kv : overrides) {
            size_t eq = kv.find('=');
            if (eq == std::string::npos)
                throw DomainViolation("--set expects key=value, got '" + kv + "'");
            apply_config_entry(run, kv.substr(0, eq), kv.substr(eq + 1));
        }
        run.validate();
    }
};

int cmd_eval(CliState& st, const std::string& target, int n, int k,
             const std::string& point_text, double t_value, bool have_t) {
    st.finalize();
    const RunConfig& run = st.run;
    DomainSpec dom = run.domain();
    const PrecisionConfig& cfg = run.precision;

    Table table;
    table.columns = {"quantity", "coeff_index", "re", "im", "quality"};
    MetaList meta = config_meta(run);
    meta.emplace_back("target", target);
    meta.emplace_back("n", std::to_string(n));
    meta.emplace_back("k", std::to_string(k));

    if (target == "theta" || target == "Z") {
        if (!have_t) throw DomainViolation("eval " + target + " requires --t");
        meta.emplace_back("t", format_number(t_value));
        if (target == "theta") {
            Jet th = theta_jet(t_value, k);
            for (int j = 0; j <= k; ++j) push_value_row(table, "theta", j, th[j]);
        } else {
            ZEval z = z_derivative_checked(n, t_value, cfg);
            push_value_row(table, "Z^(" + std::to_string(n) + ")", 0, Complex(z.value),
                           format_number(z.im_residual));
        }
    } else {
        if (point_text.empty()) throw DomainViolation("eval " + target + " requires --s");
        ComplexPoint s = parse_point(point_text);
        meta.emplace_back("s", format_number(s.re) + "," + format_number(s.im));
        if (target == "zeta") {
            if (k == 0) push_value_row(table, "zeta", 0, zeta_auto(s, cfg));
            else {
                Jet zj = zeta_jet(s, k, cfg);
                for (int j = 0; j <= k; ++j) push_value_row(table, "zeta", j, zj[j]);
            }
        } else if (target == "chi") {
            push_value_row(table, "chi", 0, chi(s));
        } else if (target == "omega") {
            Jet om = omega_jet(s, k, dom);
            for (int j = 0; j <= k; ++j) push_value_row(table, "omega", j, om[j]);
        } else if (target == "f" || target == "h") {
            Jet jet = target == "f" ? f_jet(n, s, k, cfg, dom) : h_jet(n, s, k, dom);
            for (int j = 0; j <= k; ++j)
                push_value_row(table, target + "_" + std::to_string(n), j, jet[j]);
        } else if (target == "g") {
            push_value_row(table, "g_" + std::to_string(n), 0, g_value(n, s, cfg, dom));
        } else {
            throw DomainViolation("unknown eval target '" + target + "'");
        }
    }

    std::cout << emit_report(run, meta, table);
    return kExitOk;
}

int cmd_zeros(CliState& st, int n, const std::string& range) {
    st.finalize();
    auto [lo, hi] = parse_range(range);
    std::vector<ZeroRecord> zeros =
        scan_zeros(n, lo, hi, st.run.precision, st.run.parallelism);

    Table table;
    table.columns = {"n", "t", "bracket_width", "sign_before", "sign_after"};
    for (const ZeroRecord& z : zeros)
        table.rows.push_back({std::to_string(z.n), format_number(z.t),
                              format_number(z.bracket_width), std::to_string(z.sign_before),
                              std::to_string(z.sign_after)});
    MetaList meta = config_meta(st.run);
    meta.emplace_back("n", std::to_string(n));
    meta.emplace_back("range", range);
    meta.emplace_back("count", std::to_string(zeros.size()));
    std::cout << emit_report(st.run, meta, table);
    return kExitOk;
}

int cmd_interlace(CliState& st, int n, const std::string& range) {
    st.finalize();
    auto [lo, hi] = parse_range(range);
    InterlaceReport rep = interlace_check(n, lo, hi, st.run.precision, st.run.parallelism);

    Table table;
    table.columns = {"left", "right", "count"};
    for (const GapRecord& g : rep.gaps)
        table.rows.push_back({format_number(g.left), format_number(g.right),
                              std::to_string(g.count)});
    MetaList meta = config_meta(st.run);
    meta.emplace_back("n", std::to_string(n));
    meta.emplace_back("range", range);
    meta.emplace_back("gaps", std::to_string(rep.gaps.size()));
    meta.emplace_back("violations", std::to_string(rep.violations.size()));
    meta.emplace_back("ambiguous", std::to_string(rep.ambiguous.size()));
    meta.emplace_back("smallest_clean_t", rep.smallest_clean_t
                                              ? format_number(*rep.smallest_clean_t)
                                              : std::string("none"));
    emit_report(st.run, meta, table);

    std::printf("n=%d range=[%s] gaps=%zu violations=%zu ambiguous=%zu smallest_clean_t=%s\n",
                n, range.c_str(), rep.gaps.size(), rep.violations.size(), rep.ambiguous.size(),
                rep.smallest_clean_t ? format_number(*rep.smallest_clean_t).c_str() : "none");
    return rep.violations.empty() && rep.ambiguous.empty() ? kExitOk : kExitCheckFailed;
}

int cmd_count(CliState& st, int n, double T) {
    st.finalize();
    CountReport rep = count_zeros(n, T, st.run.precision, st.run.parallelism);
    Table table;
    table.columns = {"n", "T", "observed", "main_term", "residual", "residual_over_log", "note"};
    table.rows.push_back({std::to_string(rep.n), format_number(rep.T),
                          std::to_string(rep.observed), format_number(rep.main_term),
                          format_number(rep.residual), format_number(rep.residual_over_log),
                          rep.note});
    MetaList meta = config_meta(st.run);
    std::cout << emit_report(st.run, meta, table);
    return kExitOk;
}

int cmd_winding(CliState& st, const std::string& family, int n, const std::string& rect_text,
                int nodes_per_unit) {
    st.finalize();
    FamilyId id;
    if (family == "F") id.kind = FamilyKind::F;
    else if (family == "H") id.kind = FamilyKind::H;
    else if (family == "G") id.kind = FamilyKind::G;
    else throw DomainViolation("winding: family must be F, H or G");
    id.n = n;

    std::istringstream in(rect_text);
    Rectangle rect;
    char c1, c2, c3;
    if (!(in >> rect.sigma_lo >> c1 >> rect.sigma_hi >> c2 >> rect.t_lo >> c3 >> rect.t_hi) ||
        c1 != ':' || c2 != ':' || c3 != ':')
        throw DomainViolation("winding: rect must be sigma_lo:sigma_hi:t_lo:t_hi");

    int w = winding_count(id, rect, nodes_per_unit, st.run.precision, st.run.domain());
    Table table;
    table.columns = {"family", "n", "sigma_lo", "sigma_hi", "t_lo", "t_hi", "winding"};
    table.rows.push_back({family, std::to_string(n), format_number(rect.sigma_lo),
                          format_number(rect.sigma_hi), format_number(rect.t_lo),
                          format_number(rect.t_hi), std::to_string(w)});
    MetaList meta = config_meta(st.run);
    std::cout << emit_report(st.run, meta, table);
    return kExitOk;
}

int cmd_selfcheck(CliState& st) {
    st.finalize();
    std::vector<CheckRow> rows = run_selfcheck(st.run);
    Table table = selfcheck_table(rows);
    MetaList meta = config_meta(st.run);
    std::cout << emit_report(st.run, meta, table);

    bool all_pass = true;
    for (const CheckRow& r : rows) {
        std::printf("%-28s %-6s max_residual=%s\n", r.name.c_str(), r.pass ? "PASS" : "FAIL",
                    format_number(r.max_residual).c_str());
        all_pass = all_pass && r.pass;
    }
    return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_plotdata(CliState& st, const std::string& target, int n, const std::string& range,
                 double step) {
    st.finalize();
    if (!(step > 0.0)) throw DomainViolation("plotdata: step must be > 0");
    auto [lo, hi] = parse_range(range);

    std::ostringstream out;
    long rows = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
    for (long i = 0; i <= rows; ++i) {
        double t = lo + static_cast<double>(i) * step;
        double v;
        if (target == "Z") {
            v = detail::z_eval_unguarded(n, t, st.run.precision).value;
        } else if (target == "g") {
            Complex g = g_value(n, ComplexPoint(0.5, t), st.run.precision, st.run.domain());
            v = g.real();
        } else {
            throw DomainViolation("plotdata: target must be Z or g");
        }
        out << format_number(t) << " " << format_number(v) << "\n";
    }

    if (!st.run.out_path.empty()) {
        std::ofstream f(st.run.out_path, std::ios::binary);
        if (!f) throw IoError("plotdata: cannot open " + st.run.out_path);
        f << out.str();
        if (!f) throw IoError("plotdata: failed writing " + st.run.out_path);
    } else {
        std::cout << out.str();
    }
    return kExitOk;
}

int classify(const Error& e) {
    const std::string& k = e.kind();
    if (k == "IoError") return kExitIo;
    if (k == "DomainViolation" || k == "PoleError" || k == "PoleProximity" ||
        k == "NearZeroDenominator")
        return kExitUsage;
    return kExitCheckFailed;  // UnstableScan, WindingUnresolved, FitAmbiguous, ...
}

void print_error(const Error& e) {
    nlohmann::ordered_json rec;
    rec["error"] = e.kind();
    rec["message"] = e.what();
    std::cerr << rec.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hardy Z-function laboratory"};
    app.require_subcommand(1);

    CliState st;
    app.add_option("--config", st.config_path, "INI-style key=value config file");

    auto add_common = [&](CLI::App* sub) {
        auto push = [&st](const std::string& key) {
            return [&st, key](const std::string& v) { st.overrides.push_back(key + "=" + v); };
        };
        sub->add_option_function<std::string>("--format", push("format"), "csv|json");
        sub->add_option_function<std::string>("--out", push("out"), "output file");
        sub->add_option_function<std::string>("--threads,--parallelism", push("parallelism"),
                                              "parallelism degree");
        sub->add_option_function<std::string>("--seed", push("seed"), "sampling seed");
        sub->add_option_function<std::string>("--delta", push("delta"), "D exclusion radius");
        sub->add_option_function<std::string>("--target-eps", push("target_eps"), "accuracy target");
        sub->add_option_function<std::string>("--em-cutoff", push("em_cutoff"), "EM cutoff floor M");
        sub->add_option_function<std::string>("--em-depth", push("em_depth"), "Bernoulli depth K_B");
        sub->add_option_function<std::string>("--cauchy-radius", push("cauchy_radius"),
                                              "derivative circle radius");
        sub->add_option_function<std::string>("--cauchy-nodes", push("cauchy_nodes"),
                                              "quadrature nodes");
    };

    // eval
    std::string ev_target, ev_point;
    int ev_n = 0, ev_k = 0;
    double ev_t = 0.0;
    CLI::App* eval = app.add_subcommand("eval", "evaluate zeta/chi/omega/theta/f/h/g/Z");
    eval->add_option("--target", ev_target, "zeta|chi|omega|theta|f|h|g|Z")->required();
    eval->add_option("--n", ev_n, "family/derivative order");
    eval->add_option("--k", ev_k, "jet order");
    eval->add_option("--s", ev_point, "complex point re,im (or re+imi)");
    CLI::Option* ev_t_opt = eval->add_option("--t", ev_t, "real ordinate");
    add_common(eval);

    // zeros / interlace / count
    int zn = 0;
    std::string zrange;
    CLI::App* zeros = app.add_subcommand("zeros", "scan sign changes of Z^(n)");
    zeros->add_option("--n", zn)->required();
    zeros->add_option("--range", zrange, "t_lo:t_hi")->required();
    add_common(zeros);

    int in_n = 0;
    std::string in_range;
    CLI::App* inter = app.add_subcommand("interlace", "verify interlacing of Z^(n), Z^(n+1)");
    inter->add_option("--n", in_n)->required();
    inter->add_option("--range", in_range, "t_lo:t_hi")->required();
    add_common(inter);

    int cn = 0;
    double cT = 0.0;
    CLI::App* count = app.add_subcommand("count", "zero census against the main term");
    count->add_option("--n", cn)->required();
    count->add_option("--T", cT)->required();
    add_common(count);

    std::string wfam = "F", wrect;
    int wn = 0, wnpu = 64;
    CLI::App* wind = app.add_subcommand("winding", "argument-principle winding number");
    wind->add_option("--family", wfam, "F|H|G")->required();
    wind->add_option("--n", wn)->required();
    wind->add_option("--rect", wrect, "sigma_lo:sigma_hi:t_lo:t_hi")->required();
    wind->add_option("--nodes-per-unit", wnpu);
    add_common(wind);

    CLI::App* self = app.add_subcommand("selfcheck", "run the cross-module invariant suite");
    add_common(self);

    std::string pt_target = "Z", pt_range;
    int pt_n = 0;
    double pt_step = 0.0;
    CLI::App* plot = app.add_subcommand("plotdata", "emit two-column t/value rows");
    plot->add_option("--target", pt_target, "Z|g");
    plot->add_option("--n", pt_n);
    plot->add_option("--range", pt_range, "t_lo:t_hi")->required();
    plot->add_option("--step", pt_step)->required();
    add_common(plot);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval->parsed())
            return cmd_eval(st, ev_target, ev_n, ev_k, ev_point, ev_t, ev_t_opt->count() > 0);
        if (zeros->parsed()) return cmd_zeros(st, zn, zrange);
        if (inter->parsed()) return cmd_interlace(st, in_n, in_range);
        if (count->parsed()) return cmd_count(st, cn, cT);
        if (wind->parsed()) return cmd_winding(st, wfam, wn, wrect, wnpu);
        if (self->parsed()) return cmd_selfcheck(st);
        if (plot->parsed()) return cmd_plotdata(st, pt_target, pt_n, pt_range, pt_step);
    } catch (const Error& e) {
        print_error(e);
        return classify(e);
    } catch (const std::exception& e) {
        std::cerr << "{\"error\":\"Internal\",\"message\":\"" << e.what() << "\"}\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
