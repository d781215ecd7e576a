// quditnc: command-line front end over the C API. Parameter sweeps,
// figure-data export, Table-1 style volume comparison, state inspection.

#include "qudit_nc.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <thread>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitDomain = 2;
constexpr int kExitNoConverge = 3;
constexpr int kExitIo = 4;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& msg) { throw CliError{code, msg}; }

void check(qnc_status st) {
    if (st == QNC_OK) return;
    int code = kExitDomain;
    if (st == QNC_ERR_NO_CONVERGE) code = kExitNoConverge;
    if (st == QNC_ERR_IO) code = kExitIo;
    die(code, qnc_last_error());
}

using StatePtr = std::unique_ptr<qnc_state, decltype(&qnc_state_free)>;

struct StateSpec {
    unsigned M = 10;
    double p = 0.5;
    double q = 0.0;
    unsigned add_r = 0;
    unsigned sub_t = 0;

    StatePtr build() const {
        if (add_r > 0 && sub_t > 0)
            die(kExitDomain, "--add and --sub cannot both be nonzero in one run");
        qnc_state* base = nullptr;
        check(qnc_state_ngbs(M, p, q, nullptr, &base));
        StatePtr state(base, qnc_state_free);
        if (add_r > 0) {
            qnc_state* next = nullptr;
            check(qnc_state_add_photons(state.get(), add_r, &next));
            state.reset(next);
        } else if (sub_t > 0) {
            qnc_state* next = nullptr;
            check(qnc_state_subtract_photons(state.get(), sub_t, &next));
            state.reset(next);
        }
        return state;
    }
};

// "start:stop:step" inclusive of stop when (stop-start) is an integer
// multiple of step within 1e-9; a bare number is a single point.
std::vector<double> parse_sweep(const std::string& spec) {
    const auto c1 = spec.find(':');
    if (c1 == std::string::npos) return {std::stod(spec)};
    const auto c2 = spec.find(':', c1 + 1);
    if (c2 == std::string::npos) die(kExitDomain, "sweep spec must be start:stop:step");
    const double start = std::stod(spec.substr(0, c1));
    const double stop = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
    const double step = std::stod(spec.substr(c2 + 1));
    if (!(step > 0.0)) die(kExitDomain, "sweep step must be positive");
    std::vector<double> out;
    const long count = std::lround(std::floor((stop - start) / step + 1e-9));
    for (long i = 0; i <= count; ++i) out.push_back(start + static_cast<double>(i) * step);
    return out;
}

int default_workers() {
    if (const char* env = std::getenv("QNC_WORKERS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

// Bounded worker pool over independent items; results keep index order.
template <typename Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
    workers = std::min<std::size_t>(std::max(workers, 1), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = static_cast<std::size_t>(w); i < count;
                 i += static_cast<std::size_t>(workers))
                fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) die(kExitIo, "cannot open output file: " + path);
    out << content;
    if (!out) die(kExitIo, "write failed: " + path);
}

// ---- subcommands ------------------------------------------------------

int cmd_state(const StateSpec& spec, const std::string& out_path) {
    auto state = spec.build();
    size_t needed = 0;
    check(qnc_state_serialize(state.get(), nullptr, 0, &needed));
    std::string text(needed, '\0');
    check(qnc_state_serialize(state.get(), text.data(), text.size(), &needed));
    text.resize(needed - 1);
    write_file(out_path, text);
    return 0;
}

int cmd_witness(const std::string& kind_name, StateSpec spec,
                const std::string& sweep, int order,
                const std::string& convention, const std::string& out_path,
                bool as_json, int workers) {
    qnc_witness_kind kind;
    if (kind_name == "hoa") kind = QNC_WITNESS_HOA;
    else if (kind_name == "hos") kind = QNC_WITNESS_HOS_HILLERY;
    else if (kind_name == "hosps")
        kind = (convention == "literal") ? QNC_WITNESS_HOSPS_LITERAL
                                        : QNC_WITNESS_HOSPS_DEFINITION;
    else die(kExitDomain, "unknown witness kind: " + kind_name);

    const auto ps = parse_sweep(sweep);
    std::vector<qnc_witness_result> results(ps.size());
    std::vector<int> errors(ps.size(), 0);
    parallel_for(ps.size(), workers, [&](std::size_t i) {
        StateSpec point = spec;
        point.p = ps[i];
        try {
            auto state = point.build();
            check(qnc_witness(state.get(), kind, order, &results[i]));
        } catch (const CliError& e) {
            errors[i] = e.code;
        }
    });
    for (std::size_t i = 0; i < ps.size(); ++i)
        if (errors[i]) die(errors[i], "witness evaluation failed at p = " + fmt(ps[i]));

    if (as_json) {
        json rows = json::array();
        for (std::size_t i = 0; i < ps.size(); ++i)
            rows.push_back({{"p", ps[i]},
                            {"value", results[i].value},
                            {"nonclassical", results[i].nonclassical != 0}});
        write_file(out_path, rows.dump(2) + "\n");
    } else {
        std::string csv = "p,value,nonclassical\n";
        for (std::size_t i = 0; i < ps.size(); ++i)
            csv += fmt(ps[i]) + "," + fmt(results[i].value) + "," +
                   (results[i].nonclassical ? "1" : "0") + "\n";
        write_file(out_path, csv);
    }
    return 0;
}

int cmd_table1(double tolerance, const std::string& out_path, bool as_json,
               int workers) {
    // reference values for M=10, q=-0.01, p=0.8
    const int counts[3] = {1, 3, 5};
    const double ref_add[3] = {0.255922, 0.31384, 0.363856};
    const double ref_sub[3] = {0.260153, 0.353625, 0.482082};

    struct Row {
        const char* op;
        int count;
        double reference;
        qnc_quadrature_report report{};
        int error = 0;
    };
    std::vector<Row> rows;
    for (int i = 0; i < 3; ++i) rows.push_back({"add", counts[i], ref_add[i]});
    for (int i = 0; i < 3; ++i) rows.push_back({"sub", counts[i], ref_sub[i]});

    parallel_for(rows.size(), workers, [&](std::size_t i) {
        StateSpec spec;
        spec.M = 10;
        spec.p = 0.8;
        spec.q = -0.01;
        if (std::string(rows[i].op) == "add")
            spec.add_r = static_cast<unsigned>(rows[i].count);
        else
            spec.sub_t = static_cast<unsigned>(rows[i].count);
        try {
            auto state = spec.build();
            const qnc_status st =
                qnc_nonclassical_volume(state.get(), tolerance, &rows[i].report);
            if (st != QNC_OK) rows[i].error = kExitNoConverge;
        } catch (const CliError& e) {
            rows[i].error = e.code;
        }
    });

    if (as_json) {
        json jrows = json::array();
        for (const auto& r : rows)
            jrows.push_back({{"op", r.op},
                             {"count", r.count},
                             {"computed", r.report.value},
                             {"reference", r.reference},
                             {"abs_diff", std::abs(r.report.value - r.reference)},
                             {"converged", r.error == 0}});
        write_file(out_path, jrows.dump(2) + "\n");
    } else {
        std::string csv = "op,count,computed,reference,abs_diff,converged\n";
        for (const auto& r : rows)
            csv += std::string(r.op) + "," + std::to_string(r.count) + "," +
                   fmt(r.report.value) + "," + fmt(r.reference) + "," +
                   fmt(std::abs(r.report.value - r.reference)) + "," +
                   (r.error == 0 ? "1" : "0") + "\n";
        write_file(out_path, csv);
    }

    for (int i = 0; i < 3; ++i)
        std::cout << "count " << counts[i] << ": sub "
                  << (rows[static_cast<std::size_t>(i + 3)].report.value >
                              rows[static_cast<std::size_t>(i)].report.value
                          ? "exceeds"
                          : "does not exceed")
                  << " add\n";
    for (const auto& r : rows)
        if (r.error) die(r.error, std::string("volume row failed: ") + r.op + " " +
                                      std::to_string(r.count));
    return 0;
}

int cmd_wigner(const StateSpec& spec, int grid_n, double extent,
               const std::string& out_path, int workers) {
    (void)workers; // grid evaluation parallelizes inside the library
    auto state = spec.build();
    std::vector<double> field(static_cast<std::size_t>(grid_n) * grid_n);
    check(qnc_wigner_grid(state.get(), -extent, extent, -extent, extent, grid_n,
                          grid_n, field.data()));
    std::string csv = "x,p,W\n";
    const double step = 2.0 * extent / (grid_n - 1);
    double min_w = field[0];
    long negatives = 0;
    for (int i = 0; i < grid_n; ++i) {
        const double x = -extent + i * step;
        for (int j = 0; j < grid_n; ++j) {
            const double w = field[static_cast<std::size_t>(i) * grid_n + j];
            csv += fmt(x) + "," + fmt(-extent + j * step) + "," + fmt(w) + "\n";
            min_w = std::min(min_w, w);
            if (w < 0.0) ++negatives;
        }
    }
    write_file(out_path, csv);
    std::cout << "min W = " << fmt(min_w) << "\n"
              << "negative nodes = " << negatives << "\n";
    return 0;
}

int cmd_tomogram(const StateSpec& spec, const std::string& x_sweep,
                 const std::string& theta_sweep, const std::string& out_path,
                 int workers) {
    auto state = spec.build();
    const auto xs = parse_sweep(x_sweep);
    const auto thetas = parse_sweep(theta_sweep);
    std::vector<double> values(xs.size() * thetas.size());
    std::vector<int> errors(xs.size(), 0);
    parallel_for(xs.size(), workers, [&](std::size_t i) {
        for (std::size_t j = 0; j < thetas.size(); ++j) {
            const qnc_status st = qnc_tomogram(state.get(), xs[i], thetas[j],
                                               &values[i * thetas.size() + j]);
            if (st != QNC_OK) errors[i] = kExitDomain;
        }
    });
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (errors[i]) die(errors[i], "tomogram evaluation failed");
    std::string csv = "X,theta,w\n";
    double min_w = values[0];
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < thetas.size(); ++j) {
            csv += fmt(xs[i]) + "," + fmt(thetas[j]) + "," +
                   fmt(values[i * thetas.size() + j]) + "\n";
            min_w = std::min(min_w, values[i * thetas.size() + j]);
        }
    write_file(out_path, csv);
    std::cout << "min w = " << fmt(min_w) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qudit nonclassicality toolkit"};
    app.require_subcommand(1);

    StateSpec spec;
    std::string out_path = "-";
    std::string sweep = "0.05:0.95:0.01";
    std::string convention = "definition";
    std::string witness_kind;
    std::string x_sweep = "-5:5:0.1";
    std::string theta_sweep = "0:3.1416:0.19635";
    int order = 0;
    int workers = default_workers();
    int grid_n = 201;
    double extent = 6.0;
    double tolerance = 1e-5;
    bool as_json = false;

    auto add_state_flags = [&](CLI::App* cmd) {
        cmd->add_option("--M", spec.M, "truncation M");
        cmd->add_option("--q", spec.q, "generalization parameter q");
        cmd->add_option("--add", spec.add_r, "photons to add");
        cmd->add_option("--sub", spec.sub_t, "photons to subtract");
        cmd->add_option("--out", out_path, "output file (default stdout)");
    };

    auto* c_state = app.add_subcommand("state", "print a state record");
    add_state_flags(c_state);
    c_state->add_option("--p", spec.p, "probability parameter p")->required();

    auto* c_witness = app.add_subcommand("witness", "sweep a nonclassicality witness");
    c_witness->add_option("kind", witness_kind, "hoa | hos | hosps")->required();
    add_state_flags(c_witness);
    c_witness->add_option("--p", sweep, "p sweep spec start:stop:step");
    c_witness->add_option("--l", order, "witness order");
    c_witness->add_option("--convention", convention, "hosps convention: literal | definition")
        ->check(CLI::IsMember({"literal", "definition"}));
    c_witness->add_option("--workers", workers, "worker pool size");
    c_witness->add_flag("--json", as_json, "emit JSON instead of CSV");

    auto* c_table = app.add_subcommand("table1", "nonclassical volumes vs reference values");
    c_table->add_option("--tol", tolerance, "quadrature tolerance");
    c_table->add_option("--out", out_path, "output file (default stdout)");
    c_table->add_option("--workers", workers, "worker pool size");
    c_table->add_flag("--json", as_json, "emit JSON instead of CSV");

    auto* c_wigner = app.add_subcommand("wigner", "export a Wigner grid");
    add_state_flags(c_wigner);
    c_wigner->add_option("--p", spec.p, "probability parameter p")->required();
    c_wigner->add_option("--grid", grid_n, "nodes per axis");
    c_wigner->add_option("--extent", extent, "half-width of the square grid");
    c_wigner->add_option("--workers", workers, "worker pool size");

    auto* c_tomo = app.add_subcommand("tomogram", "export a tomogram grid");
    add_state_flags(c_tomo);
    c_tomo->add_option("--p", spec.p, "probability parameter p")->required();
    c_tomo->add_option("--X", x_sweep, "X sweep spec start:stop:step");
    c_tomo->add_option("--theta", theta_sweep, "theta sweep spec start:stop:step");
    c_tomo->add_option("--workers", workers, "worker pool size");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_state->parsed()) return cmd_state(spec, out_path);
        if (c_witness->parsed()) {
            if (order == 0) order = (witness_kind == "hoa") ? 3
                                   : (witness_kind == "hos") ? 2 : 4;
            return cmd_witness(witness_kind, spec, sweep, order, convention,
                               out_path, as_json, workers);
        }
        if (c_table->parsed()) return cmd_table1(tolerance, out_path, as_json, workers);
        if (c_wigner->parsed()) return cmd_wigner(spec, grid_n, extent, out_path, workers);
        if (c_tomo->parsed())
            return cmd_tomogram(spec, x_sweep, theta_sweep, out_path, workers);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    }
    return 0;
}
