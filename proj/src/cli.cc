// Copyright 2026 The asbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "asbell/cli.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/core.h>
#include <nlohmann/json.hpp>

#include "asbell/catalog.h"
#include "asbell/direction_io.h"
#include "asbell/errors.h"
#include "asbell/inequality.h"
#include "asbell/optimizer.h"
#include "asbell/published.h"
#include "asbell/quantum.h"
#include "asbell/report.h"
#include "asbell/steering.h"
#include "asbell/verification.h"

#ifndef ASBELL_VERSION
#define ASBELL_VERSION "0.0.0"
#endif

namespace asbell::cli {

namespace {

using nlohmann::json;
using report::Cell;
using report::round_significant;
using report::Table;

struct Document {
    std::string command;
    json arguments = json::object();
    json tolerances = json::object();
    json result = json::object();
    std::vector<Table> tables;
    std::vector<std::string> notes;
    std::optional<std::uint64_t> seed;
    int exit_code = kExitOk;
};

json number(double v) {
    return round_significant(v);
}

json vec_json(const BlochVector &v) {
    return json::array({number(v.x()), number(v.y()), number(v.z())});
}

json set_json(const MeasurementSet &set) {
    json out = json::array();
    for (const auto &d : set) {
        out.push_back(vec_json(d));
    }
    return out;
}

std::string signs_text(const ClassicalAssignment &a) {
    std::string out;
    for (int i = 0; i < a.size(); ++i) {
        out += (i ? " " : "") + std::string(a[i] > 0 ? "+1" : "-1");
    }
    return out;
}

json signs_json(const ClassicalAssignment &a) {
    return json(a.values());
}

// ---------------------------------------------------------------------------
// Commands

Document cmd_matrix(int n) {
    const CoefficientMatrix m = build_as_matrix(n);
    Document doc;
    doc.command = "matrix";
    doc.arguments = {{"n", n}};
    doc.result = {{"n", n}, {"entries", m.rows()}};
    Table t{"matrix", {"setting"}, {}};
    for (int j = 0; j < n; ++j) {
        t.columns.push_back("B" + std::to_string(j + 1));
    }
    for (int i = 0; i < n; ++i) {
        std::vector<Cell> row{"A" + std::to_string(i + 1)};
        for (int j = 0; j < n; ++j) {
            row.emplace_back(m(i, j));
        }
        t.rows.push_back(std::move(row));
    }
    doc.tables.push_back(std::move(t));
    return doc;
}

Document cmd_bounds(int n, bool bruteforce) {
    const std::int64_t closed = lhv_bound_closed_form(n);
    Document doc;
    doc.command = "bounds";
    doc.arguments = {{"n", n}, {"bruteforce", bruteforce}};
    doc.result = {{"n", n}, {"c_lhv", closed}, {"method", "closed_form"}};
    Table t{"bounds", {"n", "c_lhv"}, {{std::int64_t{n}, closed}}};
    if (bruteforce) {
        const LhvBoundResult r = lhv_bound_bruteforce(build_as_matrix(n));
        doc.result["bruteforce"] = {
            {"value", r.value},
            {"alice_witness", signs_json(r.alice_witness)},
            {"bob_witness", signs_json(r.bob_witness)},
        };
        t.columns.insert(t.columns.end(), {"c_lhv_bruteforce", "alice_witness", "bob_witness"});
        t.rows[0].insert(t.rows[0].end(), {r.value, signs_text(r.alice_witness), signs_text(r.bob_witness)});
        if (r.value != closed) {
            doc.notes.push_back(fmt::format("enumerated bound {} differs from the closed form {}", r.value, closed));
        }
    }
    doc.tables.push_back(std::move(t));
    return doc;
}

struct BobChoice {
    MeasurementSet bob;
    std::string source;
    bool catalog = false;
};

BobChoice choose_bob(int n, const std::string &directions_file) {
    require_as_order(n);
    if (!directions_file.empty()) {
        DirectionCatalogEntry entry = load_direction_file(directions_file);
        if (entry.n != n) {
            throw InvalidParameterError(
                fmt::format("direction file {} describes N = {}, command asked for N = {}", directions_file, entry.n, n));
        }
        return {entry.default_bob(), directions_file, false};
    }
    const auto orders = catalog_orders();
    if (std::find(orders.begin(), orders.end(), n) == orders.end()) {
        throw InvalidParameterError(fmt::format(
            "no built-in directions for N = {} (available: 2, 4, 6, 8, 10); pass --directions FILE", n));
    }
    DirectionCatalogEntry entry = published_directions(n);
    const bool canonical = entry.canonical_bob.has_value();
    return {entry.default_bob(), canonical ? "catalog:canonical_bob" : "catalog:bob", true};
}

struct QuantumMax {
    double value;
    std::string source;
};

/// Shared payload of `lhs` and `thresholds`.
void steering_summary(Document &doc, int n, const BobChoice &choice, const QuantumMax &qmax) {
    const CoefficientMatrix m = build_as_matrix(n);
    const SteeringBoundResult lhs = steering_lhs_bound(m, choice.bob);
    const std::int64_t c_lhv = lhv_bound_bruteforce(m).value;
    const double v_lhs = lhs.value / qmax.value;
    const double v_lhv = static_cast<double>(c_lhv) / qmax.value;

    doc.tolerances["tie"] = kSteeringTieTolerance;
    doc.result = {
        {"n", n},
        {"c_lhs", number(lhs.value)},
        {"c_lhv", c_lhv},
        {"v_lhs", number(v_lhs)},
        {"v_lhv", number(v_lhv)},
        {"witness", signs_json(lhs.alice_witness)},
        {"bob_state", vec_json(lhs.bob_state_direction)},
        {"column_sums", lhs.column_sums},
        {"quantum_max", number(qmax.value)},
        {"quantum_max_source", qmax.source},
        {"directions", choice.source},
        {"bob", set_json(choice.bob)},
    };

    Table t{doc.command,
            {"n", "c_lhs", "c_lhv", "v_lhs", "v_lhv", "quantum_max", "witness", "bob_state_x", "bob_state_y", "bob_state_z"},
            {}};
    std::vector<Cell> row{std::int64_t{n}, lhs.value, c_lhv, v_lhs, v_lhv, qmax.value, signs_text(lhs.alice_witness),
                          lhs.bob_state_direction.x(), lhs.bob_state_direction.y(), lhs.bob_state_direction.z()};

    const auto published = choice.catalog ? published_steering_values(n) : std::nullopt;
    if (published) {
        const double from_published_c = published->c_lhs / qmax.value;
        doc.result["published"] = {
            {"c_lhs", number(published->c_lhs)},
            {"c_lhs_form", published->c_lhs_text},
            {"v_lhs", number(published->v_lhs)},
            {"v_lhs_form", published->v_lhs_text},
            {"v_lhs_from_c_lhs", number(from_published_c)},
        };
        t.columns.insert(t.columns.end(), {"c_lhs_published", "v_lhs_published", "v_lhs_from_published_c_lhs"});
        row.insert(row.end(), {published->c_lhs, published->v_lhs, from_published_c});

        // Decimal-only published values are compared at their printed precision.
        const double c_tol = published->c_lhs_digits ? 0.5 * std::pow(10.0, -published->c_lhs_digits) + 1e-12 : 1e-9;
        if (std::abs(lhs.value - published->c_lhs) > c_tol) {
            doc.notes.push_back(fmt::format(
                "N={}: computed C_LHS = {} differs from the published {} (difference {})", n,
                report::format_number(lhs.value), published->c_lhs_text,
                report::format_number(lhs.value - published->c_lhs)));
        }
        const double v_tol = published->v_lhs_digits ? std::pow(10.0, -published->v_lhs_digits) : 1e-9;
        if (std::abs(from_published_c - published->v_lhs) > v_tol) {
            doc.notes.push_back(fmt::format(
                "N={}: published V_LHS = {} and published C_LHS / I_max = {} are mutually inconsistent; "
                "computed V_LHS = {}",
                n, published->v_lhs_text, report::format_number(from_published_c), report::format_number(v_lhs)));
        }
        doc.result["discrepancies"] = doc.notes;
    }
    t.rows.push_back(std::move(row));
    doc.tables.push_back(std::move(t));
}

Document cmd_lhs(int n, const std::string &directions_file) {
    Document doc;
    doc.command = "lhs";
    doc.arguments = {{"n", n}, {"directions", directions_file.empty() ? json(nullptr) : json(directions_file)}};
    const BobChoice choice = choose_bob(n, directions_file);
    steering_summary(doc, n, choice, {max_quantum_closed_form(n), "closed_form"});
    return doc;
}

struct SeesawArgs {
    int restarts = 32;
    std::uint64_t seed = 1;
    double tol = 1e-12;
    int max_iter = 10'000;
    int threads = 0;
    bool trajectory = false;

    MultistartOptions options() const {
        MultistartOptions o;
        o.restarts = restarts;
        o.seed = seed;
        o.threads = threads;
        o.seesaw.tol = tol;
        o.seesaw.max_iter = max_iter;
        o.seesaw.record_trajectory = trajectory;
        return o;
    }
    json to_json() const {
        return {{"restarts", restarts}, {"seed", seed}, {"tol", tol}, {"max_iter", max_iter}};
    }
};

Document cmd_thresholds(int n, const std::string &directions_file, std::optional<double> quantum_max, bool use_seesaw,
                        const SeesawArgs &seesaw_args) {
    Document doc;
    doc.command = "thresholds";
    doc.arguments = {{"n", n}, {"directions", directions_file.empty() ? json(nullptr) : json(directions_file)}};
    if (quantum_max && use_seesaw) {
        throw InvalidParameterError("--quantum-max and --seesaw are mutually exclusive");
    }
    const BobChoice choice = choose_bob(n, directions_file);
    QuantumMax qmax{max_quantum_closed_form(n), "closed_form"};
    if (quantum_max) {
        if (!(*quantum_max > 0) || !std::isfinite(*quantum_max)) {
            throw InvalidParameterError(fmt::format("--quantum-max must be positive, got {}", *quantum_max));
        }
        qmax = {*quantum_max, "user"};
        doc.arguments["quantum_max"] = *quantum_max;
    } else if (use_seesaw) {
        const OptimizationResult r = multistart_seesaw(build_as_matrix(n), seesaw_args.options());
        qmax = {r.value, "seesaw"};
        doc.arguments["seesaw"] = seesaw_args.to_json();
        doc.seed = seesaw_args.seed;
        doc.tolerances["seesaw_tol"] = seesaw_args.tol;
    }
    steering_summary(doc, n, choice, qmax);
    return doc;
}

Document cmd_seesaw(int n, const SeesawArgs &args) {
    const CoefficientMatrix m = build_as_matrix(n);
    const OptimizationResult r = multistart_seesaw(m, args.options());
    const double closed = max_quantum_closed_form(n);
    Document doc;
    doc.command = "seesaw";
    doc.arguments = args.to_json();
    doc.arguments["n"] = n;
    doc.seed = args.seed;
    doc.tolerances["tol"] = args.tol;
    doc.result = {
        {"n", n},
        {"value", number(r.value)},
        {"closed_form", number(closed)},
        {"deviation", number(closed - r.value)},
        {"iterations", r.iterations},
        {"converged", r.converged},
        {"restart_index", r.restart_index},
        {"alice", set_json(r.alice)},
        {"bob", set_json(r.bob)},
    };
    if (r.trajectory) {
        json traj = json::array();
        for (double v : *r.trajectory) {
            traj.push_back(number(v));
        }
        doc.result["trajectory"] = std::move(traj);
    }
    doc.tables.push_back(Table{
        "seesaw",
        {"n", "value", "closed_form", "deviation", "iterations", "converged", "restart_index"},
        {{std::int64_t{n}, r.value, closed, closed - r.value, std::int64_t{r.iterations},
          std::string(r.converged ? "true" : "false"), std::int64_t{r.restart_index}}},
    });
    if (!r.converged) {
        doc.notes.push_back(fmt::format("best restart stopped at max_iter = {} before converging", args.max_iter));
    }
    return doc;
}

Document cmd_tables() {
    Document doc;
    doc.command = "tables";
    doc.tolerances["tie"] = kSteeringTieTolerance;
    Table t1{"table1", {"n", "c_lhv", "c_lhs", "c_lhs_published", "c_lhs_published_form"}, {}};
    Table t2{"table2",
             {"n", "v_lhv", "v_lhs", "v_lhs_published", "v_lhs_published_form", "v_lhs_from_published_c_lhs"},
             {}};
    Table f2{"figure2", {"n", "c_lhv", "c_lhs"}, {}};
    Table f3{"figure3", {"n", "v_lhv", "v_lhs"}, {}};
    json rows = json::array();
    for (int n : catalog_orders()) {
        const CoefficientMatrix m = build_as_matrix(n);
        const DirectionCatalogEntry entry = published_directions(n);
        const std::int64_t c_lhv = lhv_bound_bruteforce(m).value;
        const double c_lhs = steering_lhs_bound(m, entry.default_bob()).value;
        const double qmax = max_quantum_closed_form(n);
        const double v_lhv = static_cast<double>(c_lhv) / qmax;
        const double v_lhs = c_lhs / qmax;
        const PublishedSteeringValues pub = *published_steering_values(n);
        const double v_from_pub = pub.c_lhs / qmax;
        const Cell nn = std::int64_t{n};
        t1.rows.push_back({nn, c_lhv, c_lhs, pub.c_lhs, pub.c_lhs_text});
        t2.rows.push_back({nn, v_lhv, v_lhs, pub.v_lhs, pub.v_lhs_text, v_from_pub});
        f2.rows.push_back({nn, c_lhv, c_lhs});
        f3.rows.push_back({nn, v_lhv, v_lhs});
        rows.push_back({
            {"n", n},
            {"c_lhv", c_lhv},
            {"c_lhs", number(c_lhs)},
            {"quantum_max", number(qmax)},
            {"v_lhv", number(v_lhv)},
            {"v_lhs", number(v_lhs)},
            {"c_lhs_published", number(pub.c_lhs)},
            {"c_lhs_published_form", pub.c_lhs_text},
            {"v_lhs_published", number(pub.v_lhs)},
            {"v_lhs_published_form", pub.v_lhs_text},
            {"v_lhs_from_published_c_lhs", number(v_from_pub)},
        });
        if (c_lhv != lhv_bound_closed_form(n)) {
            doc.notes.push_back(fmt::format("N={}: enumerated C_LHV {} differs from the closed form", n, c_lhv));
        }
        const double c_tol = pub.c_lhs_digits ? 0.5 * std::pow(10.0, -pub.c_lhs_digits) + 1e-12 : 1e-9;
        if (std::abs(c_lhs - pub.c_lhs) > c_tol) {
            doc.notes.push_back(fmt::format("N={}: computed C_LHS = {} differs from the published {}", n,
                                            report::format_number(c_lhs), pub.c_lhs_text));
        }
        const double v_tol = pub.v_lhs_digits ? std::pow(10.0, -pub.v_lhs_digits) : 1e-9;
        if (std::abs(v_from_pub - pub.v_lhs) > v_tol) {
            doc.notes.push_back(fmt::format(
                "N={}: published V_LHS = {} and published C_LHS / I_max = {} are mutually inconsistent; computed "
                "V_LHS = {}",
                n, pub.v_lhs_text, report::format_number(v_from_pub), report::format_number(v_lhs)));
        }
    }
    doc.result = {{"rows", rows}, {"discrepancies", doc.notes}};
    doc.tables = {t1, t2, f2, f3};
    return doc;
}

Document cmd_verify(int n) {
    const VerificationReport r = verify_directions(n, published_directions(n));
    Document doc;
    doc.command = "verify-directions";
    doc.arguments = {{"n", n}};
    doc.tolerances["attainment"] = r.tolerance;
    doc.result = {
        {"n", n},
        {"target", number(r.target)},
        {"tolerance", r.tolerance},
        {"alice_source", r.alice_source},
        {"achieved", number(r.achieved)},
        {"deviation", number(r.deviation)},
        {"passed", r.passed},
        {"best_response_value", number(r.best_response_value)},
        {"best_response_deviation", number(r.best_response_deviation)},
        {"best_response_passed", r.best_response_passed},
        {"seesaw_witness",
         {{"value", number(r.seesaw_witness.value)},
          {"iterations", r.seesaw_witness.iterations},
          {"converged", r.seesaw_witness.converged},
          {"alice", set_json(r.seesaw_witness.alice)},
          {"bob", set_json(r.seesaw_witness.bob)}}},
        {"canonical_value", r.canonical_value ? number(*r.canonical_value) : json(nullptr)},
        {"canonical_passed", r.canonical_passed ? json(*r.canonical_passed) : json(nullptr)},
        {"anomalies", r.anomalies},
    };
    Table t{"verify-directions", {"quantity", "value"}, {}};
    t.rows.push_back({"target", r.target});
    t.rows.push_back({"alice_source", r.alice_source});
    t.rows.push_back({"achieved", r.achieved});
    t.rows.push_back({"deviation", r.deviation});
    t.rows.push_back({"passed", std::string(r.passed ? "true" : "false")});
    t.rows.push_back({"best_response_value", r.best_response_value});
    t.rows.push_back({"seesaw_value", r.seesaw_witness.value});
    if (r.canonical_value) {
        t.rows.push_back({"canonical_value", *r.canonical_value});
    }
    doc.tables.push_back(std::move(t));
    for (const auto &a : r.anomalies) {
        doc.notes.push_back("anomaly: " + a);
    }
    doc.exit_code = r.anomalies.empty() ? kExitOk : kExitAnomaly;
    return doc;
}

Document cmd_catalog(int n) {
    const DirectionCatalogEntry entry = published_directions(n);
    Document doc;
    doc.command = "catalog";
    doc.arguments = {{"n", n}};
    json j = catalog_to_json(entry);
    auto round_set = [](json &arr) {
        for (auto &d : arr) {
            for (auto &c : d) {
                c = number(c.get<double>());
            }
        }
    };
    round_set(j["bob"]);
    if (!j["alice"].is_null()) {
        round_set(j["alice"]);
    }
    if (j.contains("canonical_bob")) {
        round_set(j["canonical_bob"]);
    }
    doc.result = std::move(j);
    Table t{"catalog", {"set", "index", "x", "y", "z"}, {}};
    auto add = [&t](const std::string &label, const MeasurementSet &set) {
        for (int i = 0; i < set.size(); ++i) {
            t.rows.push_back({label, std::int64_t{i + 1}, set[i].x(), set[i].y(), set[i].z()});
        }
    };
    add("bob", entry.bob);
    if (entry.alice) {
        add("alice", *entry.alice);
    }
    if (entry.canonical_bob) {
        add("canonical_bob", *entry.canonical_bob);
    }
    doc.tables.push_back(std::move(t));
    doc.notes.push_back(entry.provenance_notes);
    return doc;
}

// ---------------------------------------------------------------------------
// Output

void emit(const Document &doc, const std::string &format, const std::string &out_dir, std::ostream &out,
          std::ostream &err) {
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (const auto &t : doc.tables) {
            const auto path = std::filesystem::path(out_dir) / (t.name + ".csv");
            std::ofstream file(path, std::ios::binary);
            if (!file) {
                throw std::runtime_error("cannot write " + path.string());
            }
            file << report::render_csv(t);
            out << path.string() << '\n';
        }
        for (const auto &note : doc.notes) {
            err << "note: " << note << '\n';
        }
        return;
    }
    if (format == "json") {
        json meta = {
            {"tool", "asbell"},
            {"version", ASBELL_VERSION},
            {"command", doc.command},
            {"arguments", doc.arguments},
            {"seed", doc.seed ? json(*doc.seed) : json(nullptr)},
            {"tolerances", doc.tolerances},
        };
        json top = {{"metadata", meta}, {"result", doc.result}, {"notes", doc.notes}};
        out << top.dump(2) << '\n';
        return;
    }
    if (format == "csv") {
        for (std::size_t k = 0; k < doc.tables.size(); ++k) {
            if (doc.tables.size() > 1) {
                out << (k ? "\n" : "") << "# " << doc.tables[k].name << ".csv\n";
            }
            out << report::render_csv(doc.tables[k]);
        }
        for (const auto &note : doc.notes) {
            err << "note: " << note << '\n';
        }
        return;
    }
    for (std::size_t k = 0; k < doc.tables.size(); ++k) {
        if (doc.tables.size() > 1) {
            out << (k ? "\n" : "") << doc.tables[k].name << '\n';
        }
        out << report::render_pretty(doc.tables[k]);
    }
    if (!doc.notes.empty()) {
        out << '\n';
        for (const auto &note : doc.notes) {
            out << "note: " << note << '\n';
        }
    }
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Bell (AS family) and EPR-steering bounds, quantum maxima and Werner thresholds", "asbell"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("asbell ") + ASBELL_VERSION);

    int n = 0;
    std::string format = "table";
    std::string directions;
    std::string out_dir;
    bool bruteforce = false;
    bool use_seesaw = false;
    std::optional<double> quantum_max;
    SeesawArgs seesaw_args;

    auto add_n = [&n](CLI::App *sub) {
        sub->add_option("n", n, "Number of settings per party (even, >= 2)")->required();
    };
    auto add_format = [&format](CLI::App *sub) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"table", "json", "csv"}))
            ->capture_default_str();
    };
    auto add_seesaw_flags = [&seesaw_args](CLI::App *sub) {
        sub->add_option("--restarts", seesaw_args.restarts, "Number of random restarts")->capture_default_str();
        sub->add_option("--seed", seesaw_args.seed, "Seed for the restart streams")->capture_default_str();
        sub->add_option("--tol", seesaw_args.tol, "Stop when an iteration improves by less than this")
            ->capture_default_str();
        sub->add_option("--max-iter", seesaw_args.max_iter, "Iteration cap per restart")->capture_default_str();
        sub->add_option("--threads", seesaw_args.threads, "Worker threads (0 = all cores)")->capture_default_str();
    };

    auto *matrix = app.add_subcommand("matrix", "Print the AS_N coefficient matrix");
    add_n(matrix);
    add_format(matrix);

    auto *bounds = app.add_subcommand("bounds", "Local-hidden-variable bound C_LHV");
    add_n(bounds);
    add_format(bounds);
    bounds->add_flag("--bruteforce", bruteforce, "Also enumerate all assignments and report the witness");

    auto *lhs = app.add_subcommand("lhs", "Local-hidden-state bound C_LHS for fixed Bob directions");
    add_n(lhs);
    add_format(lhs);
    lhs->add_option("--directions", directions, "JSON direction file {n, bob, alice, notes}");

    auto *thresholds = app.add_subcommand("thresholds", "Werner visibility thresholds V_LHV and V_LHS");
    add_n(thresholds);
    add_format(thresholds);
    thresholds->add_option("--directions", directions, "JSON direction file {n, bob, alice, notes}");
    thresholds->add_option("--quantum-max", quantum_max, "Override the quantum maximum used as denominator");
    thresholds->add_flag("--seesaw", use_seesaw, "Use a multistart see-saw value as the quantum maximum");
    add_seesaw_flags(thresholds);

    auto *seesaw_cmd = app.add_subcommand("seesaw", "Maximise the quantum value by alternating best responses");
    add_n(seesaw_cmd);
    add_format(seesaw_cmd);
    add_seesaw_flags(seesaw_cmd);
    seesaw_cmd->add_flag("--trajectory", seesaw_args.trajectory, "Include per-half-step values (JSON)");

    auto *tables = app.add_subcommand("tables", "Bounds and thresholds for N = 2..10 plus the plotted series");
    add_format(tables);
    tables->add_option("--out-dir", out_dir, "Write table1/table2/figure2/figure3 CSV files here");

    auto *verify = app.add_subcommand("verify-directions", "Check that the built-in directions attain the maximum");
    add_n(verify);
    add_format(verify);

    auto *catalog = app.add_subcommand("catalog", "Print the built-in measurement directions");
    add_n(catalog);
    add_format(catalog);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        Document doc;
        if (*matrix) {
            doc = cmd_matrix(n);
        } else if (*bounds) {
            doc = cmd_bounds(n, bruteforce);
        } else if (*lhs) {
            doc = cmd_lhs(n, directions);
        } else if (*thresholds) {
            doc = cmd_thresholds(n, directions, quantum_max, use_seesaw, seesaw_args);
        } else if (*seesaw_cmd) {
            doc = cmd_seesaw(n, seesaw_args);
        } else if (*tables) {
            doc = cmd_tables();
        } else if (*verify) {
            doc = cmd_verify(n);
        } else if (*catalog) {
            doc = cmd_catalog(n);
        }
        emit(doc, format, out_dir, out, err);
        return doc.exit_code;
    } catch (const ResourceLimitError &e) {
        err << "error: " << e.what() << '\n';
        return kExitResourceLimit;
    } catch (const std::invalid_argument &e) {
        // InvalidParameterError, DimensionError, InvalidDirectionError, SchemaError.
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace asbell::cli
