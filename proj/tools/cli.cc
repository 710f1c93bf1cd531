// Copyright 2026 The Tripartite Authors
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

#include "cli.h"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "tripartite/io.h"
#include "tripartite/lhv.h"
#include "tripartite/optimizer.h"
#include "tripartite/shots.h"

#ifndef TRIPARTITE_DEFAULT_MANIFEST
#define TRIPARTITE_DEFAULT_MANIFEST "reproduce_manifest.json"
#endif

namespace tripartite::cli {

namespace {

using nlohmann::json;

constexpr double kDeg = std::numbers::pi / 180.0;

// What a command produced, in each output format.
struct Rendered {
    json as_json;
    std::string as_csv;
    std::string as_table;
    int exit_code = kExitOk;
};

std::string fixed(double x, int digits = 6) {
    std::ostringstream ss;
    ss << std::fixed << std::setprecision(digits) << x;
    return ss.str();
}

std::string pad(const std::string &s, std::size_t width) {
    // Column widths count code points so the degree sign lines up.
    std::size_t cps = 0;
    for (unsigned char c : s) {
        cps += (c & 0xC0) != 0x80;
    }
    return cps >= width ? s + " " : s + std::string(width - cps, ' ');
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return out + "\"";
}

double to_radians(const RunConfig &cfg, double x) { return cfg.radians ? x : x * kDeg; }

DensityMatrix load_state(const RunConfig &cfg) {
    DensityMatrix rho = maximally_mixed();
    if (cfg.state == "w") {
        rho = pure_to_density(make_w());
    } else if (cfg.state == "ghz-hv") {
        rho = pure_to_density(make_ghz(GhzBasis::kLinearHV));
    } else if (cfg.state == "ghz-rl") {
        rho = pure_to_density(make_ghz(GhzBasis::kCircularRL));
    } else if (cfg.state == "file") {
        if (cfg.state_file.empty()) {
            throw UsageError("--state file requires --state-file PATH");
        }
        std::ifstream in(cfg.state_file);
        if (!in) {
            throw UsageError("cannot open state file '" + cfg.state_file + "'");
        }
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception &e) {
            throw UsageError("state file is not valid JSON: " + std::string(e.what()));
        }
        try {
            rho = io::density_from_json(j);
        } catch (const StateError &e) {
            throw UsageError(std::string("invalid state file: ") + e.what());
        }
    } else {
        throw UsageError("unknown state '" + cfg.state + "'");
    }
    if (cfg.visibility < 1.0) {
        rho = mix_with_white_noise(rho, Visibility(cfg.visibility));
    }
    return rho;
}

SettingsPairs parse_pairs(const RunConfig &cfg) {
    std::vector<double> v = cfg.pairs;
    if (v.size() == 2) {
        v = {v[0], v[1], v[0], v[1], v[0], v[1]};
    }
    if (v.size() != 6) {
        throw UsageError("--pairs takes 2 values (phi,phi' for every party) or 6 (a,a',b,b',c,c')");
    }
    PhaseVector p;
    for (int n = 0; n < 6; ++n) {
        p[n] = to_radians(cfg, v[n]);
    }
    return from_phases(p);
}

Functional functional_or(const RunConfig &cfg, Functional fallback) {
    if (cfg.functional.empty()) {
        return fallback;
    }
    return parse_functional(cfg.functional);
}

std::string settings_table(const SettingsPairs &pairs) {
    std::ostringstream ss;
    const char *names[] = {"a", "b", "c"};
    for (int party = 0; party < kNumParties; ++party) {
        ss << "  party " << names[party] << ": phi = " << fixed(pairs[party].phi.degrees(), 4)
           << " deg, phi' = " << fixed(pairs[party].phi_prime.degrees(), 4) << " deg\n";
    }
    return ss.str();
}

std::string tensor_table(const CorrelationTensor &t, const std::array<double, kDim> *errors = nullptr) {
    std::ostringstream ss;
    ss << "  i j k  E\n";
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                ss << "  " << i << ' ' << j << ' ' << k << "  " << std::setw(10) << fixed(t(i, j, k));
                if (errors != nullptr) {
                    ss << " +- " << fixed((*errors)[CorrelationTensor::index(i, j, k)]);
                }
                ss << '\n';
            }
        }
    }
    return ss.str();
}

std::string report_line(const InequalityReport &r) {
    std::ostringstream ss;
    ss << pad(std::string(functional_name(r.functional)), 11) << "value = " << fixed(r.value) << "  bound = " << r.bound
       << "  " << (r.violated ? "VIOLATED" : "not violated") << "  (" << classification_name(r.classification) << ")";
    if (r.degenerate) {
        ss << "  [degenerate settings]";
    }
    return ss.str();
}

// ---- reproduce -------------------------------------------------------------

double compute_row(const std::string &id) {
    static const DensityMatrix w = pure_to_density(make_w());
    const auto criticized = uniform_pairs_degrees(90.0, 0.0);
    const auto optimal = uniform_pairs_degrees(35.264, 144.736);
    if (id == "mermin_w_criticized") {
        return mermin_value(correlation_tensor(w, criticized));
    }
    if (id == "svetlichny_w_criticized") {
        return svetlichny_value(correlation_tensor(w, criticized));
    }
    if (id == "svetlichny_w_optimal") {
        return svetlichny_value(correlation_tensor(w, optimal));
    }
    if (id == "optimize_w_svetlichny") {
        return optimize(w, Functional::kSvetlichny).best_value;
    }
    if (id == "lhv_mermin_local") {
        return lhv_max(Functional::kMermin, Model::kLocal).max_value;
    }
    if (id == "lhv_mermin_hybrid") {
        return lhv_max(Functional::kMermin, Model::kHybrid).max_value;
    }
    if (id == "lhv_svetlichny_local") {
        return lhv_max(Functional::kSvetlichny, Model::kLocal).max_value;
    }
    if (id == "lhv_svetlichny_hybrid") {
        return lhv_max(Functional::kSvetlichny, Model::kHybrid).max_value;
    }
    if (id == "critical_visibility_w_optimal") {
        return critical_visibility(w, Functional::kSvetlichny, optimal);
    }
    throw UsageError("unknown manifest row id '" + id + "'");
}

Rendered cmd_reproduce(const RunConfig &cfg) {
    const std::string path = cfg.manifest.empty() ? default_manifest_path() : cfg.manifest;
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open manifest '" + path + "'");
    }
    json manifest;
    try {
        manifest = json::parse(in);
    } catch (const json::exception &e) {
        throw UsageError("manifest is not valid JSON: " + std::string(e.what()));
    }
    auto rows = reproduce(manifest);

    Rendered r;
    bool all_pass = true;
    json jrows = json::array();
    std::ostringstream csv, table;
    csv << "id,label,value,expected,tolerance,status\n";
    table << pad("row", 44) << pad("value", 14) << pad("expected", 12) << pad("tolerance", 11) << "status\n";
    for (const auto &row : rows) {
        all_pass = all_pass && row.pass;
        jrows.push_back({{"id", row.id},
                         {"label", row.label},
                         {"value", row.value},
                         {"expected", row.expected},
                         {"tolerance", row.tolerance},
                         {"pass", row.pass}});
        csv << row.id << ',' << csv_field(row.label) << ',' << io::format_double(row.value) << ','
            << io::format_double(row.expected) << ',' << io::format_double(row.tolerance) << ','
            << (row.pass ? "pass" : "FAIL") << '\n';
        std::ostringstream tol;
        tol << row.tolerance;
        table << pad(row.label, 44) << pad(fixed(row.value), 14) << pad(io::format_double(row.expected), 12)
              << pad(tol.str(), 11) << (row.pass ? "pass" : "FAIL") << '\n';
    }
    table << (all_pass ? "all rows pass\n" : "SOME ROWS FAILED\n");
    r.as_json = {{"rows", jrows}, {"all_pass", all_pass}};
    r.as_csv = csv.str();
    r.as_table = table.str();
    r.exit_code = all_pass ? kExitOk : kExitMismatch;
    return r;
}

// ---- optimize --------------------------------------------------------------

Rendered cmd_optimize(const RunConfig &cfg) {
    auto rho = load_state(cfg);
    auto functional = functional_or(cfg, Functional::kSvetlichny);
    OptimizationConfig oc;
    oc.grid_step = to_radians(cfg, cfg.grid_step);
    oc.refine_tolerance = cfg.tolerance;
    oc.max_refine_iterations = cfg.max_iterations;
    oc.seed = cfg.seed;
    oc.random_restarts = cfg.restarts;
    try {
        oc.validate();
    } catch (const ConfigError &e) {
        throw UsageError(e.what());
    }
    auto result = optimize(rho, functional, oc);
    auto report = classify(result.best_value, functional, any_degenerate(result.best_settings));

    Rendered r;
    r.as_json = io::to_json(result, functional, cfg.trace);
    r.as_json["report"] = io::to_json(report);
    r.as_csv = io::trace_to_csv(result);
    std::ostringstream t;
    t << "maximum |" << functional_name(functional) << "| = " << fixed(result.best_value) << " (" << result.restarts_used
      << " refinement runs)\n"
      << settings_table(result.best_settings) << report_line(report) << '\n';
    r.as_table = t.str();
    return r;
}

// ---- lhv-scan --------------------------------------------------------------

Rendered cmd_lhv_scan(const RunConfig &cfg) {
    std::vector<Functional> functionals{Functional::kMermin, Functional::kSvetlichny};
    std::vector<Model> models{Model::kLocal, Model::kHybrid};
    if (!cfg.functional.empty()) {
        functionals = {parse_functional(cfg.functional)};
    }
    if (!cfg.model.empty()) {
        models = {parse_model(cfg.model)};
    }
    std::vector<LhvMaxResult> results;
    for (auto f : functionals) {
        for (auto m : models) {
            results.push_back(lhv_max(f, m));
        }
    }

    Rendered r;
    std::ostringstream csv, table;
    csv << "functional,model,max,witness_value,strategies_enumerated,witness_type,witness_partition,witness_index\n";
    table << pad("functional", 12) << pad("model", 8) << pad("max", 6) << pad("strategies", 12) << "witness\n";
    json all = json::array();
    for (const auto &res : results) {
        json j = io::to_json(res);
        all.push_back(j);
        const json &w = j["witness"];
        std::string partition = w.contains("partition") ? w["partition"].get<std::string>() : "";
        csv << functional_name(res.functional) << ',' << model_name(res.model) << ',' << io::format_double(res.max_value)
            << ',' << io::format_double(res.witness_value) << ',' << res.strategies_enumerated << ','
            << w["type"].get<std::string>() << ',' << csv_field(partition) << ',' << w["index"].get<int>() << '\n';
        table << pad(std::string(functional_name(res.functional)), 12) << pad(std::string(model_name(res.model)), 8)
              << pad(io::format_double(res.max_value), 6) << pad(std::to_string(res.strategies_enumerated), 12)
              << w["type"].get<std::string>() << (partition.empty() ? "" : " " + partition) << " #"
              << w["index"].get<int>() << " (value " << io::format_double(res.witness_value) << ")\n";
    }
    r.as_json = all.size() == 1 ? all[0] : json{{"results", all}};
    r.as_csv = csv.str();
    r.as_table = table.str();
    return r;
}

// ---- sample ----------------------------------------------------------------

Rendered cmd_sample(const RunConfig &cfg) {
    if (cfg.pairs.empty()) {
        throw UsageError("sample requires --pairs");
    }
    auto rho = load_state(cfg);
    auto pairs = parse_pairs(cfg);
    auto functional = functional_or(cfg, Functional::kSvetlichny);
    auto counts = sample_counts(rho, pairs, cfg.shots, cfg.seed);
    auto estimate = estimate_tensor(counts);
    auto report = estimate_inequality(estimate, functional, any_degenerate(pairs));

    Rendered r;
    r.as_json = {{"settings", io::to_json(pairs)},
                 {"seed", cfg.seed},
                 {"counts", io::to_json(counts)},
                 {"tensor", io::to_json(estimate.tensor)},
                 {"tensor_std_error", estimate.std_error},
                 {"report", io::to_json(report)}};
    r.as_csv = io::to_csv(counts);
    std::ostringstream t;
    t << cfg.shots << " shots per setting, seed " << cfg.seed << '\n'
      << settings_table(pairs) << tensor_table(estimate.tensor, &estimate.std_error) << report_line(report.report)
      << "\n  std_error = " << fixed(report.std_error) << ", z_score = "
      << (std::isfinite(report.z_score) ? fixed(report.z_score, 3) : std::string(report.z_score > 0 ? "+inf" : "-inf"))
      << '\n';
    r.as_table = t.str();
    return r;
}

// ---- correlations ----------------------------------------------------------

Rendered cmd_correlations(const RunConfig &cfg) {
    if (cfg.pairs.empty() == cfg.angles.empty()) {
        throw UsageError("correlations takes exactly one of --pairs or --angles");
    }
    auto rho = load_state(cfg);
    Rendered r;
    if (!cfg.angles.empty()) {
        if (cfg.angles.size() != 3) {
            throw UsageError("--angles takes 3 values (a,b,c)");
        }
        Settings3 s{AnalyzerSetting(to_radians(cfg, cfg.angles[0])), AnalyzerSetting(to_radians(cfg, cfg.angles[1])),
                    AnalyzerSetting(to_radians(cfg, cfg.angles[2]))};
        double e = correlation(rho, s);
        auto d = outcome_distribution(rho, s);
        json jset = json::array();
        for (const auto &a : s) {
            jset.push_back({{"deg", a.degrees()}, {"rad", a.radians()}});
        }
        r.as_json = {{"settings", jset}, {"correlation", e}, {"distribution", io::to_json(d)}};
        std::ostringstream csv, t;
        csv << "outcome,probability\n";
        t << "E = " << fixed(e) << '\n';
        for (int o = 0; o < kDim; ++o) {
            csv << OutcomeDistribution::label(o) << ',' << io::format_double(d[o]) << '\n';
            t << "  P(" << OutcomeDistribution::label(o) << ") = " << fixed(d[o]) << '\n';
        }
        r.as_csv = csv.str();
        r.as_table = t.str();
        return r;
    }
    auto pairs = parse_pairs(cfg);
    auto tensor = correlation_tensor(rho, pairs);
    bool degenerate = any_degenerate(pairs);
    auto mermin = classify(mermin_value(tensor), Functional::kMermin, degenerate);
    auto svet = classify(svetlichny_value(tensor), Functional::kSvetlichny, degenerate);
    r.as_json = {{"settings", io::to_json(pairs)},
                 {"tensor", io::to_json(tensor)},
                 {"mermin", io::to_json(mermin)},
                 {"svetlichny", io::to_json(svet)}};
    r.as_csv = io::to_csv(tensor);
    r.as_table = settings_table(pairs) + tensor_table(tensor) + report_line(mermin) + '\n' + report_line(svet) + '\n';
    return r;
}

void add_state_options(CLI::App *sub, RunConfig &cfg) {
    sub->add_option("--state", cfg.state, "w | ghz-hv | ghz-rl | file")
        ->check(CLI::IsMember({"w", "ghz-hv", "ghz-rl", "file"}));
    sub->add_option("--state-file", cfg.state_file, "JSON state (8 [re,im] pairs or an 8x8 matrix)");
    sub->add_option("--visibility", cfg.visibility, "white-noise visibility in [0,1]")->check(CLI::Range(0.0, 1.0));
}

void add_common_options(CLI::App *sub, RunConfig &cfg) {
    sub->add_option("--format", cfg.format, "json | csv | table")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"json", Format::kJson}, {"csv", Format::kCsv}, {"table", Format::kTable}},
            CLI::ignore_case));
    sub->add_option("--output,-o", cfg.output, "write output to this file instead of stdout");
    sub->add_flag("--radians", cfg.radians, "angles are given in radians instead of degrees");
}

void print_error(std::ostream &err, int code, const std::string &kind, const std::string &message) {
    err << json{{"error", {{"exit_code", code}, {"kind", kind}, {"message", message}}}}.dump() << '\n';
}

}  // namespace

std::string default_manifest_path() {
    if (const char *env = std::getenv("TRIPARTITE_MANIFEST")) {
        return env;
    }
    return TRIPARTITE_DEFAULT_MANIFEST;
}

std::vector<ReproduceRow> reproduce(const json &manifest) {
    std::vector<ReproduceRow> out;
    try {
        for (const auto &row : manifest.at("rows")) {
            ReproduceRow r;
            r.id = row.at("id").get<std::string>();
            r.label = row.at("label").get<std::string>();
            r.expected = row.at("expected").get<double>();
            r.tolerance = row.at("tolerance").get<double>();
            r.value = compute_row(r.id);
            r.pass = std::abs(r.value - r.expected) <= r.tolerance;
            out.push_back(std::move(r));
        }
    } catch (const json::exception &e) {
        throw UsageError("malformed manifest: " + std::string(e.what()));
    }
    return out;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"Quantum predictions and hidden-variable bounds for three-party Bell inequalities", "tripartite"};
    app.require_subcommand(1);

    auto *reproduce_cmd = app.add_subcommand("reproduce", "check the headline numbers against the manifest");
    reproduce_cmd->add_option("--manifest", cfg.manifest, "expected values and tolerances (JSON)");
    add_common_options(reproduce_cmd, cfg);

    auto *optimize_cmd = app.add_subcommand("optimize", "maximize |S_M| or |S_V| over the six analyzer phases");
    add_state_options(optimize_cmd, cfg);
    add_common_options(optimize_cmd, cfg);
    optimize_cmd->add_option("--functional", cfg.functional, "mermin | svetlichny (default svetlichny)");
    optimize_cmd->add_option("--grid-step", cfg.grid_step, "coarse grid spacing (default 15 degrees)");
    optimize_cmd->add_option("--tolerance", cfg.tolerance, "pattern-search step floor");
    optimize_cmd->add_option("--max-iterations", cfg.max_iterations, "per refinement run");
    optimize_cmd->add_option("--seed", cfg.seed, "seed for random restarts");
    optimize_cmd->add_option("--restarts", cfg.restarts, "random restarts in addition to grid seeds");
    optimize_cmd->add_flag("--trace", cfg.trace, "include the refinement trace in JSON output");

    auto *lhv_cmd = app.add_subcommand("lhv-scan", "exact maxima over deterministic local / hybrid strategies");
    lhv_cmd->add_option("--functional", cfg.functional, "mermin | svetlichny (default both)");
    lhv_cmd->add_option("--model", cfg.model, "local | hybrid (default both)");
    add_common_options(lhv_cmd, cfg);

    auto *sample_cmd = app.add_subcommand("sample", "simulate a finite-statistics run and estimate the inequality");
    add_state_options(sample_cmd, cfg);
    add_common_options(sample_cmd, cfg);
    sample_cmd->add_option("--pairs", cfg.pairs, "phi,phi' or a,a',b,b',c,c'")->delimiter(',')->required();
    sample_cmd->add_option("--shots", cfg.shots, "shots per setting choice (>= 1)")
        ->check(CLI::Range(std::uint64_t{1}, std::numeric_limits<std::uint64_t>::max()));
    sample_cmd->add_option("--seed", cfg.seed, "sampling seed");
    sample_cmd->add_option("--functional", cfg.functional, "mermin | svetlichny (default svetlichny)");

    auto *corr_cmd = app.add_subcommand("correlations", "exact correlations, tensors and inequality values");
    add_state_options(corr_cmd, cfg);
    add_common_options(corr_cmd, cfg);
    corr_cmd->add_option("--pairs", cfg.pairs, "phi,phi' or a,a',b,b',c,c'")->delimiter(',');
    corr_cmd->add_option("--angles", cfg.angles, "a,b,c for a single correlation")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        print_error(err, kExitUsage, "usage", e.what());
        return kExitUsage;
    }

    if (reproduce_cmd->parsed()) {
        cfg.command = Command::kReproduce;
    } else if (optimize_cmd->parsed()) {
        cfg.command = Command::kOptimize;
    } else if (lhv_cmd->parsed()) {
        cfg.command = Command::kLhvScan;
    } else if (sample_cmd->parsed()) {
        cfg.command = Command::kSample;
    } else {
        cfg.command = Command::kCorrelations;
    }

    Rendered result;
    try {
        switch (cfg.command) {
            case Command::kReproduce:
                result = cmd_reproduce(cfg);
                break;
            case Command::kOptimize:
                result = cmd_optimize(cfg);
                break;
            case Command::kLhvScan:
                result = cmd_lhv_scan(cfg);
                break;
            case Command::kSample:
                result = cmd_sample(cfg);
                break;
            case Command::kCorrelations:
                result = cmd_correlations(cfg);
                break;
        }
    } catch (const UsageError &e) {
        print_error(err, kExitUsage, "usage", e.what());
        return kExitUsage;
    } catch (const RangeError &e) {
        print_error(err, kExitUsage, "usage", e.what());
        return kExitUsage;
    } catch (const std::exception &e) {
        print_error(err, kExitMismatch, "computation", e.what());
        return kExitMismatch;
    }

    std::string text;
    switch (cfg.format) {
        case Format::kJson:
            text = result.as_json.dump(2) + "\n";
            break;
        case Format::kCsv:
            text = result.as_csv;
            break;
        case Format::kTable:
            text = result.as_table;
            break;
    }
    if (cfg.output.empty()) {
        out << text;
    } else {
        std::ofstream file(cfg.output, std::ios::binary);
        if (!file) {
            print_error(err, kExitUsage, "usage", "cannot open output file '" + cfg.output + "'");
            return kExitUsage;
        }
        file << text;
    }
    return result.exit_code;
}

}  // namespace tripartite::cli
