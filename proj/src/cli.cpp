#include "clonematch/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "clonematch/instance_io.hpp"
#include "clonematch/oracle.hpp"
#include "clonematch/report_io.hpp"

namespace clonematch {

namespace fs = std::filesystem;

const char* format_name(OutputFormat f) {
    switch (f) {
    case OutputFormat::text: return "text";
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    }
    return "?";
}

Invocation parse_invocation(const std::vector<std::string>& args) {
    Invocation inv;
    std::string weights_spec, format = "text";

    CLI::App app{"metric based clone detector built on stable matching"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd, bool with_algo, bool with_thresholds) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--profile", inv.profile, "language profile")
            ->check(CLI::IsMember({"java"}));
        cmd->add_option("--out", inv.out_path, "write output to this file instead of stdout");
        if (with_thresholds) {
            cmd->add_option("--weights", weights_spec,
                            "per-metric weights, e.g. loc=1,nbp=2 (missing keys stay 1)");
            cmd->add_option("--love-threshold", inv.love_threshold,
                            "keep pairs whose love degree reaches this value")
                ->check(CLI::Range(0.0, 1.0));
        }
        if (with_algo && with_thresholds)
            cmd->add_option("--similarity-threshold", inv.similarity_threshold,
                            "keep pairs whose similarity reaches this value")
                ->check(CLI::Range(0.0, 1.0));
    };

    auto* detect_cmd =
        app.add_subcommand("detect", "compare two corpora and report clone pairs");
    detect_cmd->add_option("paths", inv.paths, "two files or directories")
        ->expected(2);
    add_common(detect_cmd, true, true);
    detect_cmd->add_option("--algorithm", inv.algorithm, "matching algorithm")
        ->check(CLI::IsMember({"dma", "gs-a", "gs-b"}));

    auto* metrics_cmd =
        app.add_subcommand("metrics", "print one metric record per method");
    metrics_cmd->add_option("path", inv.paths, "file or directory")->expected(1);
    add_common(metrics_cmd, false, false);

    auto* match_cmd =
        app.add_subcommand("match", "run a matching algorithm on an instance file");
    match_cmd->add_option("path", inv.paths, "JSON instance file")->expected(1);
    match_cmd->add_option("--algo", inv.algorithm, "matching algorithm")
        ->check(CLI::IsMember({"gs-a", "gs-b", "extended", "hr", "dma", "enumerate"}));
    match_cmd->add_option("--love-threshold", inv.love_threshold,
                          "score cutoff for --algo dma")
        ->check(CLI::Range(0.0, 1.0));
    match_cmd->add_option("--out", inv.out_path, "write output to this file instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        inv.help_requested = true;
        inv.help_text = app.help();
        return inv;
    } catch (const CLI::ParseError& e) {
        fail(Errc::usage, e.what());
    }

    if (app.got_subcommand(detect_cmd)) inv.command = Invocation::Command::detect;
    if (app.got_subcommand(metrics_cmd)) inv.command = Invocation::Command::metrics;
    if (app.got_subcommand(match_cmd)) inv.command = Invocation::Command::match;

    if (inv.command != Invocation::Command::match && inv.algorithm != "dma" &&
        inv.algorithm != "gs-a" && inv.algorithm != "gs-b")
        fail(Errc::usage, "algorithm " + inv.algorithm + " is match-only");

    inv.weights = parse_weights(weights_spec);
    if (format == "json") inv.format = OutputFormat::json;
    else if (format == "csv") inv.format = OutputFormat::csv;
    else inv.format = OutputFormat::text;
    return inv;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Errc::input_unreadable, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<SourceFile> collect_sources(const std::string& path,
                                        const LanguageProfile& profile) {
    std::error_code ec;
    if (fs::is_regular_file(path, ec))
        return {{path, read_file(path)}};
    if (fs::is_directory(path, ec)) {
        std::vector<std::string> found;
        for (const auto& entry : fs::recursive_directory_iterator(path)) {
            if (!entry.is_regular_file()) continue;
            std::string p = entry.path().string();
            if (profile.matches_extension(p)) found.push_back(p);
        }
        std::sort(found.begin(), found.end());
        std::vector<SourceFile> files;
        for (const auto& p : found) files.push_back({p, read_file(p)});
        return files;
    }
    fail(Errc::input_unreadable, path + " is neither a file nor a directory");
}

LanguageProfile profile_by_name(const std::string& name) {
    if (name == "java") return LanguageProfile::java();
    fail(Errc::usage, "unknown profile " + name);
}

MatchAlgorithm detect_algorithm(const std::string& name) {
    if (name == "dma") return MatchAlgorithm::dma;
    if (name == "gs-a") return MatchAlgorithm::gs_a;
    if (name == "gs-b") return MatchAlgorithm::gs_b;
    fail(Errc::usage, "unknown algorithm " + name);
}

void deliver(const Invocation& inv, const std::string& payload, std::ostream& out) {
    if (inv.out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(inv.out_path, std::ios::binary);
    if (!file) fail(Errc::input_unreadable, "cannot write " + inv.out_path);
    file << payload;
}

int run_detect(const Invocation& inv, std::ostream& out, std::ostream& err) {
    DetectorConfig cfg;
    cfg.weights = inv.weights;
    cfg.love_threshold = inv.love_threshold;
    cfg.similarity_threshold = inv.similarity_threshold;
    cfg.profile = profile_by_name(inv.profile);
    cfg.algorithm = detect_algorithm(inv.algorithm);

    auto side_a = collect_sources(inv.paths[0], cfg.profile);
    auto side_b = collect_sources(inv.paths[1], cfg.profile);
    CloneReport report = detect(side_a, side_b, cfg);

    for (const auto& d : report.diagnostics)
        err << "warning: skipped " << d.file << ": " << d.message << "\n";

    std::string payload;
    switch (inv.format) {
    case OutputFormat::json:
        payload = report_to_json(report, {{"format", format_name(inv.format)},
                                          {"out", inv.out_path}});
        break;
    case OutputFormat::csv:
        payload = report_to_csv(report);
        break;
    case OutputFormat::text:
        payload = report_to_text(report);
        break;
    }
    deliver(inv, payload, out);
    return 0;
}

int run_metrics(const Invocation& inv, std::ostream& out, std::ostream& err) {
    LanguageProfile profile = profile_by_name(inv.profile);
    auto files = collect_sources(inv.paths[0], profile);
    std::vector<Diagnostic> diagnostics;
    auto records = measure_corpus(files, profile, diagnostics);
    for (const auto& d : diagnostics)
        err << "warning: skipped " << d.file << ": " << d.message << "\n";
    if (records.empty())
        fail(Errc::no_methods_found, "no methods found under " + inv.paths[0]);

    std::string payload;
    switch (inv.format) {
    case OutputFormat::json:
        payload = metrics_to_json(records);
        break;
    case OutputFormat::csv:
        payload = metrics_to_csv(records);
        break;
    case OutputFormat::text:
        payload = metrics_to_text(records);
        break;
    }
    deliver(inv, payload, out);
    return 0;
}

int run_match(const Invocation& inv, std::ostream& out) {
    MatchingInstance inst = parse_instance(read_file(inv.paths[0]));
    const bool is_hr = inst.kind == MatchingInstance::Kind::hr;
    std::string payload;

    if (inv.algorithm == "hr") {
        if (!is_hr) fail(Errc::usage, "--algo hr needs a residents/hospitals instance");
        payload = format_hr_matching(inst.hr, hospital_oriented_match(inst.hr)) + "\n";
    } else if (inv.algorithm == "enumerate") {
        if (is_hr) {
            for (const auto& m : enumerate_stable_hr(inst.hr).matchings)
                payload += format_hr_matching(inst.hr, m) + "\n";
        } else {
            for (const auto& m : enumerate_stable_sm(inst.sm).matchings)
                payload += format_matching(inst.sm, m) + "\n";
        }
    } else {
        if (is_hr)
            fail(Errc::usage, "--algo " + inv.algorithm + " needs a sideA/sideB instance");
        if (inv.algorithm == "gs-a") {
            payload = format_matching(inst.sm, gs_propose(inst.sm, Side::A)) + "\n";
        } else if (inv.algorithm == "gs-b") {
            payload = format_matching(inst.sm, gs_propose(inst.sm, Side::B)) + "\n";
        } else if (inv.algorithm == "extended") {
            payload = format_matching(inst.sm, extended_gs(inst.sm, Side::A).matching) + "\n";
        } else { // dma
            DualMatching dm = dual_multi_allocate(inst.sm);
            payload = "M1: " + format_matching(inst.sm, dm.m1) + "\n";
            payload += "M2: " + format_matching(inst.sm, dm.m2) + "\n";
            for (const auto& sp : choosy_filter(inst.sm, dm, inv.love_threshold)) {
                char buf[128];
                std::snprintf(buf, sizeof buf, " love=%.6f contrast=%.6f\n", sp.love,
                              sp.contrast);
                payload += "(" + inst.sm.labels_a[static_cast<size_t>(sp.a)] + "," +
                           inst.sm.labels_b[static_cast<size_t>(sp.b)] + ")" + buf;
            }
        }
    }
    deliver(inv, payload, out);
    return 0;
}

} // namespace

int run(const Invocation& inv, std::ostream& out, std::ostream& err) {
    if (inv.help_requested) {
        out << inv.help_text;
        return 0;
    }
    try {
        switch (inv.command) {
        case Invocation::Command::detect: return run_detect(inv, out, err);
        case Invocation::Command::metrics: return run_metrics(inv, out, err);
        case Invocation::Command::match: return run_match(inv, out);
        }
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.code()) {
        case Errc::usage:
        case Errc::bad_weights:
            return 1;
        case Errc::no_pointwise_optimum:
        case Errc::pair_not_ranked:
            return 3;
        default:
            return 2;
        }
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        Invocation inv = parse_invocation(args);
        return run(inv, std::cout, std::cerr);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == Errc::usage || e.code() == Errc::bad_weights ? 1 : 2;
    }
}

} // namespace clonematch
