#include "spreadlab/cli.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <sstream>

#include <CLI11.hpp>

#include "spreadlab/certificates.hpp"
#include "spreadlab/extremal.hpp"
#include "spreadlab/io.hpp"
#include "spreadlab/plot.hpp"
#include "spreadlab/report.hpp"
#include "spreadlab/scan.hpp"
#include "spreadlab/spread.hpp"

namespace spreadlab {

int exit_code_for(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::ParseError: return exit_code::kParse;
    case ErrorCode::NonConvergence:
    case ErrorCode::PerronAnomaly: return exit_code::kNonConvergence;
    case ErrorCode::IoError: return exit_code::kIo;
    case ErrorCode::CheckFailed: return exit_code::kCertificateFailure;
    default: return exit_code::kPrecondition;
    }
}

namespace {

struct Options {
    std::string path;
    std::string base_path;
    std::string delta_path;
    std::string which = "all";
    std::size_t n = 0;
    std::string space = "all-01";
    std::string mode = "exhaustive";
    std::uint64_t seed = 0;
    std::size_t restarts = 50;
    std::size_t threads = 0;
    std::string eta = "0";
    std::size_t resolution = 1000;
    std::string emit = "csv";
    std::string out;
    std::string family;
    bool timing = false;
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int cmd_spread(const Options& o, RunReport& rep) {
    rep.inputs["path"] = o.path;
    const DenseMatrix a = read_matrix_file(o.path);
    const Spectrum spec = eigenvalues(a);
    rep.results["n"] = a.order();
    rep.results["spread"] = to_json(spread(a, spec));
    rep.results["spectrum"] = to_json(spec);
    return exit_code::kSuccess;
}

int cmd_certify(const Options& o, RunReport& rep) {
    rep.inputs["path"] = o.path;
    rep.inputs["which"] = o.which;
    const DenseMatrix a = read_matrix_file(o.path);
    const std::vector<std::string> names = o.which == "all" ? certificate_names() : split_list(o.which);
    if (names.empty()) {
        throw Error(ErrorCode::InvalidArgument, "no certificates selected");
    }
    Json certs = Json::array();
    bool all_passed = true;
    for (const auto& name : names) {
        for (const auto& c : certify(a, name)) {
            all_passed = all_passed && c.passed;
            Json j = to_json(c);
            j["family"] = name;
            certs.push_back(std::move(j));
        }
    }
    rep.results["n"] = a.order();
    rep.results["all_passed"] = all_passed;
    rep.results["certificates"] = std::move(certs);
    return all_passed ? exit_code::kSuccess : exit_code::kCertificateFailure;
}

int cmd_search(const Options& o, RunReport& rep) {
    rep.inputs["n"] = o.n;
    rep.inputs["space"] = o.space;
    rep.inputs["mode"] = o.mode;
    const SearchSpace space = parse_search_space(o.space);
    SearchReport report;
    if (o.mode == "exhaustive") {
        report = exhaustive_search(o.n, space, o.threads);
    } else if (o.mode == "local") {
        rep.inputs["seed"] = o.seed;
        rep.inputs["restarts"] = o.restarts;
        if (space == SearchSpace::WeightedBox) {
            throw Error(ErrorCode::InvalidArgument, "local search takes all-01 or zero-diag-01 as its space");
        }
        report = local_search(o.n, o.seed, o.restarts, space == SearchSpace::ZeroDiag01, o.threads);
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown mode '" + o.mode + "'");
    }
    rep.results["report"] = to_json(report);
    const auto cert = main_bound_certificate(report.best_matrix);
    rep.results["main_bound"] = to_json(cert);
    return cert.passed ? exit_code::kSuccess : exit_code::kCertificateFailure;
}

int cmd_scan(const Options& o, RunReport& rep) {
    const double eta = parse_real(o.eta);
    rep.inputs["eta"] = eta;
    rep.inputs["resolution"] = o.resolution;
    rep.inputs["emit"] = o.emit;
    rep.inputs["out"] = o.out;
    if (o.resolution < 1000) {
        throw Error(ErrorCode::InvalidArgument, "resolution must be at least 1000");
    }
    if (eta < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "eta must be non-negative");
    }
    if (o.out.empty()) {
        throw Error(ErrorCode::InvalidArgument, "--out is required");
    }
    const double threshold = 21.0 / 16.0;
    const ScanTable table = f_max(eta, o.resolution);
    const IntervalSet sublevel = f_sublevel(threshold, eta, o.resolution);
    if (o.emit == "csv") {
        write_text_file(o.out, render_csv(table));
    } else if (o.emit == "svg") {
        const ScanTable window = f_scan(eta, o.resolution, kFigureLo, kFigureHi);
        write_text_file(o.out, render_svg(window, threshold, sublevel));
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown emit format '" + o.emit + "'");
    }
    rep.results["table"] = to_json(table);
    rep.results["threshold"] = threshold;
    rep.results["sublevel"] = to_json(sublevel);
    rep.results["below_threshold"] = table.max_value < threshold;
    return exit_code::kSuccess;
}

int cmd_construct(const Options& o, RunReport& rep) {
    rep.inputs["family"] = o.family;
    rep.inputs["n"] = o.n;
    rep.inputs["out"] = o.out;
    if (o.out.empty()) {
        throw Error(ErrorCode::InvalidArgument, "--out is required");
    }
    auto describe = [](const DenseMatrix& a, const std::string& path) {
        Json j;
        j["path"] = path;
        j["n"] = a.order();
        j["spread"] = spread(a).value;
        return j;
    };
    if (o.family == "kron-extremal") {
        const DenseMatrix a = construct_kron_extremal(o.n);
        write_matrix_file(o.out, a);
        Json j = describe(a, o.out);
        j["expected_spread"] = 2.0 * static_cast<double>(o.n) / std::sqrt(3.0);
        rep.results["matrices"] = Json::array({j});
    } else if (o.family == "join") {
        const DenseMatrix a = construct_join(o.n);
        write_matrix_file(o.out, a);
        Json j = describe(a, o.out);
        j["clique"] = 2 * o.n / 3;
        j["independent"] = o.n - 2 * o.n / 3;
        if (o.n > 1) j["spread_lower_bound"] = (2.0 * static_cast<double>(o.n) - 1.0) / std::sqrt(3.0);
        rep.results["matrices"] = Json::array({j});
    } else if (o.family == "catalog") {
        std::error_code ec;
        std::filesystem::create_directories(o.out, ec);
        if (ec) {
            throw Error(ErrorCode::IoError, "cannot create directory '" + o.out + "'");
        }
        Json list = Json::array();
        for (const auto& entry : small_spread_catalog()) {
            const auto path = (std::filesystem::path(o.out) / ("catalog_" + entry.label + ".txt")).string();
            write_matrix_file(path, entry.matrix);
            Json j = describe(entry.matrix, path);
            j["expected_spread"] = entry.expected_spread;
            list.push_back(std::move(j));
        }
        rep.results["matrices"] = std::move(list);
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown family '" + o.family + "'");
    }
    return exit_code::kSuccess;
}

int cmd_perturb(const Options& o, RunReport& rep) {
    rep.inputs["base"] = o.base_path;
    rep.inputs["perturbation"] = o.delta_path;
    const DenseMatrix base = read_matrix_file(o.base_path);
    const DenseMatrix delta = read_matrix_file(o.delta_path);
    const auto cert = perturbation_bound(base, delta);
    rep.results["certificate"] = to_json(cert);
    return cert.passed ? exit_code::kSuccess : exit_code::kCertificateFailure;
}

} // namespace

CliOutcome run_cli(const std::vector<std::string>& args) {
    Options o;
    CLI::App app{"Eigenvalue spread of non-negative matrices: spectra, bound certificates, extremal search"};
    app.name("spreadlab");
    app.require_subcommand(1, 1);
    app.add_flag("--timing", o.timing, "Record wall-clock time in timing_ms (otherwise 0)");

    auto* spread_cmd = app.add_subcommand("spread", "Spread, attaining pair and Perron eigenvalue of a matrix file");
    spread_cmd->add_option("path", o.path, "Matrix file")->required();

    auto* certify_cmd = app.add_subcommand("certify", "Check bound certificates on a matrix file");
    certify_cmd->add_option("path", o.path, "Matrix file")->required();
    certify_cmd->add_option("--which", o.which, "Comma-separated certificate names or 'all'");

    auto* search_cmd = app.add_subcommand("search", "Exhaustive or local search for the maximum spread");
    search_cmd->add_option("-n,--n", o.n, "Matrix order")->required();
    search_cmd->add_option("--space", o.space, "all-01 | zero-diag-01");
    search_cmd->add_option("--mode", o.mode, "exhaustive | local");
    search_cmd->add_option("--seed", o.seed, "Seed for local search");
    search_cmd->add_option("--restarts", o.restarts, "Local search restarts");
    search_cmd->add_option("--threads", o.threads, "Worker threads (default: SPREADLAB_THREADS or all cores)");

    auto* scan_cmd = app.add_subcommand("scan", "Tabulate f(x, eta) and write CSV or SVG");
    scan_cmd->add_option("--eta", o.eta, "eta >= 0, decimal or ratio such as 1/200");
    scan_cmd->add_option("--resolution", o.resolution, "Grid points (>= 1000)");
    scan_cmd->add_option("--emit", o.emit, "csv | svg");
    scan_cmd->add_option("--out", o.out, "Output file")->required();

    auto* construct_cmd = app.add_subcommand("construct", "Write an extremal matrix family to disk");
    construct_cmd->add_option("--family", o.family, "kron-extremal | join | catalog")->required();
    construct_cmd->add_option("-n,--n", o.n, "Matrix order (kron-extremal, join)");
    construct_cmd->add_option("--out", o.out, "Output file (directory for catalog)")->required();

    auto* perturb_cmd = app.add_subcommand("perturb", "Eigenvalue perturbation certificate for base + E");
    perturb_cmd->add_option("base", o.base_path, "Base matrix file")->required();
    perturb_cmd->add_option("perturbation", o.delta_path, "Perturbation matrix file")->required();

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("spreadlab");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_storage) argv.push_back(s.c_str());

    CliOutcome outcome;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = app.exit(e, out, err);
        outcome.message = out.str() + err.str();
        outcome.exit_code = code == 0 ? exit_code::kSuccess : exit_code::kPrecondition;
        return outcome;
    }

    RunReport rep;
    const auto start = std::chrono::steady_clock::now();
    try {
        int code = exit_code::kSuccess;
        if (spread_cmd->parsed()) {
            rep.command = "spread";
            code = cmd_spread(o, rep);
        } else if (certify_cmd->parsed()) {
            rep.command = "certify";
            code = cmd_certify(o, rep);
        } else if (search_cmd->parsed()) {
            rep.command = "search";
            code = cmd_search(o, rep);
        } else if (scan_cmd->parsed()) {
            rep.command = "scan";
            code = cmd_scan(o, rep);
        } else if (construct_cmd->parsed()) {
            rep.command = "construct";
            code = cmd_construct(o, rep);
        } else if (perturb_cmd->parsed()) {
            rep.command = "perturb";
            code = cmd_perturb(o, rep);
        }
        if (o.timing) {
            rep.timing_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }
        outcome.exit_code = code;
        outcome.report = serialize(rep);
    } catch (const Error& e) {
        outcome.exit_code = exit_code_for(e.code());
        outcome.message = std::string("spreadlab ") + rep.command + ": " + e.what() + "\n";
    }
    return outcome;
}

} // namespace spreadlab
