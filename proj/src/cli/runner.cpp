#include "tlagauge/cli/runner.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <Eigen/Core>
#include <boost/version.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "tlagauge/cli/experiments.hpp"

#ifndef TLAGAUGE_VERSION
#define TLAGAUGE_VERSION "0.0.0"
#endif
#ifndef TLAGAUGE_YAML_CPP_VERSION
#define TLAGAUGE_YAML_CPP_VERSION "unknown"
#endif

namespace tlagauge {

namespace {

namespace fs = std::filesystem;

void write_yaml(const fs::path& path, const YAML::Node& node)
{
    YAML::Emitter e;
    e.SetDoublePrecision(17);
    e << node;
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot open " + path.string() + " for writing");
    }
    out << e.c_str() << '\n';
}

YAML::Node versions()
{
    YAML::Node v;
    v["tlagauge"] = TLAGAUGE_VERSION;
    v["eigen"] = std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                 std::to_string(EIGEN_MINOR_VERSION);
    v["boost"] = std::to_string(BOOST_VERSION / 100000) + "." + std::to_string(BOOST_VERSION / 100 % 1000) + "." +
                 std::to_string(BOOST_VERSION % 100);
    v["yaml_cpp"] = TLAGAUGE_YAML_CPP_VERSION;
#ifdef __VERSION__
    v["compiler"] = __VERSION__;
#endif
#ifdef _OPENMP
    v["openmp"] = _OPENMP;
#endif
    return v;
}

std::string utc_now()
{
    const std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

void set_threads(int threads)
{
#ifdef _OPENMP
    if (threads > 0) {
        omp_set_num_threads(threads);
    }
#else
    (void)threads;
#endif
}

struct Options {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    int threads = 0;
    std::vector<std::string> overrides;
};

int do_list()
{
    for (const auto& [name, description] : experiment_catalog()) {
        std::cout << name << "  " << description << '\n';
    }
    return kExitOk;
}

int do_validate(const Options& o)
{
    try {
        const ExperimentConfig cfg = load_config(o.config, o.overrides, o.seed);
        YAML::Emitter e;
        e.SetDoublePrecision(10);
        e << derived_quantities(cfg);
        std::cout << "valid: " << o.config << '\n' << e.c_str() << '\n';
        return kExitOk;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << '\n';
        return kExitSchema;
    } catch (const Error& e) {
        std::cerr << "schema error: " << o.config << ": " << e.what() << '\n';
        return kExitSchema;
    }
}

int do_run(const Options& o, const std::vector<std::string>& command)
{
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    const std::string started = utc_now();
    ExperimentConfig cfg;
    try {
        cfg = load_config(o.config, o.overrides, o.seed);
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << '\n';
        return kExitSchema;
    } catch (const Error& e) {
        std::cerr << "schema error: " << o.config << ": " << e.what() << '\n';
        return kExitSchema;
    }
    set_threads(o.threads);

    const fs::path dir = !o.out.empty()       ? fs::path(o.out)
                         : !cfg.output.empty() ? fs::path(cfg.output)
                                               : fs::path("runs") / to_string(cfg.kind);

    YAML::Node report;
    report["experiment"] = to_string(cfg.kind);
    report["seed"] = cfg.seed;
    int code = kExitOk;
    ExperimentOutput out;
    const auto parsed = clock::now();
    try {
        fs::create_directories(dir);
        out = run_experiment(cfg, dir);
        bool all = true;
        for (const CheckResult& c : out.checks) {
            all = all && c.pass;
            YAML::Node n;
            n["criterion"] = c.criterion;
            n["name"] = c.name;
            n["status"] = c.pass ? "PASS" : "FAIL";
            n["measured"] = c.measured;
            n["threshold"] = c.threshold;
            n["detail"] = c.detail;
            report["checks"].push_back(n);
            std::cout << format_check(c) << '\n';
        }
        code = all ? kExitOk : kExitCheckFailed;
        report["status"] = all ? "PASS" : "FAIL";
        report["summary"] = out.summary;
        for (const std::string& w : out.warnings) {
            report["warnings"].push_back(w);
            std::cerr << "warning: " << w << '\n';
        }
    } catch (const PropagationError& e) {
        code = kExitNumerical;
        report["status"] = "ERROR";
        report["error"] = std::string("numerical failure: ") + e.what();
    } catch (const IntegrationError& e) {
        code = kExitNumerical;
        report["status"] = "ERROR";
        report["error"] = std::string("numerical failure: ") + e.what();
    } catch (const ValidationError& e) {
        code = kExitSchema;
        report["status"] = "ERROR";
        report["error"] = std::string("invalid input: ") + e.what();
    } catch (const ConfigurationError& e) {
        code = kExitSchema;
        report["status"] = "ERROR";
        report["error"] = std::string("configuration conflict: ") + e.what();
    } catch (const DomainError& e) {
        code = kExitSchema;
        report["status"] = "ERROR";
        report["error"] = std::string("invalid input: ") + e.what();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    if (report["error"]) {
        std::cerr << "error: " << report["error"].as<std::string>() << '\n';
    }

    const auto done = clock::now();
    YAML::Node manifest;
    manifest["tool"] = "tlagauge";
    for (const std::string& c : command) {
        manifest["command"].push_back(c);
    }
    manifest["config_path"] = o.config;
    manifest["experiment"] = to_string(cfg.kind);
    manifest["seed"] = cfg.seed;
    manifest["threads"] = o.threads;
    manifest["started_utc"] = started;
    manifest["versions"] = versions();
    manifest["timings"]["parse_seconds"] = std::chrono::duration<double>(parsed - start).count();
    manifest["timings"]["run_seconds"] = std::chrono::duration<double>(done - parsed).count();
    manifest["config"] = cfg.document;
    manifest["derived"] = derived_quantities(cfg);
    for (const std::string& f : out.files) {
        manifest["files"].push_back(f);
    }
    manifest["files"].push_back("report.yaml");
    manifest["exit_code"] = code;
    try {
        write_yaml(dir / "report.yaml", report);
        write_yaml(dir / "manifest.yaml", manifest);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    std::cout << "report: " << (dir / "report.yaml").string() << '\n';
    return code;
}

} // namespace

int run_cli(int argc, char** argv)
{
    CLI::App app{"Gauge-dependent two-level-atom emission and master-equation experiments"};
    app.require_subcommand(1);
    Options o;
    std::uint64_t seed = 0;

    CLI::App* run = app.add_subcommand("run", "execute an experiment config");
    run->add_option("config", o.config, "experiment config (YAML)")->required();
    run->add_option("--out", o.out, "output directory");
    CLI::Option* seed_opt = run->add_option("--seed", seed, "random seed, overrides the config");
    run->add_option("--threads", o.threads, "worker threads for parallel sweeps")->check(CLI::NonNegativeNumber);
    run->add_option("--override", o.overrides, "key.path=value, repeatable");

    CLI::App* validate = app.add_subcommand("validate", "check a config without running it");
    validate->add_option("config", o.config, "experiment config (YAML)")->required();
    CLI::Option* vseed_opt = validate->add_option("--seed", seed, "random seed, overrides the config");
    validate->add_option("--override", o.overrides, "key.path=value, repeatable");

    app.add_subcommand("list-experiments", "list experiment names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitSchema;
    }
    if (seed_opt->count() > 0 || vseed_opt->count() > 0) {
        o.seed = seed;
    }
    if (app.got_subcommand("list-experiments")) {
        return do_list();
    }
    if (app.got_subcommand("validate")) {
        return do_validate(o);
    }
    return do_run(o, std::vector<std::string>(argv, argv + argc));
}

} // namespace tlagauge
