#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "degcorr/error.hpp"
#include "degcorr/lab.hpp"

using namespace degcorr;

namespace {

struct Flags {
    int m = 1;
    int n0 = 0;  // 0: m + 2
    std::int64_t steps = 20000;
    int replicas = 100;
    std::uint64_t seed = 1;
    std::string mode = "undirected";
    int max_k = 60;
    double tail_eps = 1e-10;
    int jobs = 0;
    std::string out = ".";
    std::string format = "json";
    std::string window;
    std::string manifest;
    int rows = 6;
    std::int64_t every = 0;
    bool save_networks = false;
};

void report(std::string_view kind, std::string_view message) {
    nlohmann::json j;
    j["error"] = kind;
    j["message"] = message;
    std::cerr << j.dump() << '\n';
}

RunManifest manifest_from(const Flags& f) {
    RunManifest mf;
    const auto mode = parse_mode(f.mode);
    require(mode.has_value(), ErrorKind::usage, "--mode must be directed or undirected");
    mf.mode = *mode;
    mf.m = f.m;
    mf.n0 = f.n0 > 0 ? f.n0 : f.m + 2;
    mf.steps = f.steps;
    mf.replicas = f.replicas;
    mf.seed = f.seed;
    mf.max_k = f.max_k;
    mf.tail_epsilon = f.tail_eps;
    return mf;
}

OutputOptions output_from(const Flags& f) {
    const auto format = parse_format(f.format);
    require(format.has_value(), ErrorKind::usage, "--format must be json or csv");
    return {f.out, *format};
}

void add_common(CLI::App* app, Flags& f, bool growth) {
    app->add_option("--m", f.m, "edges per new node")->check(CLI::PositiveNumber);
    app->add_option("--mode", f.mode, "directed | undirected");
    app->add_option("--max-k", f.max_k, "degree window");
    app->add_option("--tail-eps", f.tail_eps, "truncation tolerance");
    app->add_option("--out", f.out, "output directory");
    app->add_option("--format", f.format, "json | csv");
    if (growth) {
        app->add_option("--n0", f.n0, "initial clique size (default m + 2)");
        app->add_option("--steps", f.steps, "growth steps or generations");
        app->add_option("--seed", f.seed, "root seed");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Degree correlations of uniformly growing networks"};
    app.set_version_flag("--version", std::string(tool_version()));
    app.require_subcommand(1);
    Flags f;
    const char* env_jobs = std::getenv("DEGCORR_JOBS");
    if (env_jobs) f.jobs = std::atoi(env_jobs);

    auto* sim = app.add_subcommand("simulate", "grow an ensemble and measure P(k1,k2)");
    add_common(sim, f, true);
    sim->add_option("--replicas", f.replicas, "number of networks");
    sim->add_option("--jobs", f.jobs, "threads (default DEGCORR_JOBS or all)");
    sim->add_option("--manifest", f.manifest, "replay a manifest.json");
    sim->add_flag("--save-networks", f.save_networks, "also write every network as an edge list");

    auto* theory = app.add_subcommand("theory", "stationary grid, transient iteration or generating functions");
    theory->require_subcommand(1);
    auto* stat = theory->add_subcommand("stationary", "fixed point of the edge-state chain");
    add_common(stat, f, false);
    auto* trans = theory->add_subcommand("transient", "iterate the chain from K_n0");
    add_common(trans, f, true);
    trans->add_option("--every", f.every, "write a snapshot every N steps");
    trans->add_option("--jobs", f.jobs, "threads");
    auto* gf = theory->add_subcommand("gf", "generating-function rows");
    add_common(gf, f, false);
    gf->add_option("--rows", f.rows, "number of rows from k = m");

    auto* cmp = app.add_subcommand("compare", "error table between two grids");
    std::string sim_path, theory_path;
    cmp->add_option("simulated", sim_path, "simulated grid file")->required();
    cmp->add_option("theory", theory_path, "theory grid file")->required();
    cmp->add_option("--window", f.window, "k1:k2 inclusive range on both axes");
    cmp->add_option("--out", f.out, "output directory");

    auto* spr = app.add_subcommand("spr", "edge-recombination ensemble (m = 1)");
    add_common(spr, f, true);
    spr->add_option("--replicas", f.replicas, "ensemble size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        report(to_string(ErrorKind::usage), e.what());
        return 2;
    }

    try {
        if (*sim) {
            SimulateCommand cmd;
            cmd.manifest = f.manifest.empty() ? manifest_from(f) : parse_manifest(read_text(f.manifest));
            cmd.jobs = f.jobs;
            cmd.output = output_from(f);
            cmd.save_networks = f.save_networks;
            cmd_simulate(cmd);
        } else if (*theory) {
            TheoryCommand cmd;
            cmd.kind = *stat    ? TheoryCommand::Kind::stationary
                       : *trans ? TheoryCommand::Kind::transient
                                : TheoryCommand::Kind::gf;
            cmd.manifest = manifest_from(f);
            cmd.rows = f.rows;
            cmd.every = f.every;
            cmd.jobs = f.jobs;
            cmd.output = output_from(f);
            cmd_theory(cmd);
        } else if (*cmp) {
            CompareCommand cmd;
            cmd.simulated = sim_path;
            cmd.theory = theory_path;
            if (!f.window.empty()) cmd.window = parse_window(f.window);
            cmd.output.out_dir = f.out;
            const ErrorTable table = cmd_compare(cmd);
            std::cout << "max_error " << format_double(table.max_error) << " mean_error "
                      << format_double(table.mean_error) << '\n';
        } else if (*spr) {
            SprCommand cmd;
            cmd.manifest = manifest_from(f);
            cmd.output = output_from(f);
            const double z = cmd_spr(cmd);
            std::cout << "max_abs_z " << format_double(z) << '\n';
        }
    } catch (const Error& e) {
        report(to_string(e.kind()), e.what());
        return e.kind() == ErrorKind::usage ? 2 : 1;
    } catch (const std::exception& e) {
        report("internal", e.what());
        return 1;
    }
    return 0;
}
