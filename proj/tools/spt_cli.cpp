// Command-line surface: generate | build | verify | solve | oracle | fuzz | bench.
// JSON in, JSON out, byte-stable for fixed flags and seeds. Exit codes:
//   0  success / all checks passed
//   1  discrepancy, failed verification, invalid instance, failed precondition
//   2  usage, parse, or input/output errors

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "spt/bench.hpp"
#include "spt/errors.hpp"
#include "spt/instances.hpp"
#include "spt/json_io.hpp"
#include "spt/solver/chain.hpp"
#include "spt/solver/fuzz.hpp"
#include "spt/solver/oracle.hpp"
#include "spt/verifier.hpp"

namespace {

using spt::Json;

void emit(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
    f << j.dump(2) << "\n";
}

Json slurp(const std::string& in_path) {
    if (in_path.empty()) return Json::parse(std::cin);
    std::ifstream f(in_path);
    if (!f) throw std::invalid_argument("cannot open input file: " + in_path);
    return Json::parse(f);
}

spt::GenParams parse_weights(const std::string& range) {
    spt::GenParams p;
    if (range.empty()) return p;
    auto colon = range.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("--weights expects lo:hi");
    p.weight_lo = std::stoll(range.substr(0, colon));
    p.weight_hi = std::stoll(range.substr(colon + 1));
    return p;
}

struct PairFile {
    spt::WeightedGraph graph;
    spt::BiOrientation orientation;
};

PairFile read_pair(const std::string& in_path) {
    Json j = slurp(in_path);
    if (!j.contains("graph") || !j.contains("orientation"))
        throw std::invalid_argument("expected an object with 'graph' and 'orientation'");
    return {spt::graph_from_json(j["graph"]), spt::orientation_from_json(j["orientation"])};
}

int error_record(const std::string& kind, const std::string& message, int code) {
    Json e;
    e["error"] = Json{{"kind", kind}, {"message", message}};
    std::cerr << e.dump() << "\n";
    return code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"strongly pseudo transitive orientations and maximum weighted independent sets"};
    app.require_subcommand(1);

    std::string cls_name = "filaments", in_path, out_path, dot_path, weights_spec;
    int n = 5, trials = 100, n_max = 12;
    std::uint64_t seed = 0;
    bool skip_verify = false, parallel = false;

    CLI::App* cmd_generate = app.add_subcommand("generate", "emit a seeded instance");
    cmd_generate->add_option("--class", cls_name, "instance class")->required();
    cmd_generate->add_option("--n", n, "item count")->required();
    cmd_generate->add_option("--seed", seed, "random seed");
    cmd_generate->add_option("--weights", weights_spec, "weight range lo:hi");
    cmd_generate->add_option("--out", out_path, "output file (stdout by default)");

    CLI::App* cmd_build = app.add_subcommand("build", "instance -> graph + orientation");
    cmd_build->add_option("--in", in_path, "instance JSON (stdin by default)");
    cmd_build->add_option("--out", out_path, "output file");
    cmd_build->add_option("--dot", dot_path, "also write a Graphviz rendering");

    CLI::App* cmd_verify = app.add_subcommand("verify", "check every axiom, report witnesses");
    cmd_verify->add_option("--in", in_path, "graph+orientation JSON");
    cmd_verify->add_option("--out", out_path, "output file");

    CLI::App* cmd_solve = app.add_subcommand("solve", "maximum weighted independent set");
    cmd_solve->add_option("--in", in_path, "graph+orientation JSON");
    cmd_solve->add_option("--out", out_path, "output file");
    cmd_solve->add_flag("--skip-verify", skip_verify, "trust the orientation (soundness gate stays)");

    CLI::App* cmd_oracle = app.add_subcommand("oracle", "exact reference solver (n <= 30)");
    cmd_oracle->add_option("--in", in_path, "graph+orientation JSON");
    cmd_oracle->add_option("--out", out_path, "output file");

    CLI::App* cmd_fuzz = app.add_subcommand("fuzz", "randomized solver-vs-oracle comparison");
    cmd_fuzz->add_option("--class", cls_name, "instance class")->required();
    cmd_fuzz->add_option("--trials", trials, "trial count");
    cmd_fuzz->add_option("--nmax", n_max, "maximum instance size (<= 30)");
    cmd_fuzz->add_option("--seed", seed, "random seed");
    cmd_fuzz->add_flag("--parallel", parallel, "run trials on all cores");
    cmd_fuzz->add_option("--out", out_path, "output file");

    CLI::App* cmd_bench = app.add_subcommand("bench", "solver scaling on seeded instances");
    cmd_bench->add_option("--class", cls_name, "workload class");
    cmd_bench->add_option("--seed", seed, "random seed");
    cmd_bench->add_option("--out", out_path, "also write the table as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (!in_path.empty() && (in_path == out_path || in_path == dot_path))
            throw std::invalid_argument("input and output paths must differ");
        if (cmd_generate->parsed()) {
            spt::Instance inst = spt::generate_instance(spt::class_from_name(cls_name), n, seed,
                                                        parse_weights(weights_spec));
            emit(spt::instance_to_json(inst), out_path);
            return 0;
        }
        if (cmd_build->parsed()) {
            spt::Instance inst = spt::instance_from_json(slurp(in_path));
            auto [g, o] = spt::build_instance(inst);
            Json j;
            j["graph"] = spt::graph_to_json(g);
            j["orientation"] = spt::orientation_to_json(o);
            emit(j, out_path);
            if (!dot_path.empty()) {
                std::ofstream f(dot_path);
                if (!f) throw std::invalid_argument("cannot open dot file: " + dot_path);
                f << spt::to_dot(g, o);
            }
            return 0;
        }
        if (cmd_verify->parsed()) {
            PairFile p = read_pair(in_path);
            spt::VerifierReport rep = spt::verify_orientation(p.graph, p.orientation, true);
            emit(spt::report_to_json(rep), out_path);
            return rep.required_pass() ? 0 : 1;
        }
        if (cmd_solve->parsed()) {
            PairFile p = read_pair(in_path);
            spt::ChainResult res = spt::mwis(p.graph, p.orientation, skip_verify);
            emit(spt::result_to_json(res, !skip_verify), out_path);
            return 0;
        }
        if (cmd_oracle->parsed()) {
            PairFile p = read_pair(in_path);
            spt::OracleResult res = spt::oracle_mwis(p.graph);
            spt::ChainResult as_chain;
            as_chain.value = res.value;
            as_chain.members = res.members;
            emit(spt::result_to_json(as_chain, true), out_path);
            return 0;
        }
        if (cmd_fuzz->parsed()) {
            spt::FuzzReport rep =
                spt::fuzz_compare(spt::class_from_name(cls_name), trials, n_max, seed, parallel);
            emit(spt::fuzz_report_to_json(rep), out_path);
            return rep.ok() ? 0 : 1;
        }
        if (cmd_bench->parsed()) {
            spt::BenchResult res =
                spt::run_bench(spt::class_from_name(cls_name), {50, 100, 200, 400}, seed);
            std::ostringstream table;
            table << "n        median_ms\n";
            for (const spt::BenchRow& r : res.rows) {
                table << r.n;
                for (int pad = static_cast<int>(std::to_string(r.n).size()); pad < 9; ++pad)
                    table << ' ';
                table << r.median_ms << "\n";
            }
            table << "fitted log-log slope: " << res.fitted_slope << " (cubic target: 3.0)\n";
            std::cout << table.str();
            if (!out_path.empty()) emit(spt::bench_to_json(res, cls_name), out_path);
            return 0;
        }
    } catch (const spt::PreconditionError& e) {
        return error_record("precondition", e.what(), 1);
    } catch (const spt::InvalidInstanceError& e) {
        return error_record("invalid_instance", e.what(), 1);
    } catch (const spt::CycleError& e) {
        return error_record("cycle", e.what(), 1);
    } catch (const spt::TooLargeError& e) {
        return error_record("too_large", e.what(), 1);
    } catch (const std::invalid_argument& e) {
        return error_record("invalid_argument", e.what(), 2);
    } catch (const std::logic_error& e) {
        return error_record("internal", e.what(), 1);
    } catch (const Json::exception& e) {
        return error_record("json", e.what(), 2);
    } catch (const std::exception& e) {
        return error_record("invalid_argument", e.what(), 2);
    }
    return 2;
}
