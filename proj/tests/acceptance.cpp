// Acceptance suite. Runs every criterion at its stated tolerance and prints
// one PASS/FAIL line per criterion; exit status is the number of failures.
//
//   1  construction validity: 1000 seeded instances per class (n <= 12) pass
//      every verifier flag including covers_complement; first_type holds on
//      100% of filament, overlap, chordal (both), and dag instances
//   2  solver exactness: 1000 seeded instances per class (n <= 20), random
//      weights in [0,100]: solver value == oracle value, members independent,
//      member weights sum to the value
//   3  regression: the 4-vertex orientation and the 4-filament stress
//      instance solve to exactly 3 with unit weights
//   4  branch composition property: exhaustive same-branch triple check on
//      1000 generated chordal instances (n <= 15)
//   5  scaling: filament bench at n in {50,100,200,400}: median solve time
//      at n=400 below 10 s and fitted log-log slope <= 4.0
//   6  verifier negative controls: hand-built invalid orientations fail
//      exactly the intended flag with a correct witness
//   7  determinism: every subcommand, rerun with identical flags and seeds,
//      produces byte-identical artifacts (bench compared modulo timings)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "spt/bench.hpp"
#include "spt/chordal/peo.hpp"
#include "spt/classes/filaments.hpp"
#include "spt/instances.hpp"
#include "spt/json_io.hpp"
#include "spt/solver/chain.hpp"
#include "spt/solver/fuzz.hpp"
#include "spt/solver/oracle.hpp"
#include "spt/verifier.hpp"

using namespace spt;

namespace {

int failures_total = 0;

void report(int criterion, const char* name, bool pass, const std::string& detail) {
    std::printf("criterion %d (%s): %s — %s\n", criterion, name, pass ? "PASS" : "FAIL",
                detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures_total;
}

const std::vector<ClassKind> kAcceptanceClasses = {
    ClassKind::Rectangles,      ClassKind::HalfSegments, ClassKind::Filaments,
    ClassKind::ChordalSubtrees, ClassKind::ChordalPeo,   ClassKind::Dag,
    ClassKind::Overlap,
};

void criterion1() {
    auto start = std::chrono::steady_clock::now();
    int checked = 0, bad = 0;
    std::string first_bad;
    std::ostringstream rates;
    for (ClassKind cls : kAcceptanceClasses) {
        int ft_pass = 0;
        for (int t = 0; t < 1000; ++t) {
            int n = 1 + t % 12;
            std::uint64_t seed = 100000 + t;
            try {
                auto [g, o] = build_instance(generate_instance(cls, n, seed));
                VerifierReport rep = verify_orientation(g, o, true);
                bool ok = rep.required_pass();
                ft_pass += rep.first_type.pass;
                if (class_claims_first_type(cls)) ok = ok && rep.first_type.pass;
                if (!ok) {
                    ++bad;
                    if (first_bad.empty())
                        first_bad = class_name(cls) + " seed " + std::to_string(seed);
                }
            } catch (const std::exception& e) {
                ++bad;
                if (first_bad.empty()) first_bad = class_name(cls) + ": " + e.what();
            }
            ++checked;
        }
        if (!class_claims_first_type(cls))
            rates << " " << class_name(cls) << " first_type " << ft_pass << "/1000 (reported only);";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream d;
    d << checked - bad << "/" << checked << " builds verified in " << secs << " s;" << rates.str();
    if (bad) d << " first failure: " << first_bad;
    report(1, "construction validity", bad == 0 && secs < 60.0, d.str());
}

void criterion2() {
    int bad = 0;
    std::string first_bad;
    for (ClassKind cls : kAcceptanceClasses) {
        FuzzReport rep = fuzz_compare(cls, 1000, 20, 7700 + static_cast<int>(cls));
        if (!rep.ok()) {
            bad += static_cast<int>(rep.failures.size());
            if (first_bad.empty())
                first_bad = rep.class_name + " seed " + std::to_string(rep.failures[0].seed) +
                            " (" + rep.failures[0].kind + ")";
        }
    }
    std::ostringstream d;
    d << 7000 - bad << "/7000 trials matched the oracle with independent members";
    if (bad) d << "; first failure: " << first_bad;
    report(2, "solver exactness", bad == 0, d.str());
}

void criterion3() {
    bool ok = true;
    std::ostringstream d;

    BiOrientation o(4);
    o.add_arc(0, 1, Bucket::B);
    o.add_arc(0, 2, Bucket::B);
    o.add_arc(1, 2, Bucket::B);
    o.add_arc(1, 3, Bucket::A);
    o.add_arc(2, 3, Bucket::A);
    ChainResult r1 = max_weight_chain(o, {1, 1, 1, 1});
    ok = ok && r1.value == 3;
    d << "4-vertex orientation -> " << r1.value;

    FilamentInstance stress{{{0, 100, 5}, {10, 20, 3}, {12, 14, 1}, {50, 60, 9}}, {1, 1, 1, 1}};
    auto [g, fo] = filament_build(stress);
    ChainResult r2 = mwis(g, fo);
    ok = ok && r2.value == 3;
    d << "; filament stress -> " << r2.value << " (expected 3 in both, never 4)";
    report(3, "regression", ok, d.str());
}

void criterion4() {
    int bad = 0;
    std::string first_bad;
    for (int t = 0; t < 1000; ++t) {
        int n = 1 + t % 15;
        std::uint64_t seed = 500000 + t;
        auto pi = std::get<PeoInstance>(generate_instance(ClassKind::ChordalPeo, n, seed));
        std::vector<int> w = branch_transitivity_witness(pi.graph, pi.order);
        if (!w.empty()) {
            ++bad;
            if (first_bad.empty())
                first_bad = "seed " + std::to_string(seed) + " triple (" + std::to_string(w[0]) +
                            "," + std::to_string(w[1]) + "," + std::to_string(w[2]) + ")";
        }
    }
    std::ostringstream d;
    d << 1000 - bad << "/1000 instances satisfy the same-branch triple property";
    if (bad) d << "; counterexample: " << first_bad;
    report(4, "branch composition property", bad == 0, d.str());
}

void criterion5() {
    BenchResult res = run_bench(ClassKind::Filaments, {50, 100, 200, 400}, 11);
    double at400 = res.rows.back().median_ms;
    bool ok = at400 < 10000.0 && res.fitted_slope <= 4.0;
    std::ostringstream d;
    d << "median at n=400: " << at400 << " ms (limit 10000); fitted log-log slope "
      << res.fitted_slope << " (limit 4.0, cubic target 3.0)";
    report(5, "scaling", ok, d.str());
}

void criterion6() {
    bool ok = true;
    std::ostringstream d;

    {  // missing composed A arc
        WeightedGraph g(3);
        BiOrientation o(3);
        o.add_arc(0, 1, Bucket::A);
        o.add_arc(1, 2, Bucket::A);
        VerifierReport rep = verify_orientation(g, o, true);
        bool this_ok = !rep.a_transitive.pass && rep.a_transitive.witness == std::vector<int>{0, 1, 2} &&
                       !rep.covers_complement.pass &&
                       rep.covers_complement.witness == std::vector<int>{0, 2} &&
                       rep.antisymmetry.pass && rep.acyclicity.pass &&
                       rep.bucket_disjointness.pass && rep.b_transitive.pass;
        ok = ok && this_ok;
        d << "missing-A-arc control " << (this_ok ? "ok" : "BAD");
    }
    {  // B transitivity violation
        WeightedGraph g(3);
        BiOrientation o(3);
        o.add_arc(0, 1, Bucket::B);
        o.add_arc(1, 2, Bucket::B);
        o.add_arc(0, 2, Bucket::A);
        VerifierReport rep = verify_orientation(g, o, true);
        bool this_ok = !rep.b_transitive.pass && rep.b_transitive.witness == std::vector<int>{0, 1, 2} &&
                       rep.a_transitive.pass && rep.a_then_e.pass && rep.first_type.pass &&
                       rep.covers_complement.pass && rep.antisymmetry.pass && rep.acyclicity.pass;
        ok = ok && this_ok;
        d << "; B-transitivity control " << (this_ok ? "ok" : "BAD");
    }
    {  // complement coverage gap
        WeightedGraph g(3);
        g.add_edge(0, 1);
        BiOrientation o(3);
        o.add_arc(0, 2, Bucket::A);
        VerifierReport rep = verify_orientation(g, o, true);
        bool this_ok = !rep.covers_complement.pass &&
                       rep.covers_complement.witness == std::vector<int>{1, 2} && rep.spt_pass();
        ok = ok && this_ok;
        d << "; coverage-gap control " << (this_ok ? "ok" : "BAD");
    }
    report(6, "verifier negative controls", ok, d.str());
}

#ifdef SPT_CLI_PATH
std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(SPT_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
}

// timings are wall clock and cannot be byte-stable; compare bench artifacts
// with the median_ms and slope values blanked
std::string strip_timings(std::string body) {
    for (const char* key : {"\"median_ms\":", "\"fitted_slope\":"}) {
        size_t pos = 0;
        while ((pos = body.find(key, pos)) != std::string::npos) {
            size_t val = pos + std::string(key).size();
            size_t end = body.find_first_of(",}\n", val);
            body.replace(val, end - val, " X");
            pos = val;
        }
    }
    return body;
}

void criterion7() {
    std::string d = "/tmp/spt_acceptance_XXXXXX";
    if (!mkdtemp(d.data())) {
        report(7, "determinism", false, "could not create a scratch directory");
        return;
    }
    bool ok = true;
    std::ostringstream detail;
    auto twice_identical = [&](const std::string& label, const std::string& args_a,
                               const std::string& args_b, const std::string& fa,
                               const std::string& fb, bool strip) {
        run_cli(args_a);
        run_cli(args_b);
        std::string a = slurp(fa), b = slurp(fb);
        bool same = !a.empty() && (strip ? strip_timings(a) == strip_timings(b) : a == b);
        ok = ok && same;
        detail << label << (same ? " ok; " : " DIFFERS; ");
    };

    for (const char* cls : {"rectangles", "chordal_peo", "overlap"}) {
        std::string base = std::string("generate --class ") + cls + " --n 9 --seed 21 --out ";
        twice_identical(std::string("generate/") + cls, base + d + "/g1.json",
                        base + d + "/g2.json", d + "/g1.json", d + "/g2.json", false);
    }
    run_cli("generate --class filaments --n 10 --seed 3 --out " + d + "/inst.json");
    twice_identical("build", "build --in " + d + "/inst.json --out " + d + "/b1.json",
                    "build --in " + d + "/inst.json --out " + d + "/b2.json", d + "/b1.json",
                    d + "/b2.json", false);
    twice_identical("verify", "verify --in " + d + "/b1.json --out " + d + "/v1.json",
                    "verify --in " + d + "/b1.json --out " + d + "/v2.json", d + "/v1.json",
                    d + "/v2.json", false);
    twice_identical("solve", "solve --in " + d + "/b1.json --out " + d + "/s1.json",
                    "solve --in " + d + "/b1.json --out " + d + "/s2.json", d + "/s1.json",
                    d + "/s2.json", false);
    twice_identical("oracle", "oracle --in " + d + "/b1.json --out " + d + "/o1.json",
                    "oracle --in " + d + "/b1.json --out " + d + "/o2.json", d + "/o1.json",
                    d + "/o2.json", false);
    twice_identical("fuzz",
                    "fuzz --class filaments --trials 50 --nmax 10 --seed 5 --out " + d + "/f1.json",
                    "fuzz --class filaments --trials 50 --nmax 10 --seed 5 --out " + d + "/f2.json",
                    d + "/f1.json", d + "/f2.json", false);
    twice_identical("bench(structure)",
                    "bench --seed 2 --out " + d + "/t1.json",
                    "bench --seed 2 --out " + d + "/t2.json", d + "/t1.json", d + "/t2.json", true);
    report(7, "determinism", ok, detail.str());
}
#else
void criterion7() { report(7, "determinism", false, "CLI path not configured"); }
#endif

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    if (failures_total == 0)
        std::printf("ACCEPTANCE: ALL 7 CRITERIA PASSED\n");
    else
        std::printf("ACCEPTANCE: %d CRITERIA FAILED\n", failures_total);
    return failures_total;
}
