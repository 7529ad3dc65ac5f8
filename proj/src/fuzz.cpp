#include "spt/solver/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "spt/rng.hpp"
#include "spt/solver/chain.hpp"
#include "spt/solver/oracle.hpp"
#include "spt/verifier.hpp"

namespace spt {

namespace {

struct TrialOutcome {
    std::vector<FuzzFailure> failures;
    bool first_type_pass = false;
};

TrialOutcome run_trial(ClassKind cls, int n_max, std::uint64_t trial_seed) {
    TrialOutcome out;
    auto flag = [&](const std::string& kind) { out.failures.push_back({trial_seed, kind}); };
    try {
        Rng rng(Rng::mix(trial_seed, 0xf0));
        int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_max)));
        Instance inst = generate_instance(cls, n, trial_seed);
        auto [g, o] = build_instance(inst);

        VerifierReport rep = verify_orientation(g, o, true);
        for (const auto& [name, f] : rep.entries()) {
            if (f->pass || name == "first_type") continue;
            flag("verifier:" + name);
        }
        out.first_type_pass = rep.first_type.pass;
        if (!rep.first_type.pass && class_claims_first_type(cls)) flag("verifier:first_type");
        if (!rep.required_pass()) return out;  // solving would only re-throw

        for (int v = 0; v < g.n; ++v) g.weights[v] = rng.range(0, 100);
        ChainResult got = mwis(g, o, true);
        OracleResult want = oracle_mwis(g);
        if (got.value != want.value) flag("value_mismatch");
        Weight sum = 0;
        for (size_t i = 0; i < got.members.size(); ++i) {
            sum += g.weights[got.members[i]];
            for (size_t j = i + 1; j < got.members.size(); ++j)
                if (g.edge(got.members[i], got.members[j])) flag("not_independent");
        }
        if (sum != got.value) flag("weight_mismatch");
    } catch (const std::exception& e) {
        flag(std::string("exception:") + e.what());
    }
    return out;
}

} // namespace

FuzzReport fuzz_compare(ClassKind cls, int trials, int n_max, std::uint64_t seed, bool parallel) {
    if (trials < 0) throw std::invalid_argument("negative trial count");
    if (n_max < 1 || n_max > 30) throw std::invalid_argument("n_max must be in [1, 30]");

    FuzzReport report;
    report.class_name = class_name(cls);
    report.trials = trials;

    std::vector<TrialOutcome> outcomes(trials);
    auto seed_of = [&](int t) { return Rng::mix(seed, 1000003ULL * (t + 1)); };

    unsigned workers = parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1;
    if (workers > 1 && trials > 1) {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (int t; (t = next.fetch_add(1)) < trials;)
                    outcomes[t] = run_trial(cls, n_max, seed_of(t));
            });
        for (auto& th : pool) th.join();
    } else {
        for (int t = 0; t < trials; ++t) outcomes[t] = run_trial(cls, n_max, seed_of(t));
    }

    for (const TrialOutcome& t : outcomes) {  // merged in trial order
        report.failures.insert(report.failures.end(), t.failures.begin(), t.failures.end());
        ++report.first_type_checked;
        report.first_type_pass += t.first_type_pass;
    }
    return report;
}

} // namespace spt
