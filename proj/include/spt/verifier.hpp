#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spt/graph.hpp"
#include "spt/orientation.hpp"

namespace spt {

struct FlagResult {
    bool pass = true;
    std::vector<int> witness;  // pair, triple, or cycle; empty when passing
};

// Per-axiom result of checking an orientation. A failed flag always carries
// a witness; a passing flag carries none.
//
// Axioms, with E-hat the arc set and A/B the buckets:
//   a_transitive   ab in A and bc in A  implies  ac in A
//   b_transitive   ab in B and bc in B  implies  ac in B
//   a_then_e       ab in A and bc in E-hat  implies  ac in E-hat
//   first_type     ab in A and bc in E-hat  implies  ac in A
// covers_complement (optional): the arc set, forgetting direction, equals
// the non-edge set of the graph exactly.
struct VerifierReport {
    FlagResult antisymmetry;
    FlagResult acyclicity;
    FlagResult bucket_disjointness;
    FlagResult covers_complement;
    FlagResult a_transitive;
    FlagResult b_transitive;
    FlagResult a_then_e;
    FlagResult first_type;
    bool cover_checked = false;

    // The gate every emitted orientation must clear. first_type is reported
    // separately: some classes provide it, some do not.
    bool spt_pass() const {
        return antisymmetry.pass && acyclicity.pass && bucket_disjointness.pass &&
               a_transitive.pass && b_transitive.pass && a_then_e.pass;
    }
    bool required_pass() const {
        return spt_pass() && (!cover_checked || covers_complement.pass);
    }

    // canonical flag order, for serialization and reporting
    std::vector<std::pair<std::string, const FlagResult*>> entries() const;
};

class PreconditionError : public std::runtime_error {
public:
    PreconditionError(const std::string& msg, VerifierReport report)
        : std::runtime_error(msg), report_(std::move(report)) {}
    const VerifierReport& report() const { return report_; }

private:
    VerifierReport report_;
};

// Exhaustive pair/triple checking, O(n*m + n^2). Pure; deterministic
// witnesses. check_cover controls whether covers_complement is evaluated:
// the chain solver also accepts stand-alone orientations not tied to a
// complement. Throws std::invalid_argument on o.n != g.n.
VerifierReport verify_orientation(const WeightedGraph& g, const BiOrientation& o,
                                  bool check_cover);

} // namespace spt
