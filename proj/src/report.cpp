#include "normvol/report.hpp"

#include "normvol/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace normvol {

bool VerificationReport::passed() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
    return static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), [](const TrialRecord& t) { return !t.pass && !t.exploratory; }));
}

double VerificationReport::worst_margin() const {
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& t : trials) {
        if (!t.exploratory) worst = std::min(worst, t.margin);
    }
    return worst;
}

void VerificationReport::add(TrialRecord record, const Body& input) {
    const bool worse = !record.exploratory && (!witness_trial || record.margin < trials[*witness_trial].margin);
    record.pass = std::isfinite(record.margin) && record.margin >= -tolerance;
    trials.push_back(record);
    if (worse) {
        witness = input;
        witness_trial = trials.size() - 1;
    }
}

void VerificationReport::absorb(const VerificationReport& single, std::size_t trial, std::uint64_t seed) {
    for (const auto& t : single.trials) {
        TrialRecord r = t;
        r.trial = trial;
        r.seed = seed;
        const bool worse = !r.exploratory && (!witness_trial || r.margin < trials[*witness_trial].margin);
        trials.push_back(r);
        if (worse && single.witness) {
            witness = single.witness;
            witness_trial = trials.size() - 1;
        }
    }
}

VerificationReport single_trial(std::string check, double tolerance, double lhs, double rhs, double margin, const Body& input,
                                bool exploratory) {
    VerificationReport report;
    report.check = std::move(check);
    report.tolerance = tolerance;
    TrialRecord r;
    r.input_hash = body_hash(input);
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = margin;
    r.exploratory = exploratory;
    report.add(r, input);
    return report;
}

}  // namespace normvol
