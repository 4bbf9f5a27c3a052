#pragma once

#include "normvol/body.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace normvol {

/// One evaluated instance of an inequality or identity.
///
/// Every check defines `margin` so that the trial passes exactly when
/// margin >= -tolerance; positive margins are slack.
struct TrialRecord {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::uint64_t input_hash = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    bool pass = true;
    /// Recorded for information only; never fails the report.
    bool exploratory = false;
};

struct VerificationReport {
    std::string check;
    double tolerance = 0.0;
    std::vector<TrialRecord> trials;
    /// Input of the trial with the smallest margin.
    std::optional<Body> witness;
    std::optional<std::size_t> witness_trial;

    bool passed() const;
    std::size_t failures() const;
    /// Smallest margin among non-exploratory trials (+inf when none).
    double worst_margin() const;

    /// Appends a trial, keeping the witness of the smallest margin.
    void add(TrialRecord record, const Body& input);
    /// Appends the trials of a single-input report, renumbered.
    void absorb(const VerificationReport& single, std::size_t trial, std::uint64_t seed);
};

/// A report with one trial: pass iff margin >= -tolerance.
VerificationReport single_trial(std::string check, double tolerance, double lhs, double rhs, double margin, const Body& input,
                                bool exploratory = false);

}  // namespace normvol
