#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lebx {

/// Outcome of one family of cases within a suite.
struct CaseGroup {
    std::string name;
    std::int64_t cases = 0;
    std::int64_t failures = 0;
    std::string metric;  // what `worst` measures: "rel_err", "lhs/rhs" or empty
    double worst = 0.0;  // largest metric value seen
    std::vector<std::string> failed;  // parameters of the first failing cases

    void record(bool ok, double value, const std::string& params);
};

struct SuiteReport {
    std::string suite;
    std::vector<CaseGroup> groups;

    bool passed() const;
    std::int64_t cases() const;
    std::int64_t failures() const;
};

struct SuiteOptions {
    int trials = 1000;
    std::uint64_t seed = 42;
    /// Overrides the suite's default tolerance.
    std::optional<double> tol;
    /// Degree range for the partition and reduction suites.
    int n_lo = 0;
    int n_hi = -1;
};

/// Random draws of the binomial identities (rel_err <= 1e-10 by default) and the
/// Lemma 7 monotonicity verdicts cross-checked against digamma.
SuiteReport run_identity_suite(const SuiteOptions& opt);

/// Sweeps and random draws of the auxiliary inequalities (slack 1e-9 by default).
SuiteReport run_inequality_suite(const SuiteOptions& opt);

/// Exhaustive region coverage and sum_k S_k against the Lebesgue function at
/// random points of the fundamental domain (rel. 1e-9 by default); degrees 5..15
/// unless given.
SuiteReport run_partition_suite(const SuiteOptions& opt);

/// Reduction inequalities at random admissible offsets; degrees 6..14 unless given.
SuiteReport run_reduction_suite(const SuiteOptions& opt);

/// "identities", "inequalities", "partition", "reduction" or "all". Throws
/// DomainError for other names.
std::vector<SuiteReport> run_suite(std::string_view name, const SuiteOptions& opt);

}  // namespace lebx
