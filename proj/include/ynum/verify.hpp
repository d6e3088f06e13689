/**
 * @file verify.hpp
 * @brief Identity-verification engine and structured reports.
 *
 * Every supported identity has exactly one primary check id; statements whose
 * originally printed form is defective additionally carry an "-as-printed"
 * variant check that reproduces the printed form verbatim and confirms the
 * characterized discrepancy (status errata-confirmed) instead of silently
 * patching it. Reports are deterministic for a fixed (suite, n_max, seed,
 * tol): random lambda samples come from a seeded generator and results are
 * assembled in id-sorted order, regardless of the concurrent execution of
 * individual checks.
 */
#pragma once

#include "ynum/quadrature.hpp"
#include "ynum/ycore.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ynum {

enum class CheckKind { exact, numeric, symbolic };
enum class CheckStatus { pass, fail, errata_confirmed };

std::string to_string(CheckKind k);
std::string to_string(CheckStatus s);

struct FailureRow {
    long long n = 0;
    std::string lambda;  // empty for checks without a lambda sample
    std::string expected;
    std::string actual;
    std::string discrepancy;
};

struct CheckResult {
    std::string id;
    CheckKind kind = CheckKind::exact;
    bool as_printed = false;
    std::string description;
    std::string note;
    long instances_run = 0;
    long failure_count = 0;               // exact total
    std::vector<FailureRow> failures;     // capped at kMaxFailureRows
    CheckStatus status = CheckStatus::pass;
};

inline constexpr int kMaxFailureRows = 10;

struct SuiteConfig {
    std::string suite = "all";
    int n_max = 20;
    std::uint64_t seed = 7;
    std::optional<double> tol;  // overrides pinned numeric tolerances when set
};

struct VerificationReport {
    SuiteConfig config;
    std::string timestamp;  // ISO-8601 UTC; the only nondeterministic field
    std::vector<std::string> lambda_samples;
    std::vector<CheckResult> results;  // id-sorted
    long checks = 0;
    long instances = 0;
    long passed = 0;
    long failed = 0;
    long errata_confirmed = 0;

    /// Suite success: no check failed (errata-confirmed counts as success).
    bool ok() const { return failed == 0; }
};

struct CheckInfo {
    std::string id;
    CheckKind kind;
    bool as_printed;
    std::string description;
};

/// Valid suite selectors: all, exact, numeric, symbolic, errata.
const std::vector<std::string>& suite_names();
bool is_valid_suite(const std::string& suite);

/// Every registered check, id-sorted.
std::vector<CheckInfo> registry();

/// Ids selected by a suite, id-sorted. Throws std::invalid_argument for an
/// unknown suite name.
std::vector<std::string> suite_check_ids(const std::string& suite);

/// Runs one check; unexpected exceptions inside the check body become a
/// recorded failure, not a crash.
CheckResult run_check(const std::string& id, const SuiteConfig& cfg);

/// Runs a whole suite; checks execute independently (possibly concurrently)
/// and the report lists them in id order.
VerificationReport run_suite(const SuiteConfig& cfg);

std::string report_to_json(const VerificationReport& report);
std::string report_to_markdown(const VerificationReport& report);

}  // namespace ynum
