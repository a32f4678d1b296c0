#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace geode {

enum class CaseStatus { pass, fail, error };

const char* to_string(CaseStatus s);

struct CaseResult {
    std::string id;
    nlohmann::json params = nlohmann::json::object();
    std::string expected;
    std::string actual;
    CaseStatus status = CaseStatus::pass;
    double elapsed_ms = 0.0;
};

struct ReportSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
};

/// Result of one verification suite. Any failed or errored case makes the
/// report fail; summary() is always recomputed from the cases.
struct VerifyReport {
    std::string suite;
    std::vector<CaseResult> cases;

    ReportSummary summary() const;
    bool all_passed() const { return summary().failed == 0; }
    /// 0 when every case passed, 1 otherwise.
    int exit_code() const { return all_passed() ? 0 : 1; }

    /// Appends other's cases, prefixing their ids with other.suite.
    void merge(const VerifyReport& other);
};

nlohmann::json to_json(const VerifyReport& r);

/// Optional bounds; every suite falls back to its acceptance default.
struct SuiteBounds {
    std::optional<unsigned> max_degree;
    std::optional<unsigned> max_order;
    std::optional<unsigned> max_n;
    std::optional<unsigned> n_max;
    std::optional<unsigned> max_vars;
    std::vector<long> a_values;
};

/// thm1, thm2, thm3, eq31, claims, wz1, wz2, certificate, recurrence,
/// two-nonzero, general-eval, oracle, all
const std::vector<std::string>& suite_names();

/// Runs a named suite. Throws std::invalid_argument for an unknown name.
VerifyReport run_suite(const std::string& name, const SuiteBounds& bounds = {});

} // namespace geode
