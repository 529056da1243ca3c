#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace paragrass {

enum class CheckStatus { Pass, Fail, Discrepancy };

inline std::string check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Discrepancy: return "discrepancy";
    }
    return "?";
}

// One verified identity.  "discrepancy" marks a documented difference between
// the engine's result and a tabulated reference it was compared against; it
// is reported but does not fail a run.
struct CheckRecord {
    std::string scope;   // core / berezin / right / left / displacement
    std::string id;      // identity name, e.g. "ladder-anticommutator"
    int n = 0;
    std::string alpha;   // parameter description, empty when not applicable
    CheckStatus status = CheckStatus::Pass;
    std::string detail;  // human-readable elaboration for fail/discrepancy
};

struct Report {
    std::vector<CheckRecord> records;

    void add(CheckRecord r) { records.push_back(std::move(r)); }
    void add(const std::string& scope, const std::string& id, int n, const std::string& alpha, bool pass,
             const std::string& detail = "") {
        records.push_back({scope, id, n, alpha, pass ? CheckStatus::Pass : CheckStatus::Fail,
                           pass ? std::string() : detail});
    }
    void merge(const Report& other) {
        records.insert(records.end(), other.records.begin(), other.records.end());
    }

    bool all_pass() const {
        return std::none_of(records.begin(), records.end(),
                            [](const CheckRecord& r) { return r.status == CheckStatus::Fail; });
    }
    size_t failures() const {
        return static_cast<size_t>(std::count_if(records.begin(), records.end(), [](const CheckRecord& r) {
            return r.status == CheckStatus::Fail;
        }));
    }
    size_t discrepancies() const {
        return static_cast<size_t>(std::count_if(records.begin(), records.end(), [](const CheckRecord& r) {
            return r.status == CheckStatus::Discrepancy;
        }));
    }

    // Deterministic emission order regardless of how suites were assembled.
    void sort() {
        std::stable_sort(records.begin(), records.end(), [](const CheckRecord& a, const CheckRecord& b) {
            if (a.scope != b.scope) return a.scope < b.scope;
            if (a.n != b.n) return a.n < b.n;
            return a.id < b.id;
        });
    }
};

}  // namespace paragrass
