#pragma once

#include <string>

#include "json.hpp"

namespace linprod {

inline constexpr const char* kVersion = "0.1.0";

// Machine-readable result of one CLI run.  JSON is the contract; the text
// table is a derived view.  Every verdict carries the bounds it was
// computed under via the shared `bounds` object.
class Report {
public:
    explicit Report(std::string instance) : instance_(std::move(instance)) {}

    void set_bound(const std::string& name, int value) { bounds_[name] = value; }
    void pass(const std::string& check) { verdicts_[check] = {"pass", ""}; }
    void fail(const std::string& check, const std::string& reason = "") {
        verdicts_[check] = {"fail", reason};
    }
    void skip(const std::string& check, const std::string& reason) {
        verdicts_[check] = {"skipped", reason};
    }
    void put_payload(const std::string& key, nlohmann::json value) {
        payload_[key] = std::move(value);
    }
    void add_timing(const std::string& name, double seconds) { timings_[name] = seconds; }

    bool all_passed() const;
    int exit_code() const { return all_passed() ? 0 : 1; }

    nlohmann::json to_json(bool with_timings) const;
    std::string text() const;

private:
    struct Verdict {
        std::string status;
        std::string reason;
    };
    std::string instance_;
    nlohmann::json bounds_ = nlohmann::json::object();
    std::map<std::string, Verdict> verdicts_;
    nlohmann::json payload_ = nlohmann::json::object();
    std::map<std::string, double> timings_;
};

}  // namespace linprod
