#include "linprod/report.hpp"

#include <sstream>

namespace linprod {

bool Report::all_passed() const {
    for (const auto& [name, v] : verdicts_)
        if (v.status == "fail") return false;
    return true;
}

nlohmann::json Report::to_json(bool with_timings) const {
    nlohmann::json j;
    j["schema"] = 1;
    j["version"] = kVersion;
    j["instance"] = instance_;
    j["bounds"] = bounds_;
    nlohmann::json vs = nlohmann::json::object();
    for (const auto& [name, v] : verdicts_) {
        nlohmann::json e;
        e["status"] = v.status;
        if (!v.reason.empty()) e["reason"] = v.reason;
        vs[name] = e;
    }
    j["verdicts"] = vs;
    j["payload"] = payload_;
    if (with_timings) {
        nlohmann::json t = nlohmann::json::object();
        for (const auto& [name, s] : timings_) t[name] = s;
        j["timings"] = t;
    }
    return j;
}

std::string Report::text() const {
    std::ostringstream os;
    os << "instance: " << instance_ << "\n";
    if (!bounds_.empty()) os << "bounds:   " << bounds_.dump() << "\n";
    std::size_t width = 0;
    for (const auto& [name, v] : verdicts_) width = std::max(width, name.size());
    for (const auto& [name, v] : verdicts_) {
        os << "  " << name << std::string(width - name.size() + 2, ' ') << v.status;
        if (!v.reason.empty()) os << "  (" << v.reason << ")";
        os << "\n";
    }
    os << (all_passed() ? "RESULT: pass" : "RESULT: fail") << "\n";
    return os.str();
}

}  // namespace linprod
