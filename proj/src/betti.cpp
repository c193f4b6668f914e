#include "linprod/betti.hpp"

#include <climits>

namespace linprod {

int BettiTable::t_coord(int i, int k) const {
    int m = INT_MIN;
    for (const auto& [kg, r] : entries)
        if (kg.first == k && r > 0) m = std::max(m, kg.second[i]);
    return m;
}

int BettiTable::reg_coord(int i) const {
    int m = INT_MIN;
    for (const auto& [kg, r] : entries)
        if (r > 0) m = std::max(m, kg.second[i] - kg.first);
    return m;
}

int BettiTable::reg_total() const {
    int m = INT_MIN;
    for (const auto& [kg, r] : entries)
        if (r > 0) m = std::max(m, total(kg.second) - kg.first);
    return m;
}

nlohmann::json BettiTable::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [kg, r] : entries) {
        if (!r) continue;
        arr.push_back({{"k", kg.first}, {"degree", kg.second}, {"rank", r}});
    }
    nlohmann::json j;
    j["entries"] = arr;
    if (!entries.empty()) {
        int w = static_cast<int>(entries.begin()->first.second.size());
        std::vector<int> regs;
        for (int i = 0; i < w; ++i) regs.push_back(reg_coord(i));
        j["reg"] = regs;
    }
    return j;
}

}  // namespace linprod
