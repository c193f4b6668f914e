#pragma once

#include "json.hpp"
#include "linprod/ring.hpp"

namespace linprod {

// Multigraded Betti numbers, ideal-indexed: k = 0 holds the minimal
// generator degrees.  t_i and reg_i are derived on demand.
struct BettiTable {
    std::map<std::pair<int, MultiDegree>, int> entries;

    void add(int k, const MultiDegree& g, int rank = 1) {
        if (rank) entries[{k, g}] += rank;
    }
    bool empty() const { return entries.empty(); }
    int max_index() const {
        int m = -1;
        for (const auto& [kg, r] : entries) m = std::max(m, kg.first);
        return m;
    }
    int rank(int k, const MultiDegree& g) const {
        auto it = entries.find({k, g});
        return it == entries.end() ? 0 : it->second;
    }
    int total_rank(int k) const {
        int s = 0;
        for (const auto& [kg, r] : entries)
            if (kg.first == k) s += r;
        return s;
    }

    // max i-th shift coordinate at homological index k; INT_MIN when empty
    int t_coord(int i, int k) const;
    // sup_k (t_i(k) - k); 0-length tables give INT_MIN
    int reg_coord(int i) const;
    // same with the grading collapsed to total degree
    int reg_total() const;

    bool operator==(const BettiTable& o) const { return entries == o.entries; }
    nlohmann::json to_json() const;
};

}  // namespace linprod
