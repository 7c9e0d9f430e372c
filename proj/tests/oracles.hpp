#pragma once

// Brute-force reference computations used only by the tests.

#include "focktiles/partition.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace oracle {

using focktiles::Partition;

inline std::vector<int> beta(const Partition& p, int n) {
    std::vector<int> b;
    for (int i = 1; i <= n; ++i) b.push_back(p[i - 1] - i);
    return b;
}

inline Partition from_beta(std::vector<int> b) {
    std::sort(b.rbegin(), b.rend());
    std::vector<int> parts;
    for (size_t i = 0; i < b.size(); ++i) parts.push_back(b[i] + static_cast<int>(i) + 1);
    return Partition(parts);
}

inline Partition transpose(const Partition& p) {
    std::vector<std::vector<bool>> grid(p.length());
    for (int i = 0; i < p.length(); ++i) grid[i].assign(p.parts[i], true);
    std::vector<int> parts;
    for (int j = 0; p.length() && j < p.parts[0]; ++j) {
        int c = 0;
        while (c < p.length() && static_cast<int>(grid[c].size()) > j) ++c;
        parts.push_back(c);
    }
    return Partition(parts);
}

// All partitions reachable by removing one rimhook of size h, via beta-number slides.
inline std::set<Partition> remove_rimhooks(const Partition& p, int h) {
    int n = p.length() + h + 1;
    auto b = beta(p, n);
    std::set<int> s(b.begin(), b.end());
    std::set<Partition> out;
    for (int x : b)
        if (x - h >= -n && !s.count(x - h)) {
            auto c = b;
            std::replace(c.begin(), c.end(), x, x - h);
            out.insert(from_beta(c));
        }
    return out;
}

inline int brute_weight(Partition p, int e) {
    for (int w = 0;; ++w) {
        auto r = remove_rimhooks(p, e);
        if (r.empty()) return w;
        p = *r.begin();
    }
}

inline Partition brute_core(Partition p, int e) {
    for (;;) {
        auto r = remove_rimhooks(p, e);
        if (r.empty()) return p;
        p = *r.begin();
    }
}

}  // namespace oracle
