#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace focktiles {

struct Partition {
    std::vector<int> parts;  // weakly decreasing, all positive

    Partition() = default;
    explicit Partition(std::vector<int> p);  // validates; trailing zeros dropped

    int size() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    int operator[](int i) const { return i < length() ? parts[i] : 0; }  // 0-based row

    // lexicographic on parts; extends dominance on partitions of equal size
    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;
};

struct PartitionHash {
    size_t operator()(const Partition& p) const noexcept;
};

// "5,5,4,2,2,2,1,1", "16,8,1^13"; "" or "0" is the empty partition
Partition parse_partition(const std::string& text);
std::string to_string(const Partition& p);

Partition conjugate(const Partition& p);
bool dominance_leq(const Partition& a, const Partition& b);
bool is_e_regular(const Partition& p, int e);
bool contains(const Partition& outer, const Partition& inner);

using Cell = std::pair<int, int>;  // (row, col), 1-based

struct RimHook {
    std::vector<Cell> cells;
    int size = 0;
    Cell hand;  // (i,j) with H = H_(i,j)
};

int hook_length(const Partition& p, int row, int col);
// border strip from (row, p_row) down to (p'_col, col)
RimHook rimhook_at(const Partition& p, int row, int col);
Partition remove_cells(const Partition& p, const std::vector<Cell>& cells);

// rimhooks of size divisible by e, indexed like the bead movements of the partition
std::vector<RimHook> hooks_e(const Partition& p, int e);

std::vector<Partition> partitions_of(int n);

}  // namespace focktiles
