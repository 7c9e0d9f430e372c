#pragma once

#include "focktiles/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace focktiles {

// Beta-set with runner structure. Every position below base() is occupied,
// every position at or above top() is empty; the window in between is explicit.
class Abacus {
public:
    Abacus(int e, const Partition& p);
    Abacus(int e, int base, std::vector<char> window);

    int e() const { return e_; }
    int base() const { return base_; }
    int top() const { return base_ + static_cast<int>(occ_.size()); }
    bool has(int x) const;
    void set(int x, bool on);
    void move(int from, int to);  // from must be occupied, to empty
    int max_bead() const;         // largest occupied position
    int charge() const;           // 0 for every beta-set of a partition
    int runner(int x) const { return ((x % e_) + e_) % e_; }

    std::vector<int> beads_from(int lo) const;  // occupied positions >= lo, ascending
    Partition partition() const;

    // number of empty positions below x on its runner
    int gaps_below(int x) const;

    std::vector<int> removable(int r) const;  // beads on runner r whose predecessor is empty
    std::vector<int> addable(int r) const;    // beads on runner r whose successor is empty
    std::vector<int> normal_beads(int r) const;

    std::vector<int> levels() const;

    std::string dump() const;  // rows of e positions, filled/empty marks

    friend bool operator==(const Abacus& a, const Abacus& b) {
        return a.e_ == b.e_ && a.base_ == b.base_ && a.occ_ == b.occ_;
    }

private:
    void normalize();
    int e_;
    int base_ = 0;
    std::vector<char> occ_;
};

Abacus abacus_of(const Partition& p, int e);
Partition partition_of(const Abacus& a);

struct CoreQuotient {
    Partition core;
    std::vector<Partition> quotient;
    int weight = 0;
};
CoreQuotient core_quotient_weight(const Abacus& a);
CoreQuotient core_quotient_weight(const Partition& p, int e);
Partition e_core(const Partition& p, int e);
int e_weight(const Partition& p, int e);
bool is_e_core(const Partition& p, int e);

Partition from_core_quotient(const Partition& core, const std::vector<Partition>& quotient, int e);

struct BlockId {
    int e = 2;
    Partition core;
    int weight = 0;
    friend auto operator<=>(const BlockId&, const BlockId&) = default;
    friend bool operator==(const BlockId&, const BlockId&) = default;
};
BlockId block_of(const Partition& p, int e);
std::vector<Partition> enumerate_block(const BlockId& b);
std::vector<Partition> e_cores_up_to(int e, int max_size);

std::optional<Partition> crystal_E(const Partition& p, int i, int e);
std::optional<Partition> crystal_F(const Partition& p, int i, int e);
std::optional<Abacus> crystal_E(const Abacus& a, int i);
std::optional<Abacus> crystal_F(const Abacus& a, int i);
Abacus weyl_s(const Abacus& a, int i);
Partition weyl_s(const Partition& p, int i, int e);

// Runner levels of an e-core: level r = (top bead on runner r - r)/e + 1.
std::vector<int> core_levels(const Partition& core, int e);
Partition core_from_levels(const std::vector<int>& levels);
int removable_count(const std::vector<int>& levels, int a);
int addable_count(const std::vector<int>& levels, int a);  // addable on runner a-1
std::vector<int> weyl_levels(std::vector<int> levels, int a);

bool is_rouquier(const BlockId& b);
// smallest s in [0,e) such that the beta-set shifted by s is Rouquier
std::optional<int> rouquier_charge(const BlockId& b);

// one core per charge whose runner gaps are exactly as small as weight w allows, smallest first
std::vector<Partition> rouquier_cores(int e, int w);

Partition add_full_runner(const Partition& p, int e);

struct ChainStep {
    int a = 0;  // residue
    int k = 0;  // removable beads on runner a of the earlier core
    friend bool operator==(const ChainStep&, const ChainStep&) = default;
};
// steps carrying a Rouquier core of the same weight to b's core, earliest first
std::vector<ChainStep> scopes_chain(const BlockId& b);
Partition chain_start_core(const BlockId& b, const std::vector<ChainStep>& chain);

}  // namespace focktiles
