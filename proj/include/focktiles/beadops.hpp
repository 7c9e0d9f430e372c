#pragma once

#include "focktiles/abacus.hpp"
#include "focktiles/labels.hpp"
#include "focktiles/partition.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace focktiles {

// min{a > x : a not in S, a - e in S}; throws std::domain_error when x - e >= max(S)
int bead_target(const Abacus& s, int x);
// B_x: slide the bead at b_S(x) - e down to b_S(x)
Abacus bead_op(const Abacus& s, int x, int* landing = nullptr);
// B_{x+le} o ... o B_{x+e} o B_{x-(k-1)e} o ... o B_x; landings in application order
Abacus bead_op_kl(const Abacus& s, int x, int k, int l, std::vector<int>* landings = nullptr);

struct MoveOneTrace {
    int r = 0;
    int start = 0;   // q_r
    int bead = 0;    // b_r
    int gap = 0;     // g_r
    Partition sigma;
    int k = 0, l = 0;
    std::vector<int> landings;
    Partition result;
};

// the partition whose z-label is z(lambda) + eps_r, built by bead operations and checked by
// recomputing z; std::domain_error when the construction misses the target
Partition move_one(const Partition& lambda, int r, int e, MoveOneTrace* trace = nullptr);

struct MoveStep {
    int r = 0;
    Partition partition;
    ZLabel z;
};

// failure of a multi-step move, carrying the steps taken so far
class MoveError : public std::domain_error {
public:
    MoveError(const std::string& what, std::vector<MoveStep> trace)
        : std::domain_error(what), trace_(std::move(trace)) {}
    const std::vector<MoveStep>& trace() const { return trace_; }

private:
    std::vector<MoveStep> trace_;
};

// moves along gamma (1-based indices), taking a maximal remaining index at each step;
// falls back to the other maximal choices when a route fails
Partition move_along(const Partition& lambda, const std::vector<int>& gamma, int e,
                     std::vector<MoveStep>* trace = nullptr);
// moves in exactly the given order
Partition move_in_order(const Partition& lambda, const std::vector<int>& order, int e,
                        std::vector<MoveStep>* trace = nullptr);

Partition lambda_of_hook(const Partition& lambda, const RimHook& hook, int e);

Partition mullineux_crystal(const Partition& lambda, int e);
Partition mullineux_fast(const Partition& lambda, int e, std::vector<MoveStep>* trace = nullptr);

// (e - z_w, ..., e - z_1)
ZLabel mullineux_label(const ZLabel& z, int e);

}  // namespace focktiles
