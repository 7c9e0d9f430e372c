#pragma once

#include "focktiles/abacus.hpp"
#include "focktiles/partition.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace focktiles {

struct BeadMovement {
    int b = 0;      // original bead position
    int q = 0;      // start of the movement; it ends at q - e
    int index = 0;  // 1-based rank in A(lambda)
    friend bool operator==(const BeadMovement&, const BeadMovement&) = default;
};

using ZLabel = std::vector<int>;

// Integer point of the lifted lattice: coefficients of e_i (diag) and e_ij, i<j (upper).
// Indices are 0-based here; JSON output shifts them to 1-based.
struct HatLabel {
    std::vector<int> diag;
    std::map<std::pair<int, int>, int> upper;  // zero entries never stored

    HatLabel() = default;
    explicit HatLabel(int w) : diag(w, 0) {}
    HatLabel& operator+=(const HatLabel& o);
    HatLabel& operator-=(const HatLabel& o);
    friend HatLabel operator+(HatLabel a, const HatLabel& b) { return a += b; }
    friend HatLabel operator-(HatLabel a, const HatLabel& b) { return a -= b; }
    friend bool operator==(const HatLabel&, const HatLabel&) = default;
    friend auto operator<=>(const HatLabel&, const HatLabel&) = default;
    int norm() const;      // box norm: sum of absolute coordinates
    ZLabel project() const;  // e_i -> e_i, e_ij -> e_i - e_j
};

struct ModifiedBasis {
    std::vector<ZLabel> plain;     // epsilon_i, i = 0..w-1
    std::vector<HatLabel> lifted;  // its lift
};

std::vector<BeadMovement> movements(const Partition& p, int e);
RimHook rimhook_of_movement(const Partition& p, const BeadMovement& m, int e);
// index (1-based) of the movement attached to a rimhook of size divisible by e
int movement_index_of_hook(const Partition& p, const RimHook& h, int e);

int z_of_position(const Abacus& a, int x);  // |(x-e, x] \ S|
ZLabel z_label(const Partition& p, int e);
bool is_m_increasing(const ZLabel& z, int m);
bool is_m_increasing(const Partition& p, int e, int m);
bool is_hook_quotient(const Partition& p, int e);

ModifiedBasis modified_basis(const Partition& p, int e);
// i, j are 1-based movement indices
bool succ_geq(const Partition& p, int e, int i, int j);

HatLabel hat_z(const Partition& p, int e);
HatLabel lift(const ZLabel& v);  // lift of a modified basis vector
ZLabel epsilon_sum(const ModifiedBasis& mb, const std::vector<int>& gamma);   // gamma 1-based
HatLabel hat_epsilon_sum(const ModifiedBasis& mb, const std::vector<int>& gamma);

// Per-block memo of members and z-labels. Not shared between threads while filling.
class BlockContext {
public:
    explicit BlockContext(BlockId id);
    const BlockId& id() const { return id_; }
    const std::vector<Partition>& members();
    const ZLabel& z(const Partition& p);
    // 0-increasing member with the given label
    std::optional<Partition> zero_increasing(const ZLabel& target);

private:
    BlockId id_;
    std::optional<std::vector<Partition>> members_;
    std::map<Partition, ZLabel> z_;
    std::optional<std::map<ZLabel, Partition>> inverse_;
};

std::optional<Partition> z_inverse(BlockContext& ctx, const ZLabel& target);
std::optional<Partition> z_inverse(const BlockId& b, const ZLabel& target);

}  // namespace focktiles
