#pragma once

#include "focktiles/abacus.hpp"
#include "focktiles/labels.hpp"
#include "focktiles/laurent.hpp"
#include "focktiles/partition.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace focktiles {

struct Parallelotope {
    ZLabel anchor;
    ModifiedBasis generators;
    Partition owner;
    std::vector<ZLabel> vertices() const;  // indexed by subset bitmask
};

struct Hypercube {
    HatLabel anchor;
    std::vector<HatLabel> generators;
    Partition owner;
    std::vector<HatLabel> vertices() const;  // same indexing as the parallelotope
};

Parallelotope parallelotope(const Partition& lambda, int e);
Hypercube hypercube(const Partition& lambda, int e);

// Gamma (1-based, ascending) with target = z(lambda) + eps_Gamma, or nullopt
std::optional<std::vector<int>> pi_membership(const Partition& lambda, const ZLabel& target, int e);
// Gamma with target = hat z(lambda) + hat eps_Gamma, or nullopt
std::optional<std::vector<int>> cube_membership(const Partition& lambda, const HatLabel& target, int e);

struct ClosedFormula {
    Laurent value;       // q^|Gamma| from the parallelotope, or 0
    Laurent cube_value;  // q^{box distance} from the hypercube, or 0
    bool hypothesis = false;  // mu is 4-increasing
    bool routes_agree() const { return value == cube_value; }
};
ClosedFormula d_closed_detail(const Partition& lambda, const Partition& mu, int e);
Laurent d_closed(const Partition& lambda, const Partition& mu, int e);

bool in_plus_region(const ZLabel& z, int e, int m);  // 0 <= z_i <= e and m-increasing
bool is_generic(const ZLabel& z, int e);              // 10-increasing and z_w <= e-2

struct TilingCell {
    Partition owner;
    Parallelotope para;
    Hypercube cube;
};

struct Tiling {
    BlockId block;
    std::vector<TilingCell> cells;  // hook-quotient owners, ascending
    int m = 4;
};

Tiling build_tiling(const BlockId& b, int m = 4);
int generic_owner_count(const Tiling& t);
// number of distinct generator multisets among generic owners
int generic_translation_classes(const Tiling& t);

struct TilingReport {
    bool ok = true;
    std::string detail;  // first failure
};
TilingReport check_union(const Tiling& t);        // m-increasing vertices cover the region exactly
TilingReport check_cube_injective(const Tiling& t);  // projection is a bijection on m-increasing cube vertices
TilingReport check_common_faces(const Tiling& t);    // pairwise intersections are common faces

std::vector<std::pair<Partition, Partition>> ext_adjacency(const BlockId& b);

// format: "json", "svg" (w = 2) or "json3d" (w = 3); throws std::invalid_argument otherwise
std::string export_tiling(const Tiling& t, const std::string& format);
Tiling import_tiling_json(const std::string& text);

}  // namespace focktiles
