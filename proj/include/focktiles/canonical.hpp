#pragma once

#include "focktiles/abacus.hpp"
#include "focktiles/fock.hpp"
#include "focktiles/labels.hpp"
#include "focktiles/laurent.hpp"
#include "focktiles/partition.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace focktiles {

struct LadderStep {
    int residue = 0;
    int multiplicity = 0;
    friend bool operator==(const LadderStep&, const LadderStep&) = default;
};

// ladders {(i,j) : i + (e-1)(j-1) = k} meeting the diagram, bottom ladder first
std::vector<LadderStep> ladder_sequence(const Partition& mu, int e);

// ladder monomial applied to the empty partition
FockVector ladder_vector(const Partition& mu, int e);

// the skew ladders of mu over its e-core applied to the core; bar-invariant, and returned
// only when it is unitriangular at mu, in which case it can replace the ladder vector
std::optional<FockVector> core_ladder_vector(const Partition& mu, int e);

// bar-symmetric Gaussian elimination of a bar-invariant vector that is unitriangular at mu
FockVector eliminate_to_canonical(FockVector v, const Partition& mu, int e);

// canonical basis column by the ladder construction and bar-symmetric elimination; cached
FockVector llt_G(const Partition& mu, int e);
void clear_canonical_caches();

long long lr_coefficient(const Partition& rho, const Partition& sigma, const Partition& tau);

// e-quotient read on the Rouquier-shifted abacus; throws if b is not Rouquier at any charge
std::vector<Partition> rouquier_quotient(const Partition& p, const BlockId& b);

// Leclerc-Miyachi sum over the alpha/beta tuples
Laurent rouquier_d(const Partition& lambda, const Partition& mu, const BlockId& b);
// the same value read off the hook shapes of lambda; requires mu 0-increasing
Laurent rouquier_d_hooks(const Partition& lambda, const Partition& mu, const BlockId& b);

// Scopes [w:k]-pair: the core of `upper` has k removable beads on runner a and no addable
// bead on runner a-1, and `lower` = s_a(upper)
struct ScopesPair {
    BlockId upper;
    BlockId lower;
    int a = 0;
    int k = 0;
};
ScopesPair scopes_pair(const BlockId& lower, int a);
// block of weight w-k-1 holding the family generators; nullopt when w-k-1 < 0
std::optional<BlockId> generator_block(const ScopesPair& pair);

// The 2(k+2) partitions F-generated from a generator with E_a(generator) = 0.
// lower[j] lies in pair.upper, upper[j] in pair.lower.
struct ExceptionalFamily {
    Partition generator;
    int a = 0;
    int k = 0;
    Partition hat;                 // F^{(k+2)}(generator)
    std::vector<Partition> lower;  // F^{(k+1)}(generator) = sum_j q^j lower[j]
    std::vector<Partition> upper;  // F(generator) = sum_j q^j upper[j]
    std::vector<int> internal;     // movement indices i_0 < ... < i_k, 1-based
    std::vector<int> external;
    std::vector<ZLabel> eta;        // eta_0..eta_{k+1}
    std::vector<HatLabel> eta_lifted;
};
// nullopt when some member is not hook-quotient
std::optional<ExceptionalFamily> exceptional_family(const Partition& generator, const ScopesPair& pair);
std::vector<ExceptionalFamily> hook_quotient_families(const ScopesPair& pair);

// number of members lower[j] whose parallelotope contains z(mu), and the number of external
// generators needed to reach it (n and s); n = 0 means mu is not reached
struct FamilyReach {
    int n = 0;
    int s = 0;
};
FamilyReach family_reach(const ExceptionalFamily& fam, const Partition& mu, int e);

// canonical basis column of a 4-increasing partition, built inductively along a Scopes chain
// from a Rouquier block; cached
FockVector inductive_G(const Partition& mu, int e);

}  // namespace focktiles
