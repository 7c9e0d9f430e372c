#include "focktiles/canonical.hpp"
#include "focktiles/polytope.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace focktiles {

namespace {

int mod(int x, int e) { return ((x % e) + e) % e; }

std::mutex inductive_mutex;
std::map<std::pair<int, Partition>, FockVector> inductive_cache;
std::map<std::pair<BlockId, int>, std::vector<ExceptionalFamily>> family_cache;

// smallest empty position on runner r
int first_gap(const Abacus& s, int r) {
    for (int x = s.base() - s.e();; ++x)
        if (s.runner(x) == r && !s.has(x)) return x;
}

}  // namespace

namespace detail {
void clear_inductive_caches() {
    std::lock_guard lock(inductive_mutex);
    inductive_cache.clear();
    family_cache.clear();
}
}  // namespace detail

ScopesPair scopes_pair(const BlockId& lower, int a) {
    int e = lower.e;
    if (a < 0 || a >= e) throw std::invalid_argument("runner out of range");
    Partition core = weyl_s(lower.core, a, e);
    Abacus s(e, core);
    int k = static_cast<int>(s.removable(a).size());
    if (k < 1 || !s.addable(mod(a - 1, e)).empty())
        throw std::invalid_argument("no Scopes pair ends at this block on runner " + std::to_string(a));
    return {{e, core, lower.weight}, lower, a, k};
}

std::optional<BlockId> generator_block(const ScopesPair& pair) {
    int w = pair.lower.weight - pair.k - 1;
    if (w < 0) return std::nullopt;
    int e = pair.lower.e;
    Abacus s(e, pair.lower.core);
    int bottom = s.top() - 1;
    while (s.runner(bottom) != pair.a || !s.has(bottom)) --bottom;
    s.move(bottom, first_gap(s, mod(pair.a - 1, e)));
    Partition core = s.partition();
    if (!is_e_core(core, e)) throw std::logic_error("generator block core is not an e-core");
    return BlockId{e, core, w};
}

std::optional<ExceptionalFamily> exceptional_family(const Partition& generator, const ScopesPair& pair) {
    int e = pair.lower.e, a = pair.a, k = pair.k;
    auto gb = generator_block(pair);
    if (!gb || block_of(generator, e) != *gb)
        throw std::invalid_argument("generator outside the generator block of the pair");
    Abacus s(e, generator);
    if (!s.removable(a).empty()) throw std::invalid_argument("generator has a removable bead on runner a");
    auto c = s.addable(mod(a - 1, e));
    std::sort(c.begin(), c.end());
    if (static_cast<int>(c.size()) != k + 2) throw std::logic_error("generator without k+2 addable beads");

    ExceptionalFamily fam;
    fam.generator = generator;
    fam.a = a;
    fam.k = k;
    Abacus hat = s;
    for (int x : c) hat.move(x, x + 1);
    fam.hat = hat.partition();
    for (int j = 0; j <= k + 1; ++j) {
        Abacus lo = hat;
        lo.move(c[j] + 1, c[j]);
        fam.lower.push_back(lo.partition());
        Abacus up = s;
        up.move(c[k + 1 - j], c[k + 1 - j] + 1);
        fam.upper.push_back(up.partition());
    }
    for (const auto* list : {&fam.lower, &fam.upper})
        for (const auto& p : *list)
            if (!is_hook_quotient(p, e)) return std::nullopt;

    int y = first_gap(Abacus(e, pair.lower.core), a);
    auto in_region = [&](int q) {
        for (int g = 0; g <= k; ++g)
            if (q == y + g * e || q == y - 1 + g * e) return true;
        return false;
    };
    auto internal_of = [&](const Partition& p) {
        std::vector<int> out;
        for (const auto& m : movements(p, e))
            if (in_region(m.q)) out.push_back(m.index);
        std::sort(out.begin(), out.end());
        return out;
    };
    fam.internal = internal_of(fam.lower[0]);
    if (static_cast<int>(fam.internal.size()) != k + 1) throw std::logic_error("family region holds the wrong number of movements");
    for (const auto* list : {&fam.lower, &fam.upper})
        for (const auto& p : *list)
            if (internal_of(p) != fam.internal) throw std::logic_error("internal coordinates differ across the family");
    int w = pair.lower.weight;
    for (int i = 1; i <= w; ++i)
        if (!std::binary_search(fam.internal.begin(), fam.internal.end(), i)) fam.external.push_back(i);
    for (int j = 0; j <= k + 1; ++j) {
        ZLabel v(w, 0);
        if (j > 0) v[fam.internal[j - 1] - 1] += 1;
        if (j <= k) v[fam.internal[j] - 1] -= 1;
        fam.eta.push_back(v);
        if (j == 0) {
            ZLabel neg(w, 0);
            neg[fam.internal[0] - 1] = 1;
            fam.eta_lifted.push_back(HatLabel(w) - lift(neg));
        } else {
            fam.eta_lifted.push_back(lift(v));
        }
    }
    return fam;
}

std::vector<ExceptionalFamily> hook_quotient_families(const ScopesPair& pair) {
    std::pair key{pair.lower, pair.a};
    {
        std::lock_guard lock(inductive_mutex);
        auto it = family_cache.find(key);
        if (it != family_cache.end()) return it->second;
    }
    std::vector<ExceptionalFamily> out;
    if (auto gb = generator_block(pair))
        for (const auto& g : enumerate_block(*gb)) {
            if (!Abacus(gb->e, g).removable(pair.a).empty()) continue;
            if (auto fam = exceptional_family(g, pair)) out.push_back(std::move(*fam));
        }
    std::lock_guard lock(inductive_mutex);
    family_cache.emplace(key, out);
    return out;
}

FamilyReach family_reach(const ExceptionalFamily& fam, const Partition& mu, int e) {
    FamilyReach r;
    auto z = z_label(mu, e);
    for (const auto& member : fam.lower) {
        auto gamma = pi_membership(member, z, e);
        if (!gamma) continue;
        if (r.n++ == 0)
            for (int g : *gamma)
                r.s += std::binary_search(fam.external.begin(), fam.external.end(), g);
    }
    return r;
}

namespace {

FockVector rouquier_column(const Partition& mu, const BlockId& b) {
    FockVector g;
    for (const auto& lam : enumerate_block(b)) g.add(lam, rouquier_d(lam, mu, b));
    return g;
}

void check_canonical_shape(const FockVector& g, const Partition& mu) {
    for (const auto& [p, c] : g.terms()) {
        bool ok = p == mu ? c == Laurent(1) : c.min_degree() >= 1;
        if (!ok)
            throw std::logic_error("inductive column of " + to_string(mu) + " has coefficient " + c.str() + " at " +
                                   to_string(p));
    }
}

FockVector build_inductive(const Partition& mu, int e) {
    BlockId b = block_of(mu, e);
    if (rouquier_charge(b)) return rouquier_column(mu, b);
    auto chain = scopes_chain(b);
    ScopesPair pair = scopes_pair(b, chain.back().a);
    int a = pair.a;

    auto rem = Abacus(e, mu).removable(a);
    if (!rem.empty()) {
        if (rem.size() != 1) throw std::logic_error("4-increasing exceptional partition with several removable beads");
        Abacus gen(e, mu);
        gen.move(rem[0], rem[0] - 1);
        auto fam = exceptional_family(gen.partition(), pair);
        if (fam && fam->upper[0] == mu) return apply_F(inductive_G(fam->generator, e), a, 1, e);
    }

    auto above = z_inverse(pair.upper, z_label(mu, e));
    if (!above) throw std::logic_error("no partition with the same label in the block above");
    FockVector g = apply_E(inductive_G(*above, e), a, pair.k, e);
    for (const auto& fam : hook_quotient_families(pair)) {
        auto r = family_reach(fam, *above, e);
        if (r.n < 2 || r.s != 0) continue;
        g -= quantum_int(r.n - 1) * apply_F(inductive_G(fam.generator, e), a, 1, e);
    }
    return g;
}

}  // namespace

FockVector inductive_G(const Partition& mu, int e) {
    if (!is_m_increasing(mu, e, 4)) throw std::domain_error("inductive construction needs a 4-increasing partition");
    if (e_weight(mu, e) == 0) return FockVector(mu);
    {
        std::lock_guard lock(inductive_mutex);
        auto it = inductive_cache.find({e, mu});
        if (it != inductive_cache.end()) return it->second;
    }
    FockVector g = build_inductive(mu, e);
    check_canonical_shape(g, mu);
    std::lock_guard lock(inductive_mutex);
    inductive_cache.emplace(std::pair{e, mu}, g);
    return g;
}

}  // namespace focktiles
