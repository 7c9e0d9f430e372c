#include "focktiles/beadops.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace focktiles {

namespace {

std::string label_str(const ZLabel& z) {
    std::string s = "(";
    for (size_t i = 0; i < z.size(); ++i) s += (i ? "," : "") + std::to_string(z[i]);
    return s + ")";
}

bool in_range_zero_increasing(const ZLabel& z, int e) {
    for (int v : z)
        if (v < 0 || v > e - 1) return false;
    return is_m_increasing(z, 0);
}

}  // namespace

int bead_target(const Abacus& s, int x) {
    int e = s.e();
    if (x - e >= s.max_bead()) throw std::domain_error("bead target undefined: x - e >= max(S)");
    for (int a = x + 1;; ++a)
        if (!s.has(a) && s.has(a - e)) return a;
}

Abacus bead_op(const Abacus& s, int x, int* landing) {
    int a = bead_target(s, x);
    Abacus t = s;
    t.move(a - s.e(), a);
    if (landing) *landing = a;
    return t;
}

Abacus bead_op_kl(const Abacus& s, int x, int k, int l, std::vector<int>* landings) {
    if (k < 1 || l < 0) throw std::invalid_argument("bead_op_kl needs k >= 1 and l >= 0");
    int e = s.e();
    Abacus t = s;
    auto step = [&](int at) {
        int a = 0;
        t = bead_op(t, at, &a);
        if (landings) landings->push_back(a);
    };
    for (int i = 0; i < k; ++i) step(x - i * e);
    for (int i = 1; i <= l; ++i) step(x + i * e);
    return t;
}

Partition move_one(const Partition& lambda, int r, int e, MoveOneTrace* trace) {
    auto mb = modified_basis(lambda, e);
    auto mv = movements(lambda, e);
    int w = static_cast<int>(mv.size());
    if (r < 1 || r > w) throw std::invalid_argument("movement index out of range");
    ZLabel target = z_label(lambda, e);
    for (int c = 0; c < w; ++c) target[c] += mb.plain[r - 1][c];
    int q = mv[r - 1].q, b = mv[r - 1].b;
    Abacus sigma(e, lambda);
    int g = q - e;
    while (sigma.has(g)) g -= e;
    sigma.move(b, g);
    int k = (q - g) / e, l = (b - q) / e;
    MoveOneTrace local;
    Abacus out = bead_op_kl(sigma, q, k, l, &local.landings);
    Partition mu = out.partition();
    if (z_label(mu, e) != target)
        throw std::domain_error("moving " + to_string(lambda) + " along eps_" + std::to_string(r) +
                                " did not reach " + label_str(target) +
                                (in_range_zero_increasing(target, e) ? "" : ", which is not 0-increasing"));
    if (trace) {
        local.r = r;
        local.start = q;
        local.bead = b;
        local.gap = g;
        local.sigma = sigma.partition();
        local.k = k;
        local.l = l;
        local.result = mu;
        *trace = std::move(local);
    }
    return mu;
}

Partition move_in_order(const Partition& lambda, const std::vector<int>& order, int e, std::vector<MoveStep>* trace) {
    std::vector<MoveStep> steps;
    Partition cur = lambda;
    for (int r : order) {
        if (!is_hook_quotient(cur, e))
            throw MoveError(to_string(cur) + " is not a hook-quotient partition", steps);
        try {
            cur = move_one(cur, r, e);
        } catch (const std::domain_error& ex) {
            throw MoveError(ex.what(), steps);
        }
        steps.push_back({r, cur, z_label(cur, e)});
    }
    if (trace) *trace = steps;
    return cur;
}

namespace {

struct AlongSearch {
    int e;
    std::vector<MoveStep> steps;
    std::optional<std::pair<std::string, std::vector<MoveStep>>> first_failure;

    void fail(const std::string& why) {
        if (!first_failure) first_failure = {why, steps};
    }

    std::optional<Partition> run(const Partition& cur, std::vector<int> remaining) {
        if (remaining.empty()) return cur;
        if (!is_hook_quotient(cur, e)) {
            fail(to_string(cur) + " is not a hook-quotient partition");
            return std::nullopt;
        }
        std::vector<int> maximal;
        for (int r : remaining) {
            bool dominated = false;
            for (int s : remaining)
                if (s != r && succ_geq(cur, e, s, r)) dominated = true;
            if (!dominated) maximal.push_back(r);
        }
        std::sort(maximal.rbegin(), maximal.rend());
        for (int r : maximal) {
            Partition next;
            try {
                next = move_one(cur, r, e);
            } catch (const std::domain_error& ex) {
                fail(ex.what());
                continue;
            }
            steps.push_back({r, next, z_label(next, e)});
            std::vector<int> rest;
            for (int s : remaining)
                if (s != r) rest.push_back(s);
            if (auto done = run(next, rest)) return done;
            steps.pop_back();
        }
        return std::nullopt;
    }
};

}  // namespace

Partition move_along(const Partition& lambda, const std::vector<int>& gamma, int e, std::vector<MoveStep>* trace) {
    auto mb = modified_basis(lambda, e);
    ZLabel target = z_label(lambda, e);
    int w = static_cast<int>(target.size());
    std::vector<int> remaining = gamma;
    std::sort(remaining.begin(), remaining.end());
    if (std::adjacent_find(remaining.begin(), remaining.end()) != remaining.end())
        throw std::invalid_argument("repeated index in gamma");
    for (int r : remaining) {
        if (r < 1 || r > w) throw std::invalid_argument("movement index out of range");
        for (int c = 0; c < w; ++c) target[c] += mb.plain[r - 1][c];
    }
    if (!remaining.empty() && !in_range_zero_increasing(target, e))
        throw std::domain_error("target label " + label_str(target) + " is not 0-increasing");
    AlongSearch s{e, {}, std::nullopt};
    auto done = s.run(lambda, remaining);
    if (!done) throw MoveError(s.first_failure->first, s.first_failure->second);
    if (z_label(*done, e) != target) throw MoveError("route ended away from " + label_str(target), s.steps);
    if (trace) *trace = s.steps;
    return *done;
}

Partition lambda_of_hook(const Partition& lambda, const RimHook& hook, int e) {
    return move_one(lambda, movement_index_of_hook(lambda, hook, e), e);
}

namespace {

Partition mullineux_rec(const Partition& p, int e, std::map<Partition, Partition>& memo) {
    if (p.empty()) return p;
    auto it = memo.find(p);
    if (it != memo.end()) return it->second;
    for (int i = 0; i < e; ++i) {
        auto lower = crystal_E(p, i, e);
        if (!lower) continue;
        auto up = crystal_F(mullineux_rec(*lower, e, memo), (e - i) % e, e);
        if (!up) throw std::logic_error("crystal lift failed in the Mullineux recursion");
        memo.emplace(p, *up);
        return *up;
    }
    throw std::logic_error("e-regular partition without a normal bead");
}

}  // namespace

Partition mullineux_crystal(const Partition& lambda, int e) {
    if (!is_e_regular(lambda, e)) throw std::domain_error("Mullineux map needs an e-regular partition");
    std::map<Partition, Partition> memo;
    return mullineux_rec(lambda, e, memo);
}

Partition mullineux_fast(const Partition& lambda, int e, std::vector<MoveStep>* trace) {
    if (!is_e_regular(lambda, e)) throw std::domain_error("Mullineux map needs an e-regular partition");
    if (!is_hook_quotient(lambda, e) || !is_m_increasing(lambda, e, 0))
        throw std::domain_error("fast Mullineux needs a 0-increasing hook-quotient partition");
    Partition conj = conjugate(lambda);
    std::vector<int> all(e_weight(lambda, e));
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i) + 1;
    return move_along(conj, all, e, trace);
}

ZLabel mullineux_label(const ZLabel& z, int e) {
    ZLabel out(z.rbegin(), z.rend());
    for (int& v : out) v = e - v;
    return out;
}

}  // namespace focktiles
