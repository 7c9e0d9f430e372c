#include "focktiles/verify.hpp"

#include "focktiles/beadops.hpp"
#include "focktiles/canonical.hpp"
#include "focktiles/parallel.hpp"
#include "focktiles/polytope.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>

namespace focktiles {

namespace {

Partition P(const std::string& s) { return parse_partition(s); }

std::string label_str(const ZLabel& z) {
    std::string s = "(";
    for (size_t i = 0; i < z.size(); ++i) s += (i ? "," : "") + std::to_string(z[i]);
    return s + ")";
}

long long binom(long long n, long long k) {
    if (k < 0 || n < k) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Thread-safe record of checks and the first failure.
class Tally {
public:
    void expect(bool ok, const std::function<std::string()>& what) {
        ++checks_;
        if (ok) return;
        std::lock_guard lock(m_);
        if (failure_.empty()) failure_ = what();
    }
    void fail(const std::string& what) { expect(false, [&] { return what; }); }
    long long checks() const { return checks_; }
    bool ok() const { return failure_.empty(); }
    const std::string& failure() const { return failure_; }

private:
    std::atomic<long long> checks_{0};
    std::mutex m_;
    std::string failure_;
};

struct BlockSet {
    int e, w, max_core;
};

// (e,w) pairs and core bound of the oracle comparison
const std::vector<BlockSet> oracle_blocks = {{4, 2, 6}, {4, 3, 6}, {5, 2, 6}, {5, 3, 6}, {6, 2, 6}, {6, 3, 6}};

// larger e, where 4-increasing columns of weight 3 and nontrivial exceptional families exist
const std::vector<BlockSet> wide_blocks = {{9, 2, 6}, {9, 3, 6}, {10, 3, 6}, {12, 3, 4}};

std::vector<BlockSet> with_wide(std::vector<BlockSet> sets) {
    sets.insert(sets.end(), wide_blocks.begin(), wide_blocks.end());
    return sets;
}

std::vector<BlockId> expand(const std::vector<BlockSet>& sets) {
    std::vector<BlockId> out;
    for (const auto& s : sets)
        for (const auto& c : e_cores_up_to(s.e, s.max_core)) out.push_back({s.e, c, s.w});
    return out;
}

FockVector closed_column(const Partition& mu, const std::vector<Partition>& members, int e) {
    FockVector v;
    for (const auto& lam : members) v.add(lam, d_closed(lam, mu, e));
    return v;
}

std::string column_diff(const FockVector& got, const FockVector& want) {
    std::set<Partition> keys;
    for (const auto& [p, c] : got.terms()) keys.insert(p);
    for (const auto& [p, c] : want.terms()) keys.insert(p);
    for (const auto& p : keys)
        if (got.coeff(p) != want.coeff(p))
            return "at " + to_string(p) + ": " + got.coeff(p).str() + " vs " + want.coeff(p).str();
    return "equal";
}

// (mu, members) pairs over a block list
struct Column {
    Partition mu;
    int e;
    const std::vector<Partition>* members;
};

std::vector<Column> columns(const std::vector<BlockId>& blocks, std::vector<std::vector<Partition>>& storage,
                            const std::function<bool(const Partition&, int)>& keep) {
    storage.clear();
    storage.reserve(blocks.size());
    for (const auto& b : blocks) storage.push_back(enumerate_block(b));
    std::vector<Column> out;
    for (size_t i = 0; i < blocks.size(); ++i)
        for (const auto& mu : storage[i])
            if (keep(mu, blocks[i].e)) out.push_back({mu, blocks[i].e, &storage[i]});
    return out;
}

bool four_increasing_regular(const Partition& mu, int e) { return is_e_regular(mu, e) && is_m_increasing(mu, e, 4); }

void suite_worked_examples(Tally& t) {
    auto lam = P("5,5,4,2,2,2,1,1");
    t.expect(z_label(lam, 4) == ZLabel{1, 1, 2, 2, 1}, [&] { return "z" + label_str(z_label(lam, 4)); });
    t.expect(e_core(lam, 4) == P("2"), [&] { return "core " + to_string(e_core(lam, 4)); });
    auto q = core_quotient_weight(P("10,4,2,1,1"), 4).quotient;
    t.expect(q == std::vector<Partition>{{}, P("2"), P("1"), P("1")}, [] { return std::string("quotient of (10,4,2,1,1)"); });

    auto hooks = hooks_e(lam, 4);
    t.expect(hooks.size() == 5, [] { return std::string("rimhook count"); });
    for (const auto& h : hooks)
        if (h.size == 12) t.expect(lambda_of_hook(lam, h, 4) == P("6,5,5,2,2,2"), [] { return std::string("lambda_H"); });
    if (hooks.size() == 5)
        t.expect(lambda_of_hook(lam, hooks[4], 4) == P("6,5,3,2,2,2,1,1"), [] { return std::string("lambda_H5"); });

    t.expect(move_one(P("7,3,3,2,2,1"), 3, 4) == P("9,3,2,2,2"), [] { return std::string("move_one"); });
    t.expect(move_along(P("7,3,3,2,2,1"), {2, 3}, 4) == P("10,4,2,1,1"), [] { return std::string("move_along"); });

    auto check_d = [&](const std::string& name, const Laurent& got, const Laurent& want) {
        t.expect(got == want, [&] { return name + " = " + got.str() + ", expected " + want.str(); });
    };
    check_d("LLT d((5,5,4,2,2,2,1,1),(6,5,5,2,2,2))", llt_G(P("6,5,5,2,2,2"), 4).coeff(lam), Laurent::q());
    check_d("LLT d((5,5,4,2,2,2,1,1),(6,5,4,2,2,2,1))", llt_G(P("6,5,4,2,2,2,1"), 4).coeff(lam), Laurent::q(2));
    check_d("LLT d((5,3,2,1,1),(6,3,2,1))", llt_G(P("6,3,2,1"), 3).coeff(P("5,3,2,1,1")), Laurent::q() + Laurent::q(3));
    auto big_l = P("16,8,1^13"), big_m = P("17,7,2^4,1^5");
    check_d("closed d(e=10)", d_closed(big_l, big_m, 10), Laurent::q(2));
    check_d("inductive d(e=10)", inductive_G(big_m, 10).coeff(big_l), Laurent::q(2));
    BlockId b2 = block_of(P("5"), 2);
    check_d("Rouquier d((3,1,1),(5))", rouquier_d(P("3,1,1"), P("5"), b2), Laurent::q());
    check_d("Rouquier d((3,2),(5))", rouquier_d(P("3,2"), P("5"), b2), Laurent());
}

void suite_oracle(Tally& t) {
    std::vector<std::vector<Partition>> store;
    auto cols = columns(expand(with_wide(oracle_blocks)), store, four_increasing_regular);
    parallel_for(cols.size(), [&](size_t i) {
        const auto& c = cols[i];
        auto g = llt_G(c.mu, c.e);
        auto want = closed_column(c.mu, *c.members, c.e);
        t.expect(g == want, [&] { return "e=" + std::to_string(c.e) + " mu=" + to_string(c.mu) + " " + column_diff(g, want); });
    });
}

void suite_inductive(Tally& t) {
    std::vector<std::vector<Partition>> store;
    auto blocks = expand(with_wide(oracle_blocks));
    auto cols = columns(blocks, store, [](const Partition& mu, int e) { return is_m_increasing(mu, e, 4); });
    parallel_for(cols.size(), [&](size_t i) {
        const auto& c = cols[i];
        auto g = inductive_G(c.mu, c.e);
        auto want = closed_column(c.mu, *c.members, c.e);
        t.expect(g == want, [&] { return "e=" + std::to_string(c.e) + " mu=" + to_string(c.mu) + " " + column_diff(g, want); });
        // every Scopes pair with this block on top
        BlockId b = block_of(c.mu, c.e);
        for (int a = 0; a < c.e; ++a) {
            Abacus core(c.e, b.core);
            int k = static_cast<int>(core.removable(a).size());
            if (k == 0 || !core.addable((a + c.e - 1) % c.e).empty()) continue;
            t.expect(apply_E(g, a, k + 2, c.e).is_zero(), [&] { return "E^(k+2) G(" + to_string(c.mu) + ") != 0"; });
            t.expect(apply_F(g, a, 2, c.e).is_zero(), [&] { return "F^(2) G(" + to_string(c.mu) + ") != 0"; });
        }
    });
}

void suite_rouquier(Tally& t) {
    for (int e = 2; e <= 8; ++e)
        for (int w = 1; w <= 3; ++w) {
            auto cores = rouquier_cores(e, w);
            size_t use = e == 8 && w == 3 ? 1 : 2;
            for (size_t ci = 0; ci < std::min(use, cores.size()); ++ci) {
                BlockId b{e, cores[ci], w};
                auto members = enumerate_block(b);
                std::vector<Partition> mus;
                for (const auto& mu : members)
                    if (is_m_increasing(mu, e, 0)) mus.push_back(mu);
                parallel_for(mus.size(), [&](size_t i) {
                    const auto& mu = mus[i];
                    FockVector lm, hooks;
                    for (const auto& lam : members) {
                        lm.add(lam, rouquier_d(lam, mu, b));
                        hooks.add(lam, rouquier_d_hooks(lam, mu, b));
                    }
                    auto closed = closed_column(mu, members, e);
                    auto where = [&] { return "e=" + std::to_string(e) + " w=" + std::to_string(w) + " mu=" + to_string(mu); };
                    t.expect(lm == hooks, [&] { return where() + " LM vs hook form " + column_diff(lm, hooks); });
                    t.expect(lm == closed, [&] { return where() + " LM vs closed " + column_diff(lm, closed); });
                    if (is_e_regular(mu, e)) {
                        auto g = llt_G(mu, e);
                        t.expect(lm == g, [&] { return where() + " LM vs LLT " + column_diff(lm, g); });
                    }
                });
            }
        }
}

void suite_figures(Tally& t) {
    auto t2 = build_tiling({17, P("5,3,1"), 2});
    int n2 = generic_owner_count(t2);
    t.expect(n2 == (17 - 10) * (17 - 11) / 2, [&] { return "e=17 generic cells " + std::to_string(n2); });
    auto t3 = build_tiling({25, P("15,1^14"), 3});
    int n3 = generic_owner_count(t3), c3 = generic_translation_classes(t3);
    t.expect(n3 == 20, [&] { return "e=25 generic cells " + std::to_string(n3); });
    t.expect(c3 == 7, [&] { return "e=25 translation classes " + std::to_string(c3); });
}

void suite_tiling_laws(Tally& t) {
    auto sets = oracle_blocks;
    sets.push_back({12, 3, 6});
    for (const auto& b : expand(sets)) {
        auto tiling = build_tiling(b);
        auto where = "e=" + std::to_string(b.e) + " core " + to_string(b.core) + " w=" + std::to_string(b.weight) + ": ";
        for (const auto& r : {check_union(tiling), check_cube_injective(tiling), check_common_faces(tiling)})
            t.expect(r.ok, [&] { return where + r.detail; });
    }
}

void suite_counting(Tally& t) {
    for (int e = 4; e <= 9; ++e)
        for (int w = 1; w <= 3; ++w) {
            for (const auto& core : {Partition{}, e_cores_up_to(e, 4).back()}) {
                BlockContext ctx({e, core, w});
                long long size = static_cast<long long>(ctx.members().size());
                if (w == 2) t.expect(size == e * (e + 3) / 2, [&] { return "block size e=" + std::to_string(e) + " w=2"; });
                if (w == 3)
                    t.expect(size == e * (e + 1) * (e + 8) / 6, [&] { return "block size e=" + std::to_string(e) + " w=3"; });
                for (int m = 0; m <= 4; ++m) {
                    long long count = 0;
                    for (const auto& p : ctx.members()) count += is_m_increasing(ctx.z(p), m);
                    long long want = binom(e - (m - 1) * (w - 1), w);
                    t.expect(count == want, [&] {
                        return "e=" + std::to_string(e) + " w=" + std::to_string(w) + " m=" + std::to_string(m) + ": " +
                               std::to_string(count) + " vs " + std::to_string(want);
                    });
                }
            }
        }
}

void suite_mullineux(Tally& t) {
    std::vector<std::vector<Partition>> store;
    auto blocks = expand(oracle_blocks);
    auto fast_cols = columns(expand(with_wide(oracle_blocks)), store, four_increasing_regular);
    for (const auto& c : fast_cols) {
        auto crystal = mullineux_crystal(c.mu, c.e);
        auto fast = mullineux_fast(c.mu, c.e);
        t.expect(crystal == fast, [&] { return "crystal vs fast at " + to_string(c.mu); });
        t.expect(z_label(fast, c.e) == mullineux_label(z_label(c.mu, c.e), c.e),
                 [&] { return "z of the image of " + to_string(c.mu); });
    }
    std::vector<std::vector<Partition>> store_regular;
    auto regular = columns(blocks, store_regular, [](const Partition& mu, int e) { return is_e_regular(mu, e) && mu.size() <= 24; });
    parallel_for(regular.size(), [&](size_t i) {
        const auto& c = regular[i];
        int w = e_weight(c.mu, c.e);
        auto g = llt_G(c.mu, c.e);
        auto star = mullineux_crystal(c.mu, c.e);
        auto h = llt_G(star, c.e);
        t.expect(g.size() == h.size(), [&] { return "support sizes differ at " + to_string(c.mu); });
        for (const auto& [lam, d] : g.terms()) {
            auto want = d.bar().shifted(w);
            t.expect(h.coeff(conjugate(lam)) == want, [&] { return "column symmetry at " + to_string(c.mu) + ", " + to_string(lam); });
        }
    });
}

void suite_labels(Tally& t) {
    std::mt19937 rng(20240607);
    for (const auto& b : expand(oracle_blocks)) {
        BlockContext ctx(b);
        std::set<ZLabel> seen;
        for (const auto& p : ctx.members()) {
            const auto& z = ctx.z(p);
            if (!is_m_increasing(z, 0)) continue;
            bool in_range = true;
            for (int v : z) in_range = in_range && v >= 0 && v < b.e;
            t.expect(in_range && seen.insert(z).second, [&] { return "label " + label_str(z) + " repeated or out of range"; });
            for (int trial = 0; trial < 8; ++trial) {
                int len = std::uniform_int_distribution<int>(1, 8)(rng);
                Partition cur = p;
                for (int s = 0; s < len; ++s) {
                    int a = std::uniform_int_distribution<int>(0, b.e - 1)(rng);
                    cur = weyl_s(cur, a, b.e);
                    t.expect(z_label(cur, b.e) == z, [&] { return "z changes along a Weyl word from " + to_string(p); });
                }
            }
        }
        t.expect(static_cast<long long>(seen.size()) == binom(b.e + b.weight - 1, b.weight),
                 [&] { return "label count in block of core " + to_string(b.core); });
    }
}

struct Suite {
    double limit;
    std::function<void(Tally&)> run;
    std::string covers;
};

const std::map<std::string, Suite>& suites() {
    static const std::map<std::string, Suite> s = {
        {"AC-1", {10, suite_worked_examples, "worked examples"}},
        {"AC-2", {300, suite_oracle, "LLT vs closed formula"}},
        {"AC-3", {600, suite_inductive, "inductive vs closed formula"}},
        {"AC-4", {120, suite_rouquier, "Rouquier formulas"}},
        {"AC-5", {60, suite_figures, "tiling figures"}},
        {"AC-6", {300, suite_tiling_laws, "discrete tiling laws"}},
        {"AC-7", {600, suite_counting, "block and label counts"}},
        {"AC-8", {300, suite_mullineux, "Mullineux"}},
        {"AC-9", {600, suite_labels, "label bijection and Weyl orbits"}},
    };
    return s;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [name, s] : suites()) out.push_back(name);
    return out;
}

SuiteResult run_suite(const std::string& name) {
    auto it = suites().find(name);
    if (it == suites().end()) throw std::invalid_argument("unknown suite " + name);
    SuiteResult r;
    r.name = name;
    r.limit_seconds = it->second.limit;
    Tally t;
    auto start = std::chrono::steady_clock::now();
    try {
        it->second.run(t);
    } catch (const std::exception& ex) {
        t.fail(std::string("exception: ") + ex.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.checks = t.checks();
    r.pass = t.ok() && r.seconds <= r.limit_seconds;
    if (!t.ok())
        r.detail = t.failure();
    else if (r.seconds > r.limit_seconds)
        r.detail = "over the time limit";
    else
        r.detail = it->second.covers;
    return r;
}

std::string format_result(const SuiteResult& r) {
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.1f s of %.0f s", r.seconds, r.limit_seconds);
    return r.name + (r.pass ? " PASS (" : " FAIL (") + r.detail + "; " + std::to_string(r.checks) + " checks; " + timing + ")";
}

}  // namespace focktiles
