#include <doctest.h>

#include "focktiles/beadops.hpp"
#include "focktiles/canonical.hpp"
#include "focktiles/polytope.hpp"

#include <algorithm>
#include <set>

using namespace focktiles;

namespace {

Partition P(const std::string& s) { return parse_partition(s); }

ZLabel plus(ZLabel z, const ZLabel& d) {
    for (size_t i = 0; i < z.size(); ++i) z[i] += d[i];
    return z;
}

bool zero_increasing_in_range(const ZLabel& z, int e) {
    for (int v : z)
        if (v < 0 || v >= e) return false;
    return is_m_increasing(z, 0);
}

// hook-quotient members of every block with the given e, weight and cores up to max_core
template <class F>
void for_hook_quotient(int e, int w, int max_core, F&& f) {
    for (const auto& c : e_cores_up_to(e, max_core))
        for (const auto& p : enumerate_block({e, c, w}))
            if (is_hook_quotient(p, e)) f(p);
}

}  // namespace

TEST_CASE("bead target") {
    CHECK(bead_target(Abacus(2, P("1")), -1) == 2);
    CHECK(bead_target(Abacus(2, Partition{}), -2) == 0);
    CHECK_THROWS_AS(bead_target(Abacus(2, Partition{}), 1), std::domain_error);
    Abacus s(3, P("4,2,1"));
    CHECK(bead_op_kl(s, 0, 1, 0) == bead_op(s, 0));
}

TEST_CASE("bead operations preserve the bead count") {
    for (int e = 2; e <= 4; ++e)
        for (int n = 0; n <= 8; ++n)
            for (const auto& p : partitions_of(n)) {
                Abacus s(e, p);
                for (int x = -e; x < s.max_bead() + e; ++x) {
                    Abacus t = bead_op(s, x);
                    CHECK(t.charge() == s.charge());
                    CHECK(t.partition().size() == p.size() + e);
                }
            }
}

TEST_CASE("single moves") {
    MoveOneTrace tr;
    auto nu = move_one(P("7,3,3,2,2,1"), 3, 4, &tr);
    CHECK(nu == P("9,3,2,2,2"));
    CHECK(tr.r == 3);
    CHECK(tr.result == nu);
    CHECK(tr.k >= 1);
    CHECK(static_cast<int>(tr.landings.size()) == tr.k + tr.l);
    CHECK(move_one(nu, 2, 4) == P("10,4,2,1,1"));
    CHECK_THROWS_AS(move_one(P("7,3,3,2,2,1"), 9, 4), std::invalid_argument);
}

TEST_CASE("moving along a set of generators") {
    std::vector<MoveStep> trace;
    CHECK(move_along(P("7,3,3,2,2,1"), {2, 3}, 4, &trace) == P("10,4,2,1,1"));
    REQUIRE(trace.size() == 2);
    CHECK(trace[0].partition == P("9,3,2,2,2"));
    CHECK(move_along(P("7,3,3,2,2,1"), {}, 4) == P("7,3,3,2,2,1"));
    try {
        move_in_order(P("7,3,3,2,2,1"), {2, 3}, 4);
        FAIL("wrong order should fail");
    } catch (const MoveError& ex) {
        REQUIRE(ex.trace().size() == 1);
        CHECK(ex.trace()[0].partition == P("7,4,4,1,1,1"));
        CHECK(std::string(ex.what()).find("hook-quotient") != std::string::npos);
    }
}

TEST_CASE("partitions attached to rimhooks") {
    auto lam = P("5,5,4,2,2,2,1,1");
    auto hooks = hooks_e(lam, 4);
    REQUIRE(hooks.size() == 5);
    for (const auto& h : hooks)
        if (h.size == 12) CHECK(lambda_of_hook(lam, h, 4) == P("6,5,5,2,2,2"));
    CHECK(lambda_of_hook(lam, hooks[4], 4) == P("6,5,3,2,2,2,1,1"));
    auto mb = modified_basis(lam, 4);
    for (const auto& h : hooks) {
        auto target = plus(z_label(lam, 4), mb.plain[movement_index_of_hook(lam, h, 4) - 1]);
        if (!zero_increasing_in_range(target, 4)) continue;
        auto mu = lambda_of_hook(lam, h, 4);
        CHECK(z_label(mu, 4) == target);
        CHECK(block_of(mu, 4) == block_of(lam, 4));
    }
}

TEST_CASE("move_one reaches z + eps_r") {
    for (int e = 5; e <= 10; ++e)
        for (int w = 1; w <= 3; ++w)
            for_hook_quotient(e, w, e <= 6 ? 6 : 3, [&](const Partition& p) {
                auto mb = modified_basis(p, e);
                auto z = z_label(p, e);
                for (int r = 1; r <= w; ++r) {
                    auto target = plus(z, mb.plain[r - 1]);
                    if (!zero_increasing_in_range(target, e)) continue;
                    MoveOneTrace tr;
                    auto mu = move_one(p, r, e, &tr);
                    CHECK(z_label(mu, e) == target);
                    // landing positions of the downward sweep descend by at least e
                    for (int i = 0; i + 1 < tr.k; ++i) CHECK(tr.landings[i + 1] <= tr.landings[i] - e);
                    if (tr.l > 0) CHECK(tr.landings[tr.k] <= tr.landings[0] + e);
                }
            });
}

TEST_CASE("starting positions away from the moved index stay put") {
    for (int e = 4; e <= 7; ++e)
        for (int w = 2; w <= 3; ++w)
            for_hook_quotient(e, w, 4, [&](const Partition& p) {
                auto mb = modified_basis(p, e);
                auto before = movements(p, e);
                for (int r = 1; r <= w; ++r) {
                    auto target = plus(z_label(p, e), mb.plain[r - 1]);
                    if (!zero_increasing_in_range(target, e)) continue;
                    auto mu = move_one(p, r, e);
                    auto after = movements(mu, e);
                    std::set<int> starts;
                    for (const auto& m : after) starts.insert(m.q);
                    for (int t = 1; t <= w; ++t)
                        if (!succ_geq(p, e, t, r)) CHECK(starts.count(before[t - 1].q) == 1);
                }
            });
}

TEST_CASE("no removable bead survives moves on runners a and a-1") {
    int checked = 0;
    for (int e = 9; e <= 11; ++e)
        for (int w = 2; w <= 3; ++w)
            for_hook_quotient(e, w, 4, [&](const Partition& p) {
                Abacus s(e, p);
                auto mv = movements(p, e);
                for (int a = 0; a < e; ++a) {
                    if (!s.removable(a).empty()) continue;
                    std::vector<int> gamma;
                    for (const auto& m : mv) {
                        int run = s.runner(m.q);
                        if (run == a || run == (a + e - 1) % e) gamma.push_back(m.index);
                    }
                    if (gamma.empty()) continue;
                    auto target = plus(z_label(p, e), epsilon_sum(modified_basis(p, e), gamma));
                    if (!zero_increasing_in_range(target, e) || !is_m_increasing(target, 4)) continue;
                    auto mu = move_along(p, gamma, e);
                    CHECK(Abacus(e, mu).removable(a).empty());
                    ++checked;
                }
            });
    CHECK(checked > 0);
}

TEST_CASE("Mullineux map by crystal recursion") {
    CHECK(mullineux_crystal(Partition{}, 3).empty());
    CHECK_THROWS_AS(mullineux_crystal(P("1,1,1"), 3), std::domain_error);
    for (int n = 0; n <= 10; ++n)
        for (const auto& p : partitions_of(n))
            if (is_e_regular(p, 2)) CHECK(mullineux_crystal(p, 2) == p);
    for (int e = 3; e <= 5; ++e)
        for (int n = 0; n <= 10; ++n)
            for (const auto& p : partitions_of(n)) {
                if (!is_e_regular(p, e)) continue;
                auto m = mullineux_crystal(p, e);
                CHECK(m.size() == p.size());
                CHECK(is_e_regular(m, e));
                CHECK(mullineux_crystal(m, e) == p);
                CHECK(e_core(m, e) == conjugate(e_core(p, e)));
            }
}

TEST_CASE("Mullineux reverses column quotients in Rouquier blocks") {
    for (int e = 3; e <= 5; ++e)
        for (int w = 1; w <= 3; ++w) {
            auto core = rouquier_cores(e, w).front();
            BlockId b{e, core, w};
            int s = *rouquier_charge(b);
            for (const auto& p : enumerate_block(b)) {
                auto cq = core_quotient_weight(p, e);
                std::vector<Partition> rot(e);
                for (int r = 0; r < e; ++r) rot[(r + s) % e] = cq.quotient[r];
                bool columns = rot[0].empty();
                for (const auto& part : rot)
                    for (int v : part.parts) columns = columns && v == 1;
                if (!columns || !is_e_regular(p, e)) continue;
                auto m = mullineux_crystal(p, e);
                auto mq = core_quotient_weight(m, e);
                int sm = *rouquier_charge(block_of(m, e));
                std::vector<Partition> mrot(e);
                for (int r = 0; r < e; ++r) mrot[(r + sm) % e] = mq.quotient[r];
                CHECK(mrot[0].empty());
                for (int i = 1; i < e; ++i) CHECK(mrot[i] == rot[e - i]);
            }
        }
}

TEST_CASE("fast Mullineux agrees with the crystal recursion") {
    CHECK(mullineux_label({1, 3, 4}, 10) == ZLabel{6, 7, 9});
    int compared = 0;
    for (int e = 9; e <= 12; ++e)
        for (int w = 1; w <= 3; ++w)
            for (const auto& c : e_cores_up_to(e, w == 3 ? 3 : 6))
                for (const auto& p : enumerate_block({e, c, w})) {
                    if (!is_e_regular(p, e) || !is_m_increasing(p, e, 4)) continue;
                    auto fast = mullineux_fast(p, e);
                    CHECK(fast == mullineux_crystal(p, e));
                    CHECK(z_label(fast, e) == mullineux_label(z_label(p, e), e));
                    ++compared;
                }
    CHECK(compared > 100);
}

TEST_CASE("parallelotope of the conjugate is the starred parallelotope") {
    for (int e = 5; e <= 7; ++e)
        for (int w = 1; w <= 3; ++w)
            for_hook_quotient(e, w, 4, [&](const Partition& p) {
                auto conj = conjugate(p);
                REQUIRE(is_hook_quotient(conj, e));
                std::set<ZLabel> mine, starred;
                for (const auto& v : parallelotope(conj, e).vertices()) mine.insert(v);
                for (const auto& v : parallelotope(p, e).vertices()) starred.insert(mullineux_label(v, e));
                CHECK(mine == starred);
            });
}

TEST_CASE("generator counts of a vertex and its Mullineux image add up to the weight") {
    for (int e = 9; e <= 10; ++e)
        for (int w = 1; w <= 3; ++w)
            for (const auto& c : e_cores_up_to(e, 3)) {
                auto members = enumerate_block({e, c, w});
                for (const auto& mu : members) {
                    if (!is_e_regular(mu, e) || !is_m_increasing(mu, e, 4)) continue;
                    auto star = mullineux_crystal(mu, e);
                    for (const auto& lam : members) {
                        if (!is_hook_quotient(lam, e)) continue;
                        auto g = pi_membership(lam, z_label(mu, e), e);
                        if (!g) continue;
                        auto h = pi_membership(conjugate(lam), z_label(star, e), e);
                        REQUIRE(h);
                        CHECK(static_cast<int>(g->size() + h->size()) == w);
                    }
                }
            }
}

TEST_CASE("canonical columns of Mullineux partners are conjugate-dual") {
    for (int e = 2; e <= 4; ++e)
        for (int n = 0; n <= 11; ++n)
            for (const auto& mu : partitions_of(n)) {
                if (!is_e_regular(mu, e)) continue;
                int w = e_weight(mu, e);
                auto g = llt_G(mu, e);
                auto h = llt_G(mullineux_crystal(mu, e), e);
                CHECK(g.size() == h.size());
                for (const auto& [lam, d] : g.terms()) CHECK(h.coeff(conjugate(lam)) == d.bar().shifted(w));
            }
}
