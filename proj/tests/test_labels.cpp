#include <doctest.h>

#include "focktiles/labels.hpp"

#include <random>
#include <set>

using namespace focktiles;

namespace {

long long binom(int n, int k) {
    if (k < 0 || n < k) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

ZLabel unit(int w, int i) {
    ZLabel v(w, 0);
    v[i - 1] = 1;
    return v;
}

ZLabel diff(int w, int i, int j) {
    ZLabel v(w, 0);
    v[i - 1] = 1;
    v[j - 1] = -1;
    return v;
}

}  // namespace

TEST_CASE("bead movements") {
    CHECK(movements(parse_partition("5,5,4,2,2,2,1,1"), 4).size() == 5);
    CHECK(movements(parse_partition("2"), 4).empty());
    CHECK(movements(parse_partition("16,8,1^13"), 10).size() == 3);
    for (int e = 2; e <= 4; ++e)
        for (int n = 0; n <= 12; ++n)
            for (const auto& p : partitions_of(n)) {
                auto mv = movements(p, e);
                CHECK(static_cast<int>(mv.size()) == e_weight(p, e));
                for (size_t i = 1; i < mv.size(); ++i)
                    CHECK((mv[i - 1].q < mv[i].q || (mv[i - 1].q == mv[i].q && mv[i - 1].b < mv[i].b)));
            }
}

TEST_CASE("z labels") {
    CHECK(z_label(parse_partition("5,5,4,2,2,2,1,1"), 4) == ZLabel{1, 1, 2, 2, 1});
    CHECK(z_label(parse_partition("16,8,1^13"), 10) == ZLabel{0, 7, 8});
    CHECK(z_label(parse_partition("6,5,4,2,2,2,1"), 4) == ZLabel{1, 1, 2, 2, 2});
    CHECK(z_label(parse_partition("7,3,3,2,2,1"), 4) == ZLabel{1, 1, 2, 3});
    CHECK(z_label(parse_partition("3,2"), 2) == ZLabel{1, 1});
    // the e=2 partition (3,1,1) has label (0,1)
    CHECK(z_label(parse_partition("3,1,1"), 2) == ZLabel{0, 1});
}

TEST_CASE("m-increasing") {
    CHECK(is_m_increasing(ZLabel{0, 7, 8}, 1));
    CHECK_FALSE(is_m_increasing(ZLabel{0, 7, 8}, 2));
    CHECK(is_m_increasing(ZLabel{1, 5, 9}, 4));
    CHECK(is_m_increasing(ZLabel{}, 17));
}

TEST_CASE("hook-quotient") {
    CHECK(is_hook_quotient(parse_partition("7,3,3,2,2,1"), 4));
    CHECK_FALSE(is_hook_quotient(parse_partition("7,4,4,1,1,1"), 4));
    for (int e = 2; e <= 5; ++e)
        for (int n = 0; n <= 14; ++n)
            for (const auto& p : partitions_of(n))
                if (is_m_increasing(p, e, 1)) CHECK(is_hook_quotient(p, e));
}

TEST_CASE("modified basis") {
    auto mb = modified_basis(parse_partition("16,8,1^13"), 10);
    CHECK(mb.plain == std::vector<ZLabel>{diff(3, 1, 2), unit(3, 2), diff(3, 3, 2)});
    mb = modified_basis(parse_partition("7,3,3,2,2,1"), 4);
    CHECK(mb.plain == std::vector<ZLabel>{diff(4, 1, 3), unit(4, 2), unit(4, 3), diff(4, 4, 3)});
    CHECK_THROWS(modified_basis(parse_partition("7,4,4,1,1,1"), 4));
    for (int e = 2; e <= 5; ++e)
        for (int n = 0; n <= 14; ++n)
            for (const auto& p : partitions_of(n)) {
                if (!is_hook_quotient(p, e)) continue;
                auto m = modified_basis(p, e);
                for (size_t i = 0; i < m.plain.size(); ++i) CHECK(m.lifted[i].project() == m.plain[i]);
            }
}

TEST_CASE("partial order on movements") {
    auto lam = parse_partition("7,3,3,2,2,1");
    int w = 4;
    for (int i = 1; i <= w; ++i) CHECK(succ_geq(lam, 4, i, i));
    // movements 2 and 3 lie on different runners
    CHECK_FALSE(succ_geq(lam, 4, 2, 3));
    CHECK_FALSE(succ_geq(lam, 4, 3, 2));
    // runner 2 has movements 1,3,4 with the final movement of the bottom bead at 3
    CHECK(succ_geq(lam, 4, 1, 3));
    CHECK(succ_geq(lam, 4, 4, 3));
    CHECK_FALSE(succ_geq(lam, 4, 1, 4));
    CHECK_FALSE(succ_geq(lam, 4, 3, 1));
    CHECK_THROWS(succ_geq(lam, 4, 0, 1));
}

TEST_CASE("lifted labels") {
    for (int e = 2; e <= 5; ++e)
        for (int n = 0; n <= 14; ++n)
            for (const auto& p : partitions_of(n)) CHECK(hat_z(p, e).project() == z_label(p, e));
    auto a = hat_z(parse_partition("17,7,2^4,1^5"), 10);
    auto b = hat_z(parse_partition("16,8,1^13"), 10);
    CHECK((a - b).norm() == 2);
}

TEST_CASE("z is a bijection from 0-increasing partitions onto labels") {
    for (int e = 2; e <= 6; ++e)
        for (const auto& core : e_cores_up_to(e, 5))
            for (int w = 0; w <= 3; ++w) {
                BlockContext ctx({e, core, w});
                std::set<ZLabel> seen;
                for (const auto& p : ctx.members()) {
                    const auto& z = ctx.z(p);
                    if (!is_m_increasing(z, 0)) continue;
                    CHECK(seen.insert(z).second);
                    for (int v : z) CHECK((v >= 0 && v <= e - 1));
                }
                CHECK(static_cast<long long>(seen.size()) == binom(e + w - 1, w));
            }
}

TEST_CASE("z inverse") {
    BlockId b{4, parse_partition("2"), 5};
    CHECK(z_inverse(b, {1, 1, 2, 2, 2}) == parse_partition("6,5,4,2,2,2,1"));
    CHECK_THROWS(z_inverse(BlockId{4, {}, 2}, {1, 0}));
}

TEST_CASE("counting m-increasing partitions") {
    for (int e = 5; e <= 12; ++e)
        for (int w = 1; w <= 3; ++w) {
            BlockContext ctx({e, {}, w});
            for (int m = 0; m <= 4; ++m) {
                long long count = 0;
                for (const auto& p : ctx.members()) count += is_m_increasing(ctx.z(p), m);
                CHECK(count == binom(e - (m - 1) * (w - 1), w));
            }
        }
}
