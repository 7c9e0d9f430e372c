#include "focktiles/abacus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace focktiles {

namespace {

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int mod(int x, int e) { return ((x % e) + e) % e; }

void check_e(int e) {
    if (e < 2) throw std::invalid_argument("e must be at least 2");
}

}  // namespace

Abacus::Abacus(int e, const Partition& p) : e_(e) {
    check_e(e);
    int len = p.length();
    base_ = -len;
    int hi = p.empty() ? base_ : p.parts[0] - 1;
    occ_.assign(hi - base_ + 1, 0);
    for (int i = 0; i < len; ++i) occ_[p.parts[i] - (i + 1) - base_] = 1;
    normalize();
}

Abacus::Abacus(int e, int base, std::vector<char> window) : e_(e), base_(base), occ_(std::move(window)) {
    check_e(e);
    normalize();
}

void Abacus::normalize() {
    size_t lead = 0;
    while (lead < occ_.size() && occ_[lead]) ++lead;
    if (lead) {
        occ_.erase(occ_.begin(), occ_.begin() + static_cast<long>(lead));
        base_ += static_cast<int>(lead);
    }
    while (!occ_.empty() && !occ_.back()) occ_.pop_back();
}

bool Abacus::has(int x) const {
    if (x < base_) return true;
    if (x >= top()) return false;
    return occ_[x - base_];
}

void Abacus::set(int x, bool on) {
    if (has(x) == on) return;
    if (x < base_) {
        occ_.insert(occ_.begin(), static_cast<size_t>(base_ - x), 1);
        base_ = x;
    } else if (x >= top()) {
        occ_.resize(static_cast<size_t>(x - base_ + 1), 0);
    }
    occ_[x - base_] = on;
    normalize();
}

void Abacus::move(int from, int to) {
    if (!has(from) || has(to)) throw std::logic_error("invalid bead move");
    set(to, true);
    set(from, false);
}

int Abacus::max_bead() const { return top() - 1; }

int Abacus::charge() const {
    int n = 0;
    for (char c : occ_) n += c;
    return base_ + n;
}

std::vector<int> Abacus::beads_from(int lo) const {
    std::vector<int> out;
    for (int x = std::min(lo, base_); x < base_; ++x) out.push_back(x);
    for (int x = std::max(lo, base_); x < top(); ++x)
        if (occ_[x - base_]) out.push_back(x);
    return out;
}

Partition Abacus::partition() const {
    if (charge() != 0) throw std::logic_error("beta-set does not have charge 0");
    std::vector<int> parts;
    int i = 0;
    for (int x = top() - 1; x >= base_; --x)
        if (occ_[x - base_]) parts.push_back(x + ++i);
    return Partition(parts);
}

int Abacus::gaps_below(int x) const {
    int n = 0;
    for (int y = x - e_; y >= base_; y -= e_)
        if (!has(y)) ++n;
    return n;
}

std::vector<int> Abacus::removable(int r) const {
    std::vector<int> out;
    for (int x = base_; x < top(); ++x)
        if (runner(x) == r && has(x) && !has(x - 1)) out.push_back(x);
    return out;
}

std::vector<int> Abacus::addable(int r) const {
    std::vector<int> out;
    for (int x = base_ - 1; x < top(); ++x)
        if (runner(x) == r && has(x) && !has(x + 1)) out.push_back(x);
    return out;
}

// A removable bead x is normal when, reading downwards from x along the runner,
// removable beads never fall behind addable slots.
std::vector<int> Abacus::normal_beads(int r) const {
    std::vector<int> out;
    for (int x : removable(r)) {
        int balance = 0;
        bool normal = true;
        for (int t = x + e_; t <= top() + e_; t += e_) {
            bool rem = has(t) && !has(t - 1);
            bool add = !has(t) && has(t - 1);
            balance += rem ? 1 : add ? -1 : 0;
            if (balance < 0) {
                normal = false;
                break;
            }
        }
        if (normal) out.push_back(x);
    }
    return out;
}

std::vector<int> Abacus::levels() const {
    int ref = floor_div(base_, e_) * e_;
    std::vector<int> lv(e_, ref / e_);
    for (int x = ref; x < top(); ++x)
        if (has(x)) ++lv[runner(x)];
    return lv;
}

std::string Abacus::dump() const {
    int lo = floor_div(base_, e_) * e_ - e_;
    int hi = floor_div(top() + e_ - 1, e_) * e_ + e_;
    std::string out;
    for (int row = lo; row < hi; row += e_) {
        for (int s = 0; s < e_; ++s) {
            if (s) out += ' ';
            out += has(row + s) ? "●" : "·";
        }
        out += '\n';
    }
    return out;
}

Abacus abacus_of(const Partition& p, int e) { return Abacus(e, p); }

Partition partition_of(const Abacus& a) { return a.partition(); }

CoreQuotient core_quotient_weight(const Abacus& a) {
    int e = a.e();
    CoreQuotient cq;
    cq.quotient.resize(e);
    for (int r = 0; r < e; ++r) {
        std::vector<int> parts;
        for (int x = a.top() - 1; x >= a.base(); --x)
            if (a.runner(x) == r && a.has(x)) {
                int g = a.gaps_below(x);
                if (g > 0) parts.push_back(g);
                cq.weight += g;
            }
        cq.quotient[r] = Partition(parts);
    }
    cq.core = core_from_levels(a.levels());
    return cq;
}

CoreQuotient core_quotient_weight(const Partition& p, int e) { return core_quotient_weight(Abacus(e, p)); }

Partition e_core(const Partition& p, int e) { return core_quotient_weight(p, e).core; }

int e_weight(const Partition& p, int e) { return core_quotient_weight(p, e).weight; }

bool is_e_core(const Partition& p, int e) { return e_weight(p, e) == 0; }

std::vector<int> core_levels(const Partition& core, int e) { return Abacus(e, core).levels(); }

Partition core_from_levels(const std::vector<int>& levels) {
    int e = static_cast<int>(levels.size());
    int lo = 0, hi = 0;
    for (int r = 0; r < e; ++r) {
        lo = std::min(lo, r + e * levels[r]);
        hi = std::max(hi, r + e * levels[r]);
    }
    std::vector<char> win(hi - lo + 1, 0);
    for (int x = lo; x <= hi; ++x) {
        int r = ((x % e) + e) % e;
        win[x - lo] = x < r + e * levels[r];
    }
    return Abacus(e, lo, win).partition();
}

Partition from_core_quotient(const Partition& core, const std::vector<Partition>& quotient, int e) {
    if (static_cast<int>(quotient.size()) != e) throw std::invalid_argument("quotient must have e components");
    Abacus a(e, core);
    if (!is_e_core(core, e))
        throw std::invalid_argument("core is not an e-core");
    auto lv = a.levels();
    for (int r = 0; r < e; ++r) {
        const auto& q = quotient[r];
        for (int i = 1; i <= q.length(); ++i) a.set(r + e * (lv[r] - i), false);
        for (int i = 1; i <= q.length(); ++i) a.set(r + e * (lv[r] - i + q.parts[i - 1]), true);
    }
    return a.partition();
}

BlockId block_of(const Partition& p, int e) {
    auto cq = core_quotient_weight(p, e);
    return {e, cq.core, cq.weight};
}

std::vector<Partition> enumerate_block(const BlockId& b) {
    if (b.weight < 0) throw std::invalid_argument("negative weight");
    if (!is_e_core(b.core, b.e)) throw std::invalid_argument("block core is not an e-core");
    std::vector<std::vector<Partition>> by_size(b.weight + 1);
    for (int n = 0; n <= b.weight; ++n) by_size[n] = partitions_of(n);
    std::vector<Partition> out, quot(b.e);
    auto rec = [&](auto&& self, int r, int left) -> void {
        if (r == b.e - 1) {
            for (const auto& p : by_size[left]) {
                quot[r] = p;
                out.push_back(from_core_quotient(b.core, quot, b.e));
            }
            return;
        }
        for (int n = 0; n <= left; ++n)
            for (const auto& p : by_size[n]) {
                quot[r] = p;
                self(self, r + 1, left - n);
            }
    };
    rec(rec, 0, b.weight);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> e_cores_up_to(int e, int max_size) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_size; ++n)
        for (auto& p : partitions_of(n))
            if (is_e_core(p, e)) out.push_back(p);
    return out;
}

std::optional<Abacus> crystal_E(const Abacus& a, int i) {
    auto normal = a.normal_beads(i);
    if (normal.empty()) return std::nullopt;
    Abacus r = a;
    r.move(normal.front(), normal.front() - 1);
    return r;
}

std::optional<Abacus> crystal_F(const Abacus& a, int i) {
    int e = a.e();
    for (int x : a.addable(((i - 1) % e + e) % e)) {
        Abacus m = a;
        m.move(x, x + 1);
        auto back = crystal_E(m, i);
        if (back && *back == a) return m;
    }
    return std::nullopt;
}

std::optional<Partition> crystal_E(const Partition& p, int i, int e) {
    auto r = crystal_E(Abacus(e, p), i);
    if (!r) return std::nullopt;
    return r->partition();
}

std::optional<Partition> crystal_F(const Partition& p, int i, int e) {
    auto r = crystal_F(Abacus(e, p), i);
    if (!r) return std::nullopt;
    return r->partition();
}

Abacus weyl_s(const Abacus& a, int i) {
    int e = a.e();
    int rem = static_cast<int>(a.removable(i).size());
    int add = static_cast<int>(a.addable(((i - 1) % e + e) % e).size());
    Abacus cur = a;
    for (int n = 0; n < std::abs(rem - add); ++n) {
        auto next = rem > add ? crystal_E(cur, i) : crystal_F(cur, i);
        if (!next) throw std::logic_error("crystal string ended early");
        cur = *next;
    }
    return cur;
}

Partition weyl_s(const Partition& p, int i, int e) { return weyl_s(Abacus(e, p), i).partition(); }

int removable_count(const std::vector<int>& lv, int a) {
    int e = static_cast<int>(lv.size());
    int d = a == 0 ? lv[0] - lv[e - 1] - 1 : lv[a] - lv[a - 1];
    return std::max(d, 0);
}

int addable_count(const std::vector<int>& lv, int a) {
    int e = static_cast<int>(lv.size());
    int d = a == 0 ? lv[e - 1] + 1 - lv[0] : lv[a - 1] - lv[a];
    return std::max(d, 0);
}

std::vector<int> weyl_levels(std::vector<int> lv, int a) {
    int e = static_cast<int>(lv.size());
    if (a == 0) {
        int l0 = lv[0];
        lv[0] = lv[e - 1] + 1;
        lv[e - 1] = l0 - 1;
    } else {
        std::swap(lv[a - 1], lv[a]);
    }
    return lv;
}

namespace {

bool levels_rouquier(const std::vector<int>& lv, int w) {
    for (size_t a = 1; a < lv.size(); ++a)
        if (lv[a] - lv[a - 1] < std::max(w - 1, 0)) return false;
    return true;
}

}  // namespace

bool is_rouquier(const BlockId& b) { return levels_rouquier(core_levels(b.core, b.e), b.weight); }

std::optional<int> rouquier_charge(const BlockId& b) {
    auto lv = core_levels(b.core, b.e);
    for (int s = 0; s < b.e; ++s) {
        std::vector<int> shifted(b.e);
        for (int r = 0; r < b.e; ++r) shifted[(r + s) % b.e] = lv[r] + (r + s >= b.e ? 1 : 0);
        if (levels_rouquier(shifted, b.weight)) return s;
    }
    return std::nullopt;
}

std::vector<Partition> rouquier_cores(int e, int w) {
    int gap = std::max(w - 1, 0);
    std::vector<Partition> out;
    for (int s = 0; s < e; ++s) {
        // shifted levels gap*a + t, plus one on the top d runners; their sum must be s
        int base = gap * e * (e - 1) / 2;
        int d = mod(s - base, e);
        int t = (s - base - d) / e;
        std::vector<int> lv(e);
        for (int r = 0; r < e; ++r) {
            int a = (r + s) % e;
            lv[r] = gap * a + t + (a >= e - d ? 1 : 0) - (r + s >= e ? 1 : 0);
        }
        Partition c = core_from_levels(lv);
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

Partition add_full_runner(const Partition& p, int e) {
    Abacus a(e, p);
    int n = p.size();
    int e1 = e + 1;
    int row_lo = floor_div(a.base(), e) - n - 1;
    int row_hi = std::max(floor_div(a.top(), e) - n + 1, n * e) + 1;
    int lo = row_lo * e1;
    std::vector<char> win(static_cast<size_t>((row_hi - row_lo + 1) * e1), 0);
    for (int r = row_lo; r <= row_hi; ++r)
        for (int s = 0; s <= e; ++s) {
            bool on = s == e ? r < n * e : a.has((r + n) * e + s);
            win[r * e1 + s - lo] = on;
        }
    return Abacus(e1, lo, win).partition();
}

namespace {

// Affine permutation of Z commuting with translation by e, stored by its values on [0, e).
struct AffinePerm {
    int e;
    std::vector<long long> win;

    long long operator()(long long i) const {
        long long m = i >= 0 ? i / e : -((-i + e - 1) / e);
        return win[i - m * e] + m * e;
    }
    AffinePerm inverse() const {
        AffinePerm g{e, std::vector<long long>(e)};
        for (int i = 0; i < e; ++i) {
            long long v = win[i];
            long long m = v >= 0 ? v / e : -((-v + e - 1) / e);
            g.win[v - m * e] = i - m * e;
        }
        return g;
    }
    AffinePerm then_apply(const AffinePerm& outer) const {  // outer o this
        AffinePerm r{e, std::vector<long long>(e)};
        for (int i = 0; i < e; ++i) r.win[i] = outer(win[i]);
        return r;
    }
    long long length() const {
        long long n = 0;
        for (int i = 0; i < e; ++i)
            for (int j = i + 1; j < e; ++j) {
                long long d = win[j] - win[i];
                long long f = d >= 0 ? d / e : -((-d + e - 1) / e);
                n += f < 0 ? -f : f;
            }
        return n;
    }
    bool right_descent(int b) const { return (*this)(b - 1) > (*this)(b); }
    void swap_positions(int b) {
        if (b == 0) {
            long long first = win[0];
            win[0] = win[e - 1] - e;
            win[e - 1] = first + e;
        } else {
            std::swap(win[b - 1], win[b]);
        }
    }
};

// Cores correspond to increasing windows: the first empty position e*level+r of every runner.
AffinePerm grassmannian(const std::vector<int>& lv) {
    int e = static_cast<int>(lv.size());
    AffinePerm f{e, std::vector<long long>(e)};
    for (int r = 0; r < e; ++r) f.win[r] = static_cast<long long>(e) * lv[r] + r;
    std::sort(f.win.begin(), f.win.end());
    return f;
}

}  // namespace

// The chain is read off a reduced factorisation u = x w of affine permutations,
// where w is the core of b and u a Rouquier core lying above it in the left weak order.
std::vector<ChainStep> scopes_chain(const BlockId& b) {
    if (b.weight < 1) throw std::invalid_argument("scopes chain needs weight >= 1");
    auto start = core_levels(b.core, b.e);
    if (levels_rouquier(start, b.weight)) return {};
    int e = b.e;
    AffinePerm w = grassmannian(start);
    long long lw = w.length();
    std::optional<std::vector<ChainStep>> best;
    int first_hit = -1;
    for (int gap = std::max(b.weight - 1, 1); gap < 4096; ++gap) {
        if (first_hit >= 0 && gap > first_hit + 4) break;
        std::vector<int> target(e);
        long long sum = 0;
        for (int r = 0; r < e; ++r) sum += target[r] = gap * r;
        if (sum % e != 0) continue;
        for (auto& v : target) v -= static_cast<int>(sum / e);
        AffinePerm u = grassmannian(target);
        AffinePerm x = w.inverse().then_apply(u);
        if (u.length() != x.length() + lw) continue;
        if (first_hit < 0) first_hit = gap;
        std::vector<int> residues;
        for (int d = 0; d < e;) {
            if (x.right_descent(d)) {
                x.swap_positions(d);
                residues.push_back(d);
                d = 0;
            } else {
                ++d;
            }
        }
        std::vector<ChainStep> chain;
        auto lv = start;
        for (int a : residues) {
            auto prev = weyl_levels(lv, a);
            chain.push_back({a, removable_count(prev, a)});
            lv = prev;
        }
        std::reverse(chain.begin(), chain.end());
        if (!best || chain.size() < best->size()) best = chain;
    }
    if (best) return *best;
    throw std::runtime_error("no Scopes chain found");
}

Partition chain_start_core(const BlockId& b, const std::vector<ChainStep>& chain) {
    auto lv = core_levels(b.core, b.e);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) lv = weyl_levels(lv, it->a);
    return core_from_levels(lv);
}

}  // namespace focktiles
