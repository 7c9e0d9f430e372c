#include "focktiles/canonical.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace focktiles {

namespace {

int mod(int x, int e) { return ((x % e) + e) % e; }

std::mutex llt_mutex;
std::map<std::pair<int, Partition>, FockVector> llt_cache;

}  // namespace

std::vector<LadderStep> ladder_sequence(const Partition& mu, int e) {
    if (!is_e_regular(mu, e)) throw std::domain_error("ladder_sequence needs an e-regular partition: " + to_string(mu));
    std::map<int, int> count;
    for (int i = 1; i <= mu.length(); ++i)
        for (int j = 1; j <= mu[i - 1]; ++j) ++count[i + (e - 1) * (j - 1)];
    std::vector<LadderStep> out;
    for (auto [k, m] : count) out.push_back({mod(1 - k, e), m});
    return out;
}

namespace {

// Sparse polynomial with small integer coefficients, used inside the ladder engine.
struct SmallPoly {
    int lo = 0;
    std::vector<long long> c;

    void add_shifted(const SmallPoly& o, int shift) {
        int olo = o.lo + shift;
        if (c.empty()) {
            lo = olo;
            c.assign(o.c.size(), 0);
        }
        int nlo = std::min(lo, olo);
        int nhi = std::max(lo + static_cast<int>(c.size()), olo + static_cast<int>(o.c.size()));
        if (nlo < lo || nhi > lo + static_cast<int>(c.size())) {
            std::vector<long long> w(nhi - nlo, 0);
            std::copy(c.begin(), c.end(), w.begin() + (lo - nlo));
            c = std::move(w);
            lo = nlo;
        }
        for (size_t t = 0; t < o.c.size(); ++t)
            if (__builtin_add_overflow(c[olo - lo + t], o.c[t], &c[olo - lo + t]))
                throw std::overflow_error("ladder coefficient overflow");
    }

    Laurent to_laurent() const {
        Laurent r;
        for (size_t t = 0; t < c.size(); ++t)
            if (c[t] != 0) r += Laurent::monomial(lo + static_cast<int>(t), BigInt(c[t]));
        return r;
    }
};

// Ladder products on packed beta-sets with a fixed number of beads. Terms that fit in no
// block member dominated by mu are dropped: every final term lies in that set and all
// coefficients are positive, so the result is unchanged.
class LadderEngine {
public:
    LadderEngine(const Partition& mu, int e) : e_(e) {
        for (auto& p : enumerate_block(block_of(mu, e)))
            if (dominance_leq(p, mu)) members_.push_back(std::move(p));
        beads_ = 1;
        int widest = 0;
        for (const auto& m : members_) {
            beads_ = std::max(beads_, m.length());
            widest = std::max(widest, m[0]);
        }
        width_ = beads_ + widest + 2;
        words_ = (members_.size() + 63) / 64;
        // fits_[r][v]: members whose row r has at least v boxes
        fits_.assign(beads_, std::vector<std::vector<uint64_t>>(widest + 2, std::vector<uint64_t>(words_, 0)));
        for (size_t t = 0; t < members_.size(); ++t)
            for (int r = 0; r < beads_; ++r)
                for (int v = 0; v <= members_[t][r]; ++v) fits_[r][v][t / 64] |= uint64_t{1} << (t % 64);
    }

    FockVector run(const std::vector<LadderStep>& steps) const {
        std::string empty(width_, 0);
        for (int p = 0; p < beads_; ++p) empty[p] = 1;
        std::unordered_map<std::string, SmallPoly> cur;
        cur[empty] = SmallPoly{0, {1}};
        for (const auto& s : steps) {
            std::unordered_map<std::string, SmallPoly> next;
            for (const auto& [bits, poly] : cur) apply(bits, poly, s, next);
            cur = std::move(next);
        }
        FockVector out;
        for (const auto& [bits, poly] : cur) out.add(decode(bits), poly.to_laurent());
        return out;
    }

private:
    int residue(int p) const { return mod(p - beads_, e_); }

    bool fits(const std::string& bits) const {
        std::vector<uint64_t> acc(words_, ~uint64_t{0});
        int row = 0;
        for (int p = width_ - 1; p >= 0 && row < beads_; --p) {
            if (!bits[p]) continue;
            int part = p - beads_ + row + 1;
            if (part >= static_cast<int>(fits_[row].size())) return false;
            if (part == 0) break;
            bool any = false;
            for (int t = 0; t < words_; ++t) {
                acc[t] &= fits_[row][part][t];
                any |= acc[t] != 0;
            }
            if (!any) return false;
            ++row;
        }
        return true;
    }

    Partition decode(const std::string& bits) const {
        std::vector<int> parts;
        int row = 0;
        for (int p = width_ - 1; p >= 0; --p)
            if (bits[p]) parts.push_back(p - beads_ + ++row);
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        return Partition(parts);
    }

    void apply(const std::string& bits, const SmallPoly& poly, const LadderStep& s,
               std::unordered_map<std::string, SmallPoly>& next) const {
        std::vector<int> add, rem;
        for (int p = 0; p + 1 < width_; ++p) {
            if (!bits[p]) continue;
            if (!bits[p + 1] && residue(p + 1) == s.residue) add.push_back(p);
            if (p > 0 && !bits[p - 1] && residue(p) == s.residue) rem.push_back(p);
        }
        int n = static_cast<int>(add.size()), k = s.multiplicity;
        if (k > n) return;
        std::vector<int> idx(k);
        for (int t = 0; t < k; ++t) idx[t] = t;
        std::vector<char> chosen(n);
        while (true) {
            std::fill(chosen.begin(), chosen.end(), 0);
            for (int t : idx) chosen[t] = 1;
            std::string moved = bits;
            for (int t : idx) {
                moved[add[t]] = 0;
                moved[add[t] + 1] = 1;
            }
            if (fits(moved)) {
                int expo = 0;
                for (int x = 0; x < n; ++x)
                    if (!chosen[x])
                        for (int t : idx) expo += add[t] < add[x];
                for (int y : rem)
                    for (int t : idx) expo -= add[t] + 1 < y;
                next[moved].add_shifted(poly, expo);
            }
            int t = k - 1;
            while (t >= 0 && idx[t] == n - k + t) --t;
            if (t < 0) return;
            ++idx[t];
            for (int u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
        }
    }

    int e_;
    int beads_ = 0;
    int width_ = 0;
    int words_ = 0;
    std::vector<Partition> members_;
    std::vector<std::vector<std::vector<uint64_t>>> fits_;
};

}  // namespace

FockVector ladder_vector(const Partition& mu, int e) { return LadderEngine(mu, e).run(ladder_sequence(mu, e)); }

namespace {

bool unitriangular(const FockVector& v, const Partition& mu) {
    if (v.coeff(mu) != Laurent(1)) return false;
    for (const auto& [p, c] : v.terms())
        if (p != mu && !dominance_leq(p, mu)) return false;
    return true;
}

}  // namespace

std::optional<FockVector> core_ladder_vector(const Partition& mu, int e) {
    Partition core = e_core(mu, e);
    std::map<int, LadderStep> steps;
    for (int i = 1; i <= mu.length(); ++i)
        for (int j = core[i - 1] + 1; j <= mu[i - 1]; ++j) {
            auto& s = steps[i + (e - 1) * (j - 1)];
            s.residue = mod(j - i, e);
            ++s.multiplicity;
        }
    FockVector v(core);
    for (const auto& [k, s] : steps) v = apply_F(v, s.residue, s.multiplicity, e);
    if (!unitriangular(v, mu)) return std::nullopt;
    return v;
}

FockVector eliminate_to_canonical(FockVector g, const Partition& mu, int e) {
    if (!unitriangular(g, mu)) throw std::logic_error("vector is not unitriangular at " + to_string(mu));
    while (true) {
        // lex-largest label whose coefficient is outside qZ[q]; lex-largest implies dominance-maximal
        std::optional<Partition> bad;
        for (auto it = g.terms().rbegin(); it != g.terms().rend(); ++it) {
            if (it->first == mu) continue;
            if (it->second.min_degree() <= 0) {
                bad = it->first;
                break;
            }
        }
        if (!bad) return g;
        Laurent alpha = bar_symmetric_split(g.coeff(*bad)).alpha;
        g -= alpha * llt_G(*bad, e);
    }
}

FockVector llt_G(const Partition& mu, int e) {
    {
        std::lock_guard lock(llt_mutex);
        auto it = llt_cache.find({e, mu});
        if (it != llt_cache.end()) return it->second;
    }
    FockVector g;
    if (auto fast = core_ladder_vector(mu, e)) g = std::move(*fast);
    else g = ladder_vector(mu, e);
    g = eliminate_to_canonical(std::move(g), mu, e);
    std::lock_guard lock(llt_mutex);
    llt_cache.emplace(std::pair{e, mu}, g);
    return g;
}

namespace detail {
void clear_inductive_caches();
}

void clear_canonical_caches() {
    detail::clear_inductive_caches();
    std::lock_guard lock(llt_mutex);
    llt_cache.clear();
}

namespace {

// cells of rho/sigma in reading order: rows top to bottom, each row right to left
struct LrSearch {
    std::vector<Cell> cells;
    std::map<Cell, int> filled;
    std::vector<int> content;
    std::vector<int> target;
    long long count = 0;

    void run(size_t at) {
        if (at == cells.size()) {
            ++count;
            return;
        }
        auto [r, c] = cells[at];
        int hi = static_cast<int>(target.size());
        auto right = filled.find({r, c + 1});
        if (right != filled.end()) hi = std::min(hi, right->second);
        int lo = 1;
        auto above = filled.find({r - 1, c});
        if (above != filled.end()) lo = above->second + 1;
        for (int v = lo; v <= hi; ++v) {
            if (content[v - 1] == target[v - 1]) continue;
            if (v > 1 && content[v - 1] + 1 > content[v - 2]) continue;
            ++content[v - 1];
            filled[{r, c}] = v;
            run(at + 1);
            filled.erase({r, c});
            --content[v - 1];
        }
    }
};

}  // namespace

long long lr_coefficient(const Partition& rho, const Partition& sigma, const Partition& tau) {
    if (rho.size() != sigma.size() + tau.size())
        throw std::invalid_argument("lr_coefficient: |rho| must equal |sigma| + |tau|");
    if (!contains(rho, sigma)) return 0;
    LrSearch s;
    for (int r = 1; r <= rho.length(); ++r)
        for (int c = rho[r - 1]; c > sigma[r - 1]; --c) s.cells.push_back({r, c});
    s.target = tau.parts;
    s.content.assign(tau.length(), 0);
    if (tau.length() == 0) return s.cells.empty() ? 1 : 0;
    s.run(0);
    return s.count;
}

std::vector<Partition> rouquier_quotient(const Partition& p, const BlockId& b) {
    auto s = rouquier_charge(b);
    if (!s) throw std::domain_error("block is not Rouquier");
    auto cq = core_quotient_weight(p, b.e);
    std::vector<Partition> out(b.e);
    for (int r = 0; r < b.e; ++r) out[(r + *s) % b.e] = cq.quotient[r];
    return out;
}

namespace {

void check_members(const Partition& lambda, const Partition& mu, const BlockId& b) {
    if (block_of(lambda, b.e) != b || block_of(mu, b.e) != b)
        throw std::invalid_argument("rouquier_d: partitions must lie in the block");
}

}  // namespace

Laurent rouquier_d(const Partition& lambda, const Partition& mu, const BlockId& b) {
    int e = b.e;
    auto lq = rouquier_quotient(lambda, b);
    auto mq = rouquier_quotient(mu, b);
    check_members(lambda, mu, b);
    std::vector<int> a(e + 1, 0), bs(e, 0);
    for (int i = 0; i < e; ++i) {
        a[i + 1] = a[i] + lq[i].size() - mq[i].size();
        bs[i] = mq[i].size() - a[i];
    }
    for (int i = 0; i <= e; ++i)
        if (a[i] < 0) return 0;
    for (int i = 0; i < e; ++i)
        if (bs[i] < 0) return 0;
    std::map<Partition, BigInt> state{{Partition{}, 1}};
    for (int j = 0; j < e; ++j) {
        std::map<Partition, BigInt> next;
        auto betas = partitions_of(bs[j]);
        auto alphas = partitions_of(a[j + 1]);
        for (const auto& [alpha, weight] : state)
            for (const auto& beta : betas) {
                long long c1 = lr_coefficient(mq[j], alpha, beta);
                if (c1 == 0) continue;
                for (const auto& next_alpha : alphas) {
                    long long c2 = lr_coefficient(lq[j], beta, conjugate(next_alpha));
                    if (c2 != 0) next[next_alpha] += weight * c1 * c2;
                }
            }
        state = std::move(next);
    }
    auto it = state.find(Partition{});
    if (it == state.end() || it->second == 0) return 0;
    int delta = 0;
    for (int j = 0; j + 1 < e; ++j) delta += (e - 1 - j) * (lq[j].size() - mq[j].size());
    return Laurent::monomial(delta, it->second);
}

Laurent rouquier_d_hooks(const Partition& lambda, const Partition& mu, const BlockId& b) {
    int e = b.e;
    auto lq = rouquier_quotient(lambda, b);
    auto mq = rouquier_quotient(mu, b);
    check_members(lambda, mu, b);
    std::vector<int> w(e);
    for (int i = 0; i < e; ++i) {
        if (mq[i].length() > 0 && mq[i][0] > 1)
            throw std::domain_error("rouquier_d_hooks needs a 0-increasing mu: " + to_string(mu));
        w[i] = mq[i].size();
    }
    std::vector<int> x(e), a(e + 1, 0);
    for (int i = 0; i < e; ++i) {
        const auto& h = lq[i];
        if (h.length() > 1 && h[1] > 1) return 0;  // not a hook
        x[i] = h.length() == 0 ? 0 : h[0];
        a[i + 1] = a[i] + h.size() - w[i];
    }
    int expo = 0;
    for (int j = 0; j < e; ++j) {
        int c = x[j] - a[j + 1];
        if (c < 0 || c > std::min(1, x[j])) return 0;
        expo += x[j] - c;
    }
    return Laurent::q(expo);
}

}  // namespace focktiles
