#include "focktiles/labels.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace focktiles {

HatLabel& HatLabel::operator+=(const HatLabel& o) {
    if (diag.size() != o.diag.size()) throw std::invalid_argument("hat label dimension mismatch");
    for (size_t i = 0; i < diag.size(); ++i) diag[i] += o.diag[i];
    for (const auto& [k, v] : o.upper) {
        int& slot = upper[k];
        slot += v;
        if (slot == 0) upper.erase(k);
    }
    return *this;
}

HatLabel& HatLabel::operator-=(const HatLabel& o) {
    HatLabel neg = o;
    for (auto& d : neg.diag) d = -d;
    for (auto& [k, v] : neg.upper) v = -v;
    return *this += neg;
}

int HatLabel::norm() const {
    int n = 0;
    for (int d : diag) n += std::abs(d);
    for (const auto& [k, v] : upper) n += std::abs(v);
    return n;
}

ZLabel HatLabel::project() const {
    ZLabel z = diag;
    for (const auto& [k, v] : upper) {
        z[k.first] += v;
        z[k.second] -= v;
    }
    return z;
}

std::vector<BeadMovement> movements(const Partition& p, int e) {
    Abacus a(e, p);
    std::vector<BeadMovement> out;
    for (int b = a.base(); b < a.top(); ++b) {
        if (!a.has(b)) continue;
        int wt = a.gaps_below(b);
        for (int i = 0; i < wt; ++i) out.push_back({b, b - i * e, 0});
    }
    std::sort(out.begin(), out.end(), [](const BeadMovement& x, const BeadMovement& y) {
        return x.q != y.q ? x.q < y.q : x.b < y.b;
    });
    for (size_t i = 0; i < out.size(); ++i) out[i].index = static_cast<int>(i) + 1;
    return out;
}

// The (i+1)-th movement of a bead is paired with sliding that bead into the
// (i+1)-th empty position below it on its runner.
RimHook rimhook_of_movement(const Partition& p, const BeadMovement& m, int e) {
    Abacus a(e, p);
    int nth = (m.b - m.q) / e, seen = -1, gap = m.b;
    while (seen < nth) {
        gap -= e;
        if (!a.has(gap)) ++seen;
    }
    int row = 1;
    for (int x = m.b + 1; x < a.top(); ++x) row += a.has(x);
    int len = m.b - gap;
    for (int col = 1; col <= p[row - 1]; ++col)
        if (hook_length(p, row, col) == len) return rimhook_at(p, row, col);
    throw std::logic_error("no rimhook for bead movement");
}

int movement_index_of_hook(const Partition& p, const RimHook& h, int e) {
    for (const auto& m : movements(p, e))
        if (rimhook_of_movement(p, m, e).hand == h.hand) return m.index;
    throw std::invalid_argument("rimhook size not divisible by e");
}

int z_of_position(const Abacus& a, int x) {
    int n = 0;
    for (int y = x - a.e() + 1; y <= x; ++y) n += !a.has(y);
    return n;
}

ZLabel z_label(const Partition& p, int e) {
    Abacus a(e, p);
    ZLabel z;
    for (const auto& m : movements(p, e)) z.push_back(z_of_position(a, m.q));
    return z;
}

bool is_m_increasing(const ZLabel& z, int m) {
    for (size_t i = 1; i < z.size(); ++i)
        if (z[i] - z[i - 1] < m) return false;
    return true;
}

bool is_m_increasing(const Partition& p, int e, int m) { return is_m_increasing(z_label(p, e), m); }

bool is_hook_quotient(const Partition& p, int e) {
    for (const auto& c : core_quotient_weight(p, e).quotient)
        if (c[1] > 1) return false;
    return true;
}

namespace {

struct RunnerData {
    std::vector<int> idx;  // 0-based movement indices on the runner, ascending
    int final_pos = 0;     // position within idx of the bottom bead's final movement
};

std::vector<RunnerData> runner_data(const std::vector<BeadMovement>& mv, int e) {
    std::vector<RunnerData> rd(e);
    for (const auto& m : mv) rd[((m.q % e) + e) % e].idx.push_back(m.index - 1);
    for (auto& r : rd) {
        if (r.idx.empty()) continue;
        int bottom = mv[r.idx.back()].b;
        for (size_t s = 0; s < r.idx.size(); ++s)
            if (mv[r.idx[s]].b == bottom) {
                r.final_pos = static_cast<int>(s);
                break;
            }
    }
    return rd;
}

void require_hook_quotient(const Partition& p, int e) {
    if (!is_hook_quotient(p, e)) throw std::invalid_argument("partition " + to_string(p) + " is not hook-quotient");
}

}  // namespace

HatLabel lift(const ZLabel& v) {
    int w = static_cast<int>(v.size());
    HatLabel h(w);
    std::vector<int> plus, minus;
    for (int i = 0; i < w; ++i) {
        if (v[i] == 1) plus.push_back(i);
        else if (v[i] == -1) minus.push_back(i);
        else if (v[i] != 0) throw std::invalid_argument("not a modified basis vector");
    }
    if (plus.size() != 1 || minus.size() > 1) throw std::invalid_argument("not a modified basis vector");
    if (minus.empty()) {
        h.diag[plus[0]] = 1;
    } else if (plus[0] < minus[0]) {
        h.upper[{plus[0], minus[0]}] = 1;
    } else {
        h.upper[{minus[0], plus[0]}] = -1;
    }
    return h;
}

ModifiedBasis modified_basis(const Partition& p, int e) {
    require_hook_quotient(p, e);
    auto mv = movements(p, e);
    int w = static_cast<int>(mv.size());
    ModifiedBasis mb;
    mb.plain.assign(w, ZLabel(w, 0));
    for (const auto& r : runner_data(mv, e)) {
        for (int g = 0; g < static_cast<int>(r.idx.size()); ++g) {
            auto& v = mb.plain[r.idx[g]];
            v[r.idx[g]] = 1;
            if (g < r.final_pos) v[r.idx[g + 1]] = -1;
            if (g > r.final_pos) v[r.idx[g - 1]] = -1;
        }
    }
    for (const auto& v : mb.plain) mb.lifted.push_back(lift(v));
    return mb;
}

bool succ_geq(const Partition& p, int e, int i, int j) {
    require_hook_quotient(p, e);
    auto mv = movements(p, e);
    int w = static_cast<int>(mv.size());
    if (i < 1 || i > w || j < 1 || j > w) throw std::out_of_range("movement index out of range");
    const auto& mi = mv[i - 1];
    const auto& mj = mv[j - 1];
    if (((mi.b - mj.b) % e) != 0) return false;
    auto rd = runner_data(mv, e)[((mi.q % e) + e) % e];
    int m = rd.idx[rd.final_pos] + 1;
    return (i >= j && j >= m) || (i <= j && j <= m);
}

HatLabel hat_z(const Partition& p, int e) {
    auto mv = movements(p, e);
    ZLabel z = z_label(p, e);
    int w = static_cast<int>(mv.size());
    HatLabel h(w);
    h.diag = z;
    for (int i = 0; i < w; ++i)
        for (int j = i + 1; j < w; ++j) {
            bool kappa = mv[i].q > mv[j].q - e || (mv[i].q == mv[j].q - e && mv[i].b == mv[j].b);
            if (!kappa) continue;
            --h.diag[i];
            ++h.diag[j];
            h.upper[{i, j}] = 1;
        }
    return h;
}

ZLabel epsilon_sum(const ModifiedBasis& mb, const std::vector<int>& gamma) {
    ZLabel s(mb.plain.size(), 0);
    for (int g : gamma)
        for (size_t t = 0; t < s.size(); ++t) s[t] += mb.plain.at(g - 1)[t];
    return s;
}

HatLabel hat_epsilon_sum(const ModifiedBasis& mb, const std::vector<int>& gamma) {
    HatLabel s(static_cast<int>(mb.plain.size()));
    for (int g : gamma) s += mb.lifted.at(g - 1);
    return s;
}

BlockContext::BlockContext(BlockId id) : id_(std::move(id)) {}

const std::vector<Partition>& BlockContext::members() {
    if (!members_) members_ = enumerate_block(id_);
    return *members_;
}

const ZLabel& BlockContext::z(const Partition& p) {
    auto it = z_.find(p);
    if (it == z_.end()) it = z_.emplace(p, z_label(p, id_.e)).first;
    return it->second;
}

std::optional<Partition> BlockContext::zero_increasing(const ZLabel& target) {
    if (!inverse_) {
        inverse_.emplace();
        for (const auto& p : members()) {
            const auto& z = this->z(p);
            if (is_m_increasing(z, 0)) (*inverse_)[z] = p;
        }
    }
    auto it = inverse_->find(target);
    if (it == inverse_->end()) return std::nullopt;
    return it->second;
}

std::optional<Partition> z_inverse(BlockContext& ctx, const ZLabel& target) {
    if (!is_m_increasing(target, 0)) throw std::invalid_argument("target label is not 0-increasing");
    if (static_cast<int>(target.size()) != ctx.id().weight) throw std::invalid_argument("target label has wrong length");
    for (int v : target)
        if (v < 0 || v > ctx.id().e - 1) return std::nullopt;
    return ctx.zero_increasing(target);
}

std::optional<Partition> z_inverse(const BlockId& b, const ZLabel& target) {
    BlockContext ctx(b);
    return z_inverse(ctx, target);
}

}  // namespace focktiles
