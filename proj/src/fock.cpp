#include "focktiles/fock.hpp"

#include "focktiles/abacus.hpp"

#include <stdexcept>

namespace focktiles {

Laurent FockVector::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Laurent() : it->second;
}

void FockVector::add(const Partition& p, const Laurent& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(p, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

FockVector& FockVector::operator+=(const FockVector& o) {
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
    for (const auto& [p, c] : o.terms_) add(p, -c);
    return *this;
}

FockVector operator*(const Laurent& c, const FockVector& v) {
    FockVector r;
    if (c.is_zero()) return r;
    for (const auto& [p, x] : v.terms_) r.terms_.emplace(p, c * x);
    return r;
}

namespace {

int mod(int x, int e) { return ((x % e) + e) % e; }

template <class Visit>
void for_each_subset(int n, int k, Visit&& visit) {
    if (k > n) return;
    std::vector<int> idx(k);
    for (int t = 0; t < k; ++t) idx[t] = t;
    while (true) {
        visit(idx);
        int t = k - 1;
        while (t >= 0 && idx[t] == n - k + t) --t;
        if (t < 0) return;
        ++idx[t];
        for (int s = t + 1; s < k; ++s) idx[s] = idx[s - 1] + 1;
    }
}

void check_args(int i, int k, int e) {
    if (e < 2) throw std::invalid_argument("e must be at least 2");
    if (k < 1) throw std::invalid_argument("divided power needs k >= 1");
    if (i < 0 || i >= e) throw std::invalid_argument("residue out of range");
}

}  // namespace

std::vector<FockTerm> F_terms(const Partition& p, int i, int k, int e) {
    check_args(i, k, e);
    Abacus a(e, p);
    auto add = a.addable(mod(i - 1, e));
    auto rem = a.removable(i);
    int n = static_cast<int>(add.size());
    std::vector<FockTerm> out;
    std::vector<char> chosen(n);
    for_each_subset(n, k, [&](const std::vector<int>& idx) {
        std::fill(chosen.begin(), chosen.end(), 0);
        for (int t : idx) chosen[t] = 1;
        int expo = 0;
        // addable beads of the target: the unchosen ones; count chosen beads above each
        for (int x = 0; x < n; ++x)
            if (!chosen[x])
                for (int t : idx) expo += add[t] < add[x];
        for (int y : rem)
            for (int t : idx) expo -= add[t] + 1 < y;
        Abacus m = a;
        for (int t : idx) m.move(add[t], add[t] + 1);
        out.push_back({m.partition(), expo});
    });
    return out;
}

std::vector<FockTerm> E_terms(const Partition& p, int i, int k, int e) {
    check_args(i, k, e);
    Abacus a(e, p);
    auto rem = a.removable(i);
    auto add = a.addable(mod(i - 1, e));
    int n = static_cast<int>(rem.size());
    std::vector<FockTerm> out;
    std::vector<char> chosen(n);
    for_each_subset(n, k, [&](const std::vector<int>& idx) {
        std::fill(chosen.begin(), chosen.end(), 0);
        for (int t : idx) chosen[t] = 1;
        int expo = 0;
        for (int y = 0; y < n; ++y)
            if (!chosen[y])
                for (int t : idx) expo += rem[t] > rem[y];
        for (int x : add)
            for (int t : idx) expo -= rem[t] - 1 > x;
        Abacus m = a;
        for (int t : idx) m.move(rem[t], rem[t] - 1);
        out.push_back({m.partition(), expo});
    });
    return out;
}

FockVector apply_F(const FockVector& v, int i, int k, int e) {
    FockVector r;
    for (const auto& [p, c] : v.terms())
        for (const auto& t : F_terms(p, i, k, e)) r.add(t.target, c.shifted(t.exponent));
    return r;
}

FockVector apply_E(const FockVector& v, int i, int k, int e) {
    FockVector r;
    for (const auto& [p, c] : v.terms())
        for (const auto& t : E_terms(p, i, k, e)) r.add(t.target, c.shifted(t.exponent));
    return r;
}

Laurent pairing(const FockVector& v, const Partition& p) { return v.coeff(p); }

}  // namespace focktiles
