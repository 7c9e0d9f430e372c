#include "focktiles/partition.hpp"

#include "focktiles/labels.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace focktiles {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

size_t PartitionHash::operator()(const Partition& p) const noexcept {
    size_t h = 1469598103934665603ull;
    for (int x : p.parts) h = (h ^ static_cast<size_t>(x)) * 1099511628211ull;
    return h;
}

Partition parse_partition(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '(' && c != ')' && c != '[' && c != ']') s += c;
    if (s.empty() || s == "0" || s == "-") return {};
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty part in '" + text + "'");
        int value = 0, mult = 1;
        size_t caret = tok.find('^');
        try {
            size_t used = 0;
            value = std::stoi(tok.substr(0, caret), &used);
            if (used != (caret == std::string::npos ? tok.size() : caret)) throw std::invalid_argument(tok);
            if (caret != std::string::npos) {
                mult = std::stoi(tok.substr(caret + 1), &used);
                if (used != tok.size() - caret - 1) throw std::invalid_argument(tok);
            }
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad partition token '" + tok + "'");
        }
        if (value < 0 || mult < 0) throw std::invalid_argument("negative entry in '" + text + "'");
        for (int i = 0; i < mult; ++i) parts.push_back(value);
    }
    return Partition(parts);
}

std::string to_string(const Partition& p) {
    std::string out;
    for (size_t i = 0; i < p.parts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.parts[i]);
    }
    return out;
}

Partition conjugate(const Partition& p) {
    std::vector<int> c(p.empty() ? 0 : p.parts[0], 0);
    for (int x : p.parts)
        for (int j = 0; j < x; ++j) ++c[j];
    Partition r;
    r.parts = std::move(c);
    return r;
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dominance needs partitions of equal size");
    int sa = 0, sb = 0;
    for (int i = 0; i < std::max(a.length(), b.length()); ++i) {
        sa += a[i], sb += b[i];
        if (sa > sb) return false;
    }
    return true;
}

bool is_e_regular(const Partition& p, int e) {
    int run = 0;
    for (size_t i = 0; i < p.parts.size(); ++i) {
        run = (i > 0 && p.parts[i] == p.parts[i - 1]) ? run + 1 : 1;
        if (run >= e) return false;
    }
    return true;
}

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.length() > outer.length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner.parts[i] > outer.parts[i]) return false;
    return true;
}

int hook_length(const Partition& p, int row, int col) {
    Partition c = conjugate(p);
    return p[row - 1] - col + c[col - 1] - row + 1;
}

RimHook rimhook_at(const Partition& p, int row, int col) {
    if (row < 1 || row > p.length() || col < 1 || col > p[row - 1]) throw std::out_of_range("cell outside diagram");
    Partition c = conjugate(p);
    int last_row = c[col - 1];
    RimHook h;
    h.hand = {row, col};
    // cells (i,j) of the rim satisfy (i+1,j+1) not in the diagram
    for (int i = row; i <= last_row; ++i)
        for (int j = col; j <= p[i - 1]; ++j)
            if (p[i] < j + 1) h.cells.emplace_back(i, j);
    h.size = static_cast<int>(h.cells.size());
    return h;
}

Partition remove_cells(const Partition& p, const std::vector<Cell>& cells) {
    std::vector<std::vector<bool>> grid(p.length());
    for (int i = 0; i < p.length(); ++i) grid[i].assign(p.parts[i], true);
    for (auto [i, j] : cells) {
        if (i < 1 || i > p.length() || j < 1 || j > p[i - 1] || !grid[i - 1][j - 1])
            throw std::invalid_argument("cell not in diagram");
        grid[i - 1][j - 1] = false;
    }
    std::vector<int> parts;
    for (int i = 0; i < p.length(); ++i) {
        int len = 0;
        while (len < p.parts[i] && grid[i][len]) ++len;
        for (int j = len; j < p.parts[i]; ++j)
            if (grid[i][j]) throw std::invalid_argument("removal leaves a non-diagram");
        parts.push_back(len);
    }
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1]) throw std::invalid_argument("removal leaves a non-diagram");
    return Partition(parts);
}

std::vector<RimHook> hooks_e(const Partition& p, int e) {
    if (e < 2) throw std::invalid_argument("e must be at least 2");
    std::vector<RimHook> out;
    for (const auto& m : movements(p, e)) out.push_back(rimhook_of_movement(p, m, e));
    return out;
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int maxpart) -> void {
        if (left == 0) {
            Partition q;
            q.parts = cur;
            out.push_back(q);
            return;
        }
        for (int x = std::min(left, maxpart); x >= 1; --x) {
            cur.push_back(x);
            self(self, left - x, x);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

}  // namespace focktiles
