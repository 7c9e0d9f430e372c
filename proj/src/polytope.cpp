#include "focktiles/polytope.hpp"

#include "focktiles/parallel.hpp"

#include <boost/rational.hpp>
#include <json.hpp>

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace focktiles {

namespace {

std::vector<int> subset_of_mask(unsigned mask, int w) {
    std::vector<int> g;
    for (int i = 0; i < w; ++i)
        if (mask >> i & 1) g.push_back(i + 1);
    return g;
}

// the single lattice coordinate of a lifted generator and its sign
struct CubeAxis {
    bool diag;
    int i, j;
    int sign;
};

CubeAxis axis_of(const HatLabel& h) {
    for (size_t i = 0; i < h.diag.size(); ++i)
        if (h.diag[i] != 0) return {true, static_cast<int>(i), 0, h.diag[i]};
    const auto& [key, v] = *h.upper.begin();
    return {false, key.first, key.second, v};
}

int coordinate(const HatLabel& h, const CubeAxis& a) {
    if (a.diag) return h.diag[a.i];
    auto it = h.upper.find({a.i, a.j});
    return it == h.upper.end() ? 0 : it->second;
}

void clear_coordinate(HatLabel& h, const CubeAxis& a) {
    if (a.diag) h.diag[a.i] = 0;
    else h.upper.erase({a.i, a.j});
}

bool is_zero(const HatLabel& h) {
    for (int v : h.diag)
        if (v != 0) return false;
    return h.upper.empty();
}

}  // namespace

std::vector<ZLabel> Parallelotope::vertices() const {
    int w = static_cast<int>(anchor.size());
    std::vector<ZLabel> out;
    for (unsigned mask = 0; mask < (1u << w); ++mask) {
        ZLabel v = anchor;
        for (int i = 0; i < w; ++i)
            if (mask >> i & 1)
                for (int c = 0; c < w; ++c) v[c] += generators.plain[i][c];
        out.push_back(v);
    }
    return out;
}

std::vector<HatLabel> Hypercube::vertices() const {
    int w = static_cast<int>(generators.size());
    std::vector<HatLabel> out;
    for (unsigned mask = 0; mask < (1u << w); ++mask) {
        HatLabel v = anchor;
        for (int i = 0; i < w; ++i)
            if (mask >> i & 1) v += generators[i];
        out.push_back(v);
    }
    return out;
}

Parallelotope parallelotope(const Partition& lambda, int e) { return {z_label(lambda, e), modified_basis(lambda, e), lambda}; }

Hypercube hypercube(const Partition& lambda, int e) {
    return {hat_z(lambda, e), modified_basis(lambda, e).lifted, lambda};
}

std::optional<std::vector<int>> pi_membership(const Partition& lambda, const ZLabel& target, int e) {
    auto mb = modified_basis(lambda, e);
    ZLabel z = z_label(lambda, e);
    int w = static_cast<int>(z.size());
    if (static_cast<int>(target.size()) != w) throw std::invalid_argument("label length differs from the weight");
    // solve sum_i c_i eps_i = target - z by exact elimination on the augmented matrix
    using Q = boost::rational<long long>;
    std::vector<std::vector<Q>> m(w, std::vector<Q>(w + 1));
    for (int r = 0; r < w; ++r) {
        for (int i = 0; i < w; ++i) m[r][i] = mb.plain[i][r];
        m[r][w] = target[r] - z[r];
    }
    for (int col = 0; col < w; ++col) {
        int piv = col;
        while (piv < w && m[piv][col].numerator() == 0) ++piv;
        if (piv == w) throw std::logic_error("modified basis is singular");
        std::swap(m[piv], m[col]);
        for (int r = 0; r < w; ++r) {
            if (r == col || m[r][col].numerator() == 0) continue;
            Q f = m[r][col] / m[col][col];
            for (int c = col; c <= w; ++c) m[r][c] -= f * m[col][c];
        }
    }
    std::vector<int> gamma;
    for (int i = 0; i < w; ++i) {
        Q c = m[i][w] / m[i][i];
        if (c == Q(1)) gamma.push_back(i + 1);
        else if (c.numerator() != 0) return std::nullopt;
    }
    return gamma;
}

std::optional<std::vector<int>> cube_membership(const Partition& lambda, const HatLabel& target, int e) {
    auto mb = modified_basis(lambda, e);
    HatLabel d = target - hat_z(lambda, e);
    std::vector<int> gamma;
    for (size_t i = 0; i < mb.lifted.size(); ++i) {
        auto a = axis_of(mb.lifted[i]);
        int v = coordinate(d, a);
        if (v == a.sign) gamma.push_back(static_cast<int>(i) + 1);
        else if (v != 0) return std::nullopt;
        clear_coordinate(d, a);
    }
    if (!is_zero(d)) return std::nullopt;
    return gamma;
}

ClosedFormula d_closed_detail(const Partition& lambda, const Partition& mu, int e) {
    ClosedFormula f;
    if (block_of(lambda, e) != block_of(mu, e)) return f;
    ZLabel zmu = z_label(mu, e);
    f.hypothesis = is_m_increasing(zmu, 4);
    if (!is_hook_quotient(lambda, e)) return f;
    if (auto g = pi_membership(lambda, zmu, e)) f.value = Laurent::q(static_cast<int>(g->size()));
    HatLabel hmu = hat_z(mu, e);
    if (cube_membership(lambda, hmu, e)) f.cube_value = Laurent::q((hmu - hat_z(lambda, e)).norm());
    return f;
}

Laurent d_closed(const Partition& lambda, const Partition& mu, int e) { return d_closed_detail(lambda, mu, e).value; }

bool in_plus_region(const ZLabel& z, int e, int m) {
    for (int v : z)
        if (v < 0 || v > e) return false;
    return is_m_increasing(z, m);
}

bool is_generic(const ZLabel& z, int e) { return is_m_increasing(z, 10) && (z.empty() || z.back() <= e - 2); }

Tiling build_tiling(const BlockId& b, int m) {
    Tiling t{b, {}, m};
    if (b.weight == 0) return t;
    std::vector<Partition> owners;
    for (auto& p : enumerate_block(b))
        if (is_hook_quotient(p, b.e)) owners.push_back(std::move(p));
    t.cells.resize(owners.size());
    parallel_for(owners.size(), [&](size_t i) {
        t.cells[i] = {owners[i], parallelotope(owners[i], b.e), hypercube(owners[i], b.e)};
    });
    return t;
}

int generic_owner_count(const Tiling& t) {
    int n = 0;
    for (const auto& c : t.cells) n += is_generic(c.para.anchor, t.block.e);
    return n;
}

int generic_translation_classes(const Tiling& t) {
    std::set<std::vector<ZLabel>> classes;
    for (const auto& c : t.cells) {
        if (!is_generic(c.para.anchor, t.block.e)) continue;
        auto g = c.para.generators.plain;
        std::sort(g.begin(), g.end());
        classes.insert(g);
    }
    return static_cast<int>(classes.size());
}

namespace {

std::string label_str(const ZLabel& z) {
    std::string s = "(";
    for (size_t i = 0; i < z.size(); ++i) s += (i ? "," : "") + std::to_string(z[i]);
    return s + ")";
}

void enumerate_region(int e, int w, int m, ZLabel& cur, std::set<ZLabel>& out) {
    if (static_cast<int>(cur.size()) == w) {
        out.insert(cur);
        return;
    }
    int lo = cur.empty() ? 0 : cur.back() + m;
    for (int v = std::max(lo, 0); v <= e; ++v) {
        cur.push_back(v);
        enumerate_region(e, w, m, cur, out);
        cur.pop_back();
    }
}

}  // namespace

TilingReport check_union(const Tiling& t) {
    int e = t.block.e, w = t.block.weight;
    std::set<ZLabel> covered, region;
    for (const auto& c : t.cells)
        for (const auto& v : c.para.vertices())
            if (in_plus_region(v, e, t.m)) covered.insert(v);
    ZLabel cur;
    if (w > 0) enumerate_region(e, w, t.m, cur, region);
    if (covered == region) return {};
    for (const auto& v : region)
        if (!covered.count(v)) return {false, "uncovered point " + label_str(v)};
    for (const auto& v : covered)
        if (!region.count(v)) return {false, "vertex outside the region " + label_str(v)};
    return {false, "coverage mismatch"};
}

TilingReport check_cube_injective(const Tiling& t) {
    std::map<ZLabel, HatLabel> seen;
    for (const auto& c : t.cells)
        for (const auto& h : c.cube.vertices()) {
            ZLabel z = h.project();
            if (!in_plus_region(z, t.block.e, t.m)) continue;
            auto [it, fresh] = seen.emplace(z, h);
            if (!fresh && it->second != h) return {false, "two cube vertices over " + label_str(z)};
        }
    return {};
}

TilingReport check_common_faces(const Tiling& t) {
    int e = t.block.e;
    size_t n = t.cells.size();
    std::vector<std::vector<ZLabel>> zv(n);
    std::vector<std::vector<HatLabel>> hv(n);
    std::map<ZLabel, std::vector<size_t>> by_z;
    std::map<HatLabel, std::vector<size_t>> by_hat;
    for (size_t i = 0; i < n; ++i) {
        zv[i] = t.cells[i].para.vertices();
        hv[i] = t.cells[i].cube.vertices();
        for (const auto& z : zv[i])
            if (in_plus_region(z, e, t.m)) by_z[z].push_back(i);
        for (const auto& h : hv[i]) by_hat[h].push_back(i);
    }
    std::set<std::pair<size_t, size_t>> pairs;
    auto collect = [&](const std::vector<size_t>& owners) {
        for (size_t a = 0; a < owners.size(); ++a)
            for (size_t b = a + 1; b < owners.size(); ++b)
                if (owners[a] != owners[b]) pairs.insert(std::minmax(owners[a], owners[b]));
    };
    for (const auto& [z, owners] : by_z) collect(owners);
    for (const auto& [h, owners] : by_hat) collect(owners);
    for (auto [i, j] : pairs) {
        std::set<ZLabel> meet, face;
        std::set<ZLabel> zj(zv[j].begin(), zv[j].end());
        for (const auto& z : zv[i])
            if (in_plus_region(z, e, t.m) && zj.count(z)) meet.insert(z);
        std::set<HatLabel> hj(hv[j].begin(), hv[j].end());
        for (const auto& h : hv[i])
            if (hj.count(h)) {
                ZLabel z = h.project();
                if (in_plus_region(z, e, t.m)) face.insert(z);
            }
        if (meet != face)
            return {false, "cells " + to_string(t.cells[i].owner) + " and " + to_string(t.cells[j].owner) +
                               " meet outside a common face"};
    }
    return {};
}

std::vector<std::pair<Partition, Partition>> ext_adjacency(const BlockId& b) {
    std::vector<std::pair<Partition, HatLabel>> good;
    for (const auto& p : enumerate_block(b))
        if (is_m_increasing(p, b.e, 4)) good.push_back({p, hat_z(p, b.e)});
    std::vector<std::pair<Partition, Partition>> out;
    for (size_t i = 0; i < good.size(); ++i)
        for (size_t j = i + 1; j < good.size(); ++j)
            if ((good[i].second - good[j].second).norm() == 1) out.push_back({good[i].first, good[j].first});
    return out;
}

namespace {

using nlohmann::json;

json hat_json(const HatLabel& h) {
    json upper = json::array();
    for (const auto& [key, v] : h.upper) upper.push_back({key.first + 1, key.second + 1, v});
    return {{"diag", h.diag}, {"upper", upper}};
}

HatLabel hat_from_json(const json& j) {
    HatLabel h;
    h.diag = j.at("diag").get<std::vector<int>>();
    for (const auto& u : j.at("upper")) h.upper[{u.at(0).get<int>() - 1, u.at(1).get<int>() - 1}] = u.at(2).get<int>();
    return h;
}

std::string svg(const Tiling& t) {
    int e = t.block.e;
    const int scale = 20, pad = 20;
    int size = (e + 1) * scale + 2 * pad;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\">\n";
    out << "<rect x=\"" << pad << "\" y=\"" << pad << "\" width=\"" << e * scale << "\" height=\"" << e * scale
        << "\" fill=\"none\" stroke=\"#999\"/>\n";
    for (const auto& c : t.cells) {
        auto v = c.para.vertices();
        bool generic = is_generic(c.para.anchor, e);
        out << "<polygon class=\"" << (generic ? "generic" : "boundary") << "\" data-owner=\"" << to_string(c.owner)
            << "\" points=\"";
        for (int k : {0, 1, 3, 2}) {
            // first coordinate to the right, second upwards
            out << pad + v[k][0] * scale << "," << size - pad - v[k][1] * scale << (k == 2 ? "" : " ");
        }
        out << "\" fill=\"" << (generic ? "#cde" : "none") << "\" stroke=\"#333\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace

std::string export_tiling(const Tiling& t, const std::string& format) {
    if (format == "svg") {
        if (t.block.weight != 2) throw std::invalid_argument("svg export needs weight 2");
        return svg(t);
    }
    if (format != "json" && format != "json3d") throw std::invalid_argument("unknown tiling format: " + format);
    if (format == "json3d" && t.block.weight != 3) throw std::invalid_argument("json3d export needs weight 3");
    json cells = json::array();
    for (const auto& c : t.cells) {
        json cell = {{"owner", c.owner.parts}};
        if (format == "json") {
            cell["anchor"] = c.para.anchor;
            cell["generators"] = c.para.generators.plain;
            cell["hat_anchor"] = hat_json(c.cube.anchor);
        } else {
            cell["generic"] = is_generic(c.para.anchor, t.block.e);
            cell["vertices"] = c.para.vertices();
        }
        cells.push_back(cell);
    }
    json doc = {{"e", t.block.e}, {"core", t.block.core.parts}, {"weight", t.block.weight}, {"m", t.m}, {"cells", cells}};
    return doc.dump() + "\n";
}

Tiling import_tiling_json(const std::string& text) {
    json doc = json::parse(text);
    Tiling t;
    t.block = {doc.at("e").get<int>(), Partition(doc.at("core").get<std::vector<int>>()), doc.at("weight").get<int>()};
    t.m = doc.value("m", 4);
    for (const auto& c : doc.at("cells")) {
        TilingCell cell;
        cell.owner = Partition(c.at("owner").get<std::vector<int>>());
        cell.para.owner = cell.owner;
        cell.para.anchor = c.at("anchor").get<ZLabel>();
        cell.para.generators.plain = c.at("generators").get<std::vector<ZLabel>>();
        for (const auto& g : cell.para.generators.plain) cell.para.generators.lifted.push_back(lift(g));
        cell.cube = {hat_from_json(c.at("hat_anchor")), cell.para.generators.lifted, cell.owner};
        t.cells.push_back(std::move(cell));
    }
    return t;
}

}  // namespace focktiles
