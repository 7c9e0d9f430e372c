#include "focktiles/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace focktiles {

Laurent::Laurent(long long c) {
    if (c != 0) terms_.emplace_back(0, BigInt(c));
}

Laurent Laurent::monomial(int exp, BigInt coeff) {
    Laurent r;
    if (coeff != 0) r.terms_.emplace_back(exp, std::move(coeff));
    return r;
}

BigInt Laurent::coeff(int exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, int x) { return t.first < x; });
    if (it != terms_.end() && it->first == exp) return it->second;
    return 0;
}

int Laurent::min_degree() const {
    if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
    return terms_.front().first;
}

int Laurent::max_degree() const {
    if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
    return terms_.back().first;
}

void Laurent::add_term(int exp, const BigInt& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, int x) { return t.first < x; });
    if (it != terms_.end() && it->first == exp) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, Term(exp, c));
    }
}

Laurent& Laurent::operator+=(const Laurent& o) {
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first < a->first) {
            out.push_back(*b++);
        } else {
            BigInt s = a->second + b->second;
            if (s != 0) out.emplace_back(a->first, std::move(s));
            ++a, ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::map<int, BigInt> acc;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
    Laurent r;
    for (auto& [e, c] : acc)
        if (c != 0) r.terms_.emplace_back(e, std::move(c));
    return r;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent Laurent::shifted(int by) const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.first += by;
    return r;
}

Laurent Laurent::bar() const {
    Laurent r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.emplace_back(-it->first, it->second);
    return r;
}

Laurent Laurent::divide_exact(const Laurent& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    Laurent rem = *this, quot;
    const auto& lead = d.terms_.back();
    while (!rem.is_zero()) {
        const auto& top = rem.terms_.back();
        if (top.first - lead.first < rem.min_degree() - d.min_degree() ||
            top.second % lead.second != 0)
            throw std::domain_error("inexact Laurent division");
        Laurent t = monomial(top.first - lead.first, top.second / lead.second);
        quot += t;
        rem -= t * d;
    }
    return quot;
}

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        BigInt c = it->second;
        int e = it->first;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (c < 0) c = -c;
        if (e == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c << "*";
        os << "q";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

Laurent quantum_int(int k) {
    if (k <= 0) throw std::invalid_argument("quantum integer needs k >= 1");
    Laurent r;
    for (int i = -k + 1; i <= k - 1; i += 2) r += Laurent::q(i);
    return r;
}

Laurent quantum_factorial(int k) {
    if (k < 0) throw std::invalid_argument("quantum factorial needs k >= 0");
    Laurent r = 1;
    for (int i = 2; i <= k; ++i) r *= quantum_int(i);
    return r;
}

BarSplit bar_symmetric_split(const Laurent& c) {
    BarSplit s;
    for (const auto& [e, v] : c.terms()) {
        if (e > 0) continue;
        s.alpha += Laurent::monomial(e, v);
        if (e < 0) s.alpha += Laurent::monomial(-e, v);
    }
    s.beta = c - s.alpha;
    return s;
}

// Accepts the output of Laurent::str plus loose spacing.
Laurent parse_laurent(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty polynomial");
    Laurent r;
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        BigInt c = 1;
        bool have_c = false;
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) {
            c = BigInt(s.substr(i, j - i));
            have_c = true;
            i = j;
            if (i < s.size() && s[i] == '*') ++i;
        }
        int exp = 0;
        if (i < s.size() && s[i] == 'q') {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                size_t k = i;
                if (k < s.size() && s[k] == '-') ++k;
                size_t m = k;
                while (m < s.size() && std::isdigit(static_cast<unsigned char>(s[m]))) ++m;
                if (m == k) throw std::invalid_argument("bad exponent in '" + text + "'");
                exp = std::stoi(s.substr(i, m - i));
                i = m;
            }
        } else if (!have_c) {
            throw std::invalid_argument("bad polynomial '" + text + "'");
        }
        r += Laurent::monomial(exp, sign * c);
        if (i < s.size() && s[i] != '+' && s[i] != '-') throw std::invalid_argument("bad polynomial '" + text + "'");
    }
    return r;
}

}  // namespace focktiles
