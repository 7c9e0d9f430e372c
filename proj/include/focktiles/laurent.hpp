#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

namespace focktiles {

using BigInt = boost::multiprecision::cpp_int;

// Integer Laurent polynomial in q. Terms sorted by exponent, zeros never stored.
class Laurent {
public:
    using Term = std::pair<int, BigInt>;

    Laurent() = default;
    Laurent(long long c);  // NOLINT: constants convert implicitly
    static Laurent monomial(int exp, BigInt coeff = 1);
    static Laurent q(int exp = 1) { return monomial(exp, 1); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    BigInt coeff(int exp) const;
    int min_degree() const;  // requires non-zero
    int max_degree() const;

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent& operator*=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent operator-() const;
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

    Laurent shifted(int by) const;  // multiply by q^by
    Laurent bar() const;            // q -> q^-1

    // exact division; throws std::domain_error when the quotient is not a Laurent polynomial
    Laurent divide_exact(const Laurent& d) const;

    std::string str() const;  // "q^2 + 1 + q^-2", exponents descending

private:
    void add_term(int exp, const BigInt& c);
    std::vector<Term> terms_;
};

Laurent quantum_int(int k);
Laurent quantum_factorial(int k);

struct BarSplit {
    Laurent alpha;  // bar-invariant part
    Laurent beta;   // strictly positive exponents only
};
BarSplit bar_symmetric_split(const Laurent& c);

Laurent parse_laurent(const std::string& text);

}  // namespace focktiles
