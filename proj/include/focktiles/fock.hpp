#pragma once

#include "focktiles/laurent.hpp"
#include "focktiles/partition.hpp"

#include <map>
#include <utility>
#include <vector>

namespace focktiles {

// Finite combination of partitions; zero coefficients never stored.
class FockVector {
public:
    using Map = std::map<Partition, Laurent>;

    FockVector() = default;
    explicit FockVector(const Partition& p) { terms_[p] = 1; }

    const Map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    Laurent coeff(const Partition& p) const;

    void add(const Partition& p, const Laurent& c);
    FockVector& operator+=(const FockVector& o);
    FockVector& operator-=(const FockVector& o);
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(const Laurent& c, const FockVector& v);
    friend bool operator==(const FockVector&, const FockVector&) = default;

private:
    Map terms_;
};

// one term of a divided-power action: target partition and exponent of q
struct FockTerm {
    Partition target;
    int exponent;
};
std::vector<FockTerm> F_terms(const Partition& p, int i, int k, int e);
std::vector<FockTerm> E_terms(const Partition& p, int i, int k, int e);

FockVector apply_F(const FockVector& v, int i, int k, int e);
FockVector apply_E(const FockVector& v, int i, int k, int e);
Laurent pairing(const FockVector& v, const Partition& p);

}  // namespace focktiles
