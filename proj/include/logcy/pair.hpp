#pragma once

#include "logcy/field.hpp"
#include "logcy/toric.hpp"
#include "logcy/zmat.hpp"

#include <map>
#include <memory>

namespace logcy {

class PairError : public std::runtime_error {
public:
    explicit PairError(const std::string& m) : std::runtime_error(m) {}
};

class LooijengaPair;

// Class in Pic(Y) = Z^(n+N) / relations, written over the pullback generators
// Dbar[i] and the exceptionals E[i,j]. Stored as the canonical representative
// modulo the relation lattice, so equality is plain vector equality.
class PicClass {
public:
    const std::vector<Int>& vec() const { return v_; }
    bool operator==(const PicClass& o) const { return v_ == o.v_; }
    bool operator!=(const PicClass& o) const { return !(*this == o); }
    bool is_zero() const;

    friend PicClass operator+(const PicClass& a, const PicClass& b);
    friend PicClass operator-(const PicClass& a, const PicClass& b);
    PicClass operator-() const;
    PicClass scaled(const Int& c) const;

    std::string str(const LooijengaPair& pair) const;

private:
    friend class LooijengaPair;
    PicClass(std::vector<Int> v, const LooijengaPair* owner) : v_(std::move(v)), owner_(owner) {}
    std::vector<Int> v_;
    const LooijengaPair* owner_ = nullptr;
};

struct Decomposition {
    ToricDivisor toric_part;            // canonical representative in Pic(Ybar)
    std::map<std::pair<size_t, size_t>, Int> gamma;  // (ray, slot) -> coefficient
};

struct WingSpokeBasis {
    std::vector<PicClass> wings;
    std::vector<PicClass> spokes;
};

class LooijengaPair {
public:
    // blowups[i] lists the scalars mu for ray i+1, innermost slot first.
    LooijengaPair(Fan2D fan, std::vector<std::vector<LaurentScalar>> blowups);

    const Fan2D& fan() const { return fan_; }
    size_t rays() const { return fan_.size(); }
    size_t blowup_count(size_t ray) const { return mus_[ray - 1].size(); }
    size_t total_blowups() const { return total_; }
    const LaurentScalar& mu(size_t ray, size_t slot) const { return mus_[ray - 1].at(slot - 1); }
    bool generic() const { return generic_; }

    size_t ambient_dim() const { return rays() + total_; }
    size_t slot_index(size_t ray, size_t slot) const;           // into the e-block
    std::pair<size_t, size_t> slot_of(size_t index) const;      // inverse

    PicClass make_class(std::vector<Int> raw) const;  // raw over (g | e)
    PicClass pullback_class(size_t ray) const;
    PicClass exceptional_class(size_t ray, size_t slot) const;
    PicClass zero_class() const;
    PicClass strict_transform(size_t ray) const;

    Int intersection(const PicClass& a, const PicClass& b) const;
    bool in_dperp(const PicClass& a) const;

    long long charge() const;
    long long s_rank() const;
    std::vector<PicClass> dperp_basis() const;
    Decomposition decompose(const PicClass& a) const;
    WingSpokeBasis wing_spoke_decomposition() const;

    PicClass parse_class(const std::string& expr) const;

private:
    std::vector<Int> reduce(std::vector<Int> raw) const;

    Fan2D fan_;
    std::vector<std::vector<LaurentScalar>> mus_;
    size_t total_ = 0;
    bool generic_ = true;
    ZMat relations_hnf_;      // over the ambient lattice
    ZMat toric_hnf_;          // character relations over the g-block only
    ZMat form_;               // ambient intersection form
    QuotientMap quotient_;    // Pic(Y) coordinates
};

}  // namespace logcy
