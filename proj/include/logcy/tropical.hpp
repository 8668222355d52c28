#pragma once

#include "logcy/pair.hpp"

#include <map>

namespace logcy {

class TropicalError : public std::runtime_error {
public:
    explicit TropicalError(const std::string& m) : std::runtime_error(m) {}
};

// Tropical 1-cycle in winding coordinates: c[(ray, slot)] counts oriented
// loops around the singular vertex at that slot. Balanced by construction.
class TropCycle {
public:
    using Windings = std::map<std::pair<size_t, size_t>, Int>;

    const Windings& windings() const { return c_; }
    Int winding(size_t ray, size_t slot) const;
    bool is_zero() const { return c_.empty(); }

    friend TropCycle operator+(const TropCycle& a, const TropCycle& b);
    TropCycle scaled(const Int& k) const;
    bool operator==(const TropCycle& o) const { return c_ == o.c_; }

    std::string str() const;  // "c[1,1]=1 c[2,1]=1 c[3,1]=1", "0" when empty

private:
    friend TropCycle make_cycle(const LooijengaPair& pair, const TropCycle::Windings& c);
    friend class CycleBuilder;
    Windings c_;
};

// Validates slot references and the balancing condition sum c_ij v_i = 0;
// on failure reports the defect vector.
TropCycle make_cycle(const LooijengaPair& pair, const TropCycle::Windings& c);

// Basis of the balanced winding lattice: all adjacent wings plus a spoke
// basis supported on first slots.
std::vector<TropCycle> wings_and_spokes(const LooijengaPair& pair);

TropCycle tropicalize(const LooijengaPair& pair, const PicClass& a);
PicClass detropicalize(const LooijengaPair& pair, const TropCycle& cycle);

struct H1Report {
    long long free_rank = 0;
    std::vector<long long> torsion;  // invariant factors > 1
    std::string str() const;
};

H1Report h1_compute(const LooijengaPair& pair, bool with_torsion);

}  // namespace logcy
