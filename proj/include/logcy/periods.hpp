#pragma once

#include "logcy/skeleton.hpp"
#include "logcy/tropical.hpp"

namespace logcy {

class PeriodError : public std::runtime_error {
public:
    explicit PeriodError(const std::string& m) : std::runtime_error(m) {}
};

struct PeriodValue {
    LaurentScalar value;
    bool operator==(const PeriodValue& o) const { return value == o.value; }
    std::string str() const { return value.str(); }
};

// Closed form: product over windings of mu^c.
PeriodValue na_period(const LooijengaPair& pair, const TropCycle& cycle);

// The same product evaluated formally from explicit scalar/exponent lists;
// used for the closed-form identities on non-generic configurations.
LaurentScalar winding_product(const std::vector<LaurentScalar>& mus,
                              const std::vector<Int>& exponents);

// One step of a local chart walk around a singular vertex.
struct WalkEvent {
    enum Kind { FlagPass, CutCross, Junction } kind;
    int flank = 0;      // FlagPass: +1 for the (C1,C4) overlap, -1 for (C1,C2)
    int direction = 0;  // FlagPass: rotational sense (+1 ccw); CutCross: crossing sense
};

// The standard positively oriented local loop as an event word.
std::vector<WalkEvent> standard_local_loop();

// Walks one decorated loop around the vertex (ray, slot) through the chart
// stars, multiplying the cocycle contributions c^<lambda, xi> and carrying
// the decoration across the branch cut. `winding` scales the decoration and
// the junction jump. Checks that the decoration closes up.
LaurentScalar walk_local_loop(const Skeleton& skel, const CechCocycle& cocycle, size_t ray,
                              size_t slot, const Int& winding,
                              const std::vector<WalkEvent>& events,
                              const std::optional<Vec2>& start_decoration = std::nullopt);

// Cech route: decompose into local loops and walk each one.
PeriodValue na_period_cech(const LooijengaPair& pair, const TropCycle& cycle);

// Pairing of a local loop decorated with an invariant covector (value 1).
LaurentScalar invariant_loop_value(const Skeleton& skel, const CechCocycle& cocycle, size_t ray,
                                   size_t slot, const Int& multiple);

// Oriented divisor on the boundary cycle: per component, points given by
// their node-adapted coordinate value with integer multiplicities.
using BoundaryDivisor = std::vector<std::vector<std::pair<LaurentScalar, Int>>>;

// Gluing-cocycle value of a multidegree-zero divisor on the boundary of a
// toric pair; the calibration entry point for the algebraic period oracle.
LaurentScalar glue_divisor_value(const Fan2D& fan, const BoundaryDivisor& divisor);

// Algebraic period of a class in Dperp via the Pic^0(D) gluing cocycle.
PeriodValue algebraic_period(const LooijengaPair& pair, const PicClass& a, uint64_t seed);

struct CompareEntry {
    std::string class_expr;
    std::string cycle;
    PeriodValue algebraic, nonarch, cech;
    bool pass = false;
};

struct CompareReport {
    std::vector<CompareEntry> entries;
    bool pass = true;           // all three routes agree on every generator
    bool seed_stable = true;    // algebraic period agreed across probe seeds
};

CompareReport compare_periods(const LooijengaPair& pair, uint64_t seed);

}  // namespace logcy
