#include "logcy/periods.hpp"

#include "logcy/rng.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace logcy {

PeriodValue na_period(const LooijengaPair& pair, const TropCycle& cycle) {
    LaurentScalar v = LaurentScalar::one();
    for (const auto& [key, c] : cycle.windings())
        v = v * pair.mu(key.first, key.second).pow(c.convert_to<long long>());
    return {v};
}

LaurentScalar winding_product(const std::vector<LaurentScalar>& mus,
                              const std::vector<Int>& exponents) {
    if (mus.size() != exponents.size())
        throw PeriodError("winding product needs one exponent per scalar");
    LaurentScalar v = LaurentScalar::one();
    for (size_t i = 0; i < mus.size(); ++i) {
        if (!mus[i].is_unit()) throw PeriodError("winding product requires unit scalars");
        v = v * mus[i].pow(exponents[i].convert_to<long long>());
    }
    return v;
}

std::vector<WalkEvent> standard_local_loop() {
    return {
        {WalkEvent::FlagPass, -1, +1},  // (C1,C2) overlap, counterclockwise
        {WalkEvent::CutCross, 0, +1},
        {WalkEvent::FlagPass, +1, +1},  // (C1,C4) overlap
        {WalkEvent::Junction, 0, 0},
    };
}

namespace {

long long pair_covector_tangent(const Vec2& covector, const Vec2& tangent) {
    return covector[0] * tangent[0] + covector[1] * tangent[1];
}

const CechEntry& find_entry(const CechCocycle& cocycle, size_t ray, size_t slot, int flank) {
    for (const CechEntry& e : cocycle.entries)
        if (e.ray == ray && e.slot == slot && e.flank == flank) return e;
    throw PeriodError("cocycle has no entry at this vertex");
}

}  // namespace

LaurentScalar walk_local_loop(const Skeleton& skel, const CechCocycle& cocycle, size_t ray,
                              size_t slot, const Int& winding,
                              const std::vector<WalkEvent>& events,
                              const std::optional<Vec2>& start_decoration) {
    const RayFrame& frame = skel.frame(ray);
    long long c = winding.convert_to<long long>();
    Vec2 xi = start_decoration.value_or(Vec2{c * frame.phi[0], c * frame.phi[1]});
    Vec2 start = xi;
    LaurentScalar acc = LaurentScalar::one();
    for (const WalkEvent& ev : events) {
        switch (ev.kind) {
            case WalkEvent::FlagPass: {
                const CechEntry& e = find_entry(cocycle, ray, slot, ev.flank);
                long long expo = ev.direction * pair_covector_tangent(xi, e.lambda);
                acc = acc * e.value.pow(expo);
                break;
            }
            case WalkEvent::CutCross:
                xi = frame.monodromy.power(ev.direction).apply(xi);
                break;
            case WalkEvent::Junction:
                // The emanating edge toward the origin peels off c copies of
                // the invariant covector.
                xi = Vec2{xi[0] - c * frame.eta[0], xi[1] - c * frame.eta[1]};
                break;
        }
    }
    if (xi != start)
        throw PeriodError("walk decoration fails to close up (unbalanced walk)");
    return acc;
}

PeriodValue na_period_cech(const LooijengaPair& pair, const TropCycle& cycle) {
    Skeleton skel(pair);
    CechCocycle cocycle = skel.cech_cocycle();
    LaurentScalar v = LaurentScalar::one();
    for (const auto& [key, c] : cycle.windings())
        v = v * walk_local_loop(skel, cocycle, key.first, key.second, c, standard_local_loop());
    return {v};
}

LaurentScalar invariant_loop_value(const Skeleton& skel, const CechCocycle& cocycle, size_t ray,
                                   size_t slot, const Int& multiple) {
    long long m = multiple.convert_to<long long>();
    Vec2 xi{m * skel.frame(ray).eta[0], m * skel.frame(ray).eta[1]};
    // An invariant decoration has no junction jump; walk with winding 0.
    std::vector<WalkEvent> events = {
        {WalkEvent::FlagPass, -1, +1},
        {WalkEvent::CutCross, 0, +1},
        {WalkEvent::FlagPass, +1, +1},
    };
    return walk_local_loop(skel, cocycle, ray, slot, Int(0), events, xi);
}

namespace {

// Degree-zero rational function on one boundary component, kept as the data
// the node product needs: value at the 0-node and the limit at infinity.
struct ComponentFunction {
    LaurentScalar at_zero;
    LaurentScalar at_infinity;
};

LaurentScalar node_product(const std::vector<ComponentFunction>& g) {
    size_t n = g.size();
    LaurentScalar psi = LaurentScalar::one();
    for (size_t i = 0; i < n; ++i) {
        size_t next = (i + 1) % n;
        psi = psi * (g[next].at_zero / g[i].at_infinity);
    }
    return psi;
}

}  // namespace

LaurentScalar glue_divisor_value(const Fan2D& fan, const BoundaryDivisor& divisor) {
    if (divisor.size() != fan.size())
        throw PeriodError("divisor must list points for every boundary component");
    std::vector<ComponentFunction> g;
    for (const auto& pts : divisor) {
        Int degree(0);
        ComponentFunction f{LaurentScalar::one(), LaurentScalar::one()};
        for (const auto& [z, mult] : pts) {
            if (z.is_zero()) throw PeriodError("divisor point sits at a node (z = 0)");
            degree += mult;
            // factor (z - p)^mult contributes (-p)^mult at zero, 1 at infinity
            // once the total degree vanishes.
            f.at_zero = f.at_zero * (-z).pow(mult.convert_to<long long>());
        }
        if (degree != 0)
            throw PeriodError("divisor is not of multidegree zero on every component");
        g.push_back(std::move(f));
    }
    return node_product(g);
}

namespace {

struct SectionData {
    // Per component: restriction polynomial q_i written in the node-adapted
    // coordinate, constant term at the node shared with the previous face.
    std::vector<std::vector<Int>> q;
};

SectionData draw_section(const Fan2D& fan, const ToricDivisor& d, SplitMix64& rng) {
    PolytopeEdgeData data = polytope_edges(fan, d);
    std::map<Vec2, Int> coeff;
    for (const Vec2& p : data.all_points) coeff[p] = Int(1 + rng.next() % 1000000);
    SectionData s;
    for (const PolytopeFace& face : data.faces) {
        std::vector<Int> q;
        for (const Vec2& p : face.points) q.push_back(coeff.at(p));
        s.q.push_back(std::move(q));
    }
    return s;
}

}  // namespace

PeriodValue algebraic_period(const LooijengaPair& pair, const PicClass& a, uint64_t seed) {
    if (!pair.in_dperp(a)) throw PeriodError("class is not orthogonal to the boundary");
    const Fan2D& fan = pair.fan();
    size_t n = fan.size();

    Decomposition dec = pair.decompose(a);
    std::vector<Int> m(n, Int(0));
    for (const auto& [key, val] : dec.gamma) m[key.first - 1] += val;
    ZMat toric_form = fan.intersection_matrix();
    std::vector<Int> tdeg = mat_vec(toric_form, dec.toric_part.a);
    for (size_t i = 0; i < n; ++i)
        if (tdeg[i] != -m[i])
            throw PeriodError("toric part degree mismatch (internal)");

    // Nef split: toric_part = A - B with B a multiple of an ample witness.
    ToricDivisor h = ample_witness(fan);
    long long grow = 0;
    ToricDivisor A, B;
    for (;; ++grow) {
        if (grow > 1000) throw PeriodError("nef split search exceeded bound (internal)");
        A.a.assign(n, Int(0));
        B.a.assign(n, Int(0));
        for (size_t i = 0; i < n; ++i) {
            B.a[i] = Int(grow) * h.a[i];
            A.a[i] = dec.toric_part.a[i] + B.a[i];
        }
        if (is_nef(fan, A)) break;
    }

    for (int attempt = 0; attempt < 8; ++attempt) {
        SplitMix64 rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(attempt));
        SectionData sa = draw_section(fan, A, rng);
        SectionData sb = draw_section(fan, B, rng);
        bool bad = false;
        std::vector<ComponentFunction> g(n);
        for (size_t i = 0; i < n && !bad; ++i) {
            const std::vector<Int>& qa = sa.q[i];
            const std::vector<Int>& qb = sb.q[i];
            long long da = static_cast<long long>(qa.size()) - 1;
            long long db = static_cast<long long>(qb.size()) - 1;
            if (m[i] + da - db != 0)
                throw PeriodError("restricted function is not of degree zero (internal)");
            if (qa.front() == 0 || qa.back() == 0 || qb.front() == 0 || qb.back() == 0) {
                bad = true;  // zero edge value; redraw
                break;
            }
            LaurentScalar mu_part = LaurentScalar::one();
            for (size_t j = 1; j <= pair.blowup_count(i + 1); ++j) {
                auto it = dec.gamma.find({i + 1, j});
                if (it == dec.gamma.end()) continue;
                mu_part = mu_part * pair.mu(i + 1, j).pow(it->second.convert_to<long long>());
            }
            g[i].at_zero = mu_part * LaurentScalar::from_rational(Rational(qa.front(), qb.front()));
            g[i].at_infinity = LaurentScalar::from_rational(Rational(qa.back(), qb.back()));
        }
        if (!bad) return {node_product(g)};
    }
    throw PeriodError("coefficient draws kept producing zero edge values");
}

CompareReport compare_periods(const LooijengaPair& pair, uint64_t seed) {
    CompareReport rep;
    for (const PicClass& g : pair.dperp_basis()) {
        CompareEntry e;
        e.class_expr = g.str(pair);
        TropCycle cycle = tropicalize(pair, g);
        e.cycle = cycle.str();
        e.algebraic = algebraic_period(pair, g, seed);
        e.nonarch = na_period(pair, cycle);
        e.cech = na_period_cech(pair, cycle);
        e.pass = e.algebraic == e.nonarch && e.nonarch == e.cech;
        if (algebraic_period(pair, g, seed + 1) != e.algebraic) rep.seed_stable = false;
        rep.pass = rep.pass && e.pass;
        rep.entries.push_back(std::move(e));
    }
    rep.pass = rep.pass && rep.seed_stable;
    return rep;
}

}  // namespace logcy
