// Acceptance suite: one line per criterion, exact checks throughout.

#include "logcy/document.hpp"
#include "logcy/periods.hpp"
#include "logcy/rng.hpp"
#include "logcy/skeleton.hpp"
#include "logcy/sweep.hpp"
#include "logcy/tropical.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace logcy;

namespace {

int failures = 0;

double run_criterion(int number, const std::string& name, double budget_seconds,
                     const std::function<bool(std::ostream&)>& body) {
    std::ostringstream detail;
    bool ok = false;
    auto start = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << " exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (budget_seconds > 0 && secs >= budget_seconds) {
        ok = false;
        detail << " over time budget " << budget_seconds << "s";
    }
    if (!ok) ++failures;
    std::cout << "criterion " << number << " " << (ok ? "PASS" : "FAIL") << " [" << name << "]"
              << detail.str() << " (" << secs << "s)\n";
    return secs;
}

LooijengaPair plane_three() {
    Fan2D fan = Fan2D::validate({{1, 0}, {0, 1}, {-1, -1}});
    return LooijengaPair(fan, {{parse_scalar("2")}, {parse_scalar("3")}, {parse_scalar("5+t")}});
}

LooijengaPair plane_wing() {
    Fan2D fan = Fan2D::validate({{1, 0}, {0, 1}, {-1, -1}});
    return LooijengaPair(fan, {{parse_scalar("2"), parse_scalar("3")}, {}, {}});
}

LooijengaPair f2_fibers() {
    Fan2D fan = Fan2D::validate({{1, 0}, {0, 1}, {-1, 2}, {0, -1}});
    return LooijengaPair(fan, {{parse_scalar("2")}, {}, {parse_scalar("3")}, {}});
}

bool single_value_compare(const LooijengaPair& pair, const std::string& expected,
                          std::ostream& out) {
    CompareReport rep = compare_periods(pair, 1);
    if (!rep.pass || rep.entries.size() != 1) {
        out << " compare failed";
        return false;
    }
    const CompareEntry& e = rep.entries[0];
    if (e.nonarch.value != parse_scalar(expected)) {
        out << " value " << e.nonarch.str() << " != " << expected;
        return false;
    }
    out << " value " << e.nonarch.str();
    return true;
}

}  // namespace

int main() {
    // 1. Main theorem on the two pinned instances, exact values, < 1 s each.
    run_criterion(1, "main theorem pinned instances", 2.0, [](std::ostream& out) {
        auto t0 = std::chrono::steady_clock::now();
        bool a = single_value_compare(plane_three(), "30 + 6*t", out);
        double s1 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        t0 = std::chrono::steady_clock::now();
        bool b = single_value_compare(plane_wing(), "3/2", out);
        double s2 = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (s1 >= 1.0 || s2 >= 1.0) {
            out << " instance over 1s";
            return false;
        }
        return a && b;
    });

    // 2. Randomized theorem sweep over the fan catalogue, 50 trials, < 30 s.
    run_criterion(2, "randomized theorem sweep", 30.0, [](std::ostream& out) {
        SweepSummary sum = run_sweep(50, 20240501);
        out << " " << sum.passed << "/50 compare+rank";
        bool names = fan_catalogue().size() == 5;
        return sum.all_pass && names;
    });

    // 3. Integral monodromy matrices.
    run_criterion(3, "integral monodromy", 0, [](std::ostream& out) {
        Fan2D fan = Fan2D::validate({{1, 0}, {0, 1}, {-1, -1}});
        LooijengaPair pair(fan, {{parse_scalar("2"), parse_scalar("3"), parse_scalar("7")},
                                 {parse_scalar("5")},
                                 {}});
        Skeleton skel(pair);
        Mat2 unipotent{{{1, 1}, {0, 1}}};
        for (size_t i = 1; i <= 2; ++i)
            for (size_t j = 1; j <= pair.blowup_count(i); ++j)
                if (!(skel.int_monodromy(i, j, j) == unipotent)) {
                    out << " single vertex failed at ray " << i;
                    return false;
                }
        for (size_t j = 1; j <= 3; ++j)
            for (size_t k = j; k <= 3; ++k) {
                Mat2 m = skel.int_monodromy(1, j, k);
                long long want = static_cast<long long>(k - j + 1);
                if (m.a[0][0] != 1 || m.a[1][1] != 1 || m.a[1][0] != 0 || m.a[0][1] != want) {
                    out << " range " << j << ".." << k << " gave " << m.str();
                    return false;
                }
            }
        return true;
    });

    // 4. K-affine monodromy and its exponent projection.
    run_criterion(4, "K-affine monodromy", 0, [](std::ostream& out) {
        LooijengaPair pair = plane_three();
        Skeleton skel(pair);
        for (size_t i = 1; i <= 3; ++i) {
            AffineTransformK t = skel.kaffine_monodromy(i, 1);
            if (!(t.mat == Mat2{{{1, 0}, {1, 1}}})) {
                out << " matrix part wrong on ray " << i;
                return false;
            }
            if (t.trans[0] != pair.mu(i, 1).inverse() || !t.trans[1].is_one()) {
                out << " translation part wrong on ray " << i;
                return false;
            }
            if (!(t.mat.transpose() == skel.int_monodromy(i, 1, 1))) {
                out << " exponent projection mismatch on ray " << i;
                return false;
            }
        }
        LooijengaPair wing = plane_wing();
        Skeleton ws(wing);
        AffineTransformK both = ws.kaffine_monodromy_range(1, 1, 2);
        return both.mat.transpose() == ws.int_monodromy(1, 1, 2);
    });

    // 5. Torsion of the pinned F2 instance.
    run_criterion(5, "twisted homology torsion", 1.0, [](std::ostream& out) {
        H1Report rep = h1_compute(f2_fibers(), true);
        out << " " << rep.str();
        return rep.free_rank == 0 && rep.torsion == std::vector<long long>{2};
    });

    // 6. Rank identities across the sweep.
    run_criterion(6, "rank identities", 30.0, [](std::ostream& out) {
        SweepSummary sum = run_sweep(50, 777);
        for (const SweepTrial& t : sum.trials) {
            if (t.dperp_rank != t.charge - 2 + t.s_rank || t.dperp_rank != t.winding_rank) {
                out << " identity failed in trial " << t.index;
                return false;
            }
            if (t.occupied_rays >= 3 &&
                t.dperp_rank != static_cast<long long>(t.total_blowups) - 2) {
                out << " q>=3 case formula failed in trial " << t.index;
                return false;
            }
        }
        return true;
    });

    // 7. Charge positivity, zero exactly on toric members.
    run_criterion(7, "charge positivity", 30.0, [](std::ostream& out) {
        SweepSummary sum = run_sweep(50, 424242);
        bool saw_toric = false;
        for (const SweepTrial& t : sum.trials) {
            if (t.charge < 0) {
                out << " negative charge in trial " << t.index;
                return false;
            }
            if ((t.charge == 0) != (t.total_blowups == 0)) {
                out << " charge zero mismatch in trial " << t.index;
                return false;
            }
            if (t.total_blowups == 0) saw_toric = true;
        }
        if (!saw_toric) {
            out << " sweep contained no toric member";
            return false;
        }
        return true;
    });

    // 8. Oracle calibration: psi(O(p-q)) = 1/lambda and the principality test.
    run_criterion(8, "oracle calibration", 0, [](std::ostream& out) {
        Fan2D fan = Fan2D::validate({{1, 0}, {0, 1}, {-1, -1}});
        LaurentScalar lambda = parse_scalar("11 + 2*t");
        BoundaryDivisor div(3);
        div[0] = {{LaurentScalar::one(), Int(1)}, {lambda, Int(-1)}};
        if (glue_divisor_value(fan, div) != lambda.inverse()) {
            out << " O(p-q) calibration failed";
            return false;
        }
        // Divisors whose z-values multiply to 1 are principal: value 1.
        SplitMix64 rng(73);
        for (int trial = 0; trial < 20; ++trial) {
            LaurentScalar a = parse_scalar(std::to_string(1 + rng.below(9)));
            LaurentScalar b = parse_scalar(std::to_string(1 + rng.below(9)) + "+t");
            BoundaryDivisor d(3);
            d[1] = {{a, Int(1)}, {b, Int(1)}, {a * b, Int(-1)}, {LaurentScalar::one(), Int(-1)}};
            if (glue_divisor_value(fan, d) != LaurentScalar::one()) {
                out << " principal divisor gave a nontrivial value";
                return false;
            }
        }
        return true;
    });

    // 9. Property suites.
    run_criterion(9, "property suites", 30.0, [](std::ostream& out) {
        LooijengaPair three = plane_three();
        LooijengaPair wing = plane_wing();
        // (a) seed independence across five seeds per class.
        for (const LooijengaPair* pair : {&three, &wing})
            for (const PicClass& g : pair->dperp_basis()) {
                PeriodValue base = algebraic_period(*pair, g, 101);
                for (uint64_t seed = 102; seed <= 106; ++seed)
                    if (!(algebraic_period(*pair, g, seed) == base)) {
                        out << " (a) seed dependence";
                        return false;
                    }
            }
        // (b) homomorphism of all three routes under addition.
        SplitMix64 rng(79);
        for (int trial = 0; trial < 20; ++trial) {
            auto basis = three.dperp_basis();
            PicClass x = basis[0].scaled(Int(static_cast<long long>(rng.below(5)) - 2));
            PicClass y = basis[0].scaled(Int(static_cast<long long>(rng.below(5)) - 2));
            TropCycle cx = tropicalize(three, x), cy = tropicalize(three, y);
            bool hom =
                na_period(three, cx + cy).value ==
                    na_period(three, cx).value * na_period(three, cy).value &&
                na_period_cech(three, cx + cy).value ==
                    na_period_cech(three, cx).value * na_period_cech(three, cy).value &&
                algebraic_period(three, x + y, 7).value ==
                    algebraic_period(three, x, 7).value * algebraic_period(three, y, 7).value;
            if (!hom) {
                out << " (b) homomorphism failed";
                return false;
            }
        }
        // (c) + (d): 100 random Dperp elements round-trip and balance.
        Fan2D dp = Fan2D::validate({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}});
        LooijengaPair big(dp, {{parse_scalar("2"), parse_scalar("3")},
                               {parse_scalar("5")},
                               {parse_scalar("7")},
                               {},
                               {parse_scalar("1/2")}});
        auto basis = big.dperp_basis();
        for (int trial = 0; trial < 100; ++trial) {
            PicClass a = big.zero_class();
            for (const PicClass& g : basis)
                a = a + g.scaled(Int(static_cast<long long>(rng.below(7)) - 3));
            TropCycle c = tropicalize(big, a);
            Int dx(0), dy(0);
            for (const auto& [key, val] : c.windings()) {
                dx += val * big.fan().ray(key.first)[0];
                dy += val * big.fan().ray(key.first)[1];
            }
            if (dx != 0 || dy != 0) {
                out << " (d) unbalanced tropicalization";
                return false;
            }
            if (!(detropicalize(big, c) == a)) {
                out << " (c) round trip failed";
                return false;
            }
        }
        // (e) cech walk path independence under loop perturbation.
        Skeleton skel(wing);
        CechCocycle cocycle = skel.cech_cocycle();
        LaurentScalar base = walk_local_loop(skel, cocycle, 1, 1, Int(1), standard_local_loop());
        const RayFrame& f = skel.frame(1);
        Vec2 shifted{f.phi[0] - 3 * f.eta[0], f.phi[1] - 3 * f.eta[1]};
        std::vector<WalkEvent> wobble = {
            {WalkEvent::FlagPass, -1, +1}, {WalkEvent::CutCross, 0, -1},
            {WalkEvent::CutCross, 0, +1}, {WalkEvent::CutCross, 0, +1},
            {WalkEvent::FlagPass, +1, +1}, {WalkEvent::Junction, 0, 0},
        };
        if (!(walk_local_loop(skel, cocycle, 1, 1, Int(1), standard_local_loop(), shifted) ==
              base) ||
            !(walk_local_loop(skel, cocycle, 1, 1, Int(1), wobble) == base)) {
            out << " (e) walk perturbation changed the pairing";
            return false;
        }
        return true;
    });

    // 10. Non-generic extension.
    run_criterion(10, "non-generic extension", 0, [](std::ostream& out) {
        Fan2D fan = Fan2D::validate({{1, 0}, {0, 1}, {-1, -1}});
        PairDocument doc;
        doc.fan = {{1, 0}, {0, 1}, {-1, -1}};
        doc.blowups = {{"2", "2+t"}, {"3"}, {"5"}};
        bool rejected = false;
        try {
            build_pair(doc);
        } catch (const DocumentError&) {
            rejected = true;
        }
        if (!rejected) {
            out << " non-generic pair accepted without the flag";
            return false;
        }
        doc.allow_nongeneric = true;
        LooijengaPair pair = build_pair(doc);
        CompareReport rep = compare_periods(pair, 5);
        if (!rep.pass || rep.entries.empty()) {
            out << " compare failed on the non-generic pair";
            return false;
        }
        // Closed-form internal chain identity: equal parameters with exponents
        // summing to zero contribute 1.
        LaurentScalar mu = parse_scalar("6 + t/2");
        if (winding_product({mu, mu}, {Int(3), Int(-3)}) != LaurentScalar::one()) {
            out << " internal chain value differed from 1";
            return false;
        }
        return true;
    });

    if (failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) failed\n";
    return 1;
}
