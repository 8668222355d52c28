#include "logcy/tropical.hpp"

#include "logcy/skeleton.hpp"

#include <algorithm>
#include <sstream>

namespace logcy {

Int TropCycle::winding(size_t ray, size_t slot) const {
    auto it = c_.find({ray, slot});
    return it == c_.end() ? Int(0) : it->second;
}

TropCycle operator+(const TropCycle& a, const TropCycle& b) {
    TropCycle r = a;
    for (const auto& [key, val] : b.c_) {
        Int& x = r.c_[key];
        x += val;
        if (x == 0) r.c_.erase(key);
    }
    return r;
}

TropCycle TropCycle::scaled(const Int& k) const {
    TropCycle r;
    if (k == 0) return r;
    for (const auto& [key, val] : c_) r.c_[key] = k * val;
    return r;
}

std::string TropCycle::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, val] : c_) {
        if (!first) os << " ";
        os << "c[" << key.first << "," << key.second << "]=" << val;
        first = false;
    }
    return os.str();
}

TropCycle make_cycle(const LooijengaPair& pair, const TropCycle::Windings& c) {
    TropCycle r;
    Int dx(0), dy(0);
    for (const auto& [key, val] : c) {
        auto [ray, slot] = key;
        if (ray < 1 || ray > pair.rays() || slot < 1 || slot > pair.blowup_count(ray))
            throw TropicalError("winding references a nonexistent singular vertex");
        if (val == 0) continue;
        r.c_[key] = val;
        dx += val * pair.fan().ray(ray)[0];
        dy += val * pair.fan().ray(ray)[1];
    }
    if (dx != 0 || dy != 0) {
        std::ostringstream os;
        os << "cycle is not balanced: defect (" << dx << ", " << dy << ")";
        throw TropicalError(os.str());
    }
    return r;
}

std::vector<TropCycle> wings_and_spokes(const LooijengaPair& pair) {
    std::vector<TropCycle> out;
    for (size_t i = 1; i <= pair.rays(); ++i)
        for (size_t j = 1; j + 1 <= pair.blowup_count(i); ++j) {
            TropCycle::Windings w;
            w[{i, j + 1}] = 1;
            w[{i, j}] = -1;
            out.push_back(make_cycle(pair, w));
        }
    std::vector<size_t> occupied;
    for (size_t i = 1; i <= pair.rays(); ++i)
        if (pair.blowup_count(i) > 0) occupied.push_back(i);
    if (occupied.empty()) return out;
    ZMat m(2, occupied.size());
    for (size_t c = 0; c < occupied.size(); ++c) {
        m.at(0, c) = pair.fan().ray(occupied[c])[0];
        m.at(1, c) = pair.fan().ray(occupied[c])[1];
    }
    std::vector<std::vector<Int>> ker = kernel_basis(m);
    std::vector<std::vector<Int>> reps;
    for (auto v : ker) {
        for (size_t i = v.size(); i-- > 0;) {
            if (v[i] == 0) continue;
            if (v[i] < 0)
                for (Int& x : v) x = -x;
            break;
        }
        reps.push_back(std::move(v));
    }
    std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    for (const auto& v : reps) {
        TropCycle::Windings w;
        for (size_t c = 0; c < occupied.size(); ++c)
            if (v[c] != 0) w[{occupied[c], 1}] = v[c];
        out.push_back(make_cycle(pair, w));
    }
    return out;
}

TropCycle tropicalize(const LooijengaPair& pair, const PicClass& a) {
    if (!pair.in_dperp(a)) throw TropicalError("class is not orthogonal to the boundary");
    Decomposition d = pair.decompose(a);
    TropCycle::Windings w;
    for (const auto& [key, val] : d.gamma) w[key] = val;
    return make_cycle(pair, w);
}

PicClass detropicalize(const LooijengaPair& pair, const TropCycle& cycle) {
    // Toric part solves Dbar-pairing = -m_i; solvable exactly when balanced.
    std::vector<Int> m(pair.rays(), Int(0));
    for (const auto& [key, val] : cycle.windings()) m[key.first - 1] += val;
    for (Int& x : m) x = -x;
    ZMat form = pair.fan().intersection_matrix();
    auto x = solve(form, m);
    if (!x) throw TropicalError("no toric part matches these windings (unbalanced cycle)");
    std::vector<Int> v(pair.ambient_dim(), Int(0));
    for (size_t i = 0; i < pair.rays(); ++i) v[i] = (*x)[i];
    for (const auto& [key, val] : cycle.windings())
        v[pair.rays() + pair.slot_index(key.first, key.second)] = val;
    PicClass a = pair.make_class(std::move(v));
    if (!pair.in_dperp(a)) throw TropicalError("detropicalized class misses Dperp (internal)");
    return a;
}

std::string H1Report::str() const {
    std::ostringstream os;
    os << "free_rank=" << free_rank << " torsion=[";
    for (size_t i = 0; i < torsion.size(); ++i) os << (i ? "," : "") << torsion[i];
    os << "]";
    return os.str();
}

namespace {

// Star-cover cell complex of a disk holding every singular vertex, with the
// branch-cut local system; singular 0-cells carry their invariant sublattice.
// Cohomology in degree one of this complex is the twisted H1.
struct TwistedComplex {
    // C0 layout: O (2), each singular vertex (1), each terminal vertex (2).
    // C1 layout: per ray, edges [v_{j-1}, v_j] for j = 1..k_i+1 (2 each),
    // then arcs between consecutive terminal vertices (2 each).
    std::vector<size_t> edge_offset, arc_offset, sing_offset, term_offset;
    size_t c0 = 0, c1 = 0, c2 = 0;
    ZMat d0, d1;

    explicit TwistedComplex(const LooijengaPair& pair) {
        Skeleton skel(pair);
        size_t n = pair.rays();
        sing_offset.assign(n + 1, 0);
        term_offset.assign(n, 0);
        size_t at = 2;  // O block
        for (size_t i = 1; i <= n; ++i) {
            sing_offset[i] = at;
            at += pair.blowup_count(i);
        }
        for (size_t i = 1; i <= n; ++i) {
            term_offset[i - 1] = at;
            at += 2;
        }
        c0 = at;

        edge_offset.assign(n + 1, 0);
        at = 0;
        for (size_t i = 1; i <= n; ++i) {
            edge_offset[i] = at;
            at += 2 * (pair.blowup_count(i) + 1);
        }
        arc_offset.assign(n, 0);
        for (size_t i = 1; i <= n; ++i) {
            arc_offset[i - 1] = at;
            at += 2;
        }
        c1 = at;
        c2 = 2 * n;

        d0 = ZMat(c1, c0);
        d1 = ZMat(c2, c1);

        auto add_block = [](ZMat& m, size_t r, size_t c, const Mat2& b, long long sign) {
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y) m.at(r + x, c + y) += sign * b.a[x][y];
        };
        auto eta_column = [&](ZMat& m, size_t r, size_t c, const Vec2& eta, long long sign) {
            m.at(r, c) += sign * eta[0];
            m.at(r + 1, c) += sign * eta[1];
        };

        for (size_t i = 1; i <= n; ++i) {
            const RayFrame& f = skel.frame(i);
            size_t ki = pair.blowup_count(i);
            for (size_t j = 1; j <= ki + 1; ++j) {
                size_t row = edge_offset[i] + 2 * (j - 1);
                // tail
                if (j == 1) add_block(d0, row, 0, Mat2::identity(), -1);
                else eta_column(d0, row, sing_offset[i] + (j - 2), f.eta, -1);
                // head
                if (j <= ki) eta_column(d0, row, sing_offset[i] + (j - 1), f.eta, +1);
                else add_block(d0, row, term_offset[i - 1], Mat2::identity(), +1);
            }
            // Arc from terminal i to terminal i+1, living above ray i.
            size_t row = arc_offset[i - 1];
            add_block(d0, row, term_offset[i - 1],
                      f.monodromy.power(static_cast<long long>(ki)), -1);
            add_block(d0, row, term_offset[i % n], Mat2::identity(), +1);
        }

        for (size_t i = 1; i <= n; ++i) {
            const RayFrame& f = skel.frame(i);
            size_t face = 2 * (i - 1);
            size_t ki = pair.blowup_count(i);
            for (size_t j = 1; j <= ki + 1; ++j)
                add_block(d1, face, edge_offset[i] + 2 * (j - 1),
                          f.monodromy.power(static_cast<long long>(j) - 1), +1);
            add_block(d1, face, arc_offset[i - 1], Mat2::identity(), +1);
            size_t inext = i % n + 1;
            for (size_t j = 1; j <= pair.blowup_count(inext) + 1; ++j)
                add_block(d1, face, edge_offset[inext] + 2 * (j - 1), Mat2::identity(), -1);
        }

        // d1 ∘ d0 must vanish.
        ZMat prod = d1 * d0;
        for (size_t r = 0; r < prod.rows(); ++r)
            for (size_t c = 0; c < prod.cols(); ++c)
                if (prod.at(r, c) != 0)
                    throw TropicalError("twisted complex differential is not a complex");
    }
};

}  // namespace

H1Report h1_compute(const LooijengaPair& pair, bool with_torsion) {
    H1Report rep;
    size_t total = pair.total_blowups();
    if (total > 0) {
        ZMat m(2, total);
        size_t c = 0;
        for (size_t i = 1; i <= pair.rays(); ++i)
            for (size_t j = 1; j <= pair.blowup_count(i); ++j, ++c) {
                m.at(0, c) = pair.fan().ray(i)[0];
                m.at(1, c) = pair.fan().ray(i)[1];
            }
        rep.free_rank = static_cast<long long>(total - zrank(m));
    }
    if (!with_torsion) return rep;

    TwistedComplex tc(pair);
    std::vector<std::vector<Int>> ker = kernel_basis(tc.d1);
    // Coordinates of the image of d0 inside the kernel lattice.
    ZMat kt(tc.c1, ker.size());
    for (size_t j = 0; j < ker.size(); ++j)
        for (size_t r = 0; r < tc.c1; ++r) kt.at(r, j) = ker[j][r];
    ZMat coeffs(tc.c0, ker.size());
    for (size_t col = 0; col < tc.c0; ++col) {
        std::vector<Int> img(tc.c1);
        for (size_t r = 0; r < tc.c1; ++r) img[r] = tc.d0.at(r, col);
        auto lam = solve(kt, img);
        if (!lam) throw TropicalError("image of d0 escapes ker d1 (internal)");
        for (size_t j = 0; j < ker.size(); ++j) coeffs.at(col, j) = (*lam)[j];
    }
    SmithResult s = smith_normal_form(coeffs);
    long long complex_rank =
        static_cast<long long>(ker.size()) - static_cast<long long>(s.invariants.size());
    if (complex_rank != rep.free_rank)
        throw TropicalError("twisted complex rank disagrees with the winding lattice (internal)");
    for (const Int& inv : s.invariants)
        if (inv > 1) rep.torsion.push_back(inv.convert_to<long long>());
    return rep;
}

}  // namespace logcy
