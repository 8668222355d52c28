#include "logcy/toric.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace logcy {

Fan2D Fan2D::validate(const std::vector<Vec2>& rays) {
    size_t n = rays.size();
    if (n < 3) throw ToricError("fan needs at least 3 rays (incomplete)");
    for (size_t i = 0; i < n; ++i) {
        long long g = std::gcd(std::llabs(rays[i][0]), std::llabs(rays[i][1]));
        if (g != 1) {
            std::ostringstream os;
            os << "ray " << (i + 1) << " is not primitive";
            throw ToricError(os.str());
        }
    }
    for (size_t i = 0; i < n; ++i) {
        long long d = det2(rays[i], rays[(i + 1) % n]);
        if (d != 1) {
            std::ostringstream os;
            os << "adjacent rays " << (i + 1) << "," << ((i + 1) % n + 1)
               << " have determinant " << d << " (need 1: smooth, complete, ccw)";
            throw ToricError(os.str());
        }
    }
    return Fan2D(rays);
}

std::vector<long long> Fan2D::self_intersections() const {
    size_t n = size();
    std::vector<long long> b(n);
    for (size_t i = 1; i <= n; ++i) {
        const Vec2& prev_ray = ray(prev(i));
        const Vec2& next_ray = ray(next(i));
        Vec2 w{prev_ray[0] + next_ray[0], prev_ray[1] + next_ray[1]};
        // w = -b_i v_i; completeness guarantees w is parallel to v_i.
        b[i - 1] = -det2(prev_ray, next_ray);
        if (w[0] != -b[i - 1] * ray(i)[0] || w[1] != -b[i - 1] * ray(i)[1])
            throw ToricError("self-intersection relation failed (invalid fan)");
    }
    return b;
}

ZMat Fan2D::character_relations() const {
    ZMat m(2, size());
    for (size_t i = 1; i <= size(); ++i) {
        m.at(0, i - 1) = ray(i)[0];
        m.at(1, i - 1) = ray(i)[1];
    }
    return m;
}

ZMat Fan2D::intersection_matrix() const {
    size_t n = size();
    std::vector<long long> b = self_intersections();
    ZMat m(n, n);
    for (size_t i = 1; i <= n; ++i) {
        m.at(i - 1, i - 1) = b[i - 1];
        m.at(i - 1, next(i) - 1) += 1;
        m.at(i - 1, prev(i) - 1) += 1;
    }
    return m;
}

Int toric_intersection(const Fan2D& fan, const ToricDivisor& x, const ToricDivisor& y) {
    ZMat m = fan.intersection_matrix();
    std::vector<Int> my = mat_vec(m, y.a);
    Int s(0);
    for (size_t i = 0; i < my.size(); ++i) s += x.a[i] * my[i];
    return s;
}

bool is_nef(const Fan2D& fan, const ToricDivisor& d) {
    ZMat m = fan.intersection_matrix();
    std::vector<Int> p = mat_vec(m, d.a);
    return std::all_of(p.begin(), p.end(), [](const Int& x) { return x >= 0; });
}

ToricDivisor ample_witness(const Fan2D& fan) {
    size_t n = fan.size();
    ZMat m = fan.intersection_matrix();
    for (long long radius = 1; radius <= 6; ++radius) {
        std::vector<long long> a(n, -radius);
        for (;;) {
            ToricDivisor d;
            d.a.assign(a.begin(), a.end());
            std::vector<Int> p = mat_vec(m, d.a);
            if (std::all_of(p.begin(), p.end(), [](const Int& x) { return x >= 1; })) return d;
            size_t k = 0;
            while (k < n && a[k] == radius) a[k++] = -radius;
            if (k == n) break;
            ++a[k];
        }
    }
    throw ToricError("ample witness search failed within bound 6 (internal error)");
}

namespace {

// Vertex of P at the corner between faces i and i+1: the unique solution of
// <u, v_i> = -a_i, <u, v_{i+1}> = -a_{i+1} (integral since det = 1).
Vec2 corner(const Fan2D& fan, const ToricDivisor& d, size_t i) {
    size_t j = fan.next(i);
    const Vec2& vi = fan.ray(i);
    const Vec2& vj = fan.ray(j);
    Int ai = -d.a[i - 1], aj = -d.a[j - 1];
    // Cramer with det(vi, vj) = 1: u = (ai*vj[1] - aj*vi[1], aj*vi[0] - ai*vj[0]).
    Int x = ai * vj[1] - aj * vi[1];
    Int y = aj * vi[0] - ai * vj[0];
    return Vec2{x.convert_to<long long>(), y.convert_to<long long>()};
}

}  // namespace

PolytopeEdgeData polytope_edges(const Fan2D& fan, const ToricDivisor& d) {
    if (!is_nef(fan, d)) throw ToricError("polytope_edges requires a nef divisor");
    size_t n = fan.size();
    ZMat m = fan.intersection_matrix();
    std::vector<Int> deg = mat_vec(m, d.a);

    PolytopeEdgeData out;
    std::set<Vec2> seen;
    for (size_t i = 1; i <= n; ++i) {
        Vec2 start = corner(fan, d, fan.prev(i));
        Vec2 stop = corner(fan, d, i);
        long long len = deg[i - 1].convert_to<long long>();
        PolytopeFace face;
        face.lattice_length = len;
        if (len == 0) {
            if (start != stop) throw ToricError("degenerate face with distinct endpoints");
            face.points.push_back(start);
        } else {
            Vec2 step{(stop[0] - start[0]) / len, (stop[1] - start[1]) / len};
            if (step[0] * len != stop[0] - start[0] || step[1] * len != stop[1] - start[1])
                throw ToricError("face endpoints not at lattice distance d_i");
            for (long long k = 0; k <= len; ++k)
                face.points.push_back(Vec2{start[0] + k * step[0], start[1] + k * step[1]});
        }
        for (const Vec2& p : face.points) seen.insert(p);
        out.faces.push_back(std::move(face));
    }
    out.all_points.assign(seen.begin(), seen.end());
    return out;
}

}  // namespace logcy
