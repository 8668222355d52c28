#pragma once

#include "logcy/zmat.hpp"

#include <array>
#include <string>
#include <vector>

namespace logcy {

using Vec2 = std::array<long long, 2>;

inline long long det2(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }

class ToricError : public std::runtime_error {
public:
    explicit ToricError(const std::string& m) : std::runtime_error(m) {}
};

// Smooth complete 2D fan: primitive rays in counterclockwise order with
// det(v_i, v_{i+1}) = 1 cyclically. Rays are 1-indexed in the public API.
class Fan2D {
public:
    static Fan2D validate(const std::vector<Vec2>& rays);

    size_t size() const { return rays_.size(); }
    const Vec2& ray(size_t i) const { return rays_.at(i - 1); }  // 1-based
    const std::vector<Vec2>& rays() const { return rays_; }
    size_t next(size_t i) const { return i % size() + 1; }
    size_t prev(size_t i) const { return (i + size() - 2) % size() + 1; }

    // b_i with v_{i-1} + v_{i+1} = -b_i v_i.
    std::vector<long long> self_intersections() const;

    // 2 x n matrix whose rows span the relation lattice of Pic = Z^n / rel.
    ZMat character_relations() const;

    // n x n matrix of Dbar_i . Dbar_j.
    ZMat intersection_matrix() const;

private:
    explicit Fan2D(std::vector<Vec2> rays) : rays_(std::move(rays)) {}
    std::vector<Vec2> rays_;
};

// Integer divisor sum a_i Dbar_i on a fixed fan.
struct ToricDivisor {
    std::vector<Int> a;
};

Int toric_intersection(const Fan2D& fan, const ToricDivisor& x, const ToricDivisor& y);
bool is_nef(const Fan2D& fan, const ToricDivisor& d);

// Some h with h . Dbar_i >= 1 for all i, found by a growing box search.
ToricDivisor ample_witness(const Fan2D& fan);

struct PolytopeFace {
    std::vector<Vec2> points;  // lattice points of the face, from the vertex
                               // shared with face i-1 to the one shared with i+1
    long long lattice_length = 0;
};

struct PolytopeEdgeData {
    std::vector<PolytopeFace> faces;  // one per ray, same 1-based order
    std::vector<Vec2> all_points;     // union of face points, deduplicated, sorted
};

// Boundary data of P = {u : <u, v_i> >= -a_i}; requires is_nef.
PolytopeEdgeData polytope_edges(const Fan2D& fan, const ToricDivisor& d);

}  // namespace logcy
