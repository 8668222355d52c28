#pragma once

#include "logcy/pair.hpp"

namespace logcy {

class SkeletonError : public std::runtime_error {
public:
    explicit SkeletonError(const std::string& m) : std::runtime_error(m) {}
};

// 2x2 integer matrix (column-vector action); entries stay tiny here.
struct Mat2 {
    long long a[2][2];

    static Mat2 identity() { return {{{1, 0}, {0, 1}}}; }
    friend Mat2 operator*(const Mat2& x, const Mat2& y);
    Mat2 inverse() const;  // requires |det| = 1
    Mat2 power(long long k) const;
    Mat2 transpose() const { return {{{a[0][0], a[1][0]}, {a[0][1], a[1][1]}}}; }
    long long det() const { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }
    long long trace() const { return a[0][0] + a[1][1]; }
    bool operator==(const Mat2& o) const;
    std::string str() const;

    Vec2 apply(const Vec2& v) const {
        return {a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1]};
    }
};

// Chart transition (b 1; -1 0) for the tangent/cotangent local systems.
Mat2 transition_matrix(long long b);

// Element of GL2(Z) ⋉ (Kx)^2 acting on an affinoid coordinate pair:
// x_i -> t_i * prod_j x_j^(mat[i][j]).
struct AffineTransformK {
    Mat2 mat;
    std::array<LaurentScalar, 2> trans;

    static AffineTransformK identity();
    friend AffineTransformK operator*(const AffineTransformK& f, const AffineTransformK& g);
    bool operator==(const AffineTransformK& o) const;
    std::string str() const;
};

struct SingularVertex {
    size_t ray = 0, slot = 0;
    Vec2 position{0, 0};  // slot * v_ray
};

// Per-ray frame data for the branch-cut local system on cotangent vectors.
struct RayFrame {
    Vec2 direction;   // the primitive ray generator
    Vec2 eta;         // primitive invariant covector (annihilates the ray direction)
    Vec2 phi;         // completion: <phi, direction> = 1, so (eta, phi) is unimodular
    Vec2 lambda;      // pairing tangent of the cocycle entries: det(direction, lambda) = 1
    Mat2 monodromy;   // one counterclockwise cut crossing, acting on covector coords
};

struct CechEntry {
    size_t ray = 0, slot = 0;
    // +1 marks the (tau_C1, tau_C4) overlap, -1 the (tau_C1, tau_C2) one.
    int flank = 0;
    Vec2 lambda{0, 0};
    LaurentScalar value;
};

struct CechCocycle {
    std::vector<CechEntry> entries;  // nontrivial entries only, ordered by (ray, slot, flank)
};

class Skeleton {
public:
    explicit Skeleton(const LooijengaPair& pair);

    const LooijengaPair& pair() const { return *pair_; }
    const std::vector<SingularVertex>& vertices() const { return vertices_; }
    const RayFrame& frame(size_t ray) const { return frames_.at(ray - 1); }

    // Covector transport across `count` stacked cuts of one ray,
    // counterclockwise when count > 0.
    Vec2 transport(size_t ray, long long count, const Vec2& covector) const;

    // Monodromy of a ccw loop enclosing slots j..k on one ray, in the
    // ray-adapted basis (eta, phi). k = j-1 encodes the empty loop.
    Mat2 int_monodromy(size_t ray, size_t j, size_t k) const;

    // Chart transitions around a singular vertex, in boundary order
    // C1 -> C2 -> C3 -> C4 -> C1; the b-values satisfy b2 = b4 = 0 and
    // b1 + b3 = -1.
    std::array<Mat2, 4> vertex_transitions(size_t ray, size_t slot) const;
    std::array<long long, 4> vertex_bvalues(size_t ray, size_t slot) const;

    AffineTransformK kaffine_monodromy(size_t ray, size_t slot) const;
    AffineTransformK kaffine_monodromy_range(size_t ray, size_t j, size_t k) const;

    CechCocycle cech_cocycle() const;

private:
    const LooijengaPair* pair_;
    std::vector<SingularVertex> vertices_;
    std::vector<RayFrame> frames_;
};

struct LocalFan {
    size_t r = 0;
    std::vector<std::vector<Int>> rays;  // u0, u1..u_{r-1}, u_inf in Z^{r+1}
    std::vector<Int> b;                  // b_1..b_r
    std::vector<Int> multiplicities;     // N_0, N_1..N_r, N_inf
    std::string str() const;
};

// Builds the local model fan and checks strict semistability: b_i > 0,
// N_0 + N_inf = sum b_i N_i, and both maximal cones unimodular.
LocalFan local_fan(const std::vector<Int>& b, const std::vector<Int>& multiplicities);

}  // namespace logcy
