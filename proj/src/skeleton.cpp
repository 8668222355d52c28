#include "logcy/skeleton.hpp"

#include <numeric>
#include <sstream>

namespace logcy {

Mat2 operator*(const Mat2& x, const Mat2& y) {
    Mat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r.a[i][j] = x.a[i][0] * y.a[0][j] + x.a[i][1] * y.a[1][j];
    return r;
}

Mat2 Mat2::inverse() const {
    long long d = det();
    if (d != 1 && d != -1) throw SkeletonError("matrix is not unimodular");
    Mat2 adj{{{a[1][1], -a[0][1]}, {-a[1][0], a[0][0]}}};
    if (d == -1)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) adj.a[i][j] = -adj.a[i][j];
    return adj;
}

Mat2 Mat2::power(long long k) const {
    Mat2 base = k < 0 ? inverse() : *this;
    if (k < 0) k = -k;
    Mat2 acc = identity();
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool Mat2::operator==(const Mat2& o) const {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (a[i][j] != o.a[i][j]) return false;
    return true;
}

std::string Mat2::str() const {
    std::ostringstream os;
    os << "[[" << a[0][0] << ", " << a[0][1] << "], [" << a[1][0] << ", " << a[1][1] << "]]";
    return os.str();
}

Mat2 transition_matrix(long long b) { return Mat2{{{b, 1}, {-1, 0}}}; }

AffineTransformK AffineTransformK::identity() {
    return {Mat2::identity(), {LaurentScalar::one(), LaurentScalar::one()}};
}

AffineTransformK operator*(const AffineTransformK& f, const AffineTransformK& g) {
    AffineTransformK r;
    r.mat = f.mat * g.mat;
    for (int i = 0; i < 2; ++i) {
        LaurentScalar t = f.trans[i];
        for (int j = 0; j < 2; ++j) t = t * g.trans[j].pow(f.mat.a[i][j]);
        r.trans[i] = t;
    }
    return r;
}

bool AffineTransformK::operator==(const AffineTransformK& o) const {
    return mat == o.mat && trans[0] == o.trans[0] && trans[1] == o.trans[1];
}

std::string AffineTransformK::str() const {
    std::ostringstream os;
    os << "matrix " << mat.str() << " translation (" << trans[0].str() << ", " << trans[1].str()
       << ")";
    return os.str();
}

namespace {

// Bezout pair (p, q) with p*x + q*y = 1 for a primitive (x, y), deterministic.
std::pair<long long, long long> bezout(long long x, long long y) {
    long long old_r = x, r = y, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        long long q = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
    }
    if (old_r < 0) {
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_s, old_t};
}

// Reduce w modulo the line Z*dir, minimizing the Euclidean norm (ties toward
// the smaller coefficient) so the completion choice is deterministic.
Vec2 reduce_along(Vec2 w, const Vec2& dir) {
    long long dd = dir[0] * dir[0] + dir[1] * dir[1];
    long long num = w[0] * dir[0] + w[1] * dir[1];
    long long k = (2 * num + (num >= 0 ? dd : -dd)) / (2 * dd);
    return {w[0] - k * dir[0], w[1] - k * dir[1]};
}

}  // namespace

Skeleton::Skeleton(const LooijengaPair& pair) : pair_(&pair) {
    for (size_t i = 1; i <= pair.rays(); ++i) {
        const Vec2& v = pair.fan().ray(i);
        RayFrame f;
        f.direction = v;
        f.eta = Vec2{-v[1], v[0]};
        auto [p, q] = bezout(v[0], v[1]);
        f.phi = reduce_along(Vec2{p, q}, f.eta);
        f.lambda = reduce_along(Vec2{-q, p}, v);
        // One ccw cut crossing: xi -> xi + <xi, v> eta.
        f.monodromy = Mat2{{{1 + f.eta[0] * v[0], f.eta[0] * v[1]},
                            {f.eta[1] * v[0], 1 + f.eta[1] * v[1]}}};
        frames_.push_back(f);
        for (size_t j = 1; j <= pair.blowup_count(i); ++j) {
            SingularVertex s;
            s.ray = i;
            s.slot = j;
            s.position = Vec2{static_cast<long long>(j) * v[0], static_cast<long long>(j) * v[1]};
            vertices_.push_back(s);
        }
    }
}

Vec2 Skeleton::transport(size_t ray, long long count, const Vec2& covector) const {
    return frame(ray).monodromy.power(count).apply(covector);
}

Mat2 Skeleton::int_monodromy(size_t ray, size_t j, size_t k) const {
    size_t ki = pair_->blowup_count(ray);
    if (j < 1 || j > ki + 1 || k + 1 < j || k > ki)
        throw SkeletonError("monodromy slot range out of bounds");
    if (k + 1 == j) return Mat2::identity();  // loop enclosing nothing
    const RayFrame& f = frame(ray);
    // Walk a rectangle enclosing slots j..k: cross the stack of k cuts going
    // ccw beyond slot k, then j-1 cuts clockwise inside slot j.
    Mat2 global = f.monodromy.power(static_cast<long long>(k))
                  * f.monodromy.power(-(static_cast<long long>(j) - 1));
    // Express in the adapted basis (eta, phi).
    Mat2 basis{{{f.eta[0], f.phi[0]}, {f.eta[1], f.phi[1]}}};
    return basis.inverse() * global * basis;
}

std::array<long long, 4> Skeleton::vertex_bvalues(size_t ray, size_t slot) const {
    if (slot < 1 || slot > pair_->blowup_count(ray))
        throw SkeletonError("no singular vertex at this slot");
    std::vector<long long> bbar = pair_->fan().self_intersections();
    long long m = std::llabs(bbar[ray - 1] - static_cast<long long>(slot));
    // The component is a one-point blowup of a ruled surface F_m: the two
    // sections give b1, b3 with b1 + b3 = -1, the fibres give b2 = b4 = 0.
    return {m - 1, 0, -m, 0};
}

std::array<Mat2, 4> Skeleton::vertex_transitions(size_t ray, size_t slot) const {
    auto b = vertex_bvalues(ray, slot);
    return {transition_matrix(b[0]), transition_matrix(b[1]), transition_matrix(b[2]),
            transition_matrix(b[3])};
}

AffineTransformK Skeleton::kaffine_monodromy(size_t ray, size_t slot) const {
    if (slot < 1 || slot > pair_->blowup_count(ray))
        throw SkeletonError("no singular vertex at this slot");
    AffineTransformK t;
    t.mat = Mat2{{{1, 0}, {1, 1}}};
    t.trans = {pair_->mu(ray, slot).inverse(), LaurentScalar::one()};
    return t;
}

AffineTransformK Skeleton::kaffine_monodromy_range(size_t ray, size_t j, size_t k) const {
    if (j < 1 || k < j || k > pair_->blowup_count(ray))
        throw SkeletonError("monodromy slot range out of bounds");
    AffineTransformK acc = AffineTransformK::identity();
    for (size_t s = j; s <= k; ++s) acc = kaffine_monodromy(ray, s) * acc;
    return acc;
}

CechCocycle Skeleton::cech_cocycle() const {
    CechCocycle c;
    for (const SingularVertex& v : vertices_) {
        const RayFrame& f = frame(v.ray);
        const LaurentScalar& mu = pair_->mu(v.ray, v.slot);
        c.entries.push_back({v.ray, v.slot, +1, f.lambda, mu});
        c.entries.push_back({v.ray, v.slot, -1, f.lambda, mu.inverse()});
    }
    return c;
}

LocalFan local_fan(const std::vector<Int>& b, const std::vector<Int>& multiplicities) {
    LocalFan lf;
    lf.r = b.size();
    if (lf.r < 1) throw SkeletonError("local fan needs at least one interior divisor");
    if (multiplicities.size() != lf.r + 2)
        throw SkeletonError("expected multiplicities N_0, N_1..N_r, N_inf");
    for (const Int& x : b)
        if (x <= 0) throw SkeletonError("local fan requires b_i > 0");
    lf.b = b;
    lf.multiplicities = multiplicities;
    const Int& n0 = multiplicities.front();
    const Int& ninf = multiplicities.back();
    Int rhs(0);
    for (size_t i = 1; i <= lf.r; ++i) rhs += b[i - 1] * multiplicities[i];
    if (n0 + ninf != rhs)
        throw SkeletonError("multiplicity balance N_0 + N_inf = sum b_i N_i violated");

    size_t dim = lf.r + 1;
    std::vector<Int> u0(dim, Int(0)), uinf(dim, Int(0));
    u0[0] = 1;
    u0[dim - 1] = n0;
    uinf[0] = -1;
    for (size_t i = 1; i + 1 < dim; ++i) uinf[i] = b[i - 1];
    uinf[dim - 1] = ninf;
    lf.rays.push_back(u0);
    for (size_t i = 1; i + 1 < dim; ++i) {
        std::vector<Int> u(dim, Int(0));
        u[i] = 1;
        u[dim - 1] = multiplicities[i];
        lf.rays.push_back(u);
    }
    lf.rays.push_back(uinf);

    auto unimodular = [&](bool with_zero) {
        ZMat m(lf.rays.size() - 1, dim);
        size_t row = 0;
        for (size_t i = 0; i < lf.rays.size(); ++i) {
            if (with_zero && i + 1 == lf.rays.size()) continue;   // drop u_inf
            if (!with_zero && i == 0) continue;                   // drop u_0
            for (size_t j = 0; j < dim; ++j) m.at(row, j) = lf.rays[i][j];
            ++row;
        }
        for (const Int& inv : smith_normal_form(m).invariants)
            if (inv != 1) return false;
        return true;
    };
    if (!unimodular(true) || !unimodular(false))
        throw SkeletonError("maximal cone of the local fan is not unimodular");
    return lf;
}

std::string LocalFan::str() const {
    std::ostringstream os;
    auto print_vec = [&](const std::vector<Int>& v) {
        os << "(";
        for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
        os << ")";
    };
    os << "u0=";
    print_vec(rays.front());
    for (size_t i = 1; i + 1 < rays.size(); ++i) {
        os << " u" << i << "=";
        print_vec(rays[i]);
    }
    os << " uinf=";
    print_vec(rays.back());
    return os.str();
}

}  // namespace logcy
