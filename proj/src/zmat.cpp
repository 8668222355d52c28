#include "logcy/zmat.hpp"

#include <algorithm>
#include <cstdlib>

namespace logcy {

ZMat ZMat::identity(size_t n) {
    ZMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ZMat ZMat::from_rows(const std::vector<std::vector<Int>>& rows) {
    size_t r = rows.size();
    size_t c = r == 0 ? 0 : rows[0].size();
    ZMat m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    return m;
}

std::vector<Int> ZMat::row(size_t i) const {
    std::vector<Int> v(c_);
    for (size_t j = 0; j < c_; ++j) v[j] = at(i, j);
    return v;
}

ZMat ZMat::transpose() const {
    ZMat m(c_, r_);
    for (size_t i = 0; i < r_; ++i)
        for (size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
}

ZMat operator*(const ZMat& a, const ZMat& b) {
    ZMat m(a.r_, b.c_);
    for (size_t i = 0; i < a.r_; ++i)
        for (size_t k = 0; k < a.c_; ++k) {
            const Int& x = a.at(i, k);
            if (x == 0) continue;
            for (size_t j = 0; j < b.c_; ++j) m.at(i, j) += x * b.at(k, j);
        }
    return m;
}

void ZMat::swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < c_; ++k) std::swap(at(i, k), at(j, k));
}

void ZMat::swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < r_; ++k) std::swap(at(k, i), at(k, j));
}

std::vector<Int> mat_vec(const ZMat& m, const std::vector<Int>& v) {
    std::vector<Int> r(m.rows(), Int(0));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) r[i] += m.at(i, j) * v[j];
    return r;
}

namespace {

Int iabs(const Int& x) { return x < 0 ? Int(-x) : x; }

// floor(q / p) for p > 0.
Int floor_div(const Int& q, const Int& p) {
    Int f = q / p;
    if (q % p != 0 && q < 0) f -= 1;
    return f;
}

}  // namespace

SmithResult smith_normal_form(const ZMat& a) {
    SmithResult res;
    res.d = a;
    res.u = ZMat::identity(a.rows());
    res.v = ZMat::identity(a.cols());
    ZMat& d = res.d;
    ZMat& u = res.u;
    ZMat& v = res.v;
    size_t n = std::min(a.rows(), a.cols());

    for (size_t s = 0; s < n; ++s) {
        // Find a nonzero pivot of minimal absolute value.
        size_t pi = s, pj = s;
        bool found = false;
        Int best(0);
        for (size_t i = s; i < d.rows(); ++i)
            for (size_t j = s; j < d.cols(); ++j)
                if (d.at(i, j) != 0 && (!found || iabs(d.at(i, j)) < best)) {
                    best = iabs(d.at(i, j));
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        d.swap_rows(s, pi);
        u.swap_rows(s, pi);
        d.swap_cols(s, pj);
        v.swap_cols(s, pj);

        for (;;) {
            bool clean = true;
            for (size_t i = s + 1; i < d.rows(); ++i) {
                if (d.at(i, s) == 0) continue;
                Int q = d.at(i, s) / d.at(s, s);
                for (size_t j = 0; j < d.cols(); ++j) d.at(i, j) -= q * d.at(s, j);
                for (size_t j = 0; j < u.cols(); ++j) u.at(i, j) -= q * u.at(s, j);
                if (d.at(i, s) != 0) {
                    d.swap_rows(s, i);
                    u.swap_rows(s, i);
                    clean = false;
                }
            }
            for (size_t j = s + 1; j < d.cols(); ++j) {
                if (d.at(s, j) == 0) continue;
                Int q = d.at(s, j) / d.at(s, s);
                for (size_t i = 0; i < d.rows(); ++i) d.at(i, j) -= q * d.at(i, s);
                for (size_t i = 0; i < v.rows(); ++i) v.at(i, j) -= q * v.at(i, s);
                if (d.at(s, j) != 0) {
                    d.swap_cols(s, j);
                    v.swap_cols(s, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Divisibility of the remaining block by the pivot.
            bool divides = true;
            for (size_t i = s + 1; i < d.rows() && divides; ++i)
                for (size_t j = s + 1; j < d.cols() && divides; ++j)
                    if (d.at(i, j) % d.at(s, s) != 0) {
                        for (size_t k = 0; k < d.cols(); ++k) d.at(s, k) += d.at(i, k);
                        for (size_t k = 0; k < u.cols(); ++k) u.at(s, k) += u.at(i, k);
                        divides = false;
                    }
            if (divides) break;
        }
        if (d.at(s, s) < 0) {
            for (size_t j = 0; j < d.cols(); ++j) d.at(s, j) = -d.at(s, j);
            for (size_t j = 0; j < u.cols(); ++j) u.at(s, j) = -u.at(s, j);
        }
    }
    for (size_t s = 0; s < n; ++s)
        if (d.at(s, s) != 0) res.invariants.push_back(d.at(s, s));
    return res;
}

size_t zrank(const ZMat& a) { return smith_normal_form(a).invariants.size(); }

std::vector<std::vector<Int>> kernel_basis(const ZMat& a) {
    SmithResult s = smith_normal_form(a);
    size_t r = s.invariants.size();
    std::vector<std::vector<Int>> basis;
    // a x = 0 iff d (v^-1 x) = 0, so the kernel is v * (last cols of identity).
    for (size_t j = r; j < a.cols(); ++j) {
        std::vector<Int> x(a.cols());
        for (size_t i = 0; i < a.cols(); ++i) x[i] = s.v.at(i, j);
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<std::vector<Int>> solve(const ZMat& a, const std::vector<Int>& b) {
    SmithResult s = smith_normal_form(a);
    std::vector<Int> ub = mat_vec(s.u, b);
    std::vector<Int> y(a.cols(), Int(0));
    size_t r = s.invariants.size();
    for (size_t i = 0; i < a.rows(); ++i) {
        if (i < r) {
            if (ub[i] % s.d.at(i, i) != 0) return std::nullopt;
            y[i] = ub[i] / s.d.at(i, i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return mat_vec(s.v, y);
}

ZMat hnf_rows(const ZMat& gens) {
    ZMat m = gens;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        // Reduce all rows below `row` against each other in this column.
        for (;;) {
            size_t piv = row;
            bool found = false;
            Int best(0);
            for (size_t i = row; i < m.rows(); ++i)
                if (m.at(i, col) != 0 && (!found || iabs(m.at(i, col)) < best)) {
                    best = iabs(m.at(i, col));
                    piv = i;
                    found = true;
                }
            if (!found) break;
            m.swap_rows(row, piv);
            bool done = true;
            for (size_t i = row + 1; i < m.rows(); ++i) {
                if (m.at(i, col) == 0) continue;
                Int q = m.at(i, col) / m.at(row, col);
                for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= q * m.at(row, j);
                if (m.at(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (m.at(row, col) == 0) continue;
        if (m.at(row, col) < 0)
            for (size_t j = 0; j < m.cols(); ++j) m.at(row, j) = -m.at(row, j);
        // Reduce the rows above into [0, pivot).
        for (size_t i = 0; i < row; ++i) {
            Int q = m.at(i, col);
            Int p = m.at(row, col);
            Int f = floor_div(q, p);
            if (f != 0)
                for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        ++row;
    }
    ZMat out(row, m.cols());
    for (size_t i = 0; i < row; ++i)
        for (size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
    return out;
}

std::vector<Int> reduce_mod_rows(const ZMat& hnf, std::vector<Int> x) {
    for (size_t i = 0; i < hnf.rows(); ++i) {
        size_t col = 0;
        while (col < hnf.cols() && hnf.at(i, col) == 0) ++col;
        if (col == hnf.cols()) continue;
        const Int& p = hnf.at(i, col);
        Int q = x[col];
        Int f = floor_div(q, p);
        if (f != 0)
            for (size_t j = 0; j < hnf.cols(); ++j) x[j] -= f * hnf.at(i, j);
    }
    return x;
}

QuotientMap quotient_map(const ZMat& relations) {
    SmithResult s = smith_normal_form(relations);
    for (const Int& inv : s.invariants)
        if (inv != 1) throw std::runtime_error("relation lattice is not saturated");
    QuotientMap q;
    q.ambient = relations.cols();
    q.rank = s.invariants.size();
    // rowspan(relations) * v has its span equal to the first `rank`
    // coordinates, so x -> x * v are the adapted coordinates.
    q.q = s.v;
    // v is unimodular; invert by solving v * x = e_i columnwise.
    ZMat inv(q.ambient, q.ambient);
    for (size_t j = 0; j < q.ambient; ++j) {
        std::vector<Int> e(q.ambient, Int(0));
        e[j] = 1;
        auto x = solve(s.v, e);
        for (size_t i = 0; i < q.ambient; ++i) inv.at(i, j) = (*x)[i];
    }
    q.qinv = inv;
    return q;
}

std::vector<Int> QuotientMap::project(const std::vector<Int>& x) const {
    // Row vector times q, then drop the first `rank` coordinates.
    std::vector<Int> full(ambient, Int(0));
    for (size_t j = 0; j < ambient; ++j)
        for (size_t i = 0; i < ambient; ++i)
            if (x[i] != 0) full[j] += x[i] * q.at(i, j);
    return std::vector<Int>(full.begin() + rank, full.end());
}

std::vector<Int> QuotientMap::section(const std::vector<Int>& y) const {
    std::vector<Int> full(ambient, Int(0));
    for (size_t i = rank; i < ambient; ++i) full[i] = y[i - rank];
    std::vector<Int> x(ambient, Int(0));
    for (size_t j = 0; j < ambient; ++j)
        for (size_t i = 0; i < ambient; ++i)
            if (full[i] != 0) x[j] += full[i] * qinv.at(i, j);
    return x;
}

}  // namespace logcy
