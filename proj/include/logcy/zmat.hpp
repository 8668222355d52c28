#pragma once

#include "logcy/field.hpp"

#include <vector>

namespace logcy {

// Small dense integer matrix with the lattice routines the Picard/homology
// computations need. Everything is exact over cpp_int.
class ZMat {
public:
    ZMat() = default;
    ZMat(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols, Int(0)) {}
    static ZMat identity(size_t n);
    static ZMat from_rows(const std::vector<std::vector<Int>>& rows);

    size_t rows() const { return r_; }
    size_t cols() const { return c_; }
    Int& at(size_t i, size_t j) { return a_[i * c_ + j]; }
    const Int& at(size_t i, size_t j) const { return a_[i * c_ + j]; }
    std::vector<Int> row(size_t i) const;

    ZMat transpose() const;
    friend ZMat operator*(const ZMat& a, const ZMat& b);
    bool operator==(const ZMat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    void swap_rows(size_t i, size_t j);
    void swap_cols(size_t i, size_t j);

private:
    size_t r_ = 0, c_ = 0;
    std::vector<Int> a_;
};

std::vector<Int> mat_vec(const ZMat& m, const std::vector<Int>& v);

struct SmithResult {
    ZMat u;  // rows transform: u * a * v == d
    ZMat d;
    ZMat v;
    std::vector<Int> invariants;  // nonzero diagonal entries of d, in divisibility order
};

SmithResult smith_normal_form(const ZMat& a);

size_t zrank(const ZMat& a);

// Basis of the saturated integer kernel {x : a x == 0}, as rows.
std::vector<std::vector<Int>> kernel_basis(const ZMat& a);

// One integer solution of a x == b, if any.
std::optional<std::vector<Int>> solve(const ZMat& a, const std::vector<Int>& b);

// Lattice spanned by the rows of `gens`, in row-style Hermite normal form
// (zero rows dropped, pivots positive, entries above a pivot reduced into
// [0, pivot)).
ZMat hnf_rows(const ZMat& gens);

// Canonical representative of x modulo the row span of `hnf` (which must be
// in Hermite normal form). Two vectors are congruent iff their reps agree.
std::vector<Int> reduce_mod_rows(const ZMat& hnf, std::vector<Int> x);

// Coordinates of Z^n / rowspan(rel) ≅ Z^(n - rank): `project` maps a vector to
// quotient coordinates, `section` lifts them back to a representative.
// Requires rowspan(rel) saturated (invariant factors all 1).
struct QuotientMap {
    size_t ambient = 0;
    size_t rank = 0;  // of the relation lattice
    ZMat q;           // ambient x ambient, unimodular
    ZMat qinv;

    std::vector<Int> project(const std::vector<Int>& x) const;
    std::vector<Int> section(const std::vector<Int>& y) const;
};

QuotientMap quotient_map(const ZMat& relations);

}  // namespace logcy
