#include "logcy/pair.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace logcy {

bool PicClass::is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](const Int& x) { return x == 0; });
}

PicClass operator+(const PicClass& a, const PicClass& b) {
    std::vector<Int> v(a.v_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = a.v_[i] + b.v_[i];
    return a.owner_->make_class(std::move(v));
}

PicClass operator-(const PicClass& a, const PicClass& b) { return a + (-b); }

PicClass PicClass::operator-() const { return scaled(Int(-1)); }

PicClass PicClass::scaled(const Int& c) const {
    std::vector<Int> v(v_.size());
    for (size_t i = 0; i < v_.size(); ++i) v[i] = c * v_[i];
    return owner_->make_class(std::move(v));
}

std::string PicClass::str(const LooijengaPair& pair) const {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Int& c, const std::string& name) {
        if (c == 0) return;
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1) os << a << "*";
        os << name;
    };
    size_t n = pair.rays();
    for (size_t i = 1; i <= n; ++i) {
        std::ostringstream name;
        name << "Dbar[" << i << "]";
        emit(v_[i - 1], name.str());
    }
    for (size_t idx = 0; idx < pair.total_blowups(); ++idx) {
        auto [ray, slot] = pair.slot_of(idx);
        std::ostringstream name;
        name << "E[" << ray << "," << slot << "]";
        emit(v_[n + idx], name.str());
    }
    if (first) return "0";
    return os.str();
}

LooijengaPair::LooijengaPair(Fan2D fan, std::vector<std::vector<LaurentScalar>> blowups)
    : fan_(std::move(fan)), mus_(std::move(blowups)) {
    if (mus_.size() != fan_.size()) throw PairError("blowup table must list every ray");
    for (size_t i = 0; i < mus_.size(); ++i) {
        for (size_t j = 0; j < mus_[i].size(); ++j) {
            const LaurentScalar& m = mus_[i][j];
            if (!m.is_unit())
                throw PairError("blowup parameter must be a unit (valuation 0)");
            for (size_t k = 0; k < j; ++k)
                if (mus_[i][k] == m)
                    throw PairError(
                        "repeated blowup parameter on a ray (infinitely-near blowups "
                        "unsupported)");
        }
        for (size_t j = 0; j < mus_[i].size() && generic_; ++j)
            for (size_t k = 0; k < j && generic_; ++k)
                if (mus_[i][k].reduce_at_zero() == mus_[i][j].reduce_at_zero()) generic_ = false;
        total_ += mus_[i].size();
    }

    size_t n = fan_.size();
    size_t dim = n + total_;
    ZMat chars = fan_.character_relations();
    ZMat rel(2, dim);
    for (size_t j = 0; j < n; ++j) {
        rel.at(0, j) = chars.at(0, j);
        rel.at(1, j) = chars.at(1, j);
    }
    relations_hnf_ = hnf_rows(rel);
    toric_hnf_ = hnf_rows(chars);
    quotient_ = quotient_map(rel);

    form_ = ZMat(dim, dim);
    ZMat toric_form = fan_.intersection_matrix();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) form_.at(i, j) = toric_form.at(i, j);
    for (size_t idx = 0; idx < total_; ++idx) form_.at(n + idx, n + idx) = -1;

    // The form must annihilate the relation lattice.
    for (size_t r = 0; r < rel.rows(); ++r) {
        std::vector<Int> p = mat_vec(form_, rel.row(r));
        for (const Int& x : p)
            if (x != 0) throw PairError("intersection form does not annihilate relations");
    }
}

size_t LooijengaPair::slot_index(size_t ray, size_t slot) const {
    if (ray < 1 || ray > rays()) throw PairError("ray index out of range");
    if (slot < 1 || slot > blowup_count(ray)) throw PairError("slot index out of range");
    size_t idx = 0;
    for (size_t i = 1; i < ray; ++i) idx += blowup_count(i);
    return idx + slot - 1;
}

std::pair<size_t, size_t> LooijengaPair::slot_of(size_t index) const {
    for (size_t i = 1; i <= rays(); ++i) {
        if (index < blowup_count(i)) return {i, index + 1};
        index -= blowup_count(i);
    }
    throw PairError("exceptional index out of range");
}

std::vector<Int> LooijengaPair::reduce(std::vector<Int> raw) const {
    if (raw.size() != ambient_dim()) throw PairError("class vector has wrong length");
    return reduce_mod_rows(relations_hnf_, std::move(raw));
}

PicClass LooijengaPair::make_class(std::vector<Int> raw) const {
    return PicClass(reduce(std::move(raw)), this);
}

PicClass LooijengaPair::pullback_class(size_t ray) const {
    std::vector<Int> v(ambient_dim(), Int(0));
    v[ray - 1] = 1;
    return make_class(std::move(v));
}

PicClass LooijengaPair::exceptional_class(size_t ray, size_t slot) const {
    std::vector<Int> v(ambient_dim(), Int(0));
    v[rays() + slot_index(ray, slot)] = 1;
    return make_class(std::move(v));
}

PicClass LooijengaPair::zero_class() const {
    return make_class(std::vector<Int>(ambient_dim(), Int(0)));
}

PicClass LooijengaPair::strict_transform(size_t ray) const {
    std::vector<Int> v(ambient_dim(), Int(0));
    v[ray - 1] = 1;
    for (size_t j = 1; j <= blowup_count(ray); ++j) v[rays() + slot_index(ray, j)] = -1;
    return make_class(std::move(v));
}

Int LooijengaPair::intersection(const PicClass& a, const PicClass& b) const {
    std::vector<Int> fb = mat_vec(form_, b.vec());
    Int s(0);
    for (size_t i = 0; i < fb.size(); ++i) s += a.vec()[i] * fb[i];
    return s;
}

bool LooijengaPair::in_dperp(const PicClass& a) const {
    for (size_t i = 1; i <= rays(); ++i)
        if (intersection(a, strict_transform(i)) != 0) return false;
    return true;
}

long long LooijengaPair::charge() const {
    std::vector<long long> b = fan_.self_intersections();
    long long d2 = 0;
    for (size_t i = 1; i <= rays(); ++i)
        d2 += b[i - 1] - static_cast<long long>(blowup_count(i));
    d2 += 2 * static_cast<long long>(rays());
    return 12 - d2 - static_cast<long long>(rays());
}

long long LooijengaPair::s_rank() const {
    // Rank of the kernel of Z^n -> Pic(Y), e_i -> [D_i].
    size_t qdim = ambient_dim() - quotient_.rank;
    ZMat m(qdim, rays());
    for (size_t i = 1; i <= rays(); ++i) {
        std::vector<Int> p = quotient_.project(strict_transform(i).vec());
        for (size_t r = 0; r < qdim; ++r) m.at(r, i - 1) = p[r];
    }
    return static_cast<long long>(rays() - zrank(m));
}

namespace {

// Deterministic sign: last nonzero entry positive.
std::vector<Int> normalize_sign(std::vector<Int> v) {
    for (size_t i = v.size(); i-- > 0;) {
        if (v[i] == 0) continue;
        if (v[i] < 0)
            for (Int& x : v) x = -x;
        break;
    }
    return v;
}

bool lex_less(const std::vector<Int>& a, const std::vector<Int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::vector<PicClass> LooijengaPair::dperp_basis() const {
    size_t qdim = ambient_dim() - quotient_.rank;
    std::vector<std::vector<Int>> sections(qdim);
    for (size_t c = 0; c < qdim; ++c) {
        std::vector<Int> e(qdim, Int(0));
        e[c] = 1;
        sections[c] = quotient_.section(e);
    }
    // Pairing-with-strict-transforms matrix over quotient coordinates.
    ZMat m(rays(), qdim);
    for (size_t i = 1; i <= rays(); ++i) {
        std::vector<Int> di = mat_vec(form_, strict_transform(i).vec());
        for (size_t c = 0; c < qdim; ++c) {
            Int s(0);
            for (size_t k = 0; k < di.size(); ++k) s += sections[c][k] * di[k];
            m.at(i - 1, c) = s;
        }
    }
    std::vector<std::vector<Int>> ker = kernel_basis(m);
    std::vector<std::vector<Int>> reps;
    for (const auto& y : ker)
        reps.push_back(normalize_sign(reduce(quotient_.section(y))));
    std::sort(reps.begin(), reps.end(), lex_less);
    std::vector<PicClass> out;
    for (auto& r : reps) out.push_back(make_class(std::move(r)));
    return out;
}

Decomposition LooijengaPair::decompose(const PicClass& a) const {
    Decomposition d;
    std::vector<Int> g(a.vec().begin(), a.vec().begin() + rays());
    d.toric_part.a = reduce_mod_rows(toric_hnf_, std::move(g));
    for (size_t idx = 0; idx < total_; ++idx) {
        Int c = a.vec()[rays() + idx];
        if (c != 0) d.gamma[slot_of(idx)] = c;
    }
    return d;
}

WingSpokeBasis LooijengaPair::wing_spoke_decomposition() const {
    WingSpokeBasis out;
    for (size_t i = 1; i <= rays(); ++i)
        for (size_t j = 1; j + 1 <= blowup_count(i); ++j)
            out.wings.push_back(exceptional_class(i, j + 1) - exceptional_class(i, j));

    // Spokes: the saturated sublattice of Dperp supported on first slots,
    // computed inside Dperp coordinates.
    std::vector<PicClass> basis = dperp_basis();
    if (basis.empty()) return out;
    std::vector<size_t> later;  // ambient indices of slots j >= 2
    for (size_t idx = 0; idx < total_; ++idx)
        if (slot_of(idx).second >= 2) later.push_back(rays() + idx);
    std::vector<std::vector<Int>> ker;
    if (later.empty()) {
        for (size_t c = 0; c < basis.size(); ++c) {
            std::vector<Int> e(basis.size(), Int(0));
            e[c] = 1;
            ker.push_back(std::move(e));
        }
    } else {
        ZMat m(later.size(), basis.size());
        for (size_t r = 0; r < later.size(); ++r)
            for (size_t c = 0; c < basis.size(); ++c) m.at(r, c) = basis[c].vec()[later[r]];
        ker = kernel_basis(m);
    }
    std::vector<std::vector<Int>> reps;
    for (const auto& coeffs : ker) {
        std::vector<Int> v(ambient_dim(), Int(0));
        for (size_t c = 0; c < basis.size(); ++c)
            for (size_t k = 0; k < v.size(); ++k) v[k] += coeffs[c] * basis[c].vec()[k];
        reps.push_back(normalize_sign(reduce(std::move(v))));
    }
    std::sort(reps.begin(), reps.end(), lex_less);
    for (auto& r : reps) out.spokes.push_back(make_class(std::move(r)));
    return out;
}

namespace {

struct ClassToken {
    Int coeff;
    bool is_exceptional;
    size_t i, j;
};

}  // namespace

PicClass LooijengaPair::parse_class(const std::string& expr) const {
    std::vector<Int> v(ambient_dim(), Int(0));
    size_t pos = 0;
    auto skip = [&] {
        while (pos < expr.size() && std::isspace(static_cast<unsigned char>(expr[pos]))) ++pos;
    };
    auto fail = [&](const std::string& what) -> void {
        throw PairError("class expression error at position " + std::to_string(pos) + ": " +
                        what);
    };
    auto parse_index = [&]() -> size_t {
        skip();
        if (pos >= expr.size() || !std::isdigit(static_cast<unsigned char>(expr[pos])))
            fail("expected index");
        size_t n = 0;
        while (pos < expr.size() && std::isdigit(static_cast<unsigned char>(expr[pos])))
            n = n * 10 + (expr[pos++] - '0');
        return n;
    };
    bool first = true;
    for (;;) {
        skip();
        if (pos >= expr.size()) {
            if (first) fail("empty expression");
            break;
        }
        Int sign(1);
        if (expr[pos] == '+' || expr[pos] == '-') {
            if (expr[pos] == '-') sign = -1;
            ++pos;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        skip();
        Int coeff(1);
        if (pos < expr.size() && std::isdigit(static_cast<unsigned char>(expr[pos]))) {
            coeff = 0;
            while (pos < expr.size() && std::isdigit(static_cast<unsigned char>(expr[pos])))
                coeff = coeff * 10 + (expr[pos++] - '0');
            skip();
            if (pos < expr.size() && expr[pos] == '*') {
                ++pos;
                skip();
            }
        }
        if (expr.compare(pos, 5, "Dbar[") == 0) {
            pos += 5;
            size_t i = parse_index();
            skip();
            if (pos >= expr.size() || expr[pos] != ']') fail("expected ']'");
            ++pos;
            if (i < 1 || i > rays()) fail("ray index out of range");
            v[i - 1] += sign * coeff;
        } else if (expr.compare(pos, 2, "E[") == 0) {
            pos += 2;
            size_t i = parse_index();
            skip();
            if (pos >= expr.size() || expr[pos] != ',') fail("expected ','");
            ++pos;
            size_t j = parse_index();
            skip();
            if (pos >= expr.size() || expr[pos] != ']') fail("expected ']'");
            ++pos;
            if (i < 1 || i > rays() || j < 1 || j > blowup_count(i))
                fail("exceptional index out of range");
            v[rays() + slot_index(i, j)] += sign * coeff;
        } else {
            fail("expected Dbar[i] or E[i,j]");
        }
        first = false;
    }
    return make_class(std::move(v));
}

}  // namespace logcy
