#include "sunit/field.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "field_internal.hpp"

namespace sunit {

using detail::FieldData;

// ---------------------------------------------------------------- descriptors

FieldDescriptor FieldDescriptor::rational() {
    FieldDescriptor d;
    d.kind = FieldKind::Rational;
    d.label = "Q";
    d.degree = 1;
    d.r1 = 1;
    d.r2 = 0;
    return d;
}

FieldDescriptor FieldDescriptor::quadratic(long dd) {
    FieldDescriptor d;
    d.kind = FieldKind::Quadratic;
    d.d = dd;
    d.degree = 2;
    if (dd > 0) {
        d.r1 = 2;
        d.r2 = 0;
    } else {
        d.r1 = 0;
        d.r2 = 1;
    }
    d.label = "Q(sqrt(" + std::to_string(dd) + "))";
    return d;
}

// ---------------------------------------------------------------- linear alg

namespace detail {

Rat det_rat(std::vector<std::vector<Rat>> m) {
    const size_t n = m.size();
    Rat det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Rat inv = Rat(1) / m[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] * inv;
            for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

std::optional<std::vector<Rat>> solve_rat(std::vector<std::vector<Rat>> m,
                                          std::vector<Rat> rhs) {
    const size_t n = m.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        Rat pv = m[col][col];
        for (size_t c = col; c < n; ++c) m[col][c] /= pv;
        rhs[col] /= pv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    return rhs;
}

std::vector<Rat> FieldData::mul_table_generic(const std::vector<Rat>& a,
                                              const std::vector<Rat>& b) const {
    std::vector<Rat> out(n, Rat(0));
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            Rat c = a[i] * b[j];
            const auto& row = table[i][j];
            for (int k = 0; k < n; ++k)
                if (row[k] != 0) out[k] += c * row[k];
        }
    }
    return out;
}

std::vector<Rat> FieldData::mul(const std::vector<Rat>& a,
                                const std::vector<Rat>& b) const {
    switch (desc.kind) {
        case FieldKind::Rational:
            return {a[0] * b[0]};
        case FieldKind::Quadratic: {
            // (x1 + y1 w)(x2 + y2 w), w^2 = t w + u
            Rat x = a[0] * b[0] + Rat(quad_u) * (a[1] * b[1]);
            Rat y = a[0] * b[1] + a[1] * b[0] + Rat(quad_t) * (a[1] * b[1]);
            return {x, y};
        }
        case FieldKind::Table:
            if (power_basis) {
                std::vector<Rat> conv(2 * n - 1, Rat(0));
                for (int i = 0; i < n; ++i) {
                    if (a[i] == 0) continue;
                    for (int j = 0; j < n; ++j)
                        if (b[j] != 0) conv[i + j] += a[i] * b[j];
                }
                std::vector<Rat> out(conv.begin(), conv.begin() + n);
                for (int k = n; k < 2 * n - 1; ++k) {
                    if (conv[k] == 0) continue;
                    const auto& row = red_rows[k - n];
                    for (int i = 0; i < n; ++i)
                        if (row[i] != 0) out[i] += conv[k] * row[i];
                }
                return out;
            }
            return mul_table_generic(a, b);
    }
    throw Error("unreachable");
}

std::vector<std::vector<Rat>> FieldData::mul_matrix(
    const std::vector<Rat>& a) const {
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int j = 0; j < n; ++j) {
        std::vector<Rat> ej(n, Rat(0));
        ej[j] = 1;
        auto col = mul(a, ej);
        for (int i = 0; i < n; ++i) m[i][j] = col[i];
    }
    return m;
}

std::vector<Rat> FieldData::apply_auto(size_t idx,
                                       const std::vector<Rat>& a) const {
    const auto& m = autos[idx];
    std::vector<Rat> out(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m[i][j] != 0 && a[j] != 0) out[i] += Rat(m[i][j]) * a[j];
    return out;
}

Rat FieldData::norm(const std::vector<Rat>& a) const {
    switch (desc.kind) {
        case FieldKind::Rational:
            return a[0];
        case FieldKind::Quadratic:
            return a[0] * a[0] + Rat(quad_t) * a[0] * a[1] -
                   Rat(quad_u) * a[1] * a[1];
        case FieldKind::Table: {
            if (!autos.empty()) {
                std::vector<Rat> prod = a;
                for (size_t k = 0; k < autos.size(); ++k) {
                    // autos[0] is the identity by construction
                    if (k == 0) continue;
                    prod = mul(prod, apply_auto(k, a));
                }
                for (int i = 1; i < n; ++i)
                    if (prod[i] != 0)
                        throw Error("automorphism norm is not rational");
                return prod[0];
            }
            return det_rat(mul_matrix(a));
        }
    }
    throw Error("unreachable");
}

Rat FieldData::trace(const std::vector<Rat>& a) const {
    switch (desc.kind) {
        case FieldKind::Rational:
            return a[0];
        case FieldKind::Quadratic:
            return 2 * a[0] + Rat(quad_t) * a[1];
        case FieldKind::Table: {
            auto m = mul_matrix(a);
            Rat t = 0;
            for (int i = 0; i < n; ++i) t += m[i][i];
            return t;
        }
    }
    throw Error("unreachable");
}

std::vector<Rat> FieldData::inverse(const std::vector<Rat>& a) const {
    switch (desc.kind) {
        case FieldKind::Rational:
            if (a[0] == 0) throw Error("division by zero");
            return {Rat(1) / a[0]};
        case FieldKind::Quadratic: {
            Rat nm = norm(a);
            if (nm == 0) throw Error("division by zero");
            // conj(x + y w) = (x + t y) - y w
            return {(a[0] + Rat(quad_t) * a[1]) / nm, -a[1] / nm};
        }
        case FieldKind::Table: {
            std::vector<Rat> rhs(n, Rat(0));
            rhs[0] = 1;
            auto sol = solve_rat(mul_matrix(a), rhs);
            if (!sol) throw Error("division by zero");
            return *sol;
        }
    }
    throw Error("unreachable");
}

}  // namespace detail

// ---------------------------------------------------------------- make_field

namespace {

void validate_table(const FieldDescriptor& d, FieldData& fd) {
    const int n = d.degree;
    if (n < 1) throw DescriptorInvalid("table degree must be >= 1");
    if (d.r1 + 2 * d.r2 != n)
        throw DescriptorInvalid("signature does not match degree");
    if (static_cast<int>(d.mult_table.size()) != n)
        throw DescriptorInvalid("mult table has wrong shape");
    for (const auto& row : d.mult_table) {
        if (static_cast<int>(row.size()) != n)
            throw DescriptorInvalid("mult table has wrong shape");
        for (const auto& v : row)
            if (static_cast<int>(v.size()) != n)
                throw DescriptorInvalid("mult table has wrong shape");
    }
    // b0 must be the identity
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            if (d.mult_table[0][j][k] != Rat(j == k ? 1 : 0))
                throw DescriptorInvalid("basis element 0 is not the identity");
    // commutativity and associativity on all basis triples
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (d.mult_table[i][j] != d.mult_table[j][i])
                throw DescriptorInvalid("mult table is not commutative");
    auto mulv = [&](const std::vector<Rat>& a, const std::vector<Rat>& b) {
        return fd.mul_table_generic(a, b);
    };
    std::vector<std::vector<Rat>> basis(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) basis[i][i] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                auto left = mulv(d.mult_table[i][j], basis[k]);
                auto right = mulv(basis[i], d.mult_table[j][k]);
                if (left != right)
                    throw DescriptorInvalid("mult table is not associative");
            }
}

void detect_power_basis(FieldData& fd) {
    const int n = fd.n;
    if (n == 1) return;
    std::vector<Rat> cur(n, Rat(0));
    cur[1] = 1;
    std::vector<Rat> e(n, Rat(0));
    for (int k = 2; k < n; ++k) {
        cur = fd.mul_table_generic(cur, fd.table[0][1]);
        std::fill(e.begin(), e.end(), Rat(0));
        e[k] = 1;
        if (cur != e) return;
    }
    fd.power_basis = true;
    // reduction rows for b1^n .. b1^(2n-2)
    cur = fd.mul_table_generic(cur, fd.table[0][1]);  // b1^n
    fd.red_rows.push_back(cur);
    for (int k = 1; k <= n - 2; ++k) {
        cur = fd.mul_table_generic(cur, fd.table[0][1]);
        fd.red_rows.push_back(cur);
    }
}

void validate_autos(FieldData& fd) {
    const int n = fd.n;
    for (const auto& m : fd.autos) {
        if (static_cast<int>(m.size()) != n)
            throw DescriptorInvalid("automorphism matrix has wrong shape");
        for (const auto& row : m)
            if (static_cast<int>(row.size()) != n)
                throw DescriptorInvalid("automorphism matrix has wrong shape");
    }
    // each matrix must be a ring homomorphism on basis pairs
    std::vector<std::vector<Rat>> basis(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) basis[i][i] = 1;
    for (size_t a = 0; a < fd.autos.size(); ++a) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                auto lhs = fd.apply_auto(a, fd.table[i][j]);
                auto rhs =
                    fd.mul(fd.apply_auto(a, basis[i]), fd.apply_auto(a, basis[j]));
                if (lhs != rhs)
                    throw DescriptorInvalid(
                        "automorphism is not multiplicative");
            }
        }
    }
    if (!fd.autos.empty()) {
        // first automorphism must be the identity
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (fd.autos[0][i][j] != (i == j ? 1 : 0))
                    throw DescriptorInvalid(
                        "automorphism list must start with the identity");
        if (static_cast<int>(fd.autos.size()) != n)
            throw DescriptorInvalid(
                "automorphism list must have one entry per embedding");
    }
}

void validate_prime_fixtures(const FieldDescriptor& d, const FieldData& fd) {
    std::map<Int, int> ef_sum;
    for (const auto& pf : d.prime_fixtures) {
        if (pf.e < 1 || pf.f < 1 || !is_prime(pf.p))
            throw DescriptorInvalid("bad prime fixture");
        ef_sum[pf.p] += pf.e * pf.f;
    }
    for (const auto& [p, s] : ef_sum)
        if (s != fd.n)
            throw DescriptorInvalid(
                "prime fixtures above " + p.get_str() +
                " do not satisfy sum(e*f) = degree");
    for (const auto& pf : d.prime_fixtures) {
        if (!pf.uniformizer) continue;
        Rat nm = fd.norm(*pf.uniformizer);
        Rat want = Rat(int_pow(pf.p, pf.f));
        if (abs(nm) != want)
            throw DescriptorInvalid("uniformizer norm mismatch at p = " +
                                    pf.p.get_str());
    }
}

void validate_torsion(FieldData& fd) {
    if (!fd.desc.torsion) return;
    const auto& t = *fd.desc.torsion;
    if (t.order < 2 || t.order % 2 != 0)
        throw DescriptorInvalid("torsion order must be even and >= 2");
    std::vector<Rat> acc(fd.n, Rat(0));
    acc[0] = 1;
    for (unsigned k = 1; k <= t.order; ++k) {
        acc = fd.mul(acc, t.generator);
        bool is_one = acc[0] == 1;
        for (int i = 1; i < fd.n; ++i) is_one = is_one && acc[i] == 0;
        if (k < t.order && is_one)
            throw DescriptorInvalid("torsion generator has smaller order");
        if (k == t.order && !is_one)
            throw DescriptorInvalid("torsion generator order mismatch");
    }
}

}  // namespace

Field make_field(const FieldDescriptor& desc) {
    auto fd = std::make_shared<FieldData>();
    fd->desc = desc;
    fd->label = desc.label;
    switch (desc.kind) {
        case FieldKind::Rational:
            fd->n = 1;
            fd->r1 = 1;
            fd->r2 = 0;
            fd->disc = 1;
            if (fd->label.empty()) fd->label = "Q";
            break;
        case FieldKind::Quadratic: {
            long d = desc.d;
            if (d == 0 || d == 1 || !is_squarefree(d))
                throw DescriptorInvalid("quadratic d must be squarefree, not 0/1");
            fd->n = 2;
            fd->r1 = d > 0 ? 2 : 0;
            fd->r2 = d > 0 ? 0 : 1;
            if (mod_euclid(d, 4) == 1) {
                fd->quad_t = 1;
                fd->quad_u = Int(d - 1) / 4;
                fd->disc = d;
            } else {
                fd->quad_t = 0;
                fd->quad_u = d;
                fd->disc = Int(4) * d;
            }
            if (fd->label.empty())
                fd->label = "Q(sqrt(" + std::to_string(d) + "))";
            break;
        }
        case FieldKind::Table: {
            fd->n = desc.degree;
            fd->r1 = desc.r1;
            fd->r2 = desc.r2;
            fd->table = desc.mult_table;
            validate_table(desc, *fd);
            detect_power_basis(*fd);
            fd->autos = desc.automorphisms;
            validate_autos(*fd);
            validate_prime_fixtures(desc, *fd);
            validate_torsion(*fd);
            break;
        }
    }
    Field f;
    f.data_ = fd;
    fd->self = fd;
    return f;
}

// ---------------------------------------------------------------- elements

Field FieldElement::field() const {
    Field f;
    f.data_ = data_;
    return f;
}

bool FieldElement::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool FieldElement::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool FieldElement::operator==(const FieldElement& o) const {
    return c_ == o.c_;
}

bool FieldElement::operator<(const FieldElement& o) const {
    for (size_t i = 0; i < c_.size() && i < o.c_.size(); ++i) {
        int cmp = mpq_cmp(c_[i].get_mpq_t(), o.c_[i].get_mpq_t());
        if (cmp != 0) return cmp < 0;
    }
    return c_.size() < o.c_.size();
}

std::string FieldElement::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << rat_to_string(c_[i]);
    }
    os << "]";
    return os.str();
}

namespace {

void check_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.coords().size() != b.coords().size())
        throw Error("elements of different fields");
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    FieldElement r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    FieldElement r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
}

FieldElement operator-(const FieldElement& a) {
    FieldElement r = a;
    for (auto& x : r.c_) x = -x;
    return r;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    FieldElement r = a;
    r.c_ = a.data_->mul(a.c_, b.c_);
    return r;
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check_same_field(a, b);
    FieldElement r = a;
    r.c_ = a.data_->mul(a.c_, a.data_->inverse(b.c_));
    return r;
}

// ---------------------------------------------------------------- Field

FieldKind Field::kind() const { return data_->desc.kind; }
int Field::degree() const { return data_->n; }
std::pair<int, int> Field::signature() const { return {data_->r1, data_->r2}; }
const std::string& Field::label() const { return data_->label; }
long Field::quad_d() const { return data_->desc.d; }
Int Field::disc() const { return data_->disc; }
bool Field::galois() const {
    switch (kind()) {
        case FieldKind::Rational:
        case FieldKind::Quadratic:
            return true;
        case FieldKind::Table:
            return data_->desc.galois;
    }
    return false;
}
const FieldDescriptor& Field::descriptor() const { return data_->desc; }

FieldElement Field::zero() const {
    FieldElement e;
    e.data_ = data_;
    e.c_.assign(data_->n, Rat(0));
    return e;
}

FieldElement Field::one() const { return from_rational(Rat(1)); }

FieldElement Field::from_rational(const Rat& x) const {
    FieldElement e = zero();
    e.c_[0] = x;
    return e;
}

FieldElement Field::element(std::vector<Rat> coords) const {
    if (static_cast<int>(coords.size()) != data_->n)
        throw Error("coordinate vector has wrong length");
    FieldElement e;
    e.data_ = data_;
    e.c_ = std::move(coords);
    for (auto& x : e.c_) x.canonicalize();
    return e;
}

FieldElement Field::gen() const {
    if (data_->n == 1) return one();
    FieldElement e = zero();
    e.c_[1] = 1;
    return e;
}

FieldElement Field::inverse(const FieldElement& a) const {
    FieldElement r = a;
    r.c_ = data_->inverse(a.c_);
    return r;
}

FieldElement Field::pow(const FieldElement& a, long e) const {
    FieldElement base = e >= 0 ? a : inverse(a);
    unsigned long k = e >= 0 ? e : -e;
    FieldElement r = one();
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

Rat Field::norm(const FieldElement& a) const { return data_->norm(a.c_); }
Rat Field::trace(const FieldElement& a) const { return data_->trace(a.c_); }

FieldElement Field::conjugate(const FieldElement& a) const {
    if (kind() != FieldKind::Quadratic)
        throw UnsupportedField("conjugate: quadratic fields only");
    FieldElement r = a;
    r.c_[0] = a.c_[0] + Rat(data_->quad_t) * a.c_[1];
    r.c_[1] = -a.c_[1];
    return r;
}

// ------------------------------------------------------------ primes

namespace {

int kronecker(const Int& a, const Int& b) {
    return mpz_kronecker(a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace

std::vector<PrimeIdeal> Field::primes_above(const Int& p) const {
    if (!is_prime(p)) throw Error("primes_above: p must be prime");
    switch (kind()) {
        case FieldKind::Rational: {
            PrimeIdeal P;
            P.p = p;
            P.e = 1;
            P.f = 1;
            P.label = p.get_str();
            P.kind = PrimeIdeal::Kind::RationalP;
            return {P};
        }
        case FieldKind::Quadratic: {
            int k = kronecker(data_->disc, p);
            if (k == 0) {
                PrimeIdeal P;
                P.p = p;
                P.e = 2;
                P.f = 1;
                P.label = "P" + p.get_str();
                P.kind = PrimeIdeal::Kind::Ramified;
                return {P};
            }
            if (k == -1) {
                PrimeIdeal P;
                P.p = p;
                P.e = 1;
                P.f = 2;
                P.label = "P" + p.get_str();
                P.kind = PrimeIdeal::Kind::Inert;
                return {P};
            }
            // split: roots of x^2 - t x - u mod p
            std::vector<Int> roots;
            for (Int r = 0; r < p; ++r) {
                Int v = r * r - data_->quad_t * r - data_->quad_u;
                if (mod_euclid(v, p) == 0) roots.push_back(r);
            }
            if (roots.size() != 2)
                throw Error("split prime root count mismatch");
            std::sort(roots.begin(), roots.end());
            std::vector<PrimeIdeal> out;
            const char* suffix[2] = {"a", "b"};
            for (int i = 0; i < 2; ++i) {
                PrimeIdeal P;
                P.p = p;
                P.e = 1;
                P.f = 1;
                P.label = "P" + p.get_str() + suffix[i];
                P.kind = PrimeIdeal::Kind::Split;
                P.split_root = roots[i];
                out.push_back(P);
            }
            return out;
        }
        case FieldKind::Table: {
            std::vector<PrimeIdeal> out;
            for (const auto& pf : data_->desc.prime_fixtures) {
                if (pf.p != p) continue;
                PrimeIdeal P;
                P.p = p;
                P.e = pf.e;
                P.f = pf.f;
                P.label = pf.label;
                P.kind = PrimeIdeal::Kind::TableSingle;
                P.uniformizer = pf.uniformizer;
                out.push_back(P);
            }
            if (out.empty())
                throw UnsupportedField("table field has no prime fixture for p = " +
                                       p.get_str());
            return out;
        }
    }
    throw Error("unreachable");
}

namespace {

// Hensel-lift r with f(r) = 0 mod p to a root mod p^prec, f = x^2 - t x - u
Int lift_root(const Int& r0, const Int& t, const Int& u, const Int& p,
              unsigned prec) {
    Int mod = p;
    Int r = r0;
    unsigned have = 1;
    while (have < prec) {
        unsigned next = std::min(prec, 2 * have);
        Int nmod = int_pow(p, next);
        Int fr = mod_euclid(r * r - t * r - u, nmod);
        Int fpr = mod_euclid(2 * r - t, nmod);
        Int inv;
        if (mpz_invert(inv.get_mpz_t(), fpr.get_mpz_t(), nmod.get_mpz_t()) == 0)
            throw Error("Hensel lift failed");
        r = mod_euclid(r - fr * inv, nmod);
        mod = nmod;
        have = next;
    }
    return r;
}

}  // namespace

long Field::valuation(const FieldElement& a, const PrimeIdeal& P) const {
    if (a.is_zero()) return kValInfinity;
    switch (P.kind) {
        case PrimeIdeal::Kind::RationalP:
            return rat_valuation(a.coords()[0], P.p);
        case PrimeIdeal::Kind::Inert: {
            long v = rat_valuation(norm(a), P.p);
            if (v % 2 != 0) throw Error("inert valuation parity violated");
            return v / 2;
        }
        case PrimeIdeal::Kind::Ramified:
            return rat_valuation(norm(a), P.p);
        case PrimeIdeal::Kind::Split: {
            // embed into the completion attached to the lifted root
            Int den = 1;
            den = lcm(Int(a.coords()[0].get_den()), Int(a.coords()[1].get_den()));
            Rat nrm = norm(a);
            long bound = int_valuation(nrm.get_num(), P.p) +
                         int_valuation(nrm.get_den(), P.p) +
                         2 * int_valuation(den, P.p) + 2;
            unsigned prec = static_cast<unsigned>(bound < 2 ? 2 : bound);
            Int r = lift_root(P.split_root, data_->quad_t, data_->quad_u, P.p,
                              prec);
            Int mod = int_pow(P.p, prec);
            Int x = Int(a.coords()[0].get_num()) * (den / a.coords()[0].get_den());
            Int y = Int(a.coords()[1].get_num()) * (den / a.coords()[1].get_den());
            Int w = mod_euclid(x + y * r, mod);
            if (w == 0) throw Error("split valuation precision exhausted");
            return int_valuation(w, P.p) - int_valuation(den, P.p);
        }
        case PrimeIdeal::Kind::TableSingle: {
            Rat nrm = norm(a);
            long v = rat_valuation(nrm, P.p);
            if (v % P.f != 0)
                throw Error("table valuation divisibility violated");
            return v / P.f;
        }
    }
    throw Error("unreachable");
}

}  // namespace sunit
