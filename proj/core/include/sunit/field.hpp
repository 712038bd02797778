#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sunit/errors.hpp"
#include "sunit/numeric.hpp"

namespace sunit {

enum class FieldKind { Rational, Quadratic, Table };

struct TorsionFixture {
    std::vector<Rat> generator;
    unsigned order = 2;
};

struct PrimeFixture {
    Int p;
    int e = 1;
    int f = 1;
    std::string label;
    std::optional<std::vector<Rat>> uniformizer;
};

struct FieldDescriptor {
    FieldKind kind = FieldKind::Rational;
    long d = 0;  // quadratic: squarefree, != 0, 1

    // table fields
    std::string label;
    int degree = 1;
    std::vector<std::string> basis_names;
    std::vector<std::vector<std::vector<Rat>>> mult_table;  // [i][j] -> coords
    int r1 = 1, r2 = 0;
    std::optional<Int> class_number;
    bool galois = false;
    std::optional<TorsionFixture> torsion;
    std::vector<std::vector<Rat>> unit_generators;
    std::vector<std::vector<std::vector<Int>>> automorphisms;
    std::vector<PrimeFixture> prime_fixtures;

    static FieldDescriptor rational();
    static FieldDescriptor quadratic(long d);
};

struct PrimeIdeal {
    enum class Kind { RationalP, Inert, Ramified, Split, TableSingle };

    Int p;
    int e = 1;
    int f = 1;
    std::string label;
    Kind kind = Kind::RationalP;
    Int split_root = 0;  // attached root of the minimal polynomial mod p
    std::optional<std::vector<Rat>> uniformizer;

    bool operator==(const PrimeIdeal& o) const {
        return p == o.p && label == o.label;
    }
    bool operator<(const PrimeIdeal& o) const {
        if (p != o.p) return p < o.p;
        return label < o.label;
    }
};

namespace detail {
struct FieldData;
}

class Field;

class FieldElement {
  public:
    FieldElement() = default;

    const std::vector<Rat>& coords() const { return c_; }
    Field field() const;
    int degree() const { return static_cast<int>(c_.size()); }
    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rat rational_part() const { return c_.at(0); }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    // total order used to pick canonical representatives
    bool operator<(const FieldElement& o) const;

    std::string str() const;

  private:
    friend class Field;
    friend FieldElement operator+(const FieldElement&, const FieldElement&);
    friend FieldElement operator-(const FieldElement&, const FieldElement&);
    friend FieldElement operator*(const FieldElement&, const FieldElement&);
    friend FieldElement operator/(const FieldElement&, const FieldElement&);
    friend FieldElement operator-(const FieldElement&);

    std::shared_ptr<const detail::FieldData> data_;
    std::vector<Rat> c_;
};

FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement operator/(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a);

class Field {
  public:
    Field() = default;

    FieldKind kind() const;
    int degree() const;
    std::pair<int, int> signature() const;
    const std::string& label() const;
    long quad_d() const;
    Int disc() const;  // rational: 1; quadratic: field discriminant
    bool galois() const;
    const FieldDescriptor& descriptor() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_rational(const Rat& x) const;
    FieldElement element(std::vector<Rat> coords) const;
    // generator omega for quadratic fields, basis element b1 for tables
    FieldElement gen() const;

    FieldElement inverse(const FieldElement& a) const;
    FieldElement pow(const FieldElement& a, long e) const;
    Rat norm(const FieldElement& a) const;
    Rat trace(const FieldElement& a) const;
    FieldElement conjugate(const FieldElement& a) const;  // quadratic only

    std::vector<PrimeIdeal> primes_above(const Int& p) const;
    long valuation(const FieldElement& a, const PrimeIdeal& P) const;

    Int class_number(const Int& disc_cap = Int(1000000)) const;
    // narrow class number for real quadratic fields (from form cycles)
    Int narrow_class_number(const Int& disc_cap = Int(1000000)) const;
    std::optional<FieldElement> fundamental_unit() const;

    bool same(const Field& o) const { return data_ == o.data_; }
    bool valid() const { return data_ != nullptr; }

  private:
    friend Field make_field(const FieldDescriptor&);
    friend class FieldElement;
    friend FieldElement operator*(const FieldElement&, const FieldElement&);
    friend FieldElement operator/(const FieldElement&, const FieldElement&);

    std::shared_ptr<const detail::FieldData> data_;
};

Field make_field(const FieldDescriptor& desc);

}  // namespace sunit
