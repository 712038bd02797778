#include <map>
#include <set>
#include <tuple>

#include "field_internal.hpp"
#include "sunit/field.hpp"

namespace sunit {

namespace {

// number of reduced positive definite forms of fundamental discriminant D < 0
Int imaginary_form_count(const Int& D) {
    Int h = 0;
    Int amax = isqrt(abs(D) / 3);
    for (Int a = 1; a <= amax; ++a) {
        for (Int b = -a + 1; b <= a; ++b) {
            Int num = b * b - D;
            if (num % (4 * a) != 0) continue;
            Int c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && (a == c)) continue;  // (a,-b,a) counted as (a,b,a)
            if (b == a || a == c) {
                if (b < 0) continue;
            }
            ++h;
        }
    }
    return h;
}

struct IndForm {
    Int a, b, c;
    bool operator<(const IndForm& o) const {
        return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
    }
};

// reduced indefinite form: 0 < b < sqrt(D) and sqrt(D) - b < 2|a| < sqrt(D) + b
bool is_reduced_ind(const IndForm& f, const Int& D, const Int& s) {
    Int absa = abs(f.a) * 2;
    if (f.b <= 0) return false;
    if (f.b * f.b >= D) return false;
    // sqrt(D) - b < 2|a|  <=>  (exact integer comparison via squares)
    // use: 2|a| > sqrt(D) - b  and  2|a| < sqrt(D) + b
    // with s = floor(sqrt(D)) and D not a square:
    // sqrt(D) - b < 2|a|  <=>  s - b < 2|a|  or (s - b == 2|a| is fine since
    // sqrt(D) > s);  careful at boundaries, compare squares instead
    Int t = absa + f.b;  // want t > sqrt(D)  <=> t^2 > D
    if (t * t <= D) return false;
    Int u = absa - f.b;  // want u < sqrt(D)  <=> u < 0 or u^2 < D
    if (u >= 0 && u * u >= D) return false;
    return true;
}

IndForm rho_step(const IndForm& f, const Int& D, const Int& s) {
    // (a,b,c) -> (c, b', (b'^2-D)/(4c)) with b' = -b + 2 c q normalized so the
    // image of a reduced form is reduced
    Int c = f.c;
    Int twoc = 2 * abs(c);
    // choose b' congruent to -b mod 2c with s - 2|c| < b' <= s
    Int target = -f.b;
    Int b = mod_euclid(target - (s - twoc + 1), twoc) + (s - twoc + 1);
    Int cc = (b * b - D) / (4 * c);
    return IndForm{c, b, cc};
}

// cycle count of reduced indefinite forms = narrow class number
Int real_form_cycles(const Int& D) {
    Int s = isqrt(D);
    if (s * s == D) throw Error("discriminant is a square");
    std::set<IndForm> all;
    for (Int b = 1; b <= s; ++b) {
        if ((b * b - D) % 2 != 0) continue;  // b = D mod 2
        if (mod_euclid(b * b - D, Int(4)) != 0) continue;
        Int prod = (D - b * b) / 4;  // = -a*c > 0
        for (Int a = 1; a * a <= prod; ++a) {
            if (prod % a != 0) continue;
            Int c = prod / a;
            // forms (a, b, -c), (-a, b, c), (c, b, -a), (-c, b, a)
            for (const auto& f :
                 {IndForm{a, b, -c}, IndForm{-a, b, c}, IndForm{c, b, -a},
                  IndForm{-c, b, a}}) {
                Int g = gcd(gcd(abs(f.a), f.b), abs(f.c));
                if (g != 1) continue;  // fundamental D: forms are primitive
                if (is_reduced_ind(f, D, s)) all.insert(f);
            }
        }
    }
    // rho permutes the reduced forms; its orbits are the form cycles
    Int cycles = 0;
    std::set<IndForm> seen;
    for (const auto& f : all) {
        if (seen.count(f)) continue;
        ++cycles;
        IndForm cur = f;
        while (!seen.count(cur)) {
            seen.insert(cur);
            cur = rho_step(cur, D, s);
            if (!all.count(cur)) throw Error("rho step left the reduced set");
        }
    }
    return cycles;
}

}  // namespace

Int Field::narrow_class_number(const Int& disc_cap) const {
    switch (kind()) {
        case FieldKind::Rational:
            return 1;
        case FieldKind::Quadratic: {
            Int D = disc();
            if (abs(D) > disc_cap)
                throw ResourceLimit("discriminant exceeds configured cap");
            if (D < 0) return imaginary_form_count(D);
            return real_form_cycles(D);
        }
        case FieldKind::Table:
            throw UnsupportedField("narrow class number needs a fixture");
    }
    throw Error("unreachable");
}

Int Field::class_number(const Int& disc_cap) const {
    switch (kind()) {
        case FieldKind::Rational:
            return 1;
        case FieldKind::Quadratic: {
            Int hplus = narrow_class_number(disc_cap);
            if (quad_d() < 0) return hplus;
            auto eps = fundamental_unit();
            if (!eps) throw Error("real quadratic field without unit");
            Rat nm = norm(*eps);
            if (nm == -1) return hplus;
            if (hplus % 2 != 0)
                throw Error("narrow class number parity inconsistent");
            return hplus / 2;
        }
        case FieldKind::Table: {
            if (data_ && descriptor().class_number)
                return *descriptor().class_number;
            throw UnsupportedField("table field without class number fixture");
        }
    }
    throw Error("unreachable");
}

std::optional<FieldElement> Field::fundamental_unit() const {
    if (kind() == FieldKind::Rational) return std::nullopt;
    if (kind() == FieldKind::Table)
        throw UnsupportedField("fundamental unit of table fields comes from fixtures");
    long d = quad_d();
    if (d < 0) return std::nullopt;  // torsion only

    // continued fraction of omega; convergents give the fundamental unit
    Int s = isqrt(Int(d));
    bool half = mod_euclid(d, 4) == 1;
    // alpha = (P + sqrt(d)) / Q
    Int P = half ? 1 : 0;
    Int Q = half ? 2 : 1;
    Int p_prev = 1, q_prev = 0;  // p_{-1}, q_{-1}
    Int p_cur, q_cur;
    bool first = true;
    for (long iter = 0; iter < 4000000; ++iter) {
        Int a = (P + s) / Q;  // floor((P + sqrt d)/Q), Q > 0 maintained
        if (Q < 0) a = -((-P - s + Q + 1) / (-Q));  // not expected
        if (first) {
            p_cur = a;
            q_cur = 1;
            first = false;
        } else {
            Int pn = a * p_cur + p_prev;
            Int qn = a * q_cur + q_prev;
            p_prev = p_cur;
            q_prev = q_cur;
            p_cur = pn;
            q_cur = qn;
        }
        // candidate unit p - q * conj(omega) = (p - q*t) + q*omega
        Int t = data_->quad_t;
        FieldElement u = element({Rat(p_cur - q_cur * t), Rat(q_cur)});
        Rat nm = norm(u);
        if (nm == 1 || nm == -1) {
            if (!u.is_one() && u != -one()) return u;
        }
        P = a * Q - P;
        Q = (Int(d) - P * P) / Q;
        if (Q == 0) throw Error("continued fraction degenerated");
    }
    throw ResourceLimit("continued fraction period cap exceeded");
}

}  // namespace sunit
