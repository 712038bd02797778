#include "sunit/polynomial.hpp"

#include "sunit/errors.hpp"

namespace sunit {

int poly_deg(const Poly& p) {
    for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d)
        if (p[d] != 0) return d;
    return -1;
}

Poly poly_trim(Poly p) {
    int d = poly_deg(p);
    p.resize(d + 1);
    return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return poly_trim(r);
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return poly_trim(r);
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (poly_deg(a) < 0 || poly_deg(b) < 0) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return poly_trim(r);
}

Poly poly_scale(const Rat& c, const Poly& a) {
    Poly r = a;
    for (auto& x : r) x *= c;
    return poly_trim(r);
}

Poly poly_rem(Poly a, const Poly& b) {
    int db = poly_deg(b);
    if (db < 0) throw Error("poly_rem by zero");
    a = poly_trim(a);
    while (poly_deg(a) >= db) {
        int da = poly_deg(a);
        Rat c = a[da] / b[db];
        for (int i = 0; i <= db; ++i) a[da - db + i] -= c * b[i];
        a = poly_trim(a);
    }
    return a;
}

Poly poly_derivative(const Poly& a) {
    if (a.size() <= 1) return {};
    Poly r(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) r[i - 1] = Rat(long(i)) * a[i];
    return poly_trim(r);
}

Rat poly_eval(const Poly& a, const Rat& x) {
    Rat r = 0;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) r = r * x + a[i];
    return r;
}

Rat poly_resultant(Poly a, Poly b) {
    a = poly_trim(a);
    b = poly_trim(b);
    Rat res = 1;
    while (true) {
        int da = poly_deg(a), db = poly_deg(b);
        if (db < 0) return 0;
        if (db == 0) {
            Rat r = 1;
            for (int i = 0; i < da; ++i) r *= b[0];
            return res * r;
        }
        Poly r = poly_rem(a, b);
        int dr = poly_deg(r);
        if (dr < 0) return 0;
        // Res(a,b) = (-1)^(da*db) * lc(b)^(da-dr) * Res(b,r)
        Rat lead = 1;
        for (int i = 0; i < da - dr; ++i) lead *= b[db];
        if ((da * db) % 2 == 1) lead = -lead;
        res *= lead;
        a = b;
        b = r;
    }
}

namespace {

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    chain.push_back(poly_trim(p));
    chain.push_back(poly_derivative(p));
    while (poly_deg(chain.back()) > 0) {
        Poly r = poly_rem(chain[chain.size() - 2], chain.back());
        if (poly_deg(r) < 0) break;
        chain.push_back(poly_scale(Rat(-1), r));
    }
    return chain;
}

int sign_changes(const std::vector<Poly>& chain, const Rat& x) {
    int changes = 0, last = 0;
    for (const auto& q : chain) {
        Rat v = poly_eval(q, x);
        int s = sgn(v.get_num());
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

int sturm_count(const Poly& p, const Rat& lo, const Rat& hi) {
    auto chain = sturm_chain(p);
    return sign_changes(chain, lo) - sign_changes(chain, hi);
}

namespace {

Poly poly_gcd(Poly a, Poly b) {
    a = poly_trim(a);
    b = poly_trim(b);
    while (poly_deg(b) >= 0) {
        Poly r = poly_rem(a, b);
        a = b;
        b = r;
    }
    return a;
}

}  // namespace

bool positive_at_all_roots(const Poly& m, const Poly& q) {
    int d = poly_deg(m);
    if (d <= 0) return true;
    if (poly_deg(q) < 0) return false;
    if (poly_deg(poly_gcd(m, q)) > 0) return false;  // q vanishes at a root
    // Cauchy-style root bound
    Rat bound = 0;
    for (int i = 0; i < d; ++i) {
        Rat c = abs(m[i] / m[d]);
        if (c > bound) bound = c;
    }
    bound += 1;
    auto chain = sturm_chain(m);
    struct Iv {
        Rat lo, hi;
    };
    std::vector<Iv> stack{{-bound, bound}};
    std::vector<Iv> isolated;
    while (!stack.empty()) {
        Iv iv = stack.back();
        stack.pop_back();
        int cnt = sign_changes(chain, iv.lo) - sign_changes(chain, iv.hi);
        if (cnt == 0) continue;
        if (cnt == 1) {
            isolated.push_back(iv);
            continue;
        }
        Rat mid = (iv.lo + iv.hi) / 2;
        stack.push_back({iv.lo, mid});
        stack.push_back({mid, iv.hi});
    }
    if (static_cast<int>(isolated.size()) != d) return false;  // not totally real
    for (auto iv : isolated) {
        // refine until q has no root in the interval; then the sign of q at
        // the midpoint is the sign at the isolated root of m
        while (sturm_count(q, iv.lo, iv.hi) != 0) {
            Rat mid = (iv.lo + iv.hi) / 2;
            if (sign_changes(chain, iv.lo) - sign_changes(chain, mid) == 1)
                iv.hi = mid;
            else
                iv.lo = mid;
        }
        Rat v = poly_eval(q, (iv.lo + iv.hi) / 2);
        if (v <= 0) return false;
    }
    return true;
}

}  // namespace sunit
