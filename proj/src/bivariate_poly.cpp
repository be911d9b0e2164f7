#include "ptcurves/bivariate_poly.hpp"

#include <algorithm>
#include <sstream>

namespace ptcurves {

namespace upoly {

void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs mul(const PrimeModulus& m, const Coeffs& a, const Coeffs& b) {
    if (a.empty() || b.empty()) return {};
    Coeffs r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = m.add(r[i + j], m.mul(a[i], b[j]));
        }
    }
    trim(r);
    return r;
}

std::pair<Coeffs, Coeffs> divrem(const PrimeModulus& m, Coeffs a, const Coeffs& b) {
    trim(a);
    if (b.empty()) throw DomainError("polynomial division by zero");
    if (a.size() < b.size()) return {Coeffs{}, std::move(a)};
    const u64 lead_inv = m.inv(b.back());
    Coeffs q(a.size() - b.size() + 1, 0);
    for (std::size_t shift = q.size(); shift-- > 0;) {
        const std::size_t k = shift + b.size() - 1;
        u64 c = m.mul(a[k], lead_inv);
        q[shift] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            a[shift + j] = m.sub(a[shift + j], m.mul(c, b[j]));
        }
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    return {std::move(q), std::move(a)};
}

Coeffs rem(const PrimeModulus& m, Coeffs a, const Coeffs& b) { return divrem(m, std::move(a), b).second; }

Coeffs make_monic(const PrimeModulus& m, Coeffs a) {
    trim(a);
    if (a.empty() || a.back() == 1) return a;
    const u64 li = m.inv(a.back());
    for (auto& c : a) c = m.mul(c, li);
    return a;
}

Coeffs gcd(const PrimeModulus& m, Coeffs a, Coeffs b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Coeffs r = rem(m, std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(m, std::move(a));
}

Coeffs powmod(const PrimeModulus& m, Coeffs base, u64 e, const Coeffs& modulus) {
    Coeffs result = rem(m, Coeffs{1}, modulus);
    base = rem(m, std::move(base), modulus);
    while (e) {
        if (e & 1) result = rem(m, mul(m, result, base), modulus);
        e >>= 1;
        if (e) base = rem(m, mul(m, base, base), modulus);
    }
    return result;
}

} // namespace upoly

// ---------------------------------------------------------------------------

UnivariatePoly::UnivariatePoly(const PrimeModulus& mod, std::vector<u64> coeffs)
    : mod_(mod), c_(std::move(coeffs)) {
    for (auto& c : c_) c = mod_.reduce(c);
    upoly::trim(c_);
}

u64 UnivariatePoly::eval(u64 y) const noexcept {
    u64 acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;) acc = mod_.add(mod_.mul(acc, y), c_[k]);
    return acc;
}

namespace {

// One synthetic division by (y - r); returns the remainder g(r).
u64 synthetic_divide(const PrimeModulus& m, std::vector<u64>& c, u64 r) {
    if (c.empty()) return 0;
    u64 carry = 0;
    std::vector<u64> q(c.size() - 1);
    for (std::size_t k = c.size(); k-- > 0;) {
        u64 v = m.add(c[k], m.mul(carry, r));
        if (k == 0) {
            c = std::move(q);
            return v;
        }
        q[k - 1] = v;
        carry = v;
    }
    return 0;
}

void split_linear_factors(const PrimeModulus& m, const upoly::Coeffs& h, std::vector<u64>& roots) {
    const int deg = static_cast<int>(h.size()) - 1;
    if (deg <= 0) return;
    if (deg == 1) {
        // h is monic: y + c0
        roots.push_back(m.neg(h[0]));
        return;
    }
    const u64 half = (m.value() - 1) / 2;
    for (u64 delta = 0;; ++delta) {
        upoly::Coeffs w = upoly::powmod(m, upoly::Coeffs{m.reduce(delta), 1}, half, h);
        if (w.empty()) w.push_back(0);
        w[0] = m.sub(w[0], 1);
        upoly::trim(w);
        upoly::Coeffs d = upoly::gcd(m, w, h);
        const int dd = static_cast<int>(d.size()) - 1;
        if (dd > 0 && dd < deg) {
            auto [q, r] = upoly::divrem(m, h, d);
            split_linear_factors(m, d, roots);
            split_linear_factors(m, upoly::make_monic(m, q), roots);
            return;
        }
    }
}

std::vector<u64> distinct_roots_fast(const UnivariatePoly& g) {
    const PrimeModulus& m = g.modulus();
    upoly::Coeffs monic = upoly::make_monic(m, g.coeffs());
    std::vector<u64> roots;
    if (monic.size() == 2) {
        roots.push_back(m.neg(monic[0]));
        return roots;
    }
    // y^p - y mod g
    upoly::Coeffs yp = upoly::powmod(m, upoly::Coeffs{0, 1}, m.value(), monic);
    if (yp.size() < 2) yp.resize(2, 0);
    yp[1] = m.sub(yp[1], 1);
    upoly::trim(yp);
    upoly::Coeffs h = upoly::gcd(m, yp, monic);
    split_linear_factors(m, h, roots);
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<u64> distinct_roots_scan(const UnivariatePoly& g) {
    std::vector<u64> roots;
    if (g.degree() == 1) {
        const PrimeModulus& m = g.modulus();
        roots.push_back(m.mul(m.neg(g.coeffs()[0]), m.inv(g.coeffs()[1])));
        return roots;
    }
    const u64 p = g.modulus().value();
    for (u64 y = 0; y < p; ++y) {
        if (g.eval(y) == 0) roots.push_back(y);
    }
    return roots;
}

} // namespace

int root_multiplicity(const UnivariatePoly& g, u64 r) {
    if (g.is_zero()) throw DomainError("identically zero fiber");
    std::vector<u64> c = g.coeffs();
    int mult = 0;
    while (!c.empty() && synthetic_divide(g.modulus(), c, r) == 0) ++mult;
    return mult;
}

std::vector<Root> univariate_roots(const UnivariatePoly& g, RootMethod method) {
    if (g.is_zero()) throw DomainError("identically zero fiber");
    if (g.degree() == 0) return {};
    if (method == RootMethod::kAuto) {
        method = g.modulus().value() < kScanThreshold ? RootMethod::kScan : RootMethod::kFast;
    }
    std::vector<u64> distinct =
        method == RootMethod::kScan ? distinct_roots_scan(g) : distinct_roots_fast(g);
    std::vector<Root> out;
    out.reserve(distinct.size());
    for (u64 r : distinct) out.push_back(Root{r, g.degree() == 1 ? 1 : root_multiplicity(g, r)});
    return out;
}

int distinct_root_count(const UnivariatePoly& g) {
    if (g.is_zero()) throw DomainError("identically zero fiber");
    if (g.degree() == 0) return 0;
    const PrimeModulus& m = g.modulus();
    upoly::Coeffs monic = upoly::make_monic(m, g.coeffs());
    upoly::Coeffs yp = upoly::powmod(m, upoly::Coeffs{0, 1}, m.value(), monic);
    if (yp.size() < 2) yp.resize(2, 0);
    yp[1] = m.sub(yp[1], 1);
    upoly::trim(yp);
    if (yp.empty()) return g.degree();
    return static_cast<int>(upoly::gcd(m, yp, monic).size()) - 1;
}

// ---------------------------------------------------------------------------

BivariatePoly::BivariatePoly(const PrimeModulus& mod, std::map<Monomial, u64> coeffs) : mod_(mod) {
    for (auto& [mono, c] : coeffs) {
        if (mono.first < 0 || mono.second < 0) throw UsageError("negative exponent in polynomial");
        u64 v = mod_.reduce(c);
        if (v != 0) coeffs_.emplace(mono, v);
    }
    if (coeffs_.empty()) throw UsageError("polynomial is identically zero");
    for (const auto& [mono, c] : coeffs_) {
        total_degree_ = std::max(total_degree_, mono.first + mono.second);
        y_degree_ = std::max(y_degree_, mono.second);
        x_degree_ = std::max(x_degree_, mono.first);
    }
    by_y_.assign(y_degree_ + 1, {});
    for (const auto& [mono, c] : coeffs_) {
        auto& row = by_y_[mono.second];
        if (row.size() <= static_cast<std::size_t>(mono.first)) row.resize(mono.first + 1, 0);
        row[mono.first] = c;
    }
}

u64 BivariatePoly::coefficient(int i, int j) const {
    auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? 0 : it->second;
}

void BivariatePoly::specialize_x(u64 x0, std::vector<u64>& out) const {
    out.assign(by_y_.size(), 0);
    for (std::size_t j = 0; j < by_y_.size(); ++j) {
        const auto& row = by_y_[j];
        u64 acc = 0;
        for (std::size_t i = row.size(); i-- > 0;) acc = mod_.add(mod_.mul(acc, x0), row[i]);
        out[j] = acc;
    }
}

u64 BivariatePoly::eval(u64 x, u64 y) const noexcept {
    u64 acc = 0;
    for (std::size_t j = by_y_.size(); j-- > 0;) {
        const auto& row = by_y_[j];
        u64 cj = 0;
        for (std::size_t i = row.size(); i-- > 0;) cj = mod_.add(mod_.mul(cj, x), row[i]);
        acc = mod_.add(mod_.mul(acc, y), cj);
    }
    return acc;
}

std::string BivariatePoly::to_text() const {
    std::ostringstream os;
    bool first = true;
    // Descending total degree, then descending x-exponent.
    std::vector<std::pair<Monomial, u64>> ordered(coeffs_.begin(), coeffs_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
        int dl = l.first.first + l.first.second, dr = r.first.first + r.first.second;
        if (dl != dr) return dl > dr;
        return l.first.first > r.first.first;
    });
    for (const auto& [mono, c] : ordered) {
        if (!first) os << " + ";
        first = false;
        os << c;
        if (mono.first > 0) os << "*x^" << mono.first;
        if (mono.second > 0) os << "*y^" << mono.second;
    }
    return os.str();
}

FieldElement poly_eval(const BivariatePoly& f, const FieldElement& x, const FieldElement& y) {
    if (!(x.modulus() == f.modulus()) || !(y.modulus() == f.modulus())) {
        throw UsageError("poly_eval: modulus mismatch");
    }
    return FieldElement(f.modulus(), f.eval(x.value(), y.value()));
}

UnivariatePoly substitute_x(const BivariatePoly& f, const FieldElement& x0) {
    if (!(x0.modulus() == f.modulus())) throw UsageError("substitute_x: modulus mismatch");
    std::vector<u64> c;
    f.specialize_x(x0.value(), c);
    return UnivariatePoly(f.modulus(), std::move(c));
}

ShiftedPoly shift_substitute(const BivariatePoly& f, const FieldElement& a, const FieldElement& b,
                             int target_y_index) {
    const PrimeModulus& m = f.modulus();
    if (!(a.modulus() == m) || !(b.modulus() == m)) throw UsageError("shift_substitute: modulus mismatch");
    if (a.is_zero()) throw DomainError("shift coefficient a must be coprime to p");
    const int dx = f.x_degree();
    // binom[i][k] mod p for 0 <= k <= i <= dx
    std::vector<std::vector<u64>> binom(dx + 1);
    for (int i = 0; i <= dx; ++i) {
        binom[i].assign(i + 1, 1);
        for (int k = 1; k < i; ++k) binom[i][k] = m.add(binom[i - 1][k - 1], binom[i - 1][k]);
    }
    std::vector<u64> apow(dx + 1, 1), bpow(dx + 1, 1);
    for (int i = 1; i <= dx; ++i) {
        apow[i] = m.mul(apow[i - 1], a.value());
        bpow[i] = m.mul(bpow[i - 1], b.value());
    }
    std::map<BivariatePoly::Monomial, u64> out;
    for (const auto& [mono, c] : f.terms()) {
        const int i = mono.first, j = mono.second;
        for (int k = 0; k <= i; ++k) {
            u64 term = m.mul(c, m.mul(binom[i][k], m.mul(apow[k], bpow[i - k])));
            if (term == 0) continue;
            auto& slot = out[{k, j}];
            slot = m.add(slot, term);
        }
    }
    return ShiftedPoly{BivariatePoly(m, std::move(out)), target_y_index};
}

} // namespace ptcurves
