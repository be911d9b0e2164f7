#include "ptcurves/prime_field.hpp"

#include <array>
#include <ostream>
#include <string>

namespace ptcurves {

namespace {

u64 mulmod64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod64(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, b, m);
        b = mulmod64(b, b, m);
        e >>= 1;
    }
    return r;
}

void require_same(const FieldElement& a, const FieldElement& b) {
    if (!(a.modulus() == b.modulus())) {
        throw UsageError("modulus mismatch: " + std::to_string(a.modulus().value()) + " vs " +
                         std::to_string(b.modulus().value()));
    }
}

} // namespace

bool is_prime(u64 n) {
    if (n < 2) throw UsageError("is_prime requires n >= 2, got " + std::to_string(n));
    static constexpr std::array<u64, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 w : kWitnesses) {
        if (n == w) return true;
        if (n % w == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : kWitnesses) {
        u64 x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeModulus::PrimeModulus(u64 p, Reduction reduction) : p_(p) {
    if (p < 3 || p >= kMaxExclusive) {
        throw UsageError("modulus must satisfy 3 <= p < 2^62, got " + std::to_string(p));
    }
    if (!is_prime(p)) throw UsageError("modulus " + std::to_string(p) + " is not prime");
    if (reduction == Reduction::kAuto && p < (u64{1} << 32)) {
        barrett_ = true;
        mu_ = ~u64{0} / p;
    }
}

u64 PrimeModulus::reduce_signed(std::int64_t x) const noexcept {
    if (x >= 0) return static_cast<u64>(x) % p_;
    u64 m = static_cast<u64>(-(x + 1)) % p_;  // avoids overflow at INT64_MIN
    return p_ - 1 - m;
}

u64 PrimeModulus::pow(u64 base, u64 exp) const noexcept {
    u64 r = 1;
    base = reduce(base);
    while (exp) {
        if (exp & 1) r = mul(r, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return r;
}

u64 PrimeModulus::inv(u64 a) const {
    a = reduce(a);
    if (a == 0) throw DomainError("zero has no inverse");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return reduce_signed(t);
}

FieldElement fe_add(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return FieldElement(a.modulus(), a.modulus().add(a.value(), b.value()));
}

FieldElement fe_sub(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return FieldElement(a.modulus(), a.modulus().sub(a.value(), b.value()));
}

FieldElement fe_mul(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return FieldElement(a.modulus(), a.modulus().mul(a.value(), b.value()));
}

FieldElement fe_neg(const FieldElement& a) { return FieldElement(a.modulus(), a.modulus().neg(a.value())); }

FieldElement fe_inv(const FieldElement& a) { return FieldElement(a.modulus(), a.modulus().inv(a.value())); }

std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
    return os << e.value() << " (mod " << e.modulus().value() << ")";
}

} // namespace ptcurves
