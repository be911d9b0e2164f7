#pragma once

#include <cstdint>
#include <iosfwd>

#include "ptcurves/errors.hpp"

namespace ptcurves {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Deterministic Miller-Rabin, exact for every n < 2^64.
/// Throws UsageError for n < 2.
bool is_prime(u64 n);

enum class Reduction {
    kAuto,    // Barrett when p < 2^32, otherwise 128-bit remainder
    kPlain,   // always 128-bit remainder
};

/// An odd prime 3 <= p < 2^62. Holds the precomputed reduction constant, so
/// hot loops should call the raw-word members instead of going through
/// FieldElement.
class PrimeModulus {
public:
    static constexpr u64 kMaxExclusive = u64{1} << 62;

    explicit PrimeModulus(u64 p, Reduction reduction = Reduction::kAuto);

    u64 value() const noexcept { return p_; }
    bool barrett() const noexcept { return barrett_; }

    u64 reduce(u64 x) const noexcept { return x < p_ ? x : x % p_; }
    u64 reduce_signed(std::int64_t x) const noexcept;

    u64 add(u64 a, u64 b) const noexcept {
        u64 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    u64 neg(u64 a) const noexcept { return a == 0 ? 0 : p_ - a; }

    u64 mul(u64 a, u64 b) const noexcept {
        if (barrett_) {
            return barrett_reduce(a * b);
        }
        return static_cast<u64>(static_cast<u128>(a) * b % p_);
    }

    u64 pow(u64 base, u64 exp) const noexcept;

    /// Extended Euclid. Throws DomainError("zero has no inverse") for a == 0.
    u64 inv(u64 a) const;

    friend bool operator==(const PrimeModulus& l, const PrimeModulus& r) noexcept {
        return l.p_ == r.p_;
    }

private:
    u64 barrett_reduce(u64 x) const noexcept {
        u64 q = static_cast<u64>((static_cast<u128>(x) * mu_) >> 64);
        u64 r = x - q * p_;
        while (r >= p_) r -= p_;
        return r;
    }

    u64 p_;
    u64 mu_ = 0;  // floor((2^64 - 1) / p), used only when barrett_
    bool barrett_ = false;
};

/// A residue in [0, p) tagged with its modulus.
class FieldElement {
public:
    FieldElement(const PrimeModulus& mod, u64 value) : mod_(mod), value_(mod.reduce(value)) {}

    static FieldElement from_signed(const PrimeModulus& mod, std::int64_t v) {
        return FieldElement(mod, mod.reduce_signed(v));
    }

    u64 value() const noexcept { return value_; }
    const PrimeModulus& modulus() const noexcept { return mod_; }
    bool is_zero() const noexcept { return value_ == 0; }

    friend bool operator==(const FieldElement& l, const FieldElement& r) noexcept {
        return l.mod_ == r.mod_ && l.value_ == r.value_;
    }

private:
    PrimeModulus mod_;
    u64 value_;
};

FieldElement fe_add(const FieldElement& a, const FieldElement& b);
FieldElement fe_sub(const FieldElement& a, const FieldElement& b);
FieldElement fe_mul(const FieldElement& a, const FieldElement& b);
FieldElement fe_neg(const FieldElement& a);
FieldElement fe_inv(const FieldElement& a);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return fe_add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return fe_sub(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return fe_mul(a, b); }

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

} // namespace ptcurves
