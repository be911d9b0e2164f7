#pragma once

#include <string>

#include "ptcurves/prime_field.hpp"

namespace ptcurves {

/// {start, start+1, ..., start+length-1} reduced mod p. length == p is the
/// full interval [0, p-1]; length == 0 is empty.
class CyclicInterval {
public:
    CyclicInterval(u64 p, u64 start, u64 length);

    static CyclicInterval full(u64 p) { return CyclicInterval(p, 0, p); }
    static CyclicInterval empty(u64 p) { return CyclicInterval(p, 0, 0); }
    /// The half-open window (x, x+H], i.e. start x+1, length H.
    static CyclicInterval window_after(u64 p, u64 x, u64 h);
    /// Parses "start:length".
    static CyclicInterval parse(u64 p, const std::string& text);

    u64 modulus() const noexcept { return p_; }
    u64 start() const noexcept { return start_; }
    u64 length() const noexcept { return length_; }
    u64 size() const noexcept { return length_; }
    bool is_full() const noexcept { return length_ == p_; }
    bool empty() const noexcept { return length_ == 0; }

    bool contains(u64 v) const noexcept {
        u64 off = v >= start_ ? v - start_ : v + p_ - start_;
        return off < length_;
    }
    /// k-th element, 0 <= k < length.
    u64 at(u64 k) const noexcept {
        u64 v = start_ + k;
        return v >= p_ ? v - p_ : v;
    }

    std::string to_string() const { return std::to_string(start_) + ":" + std::to_string(length_); }

    friend bool operator==(const CyclicInterval&, const CyclicInterval&) = default;

private:
    u64 p_;
    u64 start_;
    u64 length_;
};

struct Rectangle {
    CyclicInterval I;
    CyclicInterval J;

    Rectangle(CyclicInterval i, CyclicInterval j);
    u64 volume() const noexcept { return I.size() * J.size(); }
};

} // namespace ptcurves
