#pragma once

#include <cstdint>
#include <compare>
#include <string>

#include "hulltop/error.hpp"

namespace hulltop {

// Exact dyadic rational num/2^exp >= 0 with a distinguished `top` value.
// top behaves like +infinity: it absorbs addition and wins comparisons.
// All pseudo-norm and graded-function values live here; there is no
// floating point anywhere in the value path.
class Dyadic {
public:
    constexpr Dyadic() = default; // zero

    static Dyadic zero() { return Dyadic{}; }
    static Dyadic one() { return make(1, 0); }
    static Dyadic top() {
        Dyadic d;
        d.top_ = true;
        return d;
    }
    // num / 2^exp, normalized so that num is odd or the value is 0/1.
    static Dyadic make(std::uint64_t num, unsigned exp) {
        while (exp > 0 && (num & 1u) == 0) {
            num >>= 1;
            --exp;
        }
        if (num == 0) exp = 0;
        Dyadic d;
        d.num_ = num;
        d.exp_ = exp;
        return d;
    }
    // 2^-k
    static Dyadic pow2(unsigned k) { return make(1, k); }

    bool is_top() const { return top_; }
    bool is_zero() const { return !top_ && num_ == 0; }
    std::uint64_t num() const { return num_; }
    unsigned exp() const { return exp_; }

    Dyadic operator+(const Dyadic& o) const {
        if (top_ || o.top_) return top();
        unsigned e = exp_ > o.exp_ ? exp_ : o.exp_;
        check_shift(num_, e - exp_);
        check_shift(o.num_, e - o.exp_);
        std::uint64_t a = num_ << (e - exp_);
        std::uint64_t b = o.num_ << (e - o.exp_);
        if (a > UINT64_MAX - b) throw Error(Err::Internal, "dyadic overflow in +");
        return make(a + b, e);
    }

    // value / 2^k
    Dyadic scale_down(unsigned k) const {
        if (top_) return top();
        return make(num_, exp_ + k);
    }

    Dyadic clip1() const { return *this < one() ? *this : one(); }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.top_ == b.top_ && a.num_ == b.num_ && a.exp_ == b.exp_;
    }
    friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
        if (a.top_ || b.top_) {
            if (a.top_ && b.top_) return std::strong_ordering::equal;
            return a.top_ ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        unsigned e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
        check_shift(a.num_, e - a.exp_);
        check_shift(b.num_, e - b.exp_);
        return (a.num_ << (e - a.exp_)) <=> (b.num_ << (e - b.exp_));
    }

    friend Dyadic min(const Dyadic& a, const Dyadic& b) { return a < b ? a : b; }
    friend Dyadic max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

    // "num/den" with den = 2^exp, e.g. "0/1", "3/4", "1/1"; top prints "top".
    std::string str() const;
    static Dyadic parse(const std::string& s);

private:
    static void check_shift(std::uint64_t v, unsigned s) {
        if (s >= 64 || (s > 0 && (v >> (64 - s)) != 0))
            throw Error(Err::Internal, "dyadic exponent out of range");
    }

    std::uint64_t num_ = 0;
    unsigned exp_ = 0;
    bool top_ = false;
};

} // namespace hulltop
