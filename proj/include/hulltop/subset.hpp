#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hulltop {

// Dense bitmask over a carrier {0..n-1}. Carriers stay desk-scale
// (n <= 1024), so sets are a few machine words.
class Subset {
public:
    Subset() = default;
    explicit Subset(std::uint32_t carrier_size)
        : size_(carrier_size), words_((carrier_size + 63) / 64, 0) {}

    static Subset empty_set(std::uint32_t n) { return Subset(n); }
    static Subset full_set(std::uint32_t n) {
        Subset s(n);
        for (std::uint32_t e = 0; e < n; ++e) s.set(e);
        return s;
    }
    static Subset singleton(std::uint32_t n, std::uint32_t e) {
        Subset s(n);
        s.set(e);
        return s;
    }
    static Subset of(std::uint32_t n, std::initializer_list<std::uint32_t> elems) {
        Subset s(n);
        for (auto e : elems) s.set(e);
        return s;
    }

    std::uint32_t carrier_size() const { return size_; }
    bool test(std::uint32_t e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }
    void set(std::uint32_t e) { words_[e >> 6] |= std::uint64_t(1) << (e & 63); }
    void reset(std::uint32_t e) { words_[e >> 6] &= ~(std::uint64_t(1) << (e & 63)); }

    std::uint32_t count() const;
    bool empty() const;

    Subset& operator|=(const Subset& o);
    Subset& operator&=(const Subset& o);
    Subset operator|(const Subset& o) const {
        Subset r = *this;
        r |= o;
        return r;
    }
    Subset operator&(const Subset& o) const {
        Subset r = *this;
        r &= o;
        return r;
    }
    Subset minus(const Subset& o) const;
    Subset complement() const;

    bool subset_of(const Subset& o) const;
    bool operator==(const Subset& o) const { return size_ == o.size_ && words_ == o.words_; }
    // Lexicographic on the word representation; only used for ordered containers.
    bool operator<(const Subset& o) const { return words_ < o.words_; }

    std::vector<std::uint32_t> elements() const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                std::uint32_t b = static_cast<std::uint32_t>(__builtin_ctzll(bits));
                fn(static_cast<std::uint32_t>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    // "{0 1 7}"
    std::string str() const;

private:
    std::uint32_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace hulltop
