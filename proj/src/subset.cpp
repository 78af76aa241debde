#include "hulltop/subset.hpp"

#include <bit>
#include <sstream>

#include "hulltop/error.hpp"

namespace hulltop {

std::uint32_t Subset::count() const {
    std::uint32_t c = 0;
    for (auto w : words_) c += static_cast<std::uint32_t>(std::popcount(w));
    return c;
}

bool Subset::empty() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

Subset& Subset::operator|=(const Subset& o) {
    if (size_ != o.size_) throw Error(Err::Internal, "subset size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

Subset& Subset::operator&=(const Subset& o) {
    if (size_ != o.size_) throw Error(Err::Internal, "subset size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

Subset Subset::minus(const Subset& o) const {
    if (size_ != o.size_) throw Error(Err::Internal, "subset size mismatch");
    Subset r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
}

Subset Subset::complement() const {
    return full_set(size_).minus(*this);
}

bool Subset::subset_of(const Subset& o) const {
    if (size_ != o.size_) throw Error(Err::Internal, "subset size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

std::vector<std::uint32_t> Subset::elements() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::uint32_t e) { out.push_back(e); });
    return out;
}

std::string Subset::str() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for_each([&](std::uint32_t e) {
        if (!first) os << ' ';
        os << e;
        first = false;
    });
    os << '}';
    return os.str();
}

} // namespace hulltop
