#include "hulltop/monoid.hpp"

#include <functional>
#include <sstream>

#include "hulltop/error.hpp"

namespace hulltop {

PartialOrder::PartialOrder(std::uint32_t n, std::vector<std::uint8_t> leq)
    : n_(n), leq_(std::move(leq)) {
    if (leq_.size() != std::size_t(n) * n)
        throw Error(Err::InvalidTable, "order table size mismatch");
    for (std::uint32_t a = 0; a < n; ++a)
        if (!le(a, a)) throw Error(Err::InvalidTable, "order not reflexive at " + std::to_string(a));
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
            if (a != b && le(a, b) && le(b, a))
                throw Error(Err::InvalidTable,
                            "order not antisymmetric on " + std::to_string(a) + "," + std::to_string(b));
            if (le(a, b))
                for (std::uint32_t c = 0; c < n; ++c)
                    if (le(b, c) && !le(a, c))
                        throw Error(Err::InvalidTable, "order not transitive");
        }
    down_.reserve(n);
    up_.reserve(n);
    for (std::uint32_t a = 0; a < n; ++a) {
        Subset d(n), u(n);
        for (std::uint32_t b = 0; b < n; ++b) {
            if (le(b, a)) d.set(b);
            if (le(a, b)) u.set(b);
        }
        down_.push_back(std::move(d));
        up_.push_back(std::move(u));
    }
}

PartialOrder PartialOrder::from_pairs(
    std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& le_pairs) {
    std::vector<std::uint8_t> leq(std::size_t(n) * n, 0);
    for (std::uint32_t a = 0; a < n; ++a) leq[std::size_t(a) * n + a] = 1;
    for (auto [a, b] : le_pairs) {
        if (a >= n || b >= n) throw Error(Err::InvalidTable, "order pair out of range");
        leq[std::size_t(a) * n + b] = 1;
    }
    // Floyd-Warshall style transitive closure.
    for (std::uint32_t k = 0; k < n; ++k)
        for (std::uint32_t a = 0; a < n; ++a)
            if (leq[std::size_t(a) * n + k])
                for (std::uint32_t b = 0; b < n; ++b)
                    if (leq[std::size_t(k) * n + b]) leq[std::size_t(a) * n + b] = 1;
    return PartialOrder(n, std::move(leq));
}

FiniteCommMonoid::FiniteCommMonoid(std::string name,
                                   std::uint32_t size,
                                   std::uint32_t zero,
                                   std::vector<std::uint16_t> op,
                                   std::optional<std::vector<std::uint32_t>> inverse,
                                   std::optional<PartialOrder> order)
    : name_(std::move(name)),
      size_(size),
      zero_(zero),
      op_(std::move(op)),
      inverse_(std::move(inverse)),
      order_(std::move(order)) {
    if (size_ == 0 || size_ > 4096) throw Error(Err::SizeOutOfRange, "carrier size " + std::to_string(size_));
    if (zero_ >= size_) throw Error(Err::InvalidTable, "zero out of range");
    if (op_.size() != std::size_t(size_) * size_) throw Error(Err::InvalidTable, "op table size mismatch");
    for (auto v : op_)
        if (v >= size_) throw Error(Err::InvalidTable, "op entry out of range");

    for (std::uint32_t g = 0; g < size_; ++g)
        if (add(zero_, g) != g)
            throw Error(Err::InvalidTable, "unit law fails at " + std::to_string(g));
    for (std::uint32_t a = 0; a < size_; ++a)
        for (std::uint32_t b = a + 1; b < size_; ++b)
            if (add(a, b) != add(b, a))
                throw Error(Err::InvalidTable,
                            "not commutative at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    const std::uint16_t* t = op_.data();
    for (std::uint32_t a = 0; a < size_; ++a)
        for (std::uint32_t b = 0; b < size_; ++b) {
            std::uint32_t ab = t[std::size_t(a) * size_ + b];
            for (std::uint32_t c = 0; c < size_; ++c)
                if (t[std::size_t(ab) * size_ + c] != t[std::size_t(a) * size_ + t[std::size_t(b) * size_ + c]])
                    throw Error(Err::InvalidTable, "not associative at (" + std::to_string(a) + "," +
                                                       std::to_string(b) + "," + std::to_string(c) + ")");
        }
    if (inverse_) {
        if (inverse_->size() != size_) throw Error(Err::InvalidTable, "inverse table size mismatch");
        for (std::uint32_t g = 0; g < size_; ++g) {
            if ((*inverse_)[g] >= size_) throw Error(Err::InvalidTable, "inverse entry out of range");
            if (add(g, (*inverse_)[g]) != zero_)
                throw Error(Err::InvalidTable, "inverse law fails at " + std::to_string(g));
        }
    }
    if (order_) {
        if (order_->size() != size_) throw Error(Err::InvalidTable, "order size mismatch");
        op_monotone_ = true;
        for (std::uint32_t e = 0; e < size_ && op_monotone_; ++e)
            for (std::uint32_t a = 0; a < size_ && op_monotone_; ++a)
                for (std::uint32_t b = 0; b < size_; ++b)
                    if (order_->le(a, b) && !order_->le(add(e, a), add(e, b))) {
                        op_monotone_ = false;
                        break;
                    }
    }
}

std::uint32_t FiniteCommMonoid::inverse(std::uint32_t a) const {
    if (!inverse_) throw Error(Err::MissingInverse, "monoid " + name_ + " has no inverse table");
    return (*inverse_)[a];
}

const PartialOrder& FiniteCommMonoid::order() const {
    if (!order_) throw Error(Err::MissingContext, "monoid " + name_ + " has no order");
    return *order_;
}

Subset FiniteCommMonoid::set_sum(const Subset& a, const Subset& b) const {
    Subset out(size_);
    if (a.empty() || b.empty()) return out;
    const auto ae = a.elements();
    const auto be = b.elements();
    for (auto x : ae) {
        const std::uint16_t* row = op_.data() + std::size_t(x) * size_;
        for (auto y : be) out.set(row[y]);
    }
    return out;
}

Subset FiniteCommMonoid::translate_preimage(std::uint32_t e, const Subset& a) const {
    Subset out(size_);
    const std::uint16_t* row = op_.data() + std::size_t(e) * size_;
    for (std::uint32_t g = 0; g < size_; ++g)
        if (a.test(row[g])) out.set(g);
    return out;
}

Subset FiniteCommMonoid::negate(const Subset& a) const {
    if (!inverse_) throw Error(Err::MissingInverse, "monoid " + name_ + " has no inverse table");
    Subset out(size_);
    a.for_each([&](std::uint32_t g) { out.set((*inverse_)[g]); });
    return out;
}

namespace {

std::vector<std::uint16_t> table_from(std::uint32_t n,
                                      const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& f) {
    std::vector<std::uint16_t> t(std::size_t(n) * n);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) t[std::size_t(a) * n + b] = static_cast<std::uint16_t>(f(a, b));
    return t;
}

PartialOrder inclusion_order(std::uint32_t n_elems) {
    std::vector<std::uint8_t> leq(std::size_t(n_elems) * n_elems, 0);
    for (std::uint32_t a = 0; a < n_elems; ++a)
        for (std::uint32_t b = 0; b < n_elems; ++b)
            leq[std::size_t(a) * n_elems + b] = ((a & b) == a) ? 1 : 0;
    return PartialOrder(n_elems, std::move(leq));
}

} // namespace

MonoidPtr make_cyclic(std::uint32_t m) {
    if (m == 0 || m > 4096) throw Error(Err::SizeOutOfRange, "cyclic order " + std::to_string(m));
    std::vector<std::uint32_t> inv(m);
    for (std::uint32_t g = 0; g < m; ++g) inv[g] = (m - g) % m;
    return std::make_shared<FiniteCommMonoid>(
        "cyclic(" + std::to_string(m) + ")", m, 0,
        table_from(m, [m](std::uint32_t a, std::uint32_t b) { return (a + b) % m; }), std::move(inv),
        std::nullopt);
}

MonoidPtr make_boolean_sym_diff(std::uint32_t n) {
    if (n == 0 || n > 12) throw Error(Err::SizeOutOfRange, "atom count " + std::to_string(n));
    std::uint32_t sz = 1u << n;
    std::vector<std::uint32_t> inv(sz);
    for (std::uint32_t g = 0; g < sz; ++g) inv[g] = g;
    return std::make_shared<FiniteCommMonoid>(
        "boolean_sym_diff(" + std::to_string(n) + ")", sz, 0,
        table_from(sz, [](std::uint32_t a, std::uint32_t b) { return a ^ b; }), std::move(inv),
        inclusion_order(sz));
}

MonoidPtr make_boolean_join(std::uint32_t n) {
    if (n == 0 || n > 12) throw Error(Err::SizeOutOfRange, "atom count " + std::to_string(n));
    std::uint32_t sz = 1u << n;
    return std::make_shared<FiniteCommMonoid>(
        "boolean_join(" + std::to_string(n) + ")", sz, 0,
        table_from(sz, [](std::uint32_t a, std::uint32_t b) { return a | b; }), std::nullopt,
        inclusion_order(sz));
}

MonoidPtr make_saturating_cube(std::uint32_t k, std::uint32_t d) {
    if (d == 0 || d > 6) throw Error(Err::SizeOutOfRange, "cube dimension " + std::to_string(d));
    std::uint64_t sz64 = 1;
    for (std::uint32_t i = 0; i < d; ++i) sz64 *= (k + 1);
    if (k == 0 || sz64 > 4096) throw Error(Err::SizeOutOfRange, "cube too large");
    std::uint32_t sz = static_cast<std::uint32_t>(sz64);
    auto digits = [k, d](std::uint32_t e) {
        std::vector<std::uint32_t> out(d);
        for (std::uint32_t i = 0; i < d; ++i) {
            out[i] = e % (k + 1);
            e /= (k + 1);
        }
        return out;
    };
    auto add = [k, d, &digits](std::uint32_t a, std::uint32_t b) {
        auto da = digits(a), db = digits(b);
        std::uint32_t out = 0, mul = 1;
        for (std::uint32_t i = 0; i < d; ++i) {
            std::uint32_t c = da[i] + db[i];
            if (c > k) c = k;
            out += c * mul;
            mul *= (k + 1);
        }
        return out;
    };
    std::vector<std::uint8_t> leq(std::size_t(sz) * sz, 0);
    for (std::uint32_t a = 0; a < sz; ++a)
        for (std::uint32_t b = 0; b < sz; ++b) {
            auto da = digits(a), db = digits(b);
            bool le = true;
            for (std::uint32_t i = 0; i < d; ++i)
                if (da[i] > db[i]) {
                    le = false;
                    break;
                }
            leq[std::size_t(a) * sz + b] = le ? 1 : 0;
        }
    return std::make_shared<FiniteCommMonoid>(
        "saturating_cube(" + std::to_string(k) + "," + std::to_string(d) + ")", sz, 0, table_from(sz, add),
        std::nullopt, PartialOrder(sz, std::move(leq)));
}

MonoidPtr make_product(const MonoidPtr& a, const MonoidPtr& b) {
    std::uint64_t sz64 = std::uint64_t(a->size()) * b->size();
    if (sz64 > 4096) throw Error(Err::SizeOutOfRange, "product too large");
    std::uint32_t sz = static_cast<std::uint32_t>(sz64);
    std::uint32_t bs = b->size();
    auto add = [&](std::uint32_t x, std::uint32_t y) {
        std::uint32_t xa = x / bs, xb = x % bs, ya = y / bs, yb = y % bs;
        return a->add(xa, ya) * bs + b->add(xb, yb);
    };
    std::optional<std::vector<std::uint32_t>> inv;
    if (a->is_group() && b->is_group()) {
        inv.emplace(sz);
        for (std::uint32_t x = 0; x < sz; ++x) (*inv)[x] = a->inverse(x / bs) * bs + b->inverse(x % bs);
    }
    std::optional<PartialOrder> ord;
    if (a->has_order() && b->has_order()) {
        std::vector<std::uint8_t> leq(std::size_t(sz) * sz, 0);
        for (std::uint32_t x = 0; x < sz; ++x)
            for (std::uint32_t y = 0; y < sz; ++y)
                leq[std::size_t(x) * sz + y] =
                    (a->order().le(x / bs, y / bs) && b->order().le(x % bs, y % bs)) ? 1 : 0;
        ord.emplace(sz, std::move(leq));
    }
    std::uint32_t zero = a->zero() * bs + b->zero();
    return std::make_shared<FiniteCommMonoid>("product(" + a->name() + "," + b->name() + ")", sz, zero,
                                              table_from(sz, add), std::move(inv), std::move(ord));
}

MonoidPtr make_explicit(std::string name,
                        std::uint32_t size,
                        std::uint32_t zero,
                        std::vector<std::uint16_t> op,
                        std::optional<std::vector<std::uint32_t>> inverse,
                        std::optional<PartialOrder> order) {
    return std::make_shared<FiniteCommMonoid>(std::move(name), size, zero, std::move(op), std::move(inverse),
                                              std::move(order));
}

} // namespace hulltop
