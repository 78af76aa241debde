#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hulltop/subset.hpp"

namespace hulltop {

// Reflexive, transitive, antisymmetric relation on {0..n-1},
// stored densely.
class PartialOrder {
public:
    PartialOrder(std::uint32_t n, std::vector<std::uint8_t> leq);

    // Builds the reflexive-transitive closure of the given pairs and
    // rejects cycles (antisymmetry).
    static PartialOrder from_pairs(std::uint32_t n,
                                   const std::vector<std::pair<std::uint32_t, std::uint32_t>>& le_pairs);

    std::uint32_t size() const { return n_; }
    bool le(std::uint32_t a, std::uint32_t b) const { return leq_[std::size_t(a) * n_ + b] != 0; }

    // All b with b <= a / a <= b, as masks.
    const Subset& down(std::uint32_t a) const { return down_[a]; }
    const Subset& up(std::uint32_t a) const { return up_[a]; }

private:
    std::uint32_t n_;
    std::vector<std::uint8_t> leq_;
    std::vector<Subset> down_;
    std::vector<Subset> up_;
};

// Finite commutative monoid on {0..n-1}: commutative associative operation
// table with a unit, optionally an inverse table (group case) and a partial
// order. All laws are checked exhaustively at construction.
class FiniteCommMonoid {
public:
    FiniteCommMonoid(std::string name,
                     std::uint32_t size,
                     std::uint32_t zero,
                     std::vector<std::uint16_t> op,
                     std::optional<std::vector<std::uint32_t>> inverse = std::nullopt,
                     std::optional<PartialOrder> order = std::nullopt);

    std::uint32_t size() const { return size_; }
    std::uint32_t zero() const { return zero_; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        return op_[std::size_t(a) * size_ + b];
    }
    bool is_group() const { return inverse_.has_value(); }
    std::uint32_t inverse(std::uint32_t a) const;
    bool has_order() const { return order_.has_value(); }
    const PartialOrder& order() const;
    // True when the operation is monotone in each argument w.r.t. the order.
    bool op_monotone() const { return op_monotone_; }

    const std::string& name() const { return name_; }

    // Elementwise sum {a+b : a in A, b in B}; empty if either side is empty.
    Subset set_sum(const Subset& a, const Subset& b) const;
    // Preimage of A under g -> e+g.
    Subset translate_preimage(std::uint32_t e, const Subset& a) const;
    Subset negate(const Subset& a) const;

private:
    std::string name_;
    std::uint32_t size_;
    std::uint32_t zero_;
    std::vector<std::uint16_t> op_;
    std::optional<std::vector<std::uint32_t>> inverse_;
    std::optional<PartialOrder> order_;
    bool op_monotone_ = false;
};

using MonoidPtr = std::shared_ptr<const FiniteCommMonoid>;

// Instance factories.
MonoidPtr make_cyclic(std::uint32_t m);
// Subsets of an n-atom set under symmetric difference; every element is its
// own inverse. Order: inclusion.
MonoidPtr make_boolean_sym_diff(std::uint32_t n);
// Same carrier under union (idempotent monoid). Order: inclusion.
MonoidPtr make_boolean_join(std::uint32_t n);
// {0..k}^d with coordinatewise addition saturating at k; coordinatewise order.
MonoidPtr make_saturating_cube(std::uint32_t k, std::uint32_t d);
MonoidPtr make_product(const MonoidPtr& a, const MonoidPtr& b);
MonoidPtr make_explicit(std::string name,
                        std::uint32_t size,
                        std::uint32_t zero,
                        std::vector<std::uint16_t> op,
                        std::optional<std::vector<std::uint32_t>> inverse = std::nullopt,
                        std::optional<PartialOrder> order = std::nullopt);

} // namespace hulltop
