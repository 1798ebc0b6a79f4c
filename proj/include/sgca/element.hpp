#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sgca {

// A point of a concrete semigroup. The payload meaning depends on the family:
//
//   nat          {n}                n >= 0
//   nat_d(d)     {c1,...,cd}        ci >= 0
//   int_d(d)     {c1,...,cd}
//   free_monoid  {l1,...,lm}        letters 0..k-1, any length (empty = identity)
//   bicyclic     {a,b}              canonical form q^a p^b, a,b >= 0
//   finite       {i}                index into the multiplication table
//
// Elements compare shortlex (length first, then lexicographic). For the
// fixed-length families this is plain lexicographic order; for free-monoid
// words it is the usual shortlex order. This single total order is the
// canonical element order used for Window encodings everywhere.
struct Element {
    std::vector<std::int64_t> v;

    Element() = default;
    explicit Element(std::vector<std::int64_t> payload) : v(std::move(payload)) {}
    Element(std::initializer_list<std::int64_t> payload) : v(payload) {}

    bool operator==(const Element& other) const = default;

    std::strong_ordering operator<=>(const Element& other) const {
        if (v.size() != other.v.size())
            return v.size() <=> other.v.size();
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != other.v[i])
                return v[i] <=> other.v[i];
        return std::strong_ordering::equal;
    }
};

} // namespace sgca
