#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "sgca/element.hpp"

namespace sgca {

// A finite, duplicate-free set of elements kept in canonical (shortlex) order,
// so equal sets always have equal encodings.
class Window {
public:
    Window() = default;

    explicit Window(std::vector<Element> elems) : elems_(std::move(elems)) {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    }

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }

    const Element& operator[](std::size_t i) const { return elems_[i]; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }
    const std::vector<Element>& elements() const { return elems_; }

    bool contains(const Element& e) const {
        return std::binary_search(elems_.begin(), elems_.end(), e);
    }

    // Position of e in canonical order, if present.
    std::optional<std::size_t> index_of(const Element& e) const {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), e);
        if (it == elems_.end() || !(*it == e))
            return std::nullopt;
        return static_cast<std::size_t>(it - elems_.begin());
    }

    void insert(const Element& e) {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), e);
        if (it == elems_.end() || !(*it == e))
            elems_.insert(it, e);
    }

    bool operator==(const Window& other) const = default;

private:
    std::vector<Element> elems_;
};

inline Window window_union(const Window& a, const Window& b) {
    std::vector<Element> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Window(std::move(out));
}

inline Window window_minus(const Window& a, const Window& b) {
    std::vector<Element> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Window(std::move(out));
}

inline Window window_intersection(const Window& a, const Window& b) {
    std::vector<Element> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return Window(std::move(out));
}

inline bool window_subset(const Window& a, const Window& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool windows_disjoint(const Window& a, const Window& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else
            return false;
    }
    return true;
}

} // namespace sgca
