#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sgca/geometry.hpp"
#include "sgca/semigroup.hpp"
#include "sgca/window.hpp"

namespace sgca {

// A K-tiling of a finite arena: tiles T with pairwise disjoint translates Kt
// (T-1), maximal in the arena so every Ks meets some Kt (T-2).
struct Tiling {
    Window kset;
    Window arena;
    Window tiles;
};

// Scans the arena in canonical order, claiming Kt whenever it is disjoint
// from everything claimed so far. The result is maximal in the arena.
inline Tiling greedy_tiling(const SemigroupDescriptor& desc, const Window& kset, const Window& arena) {
    if (kset.empty())
        throw invalid_input_error("greedy_tiling: K must be non-empty");
    Tiling tiling{kset, arena, Window{}};
    Window claimed;
    for (const Element& t : arena) {
        Window kt = translate_window(desc, kset, t);
        if (windows_disjoint(kt, claimed)) {
            tiling.tiles.insert(t);
            claimed = window_union(claimed, kt);
        }
    }
    return tiling;
}

inline Window translate_window(const SemigroupDescriptor& desc, const Window& kset, const Element& t) {
    std::vector<Element> out;
    out.reserve(kset.size());
    for (const Element& k : kset)
        out.push_back(desc.multiply(k, t));
    return Window(std::move(out));
}

struct TilingCheck {
    bool ok = true;
    // (T-1) violation: two tiles with intersecting translates.
    std::optional<std::pair<Element, Element>> overlap_witness;
    // (T-2) violation: an arena element no tile translate meets.
    std::optional<Element> uncovered_witness;
};

// Checks (T-1) for all tile pairs and (T-2) for every arena element s whose
// Ks lies inside the arena's K-adherence (the infinite-semigroup condition is
// not checkable; near the rim a genuine tiling may be met only from outside).
inline TilingCheck verify_tiling(const SemigroupDescriptor& desc, const Tiling& tiling) {
    TilingCheck check;

    std::map<Element, Element> owner; // element of some Kt -> t
    for (const Element& t : tiling.tiles) {
        for (const Element& k : tiling.kset) {
            Element cell = desc.multiply(k, t);
            auto [it, fresh] = owner.try_emplace(cell, t);
            if (!fresh && !(it->second == t)) {
                check.ok = false;
                check.overlap_witness = std::make_pair(it->second, t);
                return check;
            }
        }
    }

    Window closure = k_adherence(desc, tiling.arena, tiling.kset);
    for (const Element& s : tiling.arena) {
        Window ks = translate_window(desc, tiling.kset, s);
        if (!window_subset(ks, closure))
            continue;
        bool met = false;
        for (const Element& cell : ks)
            if (owner.count(cell)) {
                met = true;
                break;
            }
        if (!met) {
            check.ok = false;
            check.uncovered_witness = s;
            return check;
        }
    }
    return check;
}

struct DensityReport {
    std::uint64_t tiles_inside = 0; // |{t in T : Kt subset F}|
    Rational threshold;             // delta * |F| with delta = 1/(4|K|^2)
    bool pass = false;
};

// Tile density inside a window F against the 1/(4|K|^2) bound. The bound is
// only guaranteed for large enough Folner windows, so pass/fail is per
// window.
inline DensityReport tiling_density(const SemigroupDescriptor& desc, const Window& kset,
                                    const Window& tiles, const Window& f) {
    if (kset.empty() || f.empty())
        throw invalid_input_error("tiling_density: K and F must be non-empty");
    DensityReport report;
    for (const Element& t : tiles)
        if (window_subset(translate_window(desc, kset, t), f))
            ++report.tiles_inside;
    auto ksize = static_cast<std::int64_t>(kset.size());
    report.threshold = Rational(static_cast<std::int64_t>(f.size()), 4 * ksize * ksize);
    report.pass = Rational(static_cast<std::int64_t>(report.tiles_inside), 1) >= report.threshold;
    return report;
}

} // namespace sgca
