#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgca/semigroup.hpp"
#include "sgca/window.hpp"

namespace sgca {

using Rational = boost::rational<std::int64_t>;

inline std::string format_rational(const Rational& r) {
    if (r.denominator() == 1)
        return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(std::stoll(text), 1);
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw invalid_input_error("invalid rational literal '" + text + "'");
    }
}

enum class FormulaCheck {
    agrees,                  // Prop-2.1-style formula reproduced the definitional boundary
    skipped_non_cancellable, // some k in K is not left-cancellable; formula not applicable
    mismatch                 // should not happen; kept so a bug cannot masquerade as success
};

// K-interior, K-adherence, the two K-boundaries and the relative amenability
// constants of a finite region. Constants are exact rationals.
struct RegionReport {
    Window interior;
    Window adherence;
    Window boundary;      // Omega \ interior
    Window boundary_star; // adherence \ interior
    Rational alpha = Rational(0);
    Rational alpha_star = Rational(0);
    FormulaCheck formula_check = FormulaCheck::skipped_non_cancellable;
};

// int_K(Omega) = {s in Omega : Ks subset Omega}.
inline Window k_interior(const SemigroupDescriptor& desc, const Window& omega, const Window& kset) {
    std::vector<Element> out;
    for (const Element& s : omega) {
        bool inside = true;
        for (const Element& k : kset)
            if (!omega.contains(desc.multiply(k, s))) {
                inside = false;
                break;
            }
        if (inside)
            out.push_back(s);
    }
    return Window(std::move(out));
}

// adh_K(Omega) = {s : Ks meets Omega} = union over k,w of the exact solution
// sets {s : k*s = w}.
inline Window k_adherence(const SemigroupDescriptor& desc, const Window& omega, const Window& kset) {
    std::vector<Element> out;
    for (const Element& k : kset)
        for (const Element& w : omega)
            for (Element& s : desc.left_divide(k, w))
                out.push_back(std::move(s));
    return Window(std::move(out));
}

// Boundary via the left-cancellable formula: union over k of
// L_k^{-1}(kOmega \ Omega). Only meaningful when every k is left-cancellable.
inline Window boundary_via_formula(const SemigroupDescriptor& desc, const Window& omega,
                                   const Window& kset) {
    std::vector<Element> out;
    for (const Element& k : kset) {
        Window komega = translate_window(desc, k, omega);
        for (const Element& w : window_minus(komega, omega))
            for (Element& s : desc.left_divide(k, w))
                out.push_back(std::move(s));
    }
    return Window(std::move(out));
}

inline RegionReport region_calculus(const SemigroupDescriptor& desc, const Window& omega,
                                    const Window& kset) {
    if (omega.empty() || kset.empty())
        throw invalid_input_error("region_calculus: Omega and K must be non-empty");
    for (const Element& e : omega)
        desc.require_valid(e, "region_calculus");
    for (const Element& e : kset)
        desc.require_valid(e, "region_calculus");

    RegionReport report;
    report.interior = k_interior(desc, omega, kset);
    report.adherence = k_adherence(desc, omega, kset);
    report.boundary = window_minus(omega, report.interior);
    report.boundary_star = window_minus(report.adherence, report.interior);
    report.alpha = Rational(static_cast<std::int64_t>(report.boundary.size()),
                            static_cast<std::int64_t>(omega.size()));
    report.alpha_star = Rational(static_cast<std::int64_t>(report.boundary_star.size()),
                                 static_cast<std::int64_t>(omega.size()));

    bool all_left_cancellable = true;
    for (const Element& k : kset)
        all_left_cancellable = all_left_cancellable && desc.left_cancellable(k);
    if (all_left_cancellable)
        report.formula_check = boundary_via_formula(desc, omega, kset) == report.boundary
                                   ? FormulaCheck::agrees
                                   : FormulaCheck::mismatch;
    else
        report.formula_check = FormulaCheck::skipped_non_cancellable;
    return report;
}

struct FolnerEntry {
    int n = 0;
    std::uint64_t window_size = 0;
    Rational max_ratio;  // max over k of |kF \ F| / |F|
    Rational alpha;      // boundary constants of F_n w.r.t. K
    Rational alpha_star;
};

struct FolnerTrace {
    std::vector<FolnerEntry> entries;
    Rational epsilon;
    std::optional<int> first_n_within; // first n with max_ratio <= epsilon
};

// Per-n translation ratios along the family's canonical Folner sequence,
// together with the amenability constants. Numerical check of the
// Folner/boundary limit statements at prefix scale.
inline FolnerTrace verify_folner_prefix(const SemigroupDescriptor& desc, const Window& kset,
                                        int n_max, const Rational& epsilon) {
    if (kset.empty())
        throw invalid_input_error("verify_folner_prefix: K must be non-empty");
    if (n_max < 1)
        throw invalid_input_error("verify_folner_prefix: n_max must be >= 1");

    FolnerTrace trace;
    trace.epsilon = epsilon;
    for (int n = 1; n <= n_max; ++n) {
        Window f = desc.folner_window(n);
        Rational worst(0);
        for (const Element& k : kset) {
            Window kf = translate_window(desc, k, f);
            Rational ratio(static_cast<std::int64_t>(window_minus(kf, f).size()),
                           static_cast<std::int64_t>(f.size()));
            worst = std::max(worst, ratio);
        }
        RegionReport regions = region_calculus(desc, f, kset);
        trace.entries.push_back({n, f.size(), worst, regions.alpha, regions.alpha_star});
        if (!trace.first_n_within && worst <= epsilon)
            trace.first_n_within = n;
    }
    return trace;
}

} // namespace sgca
