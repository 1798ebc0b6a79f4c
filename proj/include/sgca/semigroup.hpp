#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sgca/element.hpp"
#include "sgca/errors.hpp"
#include "sgca/window.hpp"

namespace sgca {

enum class Family { nat, nat_d, int_d, free_monoid, bicyclic, finite };

inline std::uint64_t default_budget() { return std::uint64_t{1} << 24; }

// q^e, or nullopt on overflow past 2^63.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    const std::uint64_t limit = std::uint64_t{1} << 63;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > (limit - 1) / base)
            return std::nullopt;
        r *= base;
    }
    return r;
}

// A concrete semigroup family together with its parameters. Supplies exact
// multiplication, exact left/right division, analytic cancellability
// verdicts, ball enumeration and (where one exists) a canonical Folner
// sequence:
//
//   nat          {0..n-1}
//   nat_d        {0..n-1}^d
//   int_d        [-n,n]^d
//   bicyclic     {q^a p^b : a,b < n}
//   finite       the whole table
//   free_monoid  k = 1 behaves like nat; k >= 2 has no Folner sequence
//                (distinct generators a,b give aS and bS disjoint, so the
//                monoid is not left-reversible, hence not left-amenable).
class SemigroupDescriptor {
public:
    static SemigroupDescriptor nat() { return SemigroupDescriptor(Family::nat, 1, 0); }

    static SemigroupDescriptor nat_d(int d) {
        if (d < 1)
            throw invalid_input_error("nat_d: dimension must be >= 1");
        return SemigroupDescriptor(Family::nat_d, d, 0);
    }

    static SemigroupDescriptor int_d(int d) {
        if (d < 1)
            throw invalid_input_error("int_d: dimension must be >= 1");
        return SemigroupDescriptor(Family::int_d, d, 0);
    }

    static SemigroupDescriptor free_monoid(int letters) {
        if (letters < 1 || letters > 26)
            throw invalid_input_error("free_monoid: letter count must be in 1..26");
        return SemigroupDescriptor(Family::free_monoid, 1, letters);
    }

    static SemigroupDescriptor bicyclic() { return SemigroupDescriptor(Family::bicyclic, 2, 0); }

    // The table is associativity-checked eagerly (all n^3 triples); the
    // identity, if any, is detected by full scan.
    static SemigroupDescriptor finite(std::vector<std::vector<int>> table) {
        SemigroupDescriptor desc(Family::finite, 1, 0);
        const std::size_t n = table.size();
        if (n == 0)
            throw invalid_input_error("finite: empty multiplication table");
        for (const auto& row : table) {
            if (row.size() != n)
                throw invalid_input_error("finite: table is not square");
            for (int x : row)
                if (x < 0 || static_cast<std::size_t>(x) >= n)
                    throw invalid_input_error("finite: table entry out of range");
        }
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z) {
                    int xy_z = table[table[x][y]][z];
                    int x_yz = table[x][table[y][z]];
                    if (xy_z != x_yz)
                        throw invalid_input_error(
                            "finite: table is not associative at (" + std::to_string(x) + "," +
                            std::to_string(y) + "," + std::to_string(z) + ")");
                }
        desc.table_ = std::move(table);
        for (std::size_t e = 0; e < n; ++e) {
            bool ident = true;
            for (std::size_t s = 0; s < n && ident; ++s)
                ident = desc.table_[e][s] == static_cast<int>(s) &&
                        desc.table_[s][e] == static_cast<int>(s);
            if (ident) {
                desc.finite_identity_ = static_cast<int>(e);
                break;
            }
        }
        return desc;
    }

    // Line-oriented table format: first line n, then n lines of n
    // space-separated 0-based indices.
    static SemigroupDescriptor finite_from_stream(std::istream& in) {
        int n = 0;
        if (!(in >> n) || n <= 0)
            throw invalid_input_error("finite table: missing or invalid size line");
        std::vector<std::vector<int>> table(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!(in >> table[i][j]))
                    throw invalid_input_error("finite table: truncated at row " + std::to_string(i));
        return finite(std::move(table));
    }

    Family family() const { return family_; }
    int dim() const { return dim_; }
    int letters() const { return letters_; }
    int table_size() const { return static_cast<int>(table_.size()); }
    const std::vector<std::vector<int>>& table() const { return table_; }

    bool is_monoid() const {
        if (family_ == Family::finite)
            return finite_identity_.has_value();
        return true;
    }

    std::optional<Element> identity() const {
        switch (family_) {
        case Family::nat: return Element{0};
        case Family::nat_d:
        case Family::int_d: return Element(std::vector<std::int64_t>(dim_, 0));
        case Family::free_monoid: return Element{};
        case Family::bicyclic: return Element{0, 0};
        case Family::finite:
            if (finite_identity_)
                return Element{*finite_identity_};
            return std::nullopt;
        }
        return std::nullopt;
    }

    bool element_valid(const Element& e) const {
        switch (family_) {
        case Family::nat:
            return e.v.size() == 1 && e.v[0] >= 0;
        case Family::nat_d:
            return e.v.size() == static_cast<std::size_t>(dim_) &&
                   std::all_of(e.v.begin(), e.v.end(), [](std::int64_t c) { return c >= 0; });
        case Family::int_d:
            return e.v.size() == static_cast<std::size_t>(dim_);
        case Family::free_monoid:
            return std::all_of(e.v.begin(), e.v.end(),
                               [this](std::int64_t l) { return l >= 0 && l < letters_; });
        case Family::bicyclic:
            return e.v.size() == 2 && e.v[0] >= 0 && e.v[1] >= 0;
        case Family::finite:
            return e.v.size() == 1 && e.v[0] >= 0 && e.v[0] < table_size();
        }
        return false;
    }

    void require_valid(const Element& e, const char* who) const {
        if (!element_valid(e))
            throw invalid_input_error(std::string(who) + ": element " + format_element(e) +
                                      " is not valid for semigroup " + name());
    }

    Element multiply(const Element& s, const Element& t) const {
        require_valid(s, "multiply");
        require_valid(t, "multiply");
        switch (family_) {
        case Family::nat:
            return Element{s.v[0] + t.v[0]};
        case Family::nat_d:
        case Family::int_d: {
            Element r = s;
            for (int i = 0; i < dim_; ++i)
                r.v[i] += t.v[i];
            return r;
        }
        case Family::free_monoid: {
            Element r = s;
            r.v.insert(r.v.end(), t.v.begin(), t.v.end());
            return r;
        }
        case Family::bicyclic: {
            // (q^a p^b)(q^c p^d) = q^{a+c-m} p^{d+b-m}, m = min(b,c).
            std::int64_t a = s.v[0], b = s.v[1], c = t.v[0], d = t.v[1];
            std::int64_t m = std::min(b, c);
            return Element{a + c - m, d + b - m};
        }
        case Family::finite:
            return Element{table_[s.v[0]][t.v[0]]};
        }
        throw invalid_input_error("multiply: unknown family");
    }

    // Exact solution set {s : k*s = w}, in canonical order. Empty or a
    // singleton when k is left-cancellable; in the bicyclic family the set
    // can have up to b+2 elements for k = q^a p^b.
    std::vector<Element> left_divide(const Element& k, const Element& w) const {
        require_valid(k, "left_divide");
        require_valid(w, "left_divide");
        std::vector<Element> sols;
        switch (family_) {
        case Family::nat:
            if (w.v[0] >= k.v[0])
                sols.push_back(Element{w.v[0] - k.v[0]});
            break;
        case Family::nat_d: {
            Element r = w;
            bool ok = true;
            for (int i = 0; i < dim_; ++i) {
                r.v[i] -= k.v[i];
                ok = ok && r.v[i] >= 0;
            }
            if (ok)
                sols.push_back(std::move(r));
            break;
        }
        case Family::int_d: {
            Element r = w;
            for (int i = 0; i < dim_; ++i)
                r.v[i] -= k.v[i];
            sols.push_back(std::move(r));
            break;
        }
        case Family::free_monoid:
            if (k.v.size() <= w.v.size() && std::equal(k.v.begin(), k.v.end(), w.v.begin()))
                sols.push_back(Element(std::vector<std::int64_t>(w.v.begin() + k.v.size(), w.v.end())));
            break;
        case Family::bicyclic: {
            // k = q^a p^b, w = q^c p^d, s = q^x p^y.
            // x <= b forces k*s = (a, y+b-x); x > b forces k*s = (a+x-b, y).
            std::int64_t a = k.v[0], b = k.v[1], c = w.v[0], d = w.v[1];
            if (a == c)
                for (std::int64_t x = std::max<std::int64_t>(0, b - d); x <= b; ++x)
                    sols.push_back(Element{x, d - b + x});
            if (c > a)
                sols.push_back(Element{c - a + b, d});
            break;
        }
        case Family::finite: {
            const auto& row = table_[k.v[0]];
            for (int s = 0; s < table_size(); ++s)
                if (row[s] == w.v[0])
                    sols.push_back(Element{s});
            break;
        }
        }
        std::sort(sols.begin(), sols.end());
        return sols;
    }

    // Exact solution set {s : s*t = w}, in canonical order.
    std::vector<Element> right_divide(const Element& t, const Element& w) const {
        require_valid(t, "right_divide");
        require_valid(w, "right_divide");
        std::vector<Element> sols;
        switch (family_) {
        case Family::nat:
        case Family::nat_d:
        case Family::int_d:
            return left_divide(t, w); // commutative families
        case Family::free_monoid:
            if (t.v.size() <= w.v.size() && std::equal(t.v.rbegin(), t.v.rend(), w.v.rbegin()))
                sols.push_back(Element(std::vector<std::int64_t>(w.v.begin(), w.v.end() - t.v.size())));
            break;
        case Family::bicyclic: {
            // s = q^x p^y, t = q^a p^b: y <= a forces s*t = (x+a-y, b);
            // y > a forces s*t = (x, b+y-a).
            std::int64_t a = t.v[0], b = t.v[1], c = w.v[0], d = w.v[1];
            if (b == d)
                for (std::int64_t y = std::max<std::int64_t>(0, a - c); y <= a; ++y)
                    sols.push_back(Element{c - a + y, y});
            if (d > b)
                sols.push_back(Element{c, d - b + a});
            break;
        }
        case Family::finite:
            for (int s = 0; s < table_size(); ++s)
                if (table_[s][t.v[0]] == w.v[0])
                    sols.push_back(Element{s});
            break;
        }
        std::sort(sols.begin(), sols.end());
        return sols;
    }

    // Analytic verdicts; exact by full scan for finite tables. In the
    // bicyclic monoid q^a p^b is left-cancellable iff b = 0 and
    // right-cancellable iff a = 0 (p*(qp) = p*1 and (qp)*q = 1*q collapse).
    bool left_cancellable(const Element& s) const {
        require_valid(s, "left_cancellable");
        switch (family_) {
        case Family::nat:
        case Family::nat_d:
        case Family::int_d:
        case Family::free_monoid:
            return true;
        case Family::bicyclic:
            return s.v[1] == 0;
        case Family::finite: {
            std::vector<bool> seen(table_.size(), false);
            for (int x : table_[s.v[0]]) {
                if (seen[x])
                    return false;
                seen[x] = true;
            }
            return true;
        }
        }
        return false;
    }

    bool right_cancellable(const Element& s) const {
        require_valid(s, "right_cancellable");
        switch (family_) {
        case Family::nat:
        case Family::nat_d:
        case Family::int_d:
        case Family::free_monoid:
            return true;
        case Family::bicyclic:
            return s.v[0] == 0;
        case Family::finite: {
            std::vector<bool> seen(table_.size(), false);
            for (const auto& row : table_) {
                int x = row[s.v[0]];
                if (seen[x])
                    return false;
                seen[x] = true;
            }
            return true;
        }
        }
        return false;
    }

    bool is_cancellative() const {
        switch (family_) {
        case Family::nat:
        case Family::nat_d:
        case Family::int_d:
        case Family::free_monoid:
            return true;
        case Family::bicyclic:
            return false;
        case Family::finite:
            for (int s = 0; s < table_size(); ++s) {
                Element e{s};
                if (!left_cancellable(e) || !right_cancellable(e))
                    return false;
            }
            return true;
        }
        return false;
    }

    bool has_folner_sequence() const {
        if (family_ == Family::free_monoid)
            return letters_ == 1;
        return true;
    }

    // n-th member of the family's canonical Folner sequence.
    Window folner_window(int n) const {
        if (n < 1)
            throw invalid_input_error("folner_window: n must be >= 1");
        std::vector<Element> elems;
        switch (family_) {
        case Family::nat:
            for (std::int64_t i = 0; i < n; ++i)
                elems.push_back(Element{i});
            break;
        case Family::nat_d:
            box(elems, 0, n - 1);
            break;
        case Family::int_d:
            box(elems, -n, n);
            break;
        case Family::free_monoid:
            if (letters_ >= 2)
                throw no_folner_error(
                    "free_monoid on " + std::to_string(letters_) +
                    " letters has no Folner sequence (aS and bS are disjoint for distinct "
                    "generators, so it is not left-reversible)");
            for (std::int64_t i = 0; i < n; ++i)
                elems.push_back(Element(std::vector<std::int64_t>(i, 0)));
            break;
        case Family::bicyclic:
            for (std::int64_t a = 0; a < n; ++a)
                for (std::int64_t b = 0; b < n; ++b)
                    elems.push_back(Element{a, b});
            break;
        case Family::finite:
            for (int i = 0; i < table_size(); ++i)
                elems.push_back(Element{i});
            break;
        }
        return Window(std::move(elems));
    }

    // All products of at most `radius` generators, plus the identity if the
    // family is a monoid. Breadth-first closure under right multiplication.
    Window ball(const Window& generators, int radius, std::uint64_t budget = default_budget()) const {
        if (generators.empty())
            throw invalid_input_error("ball: generator set must be non-empty");
        if (radius < 0)
            throw invalid_input_error("ball: radius must be >= 0");
        for (const Element& g : generators)
            require_valid(g, "ball");
        Window result;
        std::vector<Element> frontier;
        if (is_monoid()) {
            result.insert(*identity());
            frontier.push_back(*identity());
        } else {
            frontier.assign(generators.begin(), generators.end());
            if (radius >= 1)
                for (const Element& g : generators)
                    result.insert(g);
        }
        int start = is_monoid() ? 1 : 2;
        for (int r = start; r <= radius; ++r) {
            std::vector<Element> next;
            for (const Element& x : frontier)
                for (const Element& g : generators) {
                    Element prod = multiply(x, g);
                    if (!result.contains(prod)) {
                        result.insert(prod);
                        next.push_back(prod);
                        if (result.size() > budget)
                            throw budget_exceeded_error("ball: enumeration budget exceeded",
                                                        result.size(), budget);
                    }
                }
            frontier = std::move(next);
        }
        return result;
    }

    // Canonical generating set, used for default schedules and Folner traces.
    Window default_generators() const {
        std::vector<Element> gens;
        switch (family_) {
        case Family::nat:
            gens.push_back(Element{1});
            break;
        case Family::nat_d:
            for (int i = 0; i < dim_; ++i) {
                std::vector<std::int64_t> u(dim_, 0);
                u[i] = 1;
                gens.push_back(Element(std::move(u)));
            }
            break;
        case Family::int_d:
            for (int i = 0; i < dim_; ++i)
                for (std::int64_t sign : {std::int64_t{1}, std::int64_t{-1}}) {
                    std::vector<std::int64_t> u(dim_, 0);
                    u[i] = sign;
                    gens.push_back(Element(std::move(u)));
                }
            break;
        case Family::free_monoid:
            for (int l = 0; l < letters_; ++l)
                gens.push_back(Element{l});
            break;
        case Family::bicyclic:
            gens.push_back(Element{0, 1}); // p
            gens.push_back(Element{1, 0}); // q
            break;
        case Family::finite:
            for (int i = 0; i < table_size(); ++i)
                gens.push_back(Element{i});
            break;
        }
        return Window(std::move(gens));
    }

    std::string name() const {
        switch (family_) {
        case Family::nat: return "nat";
        case Family::nat_d: return "nat_d:" + std::to_string(dim_);
        case Family::int_d: return "int_d:" + std::to_string(dim_);
        case Family::free_monoid: return "free_monoid:" + std::to_string(letters_);
        case Family::bicyclic: return "bicyclic";
        case Family::finite: return "finite:" + std::to_string(table_size());
        }
        return "?";
    }

    // Canonical literal, also accepted back by parse_element:
    //   nat 3, finite 3, tuples (1,0), bicyclic (a,b) for q^a p^b,
    //   free-monoid words as letter strings with `e` for the empty word.
    std::string format_element(const Element& e) const {
        std::ostringstream out;
        switch (family_) {
        case Family::nat:
        case Family::finite:
            out << (e.v.empty() ? 0 : e.v[0]);
            break;
        case Family::nat_d:
        case Family::int_d:
        case Family::bicyclic: {
            out << '(';
            for (std::size_t i = 0; i < e.v.size(); ++i) {
                if (i)
                    out << ',';
                out << e.v[i];
            }
            out << ')';
            break;
        }
        case Family::free_monoid:
            if (e.v.empty())
                out << 'e';
            else
                for (std::int64_t l : e.v)
                    out << static_cast<char>('a' + l);
            break;
        }
        return out.str();
    }

    Element parse_element(const std::string& text) const {
        switch (family_) {
        case Family::nat:
        case Family::finite: {
            Element e{parse_int(text)};
            require_valid(e, "parse_element");
            return e;
        }
        case Family::nat_d:
        case Family::int_d:
        case Family::bicyclic: {
            int want = family_ == Family::bicyclic ? 2 : dim_;
            Element e;
            if (!text.empty() && text.front() == '(') {
                if (text.back() != ')')
                    throw invalid_input_error("parse_element: unterminated tuple '" + text + "'");
                std::string body = text.substr(1, text.size() - 2);
                std::string item;
                std::istringstream in(body);
                while (std::getline(in, item, ','))
                    e.v.push_back(parse_int(item));
            } else if (want == 1) {
                e.v.push_back(parse_int(text));
            } else {
                throw invalid_input_error("parse_element: expected tuple literal, got '" + text + "'");
            }
            if (e.v.size() != static_cast<std::size_t>(want))
                throw invalid_input_error("parse_element: expected " + std::to_string(want) +
                                          " coordinates in '" + text + "'");
            require_valid(e, "parse_element");
            return e;
        }
        case Family::free_monoid: {
            Element e;
            if (text != "e" && text != "1")
                for (char c : text) {
                    if (c < 'a' || c >= 'a' + letters_)
                        throw invalid_input_error("parse_element: letter '" + std::string(1, c) +
                                                  "' not among the " + std::to_string(letters_) +
                                                  " declared letters");
                    e.v.push_back(c - 'a');
                }
            return e;
        }
        }
        throw invalid_input_error("parse_element: unknown family");
    }

    bool operator==(const SemigroupDescriptor& other) const = default;

private:
    SemigroupDescriptor(Family f, int d, int k) : family_(f), dim_(d), letters_(k) {}

    void box(std::vector<Element>& out, std::int64_t lo, std::int64_t hi) const {
        std::vector<std::int64_t> cur(dim_, lo);
        while (true) {
            out.push_back(Element(cur));
            int i = dim_ - 1;
            while (i >= 0 && cur[i] == hi) {
                cur[i] = lo;
                --i;
            }
            if (i < 0)
                break;
            ++cur[i];
        }
    }

    static std::int64_t parse_int(const std::string& text) {
        std::size_t pos = 0;
        std::int64_t val = 0;
        try {
            val = std::stoll(text, &pos);
        } catch (const std::exception&) {
            throw invalid_input_error("parse_element: invalid integer '" + text + "'");
        }
        if (pos != text.size())
            throw invalid_input_error("parse_element: trailing characters in '" + text + "'");
        return val;
    }

    Family family_;
    int dim_;
    int letters_;
    std::vector<std::vector<int>> table_;
    std::optional<int> finite_identity_;
};

// Outcome of a cancellability audit for one element. A failure verdict always
// carries a witness pair (x, y), x != y, with s*x = s*y (left) or x*s = y*s
// (right).
struct CancellabilityVerdict {
    bool left = true;
    bool right = true;
    std::optional<std::pair<Element, Element>> left_witness;
    std::optional<std::pair<Element, Element>> right_witness;
};

// Verdicts are analytic for the built-in infinite families and exact by full
// scan for finite tables; the radius only controls the ball searched for
// explicit witnesses. The witness ball grows past `radius` if needed (a
// failure verdict guarantees one exists).
inline CancellabilityVerdict cancellability_audit(const SemigroupDescriptor& desc, const Element& s,
                                                  int radius) {
    desc.require_valid(s, "cancellability_audit");
    if (desc.family() != Family::finite && radius < 1)
        throw invalid_input_error("cancellability_audit: radius must be >= 1 for infinite families");

    CancellabilityVerdict verdict;
    verdict.left = desc.left_cancellable(s);
    verdict.right = desc.right_cancellable(s);
    if (verdict.left && verdict.right)
        return verdict;

    auto scan = [&](bool left_side) -> std::optional<std::pair<Element, Element>> {
        Window probe = desc.family() == Family::finite ? desc.folner_window(1)
                                                       : desc.ball(desc.default_generators(), radius);
        for (int attempt = 0; attempt < 16; ++attempt) {
            const auto& elems = probe.elements();
            for (std::size_t i = 0; i < elems.size(); ++i)
                for (std::size_t j = i + 1; j < elems.size(); ++j) {
                    Element a = left_side ? desc.multiply(s, elems[i]) : desc.multiply(elems[i], s);
                    Element b = left_side ? desc.multiply(s, elems[j]) : desc.multiply(elems[j], s);
                    if (a == b)
                        return std::make_pair(elems[i], elems[j]);
                }
            if (desc.family() == Family::finite)
                break;
            probe = desc.ball(desc.default_generators(), radius + attempt + 1);
        }
        return std::nullopt;
    };

    if (!verdict.left)
        verdict.left_witness = scan(true);
    if (!verdict.right)
        verdict.right_witness = scan(false);
    return verdict;
}

// K-translate {k*s : s in F} as a set.
inline Window translate_window(const SemigroupDescriptor& desc, const Element& k, const Window& f) {
    std::vector<Element> out;
    out.reserve(f.size());
    for (const Element& s : f)
        out.push_back(desc.multiply(k, s));
    return Window(std::move(out));
}

} // namespace sgca
