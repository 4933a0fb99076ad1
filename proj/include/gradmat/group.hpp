#pragma once

/// Finite abelian groups presented by invariant factors, with element
/// arithmetic and deterministic enumeration. Elements are residue tuples;
/// the identity is the all-zero tuple.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <vector>

#include "gradmat/common.hpp"

namespace gradmat {

struct GroupElement {
    std::vector<std::int64_t> coords;

    auto operator<=>(const GroupElement&) const = default;

    bool is_identity() const {
        return std::all_of(coords.begin(), coords.end(),
                           [](std::int64_t c) { return c == 0; });
    }

    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) os << ',';
            os << coords[i];
        }
        return os.str();
    }
};

class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() : factors_{1} {}

    explicit FiniteAbelianGroup(std::vector<std::int64_t> factors)
        : factors_(std::move(factors)) {
        if (factors_.empty()) factors_ = {1}; // trivial group
        for (auto f : factors_)
            if (f < 1) throw invalid_argument("group factor must be >= 1");
    }

    static FiniteAbelianGroup cyclic(std::int64_t n) {
        return FiniteAbelianGroup({n});
    }

    const std::vector<std::int64_t>& factors() const { return factors_; }

    std::size_t rank() const { return factors_.size(); }

    std::int64_t order() const {
        std::int64_t o = 1;
        for (auto f : factors_) o *= f;
        return o;
    }

    GroupElement identity() const {
        return GroupElement{std::vector<std::int64_t>(factors_.size(), 0)};
    }

    GroupElement reduce(GroupElement g) const {
        check_len(g);
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            g.coords[i] %= factors_[i];
            if (g.coords[i] < 0) g.coords[i] += factors_[i];
        }
        return g;
    }

    /// a*b, or a*b^{-1} when negate_b is set.
    GroupElement combine(const GroupElement& a, const GroupElement& b,
                         bool negate_b = false) const {
        check_len(a);
        check_len(b);
        GroupElement r = identity();
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            std::int64_t c = negate_b ? a.coords[i] - b.coords[i]
                                      : a.coords[i] + b.coords[i];
            c %= factors_[i];
            if (c < 0) c += factors_[i];
            r.coords[i] = c;
        }
        return r;
    }

    GroupElement inverse(const GroupElement& a) const {
        return combine(identity(), a, true);
    }

    bool contains(const GroupElement& g) const {
        if (g.coords.size() != factors_.size()) return false;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            if (g.coords[i] < 0 || g.coords[i] >= factors_[i]) return false;
        return true;
    }

    /// All |G| elements in lexicographic coordinate order, identity first.
    std::vector<GroupElement> elements() const {
        std::vector<GroupElement> out;
        out.reserve(static_cast<std::size_t>(order()));
        GroupElement g = identity();
        while (true) {
            out.push_back(g);
            std::size_t i = factors_.size();
            while (i > 0) {
                --i;
                if (++g.coords[i] < factors_[i]) break;
                g.coords[i] = 0;
                if (i == 0) return out;
            }
        }
    }

    std::int64_t index_of(const GroupElement& g) const {
        if (!contains(g)) throw invalid_argument("element not in group");
        std::int64_t idx = 0;
        for (std::size_t i = 0; i < factors_.size(); ++i)
            idx = idx * factors_[i] + g.coords[i];
        return idx;
    }

    GroupElement element_at(std::int64_t idx) const {
        GroupElement g = identity();
        for (std::size_t i = factors_.size(); i-- > 0;) {
            g.coords[i] = idx % factors_[i];
            idx /= factors_[i];
        }
        return g;
    }

    std::int64_t element_order(const GroupElement& g) const {
        std::int64_t o = 1;
        GroupElement x = reduce(g);
        while (!x.is_identity()) {
            x = combine(x, g);
            ++o;
        }
        return o;
    }

    bool operator==(const FiniteAbelianGroup& other) const {
        return factors_ == other.factors_;
    }

private:
    void check_len(const GroupElement& g) const {
        if (g.coords.size() != factors_.size())
            throw invalid_argument("coordinate count mismatch");
    }

    std::vector<std::int64_t> factors_;
};

} // namespace gradmat
