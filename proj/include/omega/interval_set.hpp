#pragma once

#include "omega/rat.hpp"

#include <iosfwd>
#include <vector>

namespace omega {

// Half-open piece [lo, hi) of the unit interval.
struct Interval {
    Rat lo;
    Rat hi;
};

inline bool operator==(const Interval& a, const Interval& b) {
    return a.lo == b.lo && a.hi == b.hi;
}

// A measurable subset of Omega = [0,1) in canonical form: pairwise
// disjoint half-open pieces, sorted, with no two pieces touching.
// Working mod null sets, the canonical form is the unique representative
// of its equivalence class, so operator== decides a.e.-equality.
class IntervalSet {
  public:
    IntervalSet() = default;  // empty set

    /// Canonical union of arbitrary raw pieces. Zero-length pieces are
    /// dropped; endpoints outside [0,1] or inverted pairs throw.
    static IntervalSet canonicalize(std::vector<Interval> raw);

    static IntervalSet full();
    static IntervalSet of(const Rat& lo, const Rat& hi);

    const std::vector<Interval>& pieces() const { return pieces_; }
    bool empty() const { return pieces_.empty(); }
    std::size_t piece_count() const { return pieces_.size(); }

    Rat measure() const;
    bool contains(const Rat& t) const;
    bool subset_of(const IntervalSet& other) const;

    friend bool operator==(const IntervalSet& a, const IntervalSet& b) {
        return a.pieces_ == b.pieces_;
    }
    friend bool operator!=(const IntervalSet& a, const IntervalSet& b) { return !(a == b); }

  private:
    std::vector<Interval> pieces_;
};

enum class SetOp { unite, intersect, minus, symm_diff };

IntervalSet combine(const IntervalSet& a, const IntervalSet& b, SetOp op);

inline IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
    return combine(a, b, SetOp::unite);
}
inline IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
    return combine(a, b, SetOp::intersect);
}
inline IntervalSet minus(const IntervalSet& a, const IntervalSet& b) {
    return combine(a, b, SetOp::minus);
}
inline IntervalSet symm_diff(const IntervalSet& a, const IntervalSet& b) {
    return combine(a, b, SetOp::symm_diff);
}

/// Complement within [0,1).
IntervalSet complement(const IntervalSet& a);

/// The metric of L(2): lambda(A delta B).
Rat set_distance(const IntervalSet& a, const IntervalSet& b);

std::ostream& operator<<(std::ostream& os, const IntervalSet& s);

}  // namespace omega
