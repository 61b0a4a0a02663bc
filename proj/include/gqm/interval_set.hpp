#pragma once

#include "gqm/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gqm {

/// Finite union of open rational intervals plus isolated rational points.
/// This is the exact representation of real-line balls: every ball is cut
/// out by strict inequalities, so open pieces plus single points suffice.
///
/// Normal form: intervals are sorted and pairwise disjoint, no isolated
/// point lies inside an interval, and any point sitting exactly between two
/// touching intervals has been fused into one interval. Two equal sets have
/// identical normal forms, so operator== decides set equality.
class IntervalSet {
public:
    struct Interval {
        Rational lo;
        Rational hi;  // open interval (lo, hi), lo < hi
        friend bool operator==(const Interval&, const Interval&) = default;
    };

    enum class ExtentKind { empty, finite, infinite };
    struct Extent {
        ExtentKind kind = ExtentKind::empty;
        Rational value;  // meaningful only when kind == finite
        friend bool operator==(const Extent&, const Extent&) = default;
    };

    struct SubsetResult {
        bool holds = false;
        std::optional<Rational> witness;  // a member of a \ b when !holds
    };

    IntervalSet() = default;

    /// (lo, hi) when lo < hi, otherwise the empty set.
    static IntervalSet interval(const Rational& lo, const Rational& hi);
    static IntervalSet point(const Rational& x);
    static IntervalSet of(std::vector<Interval> intervals, std::vector<Rational> points);

    bool empty() const { return intervals_.empty() && points_.empty(); }
    bool contains(const Rational& x) const;

    const std::vector<Interval>& intervals() const { return intervals_; }
    const std::vector<Rational>& points() const { return points_; }

    Extent extent() const;

    friend IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
    friend IntervalSet unite(const IntervalSet& a, const IntervalSet& b);

    /// True iff every member of a is a member of b; on failure carries one
    /// exact witness element of a \ b.
    friend SubsetResult subset_of(const IntervalSet& a, const IntervalSet& b);

    /// Canonical text form, components ascending: "(21/10,31/10) u {5/1}".
    /// The empty set prints as "{}".
    std::string str() const;
    static IntervalSet parse(std::string_view text);

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    void normalize();

    std::vector<Interval> intervals_;  // sorted by lo
    std::vector<Rational> points_;     // sorted
};

}  // namespace gqm
