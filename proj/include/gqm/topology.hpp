#pragma once

#include "gqm/interval_set.hpp"
#include "gqm/space.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gqm {

/// A generalized topology on a finite ground set (at most 16 points):
/// contains the empty set and is closed under arbitrary union. Subsets are
/// bitmasks over the ground order; opens_ is kept in canonical order
/// (cardinality, then lexicographic on sorted member labels).
class GenTopology {
public:
    GenTopology(std::vector<Point> ground, std::vector<std::uint32_t> opens);

    const std::vector<Point>& ground() const { return ground_; }
    const std::vector<std::uint32_t>& opens() const { return opens_; }

    std::uint32_t full_mask() const;
    bool has_open(std::uint32_t mask) const;
    /// Ground set is itself open.
    bool strong() const { return has_open(full_mask()); }

    std::uint32_t mask_of(const std::vector<Point>& subset) const;
    std::vector<Point> members(std::uint32_t mask) const;
    /// "{a, b}"; the empty set prints as "{}".
    std::string subset_str(std::uint32_t mask) const;

    /// One subset per line, canonical order.
    std::string str() const;

    friend bool operator==(const GenTopology&, const GenTopology&) = default;

private:
    std::vector<Point> ground_;
    std::vector<std::uint32_t> opens_;
};

/// Smallest generalized topology containing the base: the base plus all
/// unions, with the empty set adjoined.
GenTopology generate_gt(std::vector<Point> ground, const std::vector<std::uint32_t>& base);
GenTopology generate_gt_sets(std::vector<Point> ground,
                             const std::vector<std::vector<Point>>& base);

/// The generalized topology induced by the distance on a finite carrier:
/// generated by all balls B(x, c). Finitely many radii suffice: the distinct
/// distance values plus one value strictly between the index and the
/// smallest off-diagonal distance.
GenTopology induced_gt(const GqmSpace& s);

struct TopologyCheck {
    bool contains_empty = false;
    bool union_closed = false;
    bool intersection_closed = false;
    bool ground_present = false;
    /// Two members whose union / intersection is missing, when not closed.
    std::optional<std::pair<std::uint32_t, std::uint32_t>> union_witness;
    std::optional<std::pair<std::uint32_t, std::uint32_t>> intersection_witness;

    bool generalized() const { return contains_empty && union_closed; }
    bool topology() const {
        return generalized() && ground_present && intersection_closed;
    }
};
TopologyCheck is_topology(const GenTopology& gt);

struct SeparationReport {
    bool t0 = false;
    bool t1 = false;
    bool singletons_closed = false;
    std::optional<std::pair<Point, Point>> t0_witness;  // indistinguishable pair
    std::optional<std::pair<Point, Point>> t1_witness;  // x not separated from y
    std::optional<Point> closed_witness;                // singleton whose complement is not open
};
/// Requires a strong generalized topology (throws std::domain_error otherwise).
SeparationReport check_separation(const GenTopology& gt);

/// Executable form of the failure of intersection-closure for the piecewise
/// rule on the line: two balls whose intersection has extent r, while the
/// case analysis of ball shapes certifies that every nonempty ball has
/// extent 2*radius > 2r, so no ball fits inside. A grid of candidate balls
/// independently finds no contained ball.
struct BallCase {
    std::string name;          // "empty", "punctured", "interval"
    Rational radius;           // representative radius for the case
    IntervalSet shape;         // ball at center 0 with that radius
    Rational extent_lower;     // infimum of extents over the case (2r for nonempty)
    bool exceeds_target;       // extent_lower >= target extent they must beat
};
struct NotTopologyWitness {
    Rational r;
    Rational center1, center2, radius;  // r, 21r/5, 21r/10
    IntervalSet ball1, ball2, intersection;
    IntervalSet expected_intersection;  // (21r/10, r + 21r/10)
    bool intersection_matches = false;
    Rational intersection_extent;       // must equal r
    bool extent_matches = false;
    std::vector<BallCase> cases;        // exhaustive radius case analysis
    bool certificate_holds = false;     // every nonempty case beats extent r
    long long grid_candidates = 0;      // candidate balls tried
    long long grid_nonempty = 0;
    long long grid_contained = 0;       // must stay 0
    bool holds() const;
};
NotTopologyWitness not_topology_witness_piecewise(const Rational& r);

/// V_delta = {(x,y) : d(x,y) < delta}; checks V_delta o V_delta subset of
/// V_eps. Exact relation composition on finite carriers; for the piecewise
/// rule on the line with eps = 3r/2 the witness is symbolic:
/// x=0, y=r+(delta-r)/2, z=r+delta.
struct EntourageCheck {
    Rational delta;
    bool contained = false;
    std::optional<std::tuple<Point, Point, Point>> witness;  // x,y,z breaking containment
    std::optional<Rational> d_xy, d_yz, d_xz;                // distances at the witness
};
struct EntourageReport {
    Rational eps;
    bool symbolic = false;  // piecewise-on-the-line mode
    std::vector<EntourageCheck> checks;
    bool all_contained() const;
};
EntourageReport entourage_base_check(const GqmSpace& s, const Rational& eps,
                                     const std::vector<Rational>& deltas);

}  // namespace gqm
