#pragma once

#include "gqm/space.hpp"
#include "gqm/topology.hpp"

#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace gqm {

/// A map between the carriers of two spaces. Table maps pair up explicit
/// points; distance_to sends y to the rational point d_X(origin, y), the
/// usual flattening of a space onto the line.
class PointMap {
public:
    static PointMap table(std::shared_ptr<const GqmSpace> domain,
                          std::shared_ptr<const GqmSpace> codomain,
                          std::vector<std::pair<Point, Point>> pairs);
    static PointMap identity(std::shared_ptr<const GqmSpace> domain,
                             std::shared_ptr<const GqmSpace> codomain);
    static PointMap constant(std::shared_ptr<const GqmSpace> domain,
                             std::shared_ptr<const GqmSpace> codomain, Point value);
    static PointMap distance_to(std::shared_ptr<const GqmSpace> domain,
                                std::shared_ptr<const GqmSpace> codomain, Point origin);

    const GqmSpace& domain() const { return *domain_; }
    const GqmSpace& codomain() const { return *codomain_; }
    std::shared_ptr<const GqmSpace> domain_ptr() const { return domain_; }
    std::shared_ptr<const GqmSpace> codomain_ptr() const { return codomain_; }

    Point apply(const Point& x) const;

    /// Table maps only: every domain point mapped, images distinct and
    /// exactly covering the codomain carrier.
    bool is_bijection() const;
    PointMap inverse() const;

private:
    enum class Kind { table, identity, constant, distance_to };
    PointMap() = default;
    Kind kind_ = Kind::identity;
    std::shared_ptr<const GqmSpace> domain_, codomain_;
    std::vector<std::pair<Point, Point>> pairs_;
    Point value_;  // constant value or distance origin
};

/// Exact decision of g-uniform continuity for maps with a finite domain
/// carrier: finitely many (eps, delta) thresholds cover all cases, so the
/// quantifier alternation reduces to a finite scan.
struct DeltaTrace {
    Rational delta;
    /// Pair with d_X < delta but d_Y >= eps, when this delta fails.
    std::optional<std::pair<Point, Point>> violating;
};
struct EpsilonCase {
    Rational eps;
    bool ok = false;
    std::optional<Rational> good_delta;
    std::vector<DeltaTrace> trace;  // every candidate delta, when !ok
};
struct UniformityVerdict {
    bool uniformly_continuous = false;
    std::optional<Rational> witness_eps;  // smallest failing eps
    std::vector<EpsilonCase> cases;
    long long eps_candidates = 0;
    long long delta_candidates = 0;
};
UniformityVerdict check_g_uniform_continuity(const PointMap& f);

/// Witness that the distance flattening y -> d(0,y) of the piecewise space
/// (index r) onto the usual line is not g-uniformly continuous: for eps=r/2
/// and any delta > r, points x,y below delta in the product whose image
/// distances differ by r.
struct NoncontinuityWitness {
    Rational r, delta;
    Rational eps;  // r/2
    long long n = 0;
    Rational x, y;           // witness point (x,y) in the product, against (0,0)
    Rational d_x0, d_y0;     // d(x,0), d(y,0) in the piecewise space; both < delta
    Rational pair_distance;  // product distance ((x,y),(0,0)) = max of the two
    Rational d_xy, d_00;     // images under the distance map: 2r and r
    Rational image_gap;      // |d_xy - d_00| on the usual line; >= eps
    bool verified = false;
};
NoncontinuityWitness noncontinuity_witness_distance_map(const Rational& r, const Rational& delta);

/// f is (mu_X, mu_Y)-continuous: preimages of opens are open.
struct ContinuityCheck {
    bool continuous = false;
    std::optional<std::uint32_t> failing_open;      // codomain open
    std::optional<std::uint32_t> failing_preimage;  // its preimage, not open
};
ContinuityCheck check_generalized_continuity(const PointMap& f, const GenTopology& gt_domain,
                                             const GenTopology& gt_codomain);

/// Pull the domain distance through a bijection f: d'(y1,y2) =
/// d(f^{-1}(y1), f^{-1}(y2)). The result is a table space on the codomain
/// carrier with the same index, and its induced topology is exactly the
/// image of the domain's induced topology.
struct PullbackResult {
    GqmSpace pulled;
    bool index_preserved = false;
    GenTopology gt_image;   // induced_gt(domain) pushed through f
    GenTopology gt_pulled;  // induced_gt(pulled)
    bool gt_matches = false;
};
PullbackResult pullback_metric(const PointMap& f);

}  // namespace gqm
