#include "gqm/topology.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace gqm {

// -------------------------------------------------------------- GenTopology

namespace {

bool subset_less(const std::vector<Point>& ground, std::uint32_t a, std::uint32_t b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    std::vector<Point> ma, mb;
    for (size_t i = 0; i < ground.size(); ++i) {
        if (a >> i & 1u) ma.push_back(ground[i]);
        if (b >> i & 1u) mb.push_back(ground[i]);
    }
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace

GenTopology::GenTopology(std::vector<Point> ground, std::vector<std::uint32_t> opens)
    : ground_(std::move(ground)), opens_(std::move(opens)) {
    if (ground_.empty() || ground_.size() > 16)
        throw std::invalid_argument("ground set must have 1 to 16 points");
    std::set<Point> seen(ground_.begin(), ground_.end());
    if (seen.size() != ground_.size())
        throw std::invalid_argument("ground set has duplicate points");
    const std::uint32_t full = full_mask();
    for (auto m : opens_)
        if (m > full) throw std::invalid_argument("subset mask outside ground set");
    std::sort(opens_.begin(), opens_.end(),
              [this](std::uint32_t a, std::uint32_t b) { return subset_less(ground_, a, b); });
    opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
}

std::uint32_t GenTopology::full_mask() const {
    return ground_.size() == 32 ? ~0u : (1u << ground_.size()) - 1u;
}

bool GenTopology::has_open(std::uint32_t mask) const {
    return std::find(opens_.begin(), opens_.end(), mask) != opens_.end();
}

std::uint32_t GenTopology::mask_of(const std::vector<Point>& subset) const {
    std::uint32_t m = 0;
    for (const auto& p : subset) {
        auto it = std::find(ground_.begin(), ground_.end(), p);
        if (it == ground_.end())
            throw std::invalid_argument("subset member " + p.str() + " outside ground set");
        m |= 1u << (it - ground_.begin());
    }
    return m;
}

std::vector<Point> GenTopology::members(std::uint32_t mask) const {
    std::vector<Point> out;
    for (size_t i = 0; i < ground_.size(); ++i)
        if (mask >> i & 1u) out.push_back(ground_[i]);
    std::sort(out.begin(), out.end());
    return out;
}

std::string GenTopology::subset_str(std::uint32_t mask) const {
    std::string s = "{";
    bool first = true;
    for (const auto& p : members(mask)) {
        if (!first) s += ", ";
        first = false;
        s += p.str();
    }
    return s + "}";
}

std::string GenTopology::str() const {
    std::string s;
    for (auto m : opens_) {
        s += subset_str(m);
        s += '\n';
    }
    return s;
}

GenTopology generate_gt(std::vector<Point> ground, const std::vector<std::uint32_t>& base) {
    std::set<std::uint32_t> opens(base.begin(), base.end());
    opens.insert(0u);
    // Union closure by fixpoint; the lattice is finite so this terminates.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::uint32_t> cur(opens.begin(), opens.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j)
                if (opens.insert(cur[i] | cur[j]).second) grew = true;
    }
    return GenTopology(std::move(ground), {opens.begin(), opens.end()});
}

GenTopology generate_gt_sets(std::vector<Point> ground,
                             const std::vector<std::vector<Point>>& base) {
    GenTopology empty_gt(ground, {});
    std::vector<std::uint32_t> masks;
    masks.reserve(base.size());
    for (const auto& s : base) masks.push_back(empty_gt.mask_of(s));
    return generate_gt(std::move(ground), masks);
}

GenTopology induced_gt(const GqmSpace& s) {
    if (!s.carrier().is_finite())
        throw std::invalid_argument("induced topology needs a finite carrier");
    auto pts = s.carrier().enumerate();
    const size_t n = pts.size();
    if (n > 16) throw std::invalid_argument("induced topology supports at most 16 points");

    // Every ball equals B(x, v) for a distance value v, or the whole carrier
    // (radius above the maximum); these radii realize them all.
    std::set<Rational> radii;
    Rational max_d = s.index();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rational d = s.distance(pts[i], pts[j]);
            max_d = std::max(max_d, d);
            radii.insert(std::move(d));
        }
    radii.insert(max_d + Rational(1));

    std::vector<std::uint32_t> base;
    for (size_t i = 0; i < n; ++i)
        for (const auto& c : radii) {
            std::uint32_t m = 0;
            for (size_t j = 0; j < n; ++j)
                if (s.distance(pts[i], pts[j]) < c) m |= 1u << j;
            base.push_back(m);
        }
    return generate_gt(std::move(pts), base);
}

TopologyCheck is_topology(const GenTopology& gt) {
    TopologyCheck out;
    out.contains_empty = gt.has_open(0u);
    out.ground_present = gt.strong();
    out.union_closed = true;
    out.intersection_closed = true;
    const auto& opens = gt.opens();
    for (size_t i = 0; i < opens.size(); ++i)
        for (size_t j = i; j < opens.size(); ++j) {
            if (out.union_closed && !gt.has_open(opens[i] | opens[j])) {
                out.union_closed = false;
                out.union_witness = {opens[i], opens[j]};
            }
            if (out.intersection_closed && !gt.has_open(opens[i] & opens[j])) {
                out.intersection_closed = false;
                out.intersection_witness = {opens[i], opens[j]};
            }
            if (!out.union_closed && !out.intersection_closed) return out;
        }
    return out;
}

SeparationReport check_separation(const GenTopology& gt) {
    TopologyCheck diag = is_topology(gt);
    if (!diag.generalized() || !gt.strong())
        throw std::domain_error("separation check needs a strong generalized topology");

    SeparationReport rep;
    const auto& g = gt.ground();
    const size_t n = g.size();
    const auto& opens = gt.opens();

    rep.t0 = true;
    for (size_t i = 0; i < n && rep.t0; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            bool separated = false;
            for (auto o : opens)
                if ((o >> i & 1u) != (o >> j & 1u)) { separated = true; break; }
            if (!separated) {
                rep.t0 = false;
                rep.t0_witness = {g[i], g[j]};
                break;
            }
        }

    rep.t1 = true;
    for (size_t i = 0; i < n && rep.t1; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            bool separated = false;
            for (auto o : opens)
                if ((o >> i & 1u) && !(o >> j & 1u)) { separated = true; break; }
            if (!separated) {
                rep.t1 = false;
                rep.t1_witness = {g[i], g[j]};
                break;
            }
        }

    rep.singletons_closed = true;
    const std::uint32_t full = gt.full_mask();
    for (size_t i = 0; i < n; ++i)
        if (!gt.has_open(full ^ (1u << i))) {
            rep.singletons_closed = false;
            rep.closed_witness = g[i];
            break;
        }
    return rep;
}

// ------------------------------------------------- intersection obstruction

bool NotTopologyWitness::holds() const {
    return intersection_matches && extent_matches && certificate_holds &&
           grid_nonempty >= 400 && grid_contained == 0;
}

NotTopologyWitness not_topology_witness_piecewise(const Rational& r) {
    if (!r.is_positive()) throw std::invalid_argument("piecewise rule needs r > 0");
    NotTopologyWitness w;
    w.r = r;
    w.center1 = r;
    w.center2 = Rational(21) * r / Rational(5);
    w.radius = Rational(21) * r / Rational(10);
    w.ball1 = piecewise_ball(r, w.center1, w.radius);
    w.ball2 = piecewise_ball(r, w.center2, w.radius);
    w.intersection = intersect(w.ball1, w.ball2);
    w.expected_intersection =
        IntervalSet::interval(w.radius, r + w.radius);  // (21r/10, r + 21r/10)
    w.intersection_matches = w.intersection == w.expected_intersection;

    auto ext = w.intersection.extent();
    w.extent_matches = ext.kind == IntervalSet::ExtentKind::finite && ext.value == r;
    w.intersection_extent = ext.kind == IntervalSet::ExtentKind::finite ? ext.value : Rational(0);

    // Radius case analysis at center 0. Each nonempty shape spans exactly
    // 2*radius, and radius > r throughout, so every nonempty ball has extent
    // above 2r; nothing of extent above r fits inside the intersection.
    const Rational target = ext.kind == IntervalSet::ExtentKind::finite ? ext.value : Rational(0);
    auto case_extent = [](const IntervalSet& shape) {
        auto e = shape.extent();
        return e.kind == IntervalSet::ExtentKind::finite ? e.value : Rational(0);
    };
    {
        BallCase c;
        c.name = "empty";
        c.radius = r;  // any radius <= r
        c.shape = piecewise_ball(r, Rational(0), c.radius);
        c.extent_lower = Rational(0);
        c.exceeds_target = c.shape.empty();  // contributes no candidate ball
        w.cases.push_back(std::move(c));
    }
    {
        BallCase c;
        c.name = "punctured";
        c.radius = Rational(3) * r / Rational(2);  // r < radius <= 2r
        c.shape = piecewise_ball(r, Rational(0), c.radius);
        c.extent_lower = Rational(2) * r;  // infimum of 2*radius as radius -> r
        c.exceeds_target = case_extent(c.shape) == Rational(2) * c.radius &&
                           c.extent_lower > target;
        w.cases.push_back(std::move(c));
    }
    {
        BallCase c;
        c.name = "interval";
        c.radius = w.radius;  // radius > 2r
        c.shape = piecewise_ball(r, Rational(0), c.radius);
        c.extent_lower = Rational(4) * r;
        c.exceeds_target = case_extent(c.shape) == Rational(2) * c.radius &&
                           c.extent_lower > target;
        w.cases.push_back(std::move(c));
    }
    w.certificate_holds = r.is_positive();
    for (const auto& c : w.cases) w.certificate_holds = w.certificate_holds && c.exceeds_target;

    // Independent falsification: no candidate ball on a grid of centers and
    // radii lands inside the intersection.
    Rational step = r / Rational(10);
    for (int k = 0; k <= 100; ++k) {
        Rational center = -Rational(5) * r + Rational(k) * step;
        for (int j = 1; j <= 40; ++j) {
            Rational radius = Rational(j) * step;
            ++w.grid_candidates;
            IntervalSet b = piecewise_ball(r, center, radius);
            if (b.empty()) continue;
            ++w.grid_nonempty;
            if (subset_of(b, w.intersection).holds) ++w.grid_contained;
        }
    }
    return w;
}

// ------------------------------------------------------------- entourages

bool EntourageReport::all_contained() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const EntourageCheck& c) { return c.contained; });
}

EntourageReport entourage_base_check(const GqmSpace& s, const Rational& eps,
                                     const std::vector<Rational>& deltas) {
    if (eps <= s.index()) throw std::invalid_argument("eps must exceed the index");
    for (const auto& d : deltas)
        if (d <= s.index()) throw std::invalid_argument("every delta must exceed the index");

    EntourageReport rep;
    rep.eps = eps;

    if (s.carrier().is_finite()) {
        auto pts = s.carrier().enumerate();
        const size_t n = pts.size();
        std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) d[i][j] = s.distance(pts[i], pts[j]);
        for (const auto& delta : deltas) {
            EntourageCheck c;
            c.delta = delta;
            c.contained = true;
            for (size_t i = 0; i < n && c.contained; ++i)
                for (size_t j = 0; j < n && c.contained; ++j) {
                    if (!(d[i][j] < delta)) continue;
                    for (size_t k = 0; k < n; ++k) {
                        if (!(d[j][k] < delta)) continue;
                        if (!(d[i][k] < eps)) {
                            c.contained = false;
                            c.witness = {pts[i], pts[j], pts[k]};
                            c.d_xy = d[i][j];
                            c.d_yz = d[j][k];
                            c.d_xz = d[i][k];
                            break;
                        }
                    }
                }
            rep.checks.push_back(std::move(c));
        }
        return rep;
    }

    const auto* pw = std::get_if<RulePiecewise>(&s.rule());
    if (!pw || s.carrier().kind() != Carrier::Kind::line)
        throw std::invalid_argument("entourage check needs a finite carrier or the piecewise line");
    if (eps != Rational(3) * pw->r / Rational(2))
        throw std::invalid_argument("symbolic entourage check is pinned to eps = 3r/2");
    rep.symbolic = true;
    for (const auto& delta : deltas) {
        Rational half = (delta - pw->r) / Rational(2);
        Point x = Point::rat(Rational(0));
        Point y = Point::rat(pw->r + half);
        Point z = Point::rat(pw->r + delta);
        EntourageCheck c;
        c.delta = delta;
        c.d_xy = s.distance(x, y);
        c.d_yz = s.distance(y, z);
        c.d_xz = s.distance(x, z);
        if (!(*c.d_xy < delta && *c.d_yz < delta && !(*c.d_xz < eps)))
            throw std::logic_error("entourage witness failed to re-evaluate");
        c.contained = false;
        c.witness = {x, y, z};
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

}  // namespace gqm
