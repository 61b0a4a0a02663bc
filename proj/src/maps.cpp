#include "gqm/maps.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace gqm {

// ----------------------------------------------------------------- PointMap

PointMap PointMap::table(std::shared_ptr<const GqmSpace> domain,
                         std::shared_ptr<const GqmSpace> codomain,
                         std::vector<std::pair<Point, Point>> pairs) {
    if (!domain->carrier().is_finite())
        throw std::invalid_argument("table map needs a finite domain carrier");
    auto pts = domain->carrier().enumerate();
    for (const auto& [from, to] : pairs) {
        if (!domain->carrier().contains(from))
            throw std::invalid_argument("map source " + from.str() + " outside domain carrier");
        if (!codomain->carrier().contains(to))
            throw std::invalid_argument("map image " + to.str() + " outside codomain carrier");
    }
    for (const auto& p : pts) {
        size_t hits = 0;
        for (const auto& [from, to] : pairs)
            if (from == p) ++hits;
        if (hits != 1)
            throw std::invalid_argument("map must assign exactly one image to " + p.str());
    }
    PointMap f;
    f.kind_ = Kind::table;
    f.domain_ = std::move(domain);
    f.codomain_ = std::move(codomain);
    f.pairs_ = std::move(pairs);
    return f;
}

PointMap PointMap::identity(std::shared_ptr<const GqmSpace> domain,
                            std::shared_ptr<const GqmSpace> codomain) {
    PointMap f;
    f.kind_ = Kind::identity;
    f.domain_ = std::move(domain);
    f.codomain_ = std::move(codomain);
    return f;
}

PointMap PointMap::constant(std::shared_ptr<const GqmSpace> domain,
                            std::shared_ptr<const GqmSpace> codomain, Point value) {
    if (!codomain->carrier().contains(value))
        throw std::invalid_argument("constant value " + value.str() + " outside codomain carrier");
    PointMap f;
    f.kind_ = Kind::constant;
    f.domain_ = std::move(domain);
    f.codomain_ = std::move(codomain);
    f.value_ = std::move(value);
    return f;
}

PointMap PointMap::distance_to(std::shared_ptr<const GqmSpace> domain,
                               std::shared_ptr<const GqmSpace> codomain, Point origin) {
    if (!domain->carrier().contains(origin))
        throw std::invalid_argument("origin " + origin.str() + " outside domain carrier");
    PointMap f;
    f.kind_ = Kind::distance_to;
    f.domain_ = std::move(domain);
    f.codomain_ = std::move(codomain);
    f.value_ = std::move(origin);
    return f;
}

Point PointMap::apply(const Point& x) const {
    switch (kind_) {
        case Kind::table:
            for (const auto& [from, to] : pairs_)
                if (from == x) return to;
            throw std::domain_error("point " + x.str() + " not in map table");
        case Kind::identity:
            return x;
        case Kind::constant:
            return value_;
        case Kind::distance_to:
            return Point::rat(domain_->distance(value_, x));
    }
    throw std::logic_error("unknown map kind");
}

bool PointMap::is_bijection() const {
    if (!domain_->carrier().is_finite() || !codomain_->carrier().is_finite()) return false;
    auto pts = domain_->carrier().enumerate();
    std::set<Point> images;
    for (const auto& p : pts) {
        Point img = apply(p);
        if (!codomain_->carrier().contains(img)) return false;
        if (!images.insert(img).second) return false;
    }
    return images.size() == codomain_->carrier().enumerate().size();
}

PointMap PointMap::inverse() const {
    if (!is_bijection()) throw std::invalid_argument("map is not a bijection");
    std::vector<std::pair<Point, Point>> swapped;
    for (const auto& p : domain_->carrier().enumerate()) swapped.emplace_back(apply(p), p);
    return table(codomain_, domain_, std::move(swapped));
}

// ------------------------------------------------------- uniform continuity

UniformityVerdict check_g_uniform_continuity(const PointMap& f) {
    if (!f.domain().carrier().is_finite())
        throw std::invalid_argument(
            "uniform continuity is decided on finite domain carriers only; "
            "use noncontinuity_witness_distance_map for the distance map on the line");

    auto pts = f.domain().carrier().enumerate();
    const size_t n = pts.size();
    std::vector<Point> images;
    images.reserve(n);
    for (const auto& p : pts) images.push_back(f.apply(p));

    const Rational& r1 = f.domain().index();
    const Rational& r2 = f.codomain().index();

    std::vector<std::vector<Rational>> dx(n, std::vector<Rational>(n));
    std::vector<std::vector<Rational>> dy(n, std::vector<Rational>(n));
    std::set<Rational> dx_values, dy_values;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            dx[i][j] = f.domain().distance(pts[i], pts[j]);
            dy[i][j] = f.codomain().distance(images[i], images[j]);
            dx_values.insert(dx[i][j]);
            dy_values.insert(dy[i][j]);
        }

    // Candidate eps: distinct image distances above r2. If the statement
    // fails for any eps > r2, it fails at the smallest image distance >= eps,
    // which is one of these.
    std::vector<Rational> eps_cands;
    for (const auto& v : dy_values)
        if (v > r2) eps_cands.push_back(v);

    // Candidate delta: one value inside every gap between consecutive domain
    // distance values, plus one above the maximum. The pair set {d_X < delta}
    // is constant between consecutive values, so these cover all delta > r1.
    std::vector<Rational> vals(dx_values.begin(), dx_values.end());
    std::vector<Rational> delta_cands;
    Rational half(1, 2);
    if (!vals.empty() && vals.front() > r1) delta_cands.push_back((r1 + vals.front()) * half);
    for (size_t i = 0; i + 1 < vals.size(); ++i)
        delta_cands.push_back((vals[i] + vals[i + 1]) * half);
    if (!vals.empty()) delta_cands.push_back(vals.back() + Rational(1));
    std::erase_if(delta_cands, [&](const Rational& d) { return !(d > r1); });

    UniformityVerdict verdict;
    verdict.eps_candidates = static_cast<long long>(eps_cands.size());
    verdict.delta_candidates = static_cast<long long>(delta_cands.size());
    verdict.uniformly_continuous = true;
    for (const auto& eps : eps_cands) {
        EpsilonCase ec;
        ec.eps = eps;
        for (const auto& delta : delta_cands) {
            DeltaTrace tr;
            tr.delta = delta;
            for (size_t i = 0; i < n && !tr.violating; ++i)
                for (size_t j = 0; j < n; ++j)
                    if (dx[i][j] < delta && !(dy[i][j] < eps)) {
                        tr.violating = {pts[i], pts[j]};
                        break;
                    }
            bool pass = !tr.violating;
            ec.trace.push_back(std::move(tr));
            if (pass) {
                ec.ok = true;
                ec.good_delta = delta;
                break;
            }
        }
        if (!ec.ok && !verdict.witness_eps) verdict.witness_eps = eps;
        verdict.uniformly_continuous = verdict.uniformly_continuous && ec.ok;
        verdict.cases.push_back(std::move(ec));
    }
    return verdict;
}

NoncontinuityWitness noncontinuity_witness_distance_map(const Rational& r, const Rational& delta) {
    if (!r.is_positive() || !(delta > r))
        throw std::invalid_argument("invalid parameters: need r > 0 and delta > r");

    NoncontinuityWitness w;
    w.r = r;
    w.delta = delta;
    w.eps = r / Rational(2);

    // Smallest m with m^2 > 2(delta-r)/r, then n = m+1 (so that
    // (delta-r)/(n-1)^2 < r/2); n is bumped past 2, where y would land
    // exactly on delta instead of below it.
    Rational q = Rational(2) * (delta - r) / r;
    BigInt m = boost::multiprecision::sqrt(q.floor());
    while (!(Rational(m) * Rational(m) > q)) ++m;
    BigInt nn = m + 1;
    if (nn < 3) nn = 3;
    w.n = static_cast<long long>(nn);

    Rational n_rat{nn};
    w.x = r + (delta - r) / n_rat;
    w.y = r + (delta - r) / (n_rat - Rational(1));

    GqmSpace X = GqmSpace::piecewise(r);
    GqmSpace P = GqmSpace::product(GqmSpace::piecewise(r), GqmSpace::piecewise(r));
    GqmSpace U = GqmSpace::shifted_quasi(QuasiRule::abs_diff(), Rational(0), Carrier::line());

    Point zero = Point::rat(Rational(0));
    Point px = Point::rat(w.x), py = Point::rat(w.y);
    w.d_x0 = X.distance(px, zero);
    w.d_y0 = X.distance(py, zero);
    w.pair_distance = P.distance(Point::pair(px, py), Point::pair(zero, zero));
    w.d_xy = X.distance(px, py);
    w.d_00 = X.distance(zero, zero);
    w.image_gap = U.distance(Point::rat(w.d_xy), Point::rat(w.d_00));

    w.verified = w.d_x0 == w.x && w.d_y0 == w.y &&
                 w.pair_distance == std::max(w.d_x0, w.d_y0) && w.pair_distance < delta &&
                 w.d_xy == Rational(2) * r && w.d_00 == r && !(w.image_gap < w.eps);
    return w;
}

// ------------------------------------------------- generalized continuity

ContinuityCheck check_generalized_continuity(const PointMap& f, const GenTopology& gt_domain,
                                             const GenTopology& gt_codomain) {
    const auto& gx = gt_domain.ground();
    const auto& gy = gt_codomain.ground();
    std::vector<size_t> image_pos(gx.size());
    for (size_t i = 0; i < gx.size(); ++i) {
        Point img = f.apply(gx[i]);
        auto it = std::find(gy.begin(), gy.end(), img);
        if (it == gy.end())
            throw std::invalid_argument("image " + img.str() + " outside codomain ground");
        image_pos[i] = static_cast<size_t>(it - gy.begin());
    }
    ContinuityCheck out;
    out.continuous = true;
    for (auto open : gt_codomain.opens()) {
        std::uint32_t pre = 0;
        for (size_t i = 0; i < gx.size(); ++i)
            if (open >> image_pos[i] & 1u) pre |= 1u << i;
        if (!gt_domain.has_open(pre)) {
            out.continuous = false;
            out.failing_open = open;
            out.failing_preimage = pre;
            break;
        }
    }
    return out;
}

// ------------------------------------------------------------- pullback

PullbackResult pullback_metric(const PointMap& f) {
    if (!f.is_bijection()) throw std::invalid_argument("pullback needs a bijective map");
    PointMap inv = f.inverse();
    auto ys = f.codomain().carrier().enumerate();
    const size_t n = ys.size();
    std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            matrix[i][j] = f.domain().distance(inv.apply(ys[i]), inv.apply(ys[j]));
    GqmSpace pulled = GqmSpace::table(ys, std::move(matrix));
    bool index_preserved = pulled.index() == f.domain().index();

    GenTopology gt_x = induced_gt(f.domain());
    auto xs = f.domain().carrier().enumerate();
    std::vector<size_t> image_pos(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
        Point img = f.apply(xs[i]);
        image_pos[i] = static_cast<size_t>(
            std::find(ys.begin(), ys.end(), img) - ys.begin());
    }
    std::vector<std::uint32_t> pushed;
    pushed.reserve(gt_x.opens().size());
    for (auto open : gt_x.opens()) {
        std::uint32_t m = 0;
        for (size_t i = 0; i < xs.size(); ++i)
            if (open >> i & 1u) m |= 1u << image_pos[i];
        pushed.push_back(m);
    }
    GenTopology gt_image(ys, pushed);
    GenTopology gt_pulled = induced_gt(pulled);
    bool gt_matches = gt_image == gt_pulled;
    return PullbackResult{std::move(pulled), index_preserved, std::move(gt_image),
                          std::move(gt_pulled), gt_matches};
}

}  // namespace gqm
