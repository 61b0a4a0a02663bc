#include "gqm/space.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gqm {

// ---------------------------------------------------------------- Carrier

Carrier Carrier::finite(std::vector<Point> points) {
    if (points.empty()) throw std::invalid_argument("finite carrier needs at least one point");
    std::set<Point> seen;
    for (const auto& p : points) {
        if (!seen.insert(p).second)
            throw std::invalid_argument("finite carrier has duplicate point " + p.str());
    }
    Carrier c;
    c.kind_ = Kind::finite;
    c.points_ = std::move(points);
    return c;
}

Carrier Carrier::line() {
    Carrier c;
    c.kind_ = Kind::line;
    return c;
}

Carrier Carrier::box(Rational lo, Rational hi) {
    if (hi < lo) throw std::invalid_argument("box carrier needs lo <= hi");
    Carrier c;
    c.kind_ = Kind::box;
    c.lo_ = std::move(lo);
    c.hi_ = std::move(hi);
    return c;
}

Carrier Carrier::product(Carrier left, Carrier right) {
    Carrier c;
    c.kind_ = Kind::product;
    c.left_ = std::make_shared<const Carrier>(std::move(left));
    c.right_ = std::make_shared<const Carrier>(std::move(right));
    return c;
}

const std::vector<Point>& Carrier::points() const {
    if (kind_ != Kind::finite) throw std::logic_error("carrier is not finite");
    return points_;
}

const Rational& Carrier::lo() const {
    if (kind_ != Kind::box) throw std::logic_error("carrier is not a box");
    return lo_;
}

const Rational& Carrier::hi() const {
    if (kind_ != Kind::box) throw std::logic_error("carrier is not a box");
    return hi_;
}

const Carrier& Carrier::left() const {
    if (kind_ != Kind::product) throw std::logic_error("carrier is not a product");
    return *left_;
}

const Carrier& Carrier::right() const {
    if (kind_ != Kind::product) throw std::logic_error("carrier is not a product");
    return *right_;
}

bool Carrier::contains(const Point& p) const {
    switch (kind_) {
        case Kind::finite:
            return std::find(points_.begin(), points_.end(), p) != points_.end();
        case Kind::line:
            return p.is_rat();
        case Kind::box:
            return p.is_rat() && lo_ <= p.rat_value() && p.rat_value() <= hi_;
        case Kind::product:
            return p.is_pair() && left_->contains(p.first()) && right_->contains(p.second());
    }
    return false;
}

bool Carrier::is_finite() const {
    switch (kind_) {
        case Kind::finite: return true;
        case Kind::product: return left_->is_finite() && right_->is_finite();
        default: return false;
    }
}

std::vector<Point> Carrier::enumerate() const {
    if (kind_ == Kind::finite) return points_;
    if (kind_ == Kind::product) {
        auto ls = left_->enumerate();
        auto rs = right_->enumerate();
        std::vector<Point> out;
        out.reserve(ls.size() * rs.size());
        for (const auto& l : ls)
            for (const auto& r : rs) out.push_back(Point::pair(l, r));
        return out;
    }
    throw std::logic_error("cannot enumerate an infinite carrier");
}

// --------------------------------------------------------------- QuasiRule

QuasiRule QuasiRule::table(std::vector<std::vector<Rational>> matrix) {
    const size_t n = matrix.size();
    if (n == 0) throw std::invalid_argument("quasi-metric table is empty");
    for (const auto& row : matrix)
        if (row.size() != n) throw std::invalid_argument("quasi-metric table is not square");
    QuasiRule q;
    q.kind_ = Kind::table;
    q.matrix_ = std::move(matrix);
    return q;
}

QuasiRule QuasiRule::abs_diff() {
    QuasiRule q;
    q.kind_ = Kind::abs_diff;
    return q;
}

QuasiRule QuasiRule::discrete() {
    QuasiRule q;
    q.kind_ = Kind::discrete;
    return q;
}

// ---------------------------------------------------------------- GqmSpace

namespace {

bool carrier_all_rational(const Carrier& c) {
    switch (c.kind()) {
        case Carrier::Kind::finite:
            return std::all_of(c.points().begin(), c.points().end(),
                               [](const Point& p) { return p.is_rat(); });
        case Carrier::Kind::line:
        case Carrier::Kind::box:
            return true;
        case Carrier::Kind::product:
            return false;
    }
    return false;
}

size_t point_pos(const std::vector<Point>& pts, const Point& p) {
    auto it = std::find(pts.begin(), pts.end(), p);
    if (it == pts.end()) throw std::domain_error("point " + p.str() + " outside carrier");
    return static_cast<size_t>(it - pts.begin());
}

Rational quasi_eval(const QuasiRule& base, const Carrier& carrier, const Point& x, const Point& y) {
    switch (base.kind()) {
        case QuasiRule::Kind::table: {
            const auto& pts = carrier.points();
            return base.matrix()[point_pos(pts, x)][point_pos(pts, y)];
        }
        case QuasiRule::Kind::abs_diff:
            return (x.rat_value() - y.rat_value()).abs();
        case QuasiRule::Kind::discrete:
            return x == y ? Rational(0) : Rational(1);
    }
    throw std::logic_error("unknown quasi rule");
}

}  // namespace

GqmSpace::GqmSpace(Carrier c, Rule r, Rational idx)
    : carrier_(std::move(c)), rule_(std::move(r)), index_(std::move(idx)) {}

GqmSpace GqmSpace::table(std::vector<Point> points, std::vector<std::vector<Rational>> matrix) {
    const size_t n = points.size();
    if (matrix.size() != n) throw std::invalid_argument("table size does not match carrier");
    for (const auto& row : matrix)
        if (row.size() != n) throw std::invalid_argument("table is not square");
    Rational idx = matrix[0][0];
    for (size_t i = 1; i < n; ++i) idx = std::min(idx, matrix[i][i]);
    Carrier c = Carrier::finite(std::move(points));
    return GqmSpace(std::move(c), RuleTable{std::move(matrix)}, std::move(idx));
}

GqmSpace GqmSpace::shifted_quasi(QuasiRule base, Rational shift, Carrier carrier) {
    if (shift.is_negative()) throw std::invalid_argument("shift must be nonnegative");
    if (base.kind() == QuasiRule::Kind::table) {
        if (carrier.kind() != Carrier::Kind::finite ||
            carrier.points().size() != base.matrix().size())
            throw std::invalid_argument("quasi-metric table does not match carrier");
    }
    if (base.kind() == QuasiRule::Kind::abs_diff && !carrier_all_rational(carrier))
        throw std::invalid_argument("abs-diff rule needs a rational carrier");
    Rational idx = shift;
    return GqmSpace(std::move(carrier), RuleShiftedQuasi{std::move(base), std::move(shift)},
                    std::move(idx));
}

GqmSpace GqmSpace::square_shift(Rational offset, Carrier carrier) {
    if (offset.is_negative()) throw std::invalid_argument("offset must be nonnegative");
    if (!carrier_all_rational(carrier))
        throw std::invalid_argument("square-shift rule needs a rational carrier");
    Rational idx = offset;
    return GqmSpace(std::move(carrier), RuleSquareShift{std::move(offset)}, std::move(idx));
}

GqmSpace GqmSpace::piecewise(Rational r) { return piecewise_on(std::move(r), Carrier::line()); }

GqmSpace GqmSpace::piecewise_on(Rational r, Carrier carrier) {
    if (!r.is_positive()) throw std::invalid_argument("piecewise rule needs r > 0");
    if (!carrier_all_rational(carrier))
        throw std::invalid_argument("piecewise rule needs a rational carrier");
    Rational idx = r;
    return GqmSpace(std::move(carrier), RulePiecewise{std::move(r)}, std::move(idx));
}

GqmSpace GqmSpace::product(GqmSpace left, GqmSpace right) {
    if (left.index() != right.index())
        throw std::invalid_argument("index mismatch: left " + left.index().str() + ", right " +
                                    right.index().str());
    Rational idx = left.index();
    Carrier c = Carrier::product(left.carrier(), right.carrier());
    RuleProduct rule{std::make_shared<const GqmSpace>(std::move(left)),
                     std::make_shared<const GqmSpace>(std::move(right))};
    return GqmSpace(std::move(c), std::move(rule), std::move(idx));
}

Rational GqmSpace::distance(const Point& x, const Point& y) const {
    if (!carrier_.contains(x)) throw std::domain_error("point " + x.str() + " outside carrier");
    if (!carrier_.contains(y)) throw std::domain_error("point " + y.str() + " outside carrier");
    if (const auto* t = std::get_if<RuleTable>(&rule_)) {
        const auto& pts = carrier_.points();
        return t->matrix[point_pos(pts, x)][point_pos(pts, y)];
    }
    if (const auto* s = std::get_if<RuleShiftedQuasi>(&rule_))
        return quasi_eval(s->base, carrier_, x, y) + s->shift;
    if (const auto* q = std::get_if<RuleSquareShift>(&rule_)) {
        Rational diff = x.rat_value() - y.rat_value();
        return diff * diff + q->offset;
    }
    if (const auto* p = std::get_if<RulePiecewise>(&rule_)) {
        if (x == y) return p->r;
        Rational gap = (x.rat_value() - y.rat_value()).abs();
        if (gap <= p->r) return Rational(2) * p->r;
        return gap;
    }
    const auto& pr = std::get<RuleProduct>(rule_);
    Rational dl = pr.left->distance(x.first(), y.first());
    Rational dr = pr.right->distance(x.second(), y.second());
    return std::max(dl, dr);
}

// ---------------------------------------------------------------- sampling

std::vector<Rational> GridSpec::values() const {
    if (!step.is_positive()) throw std::invalid_argument("grid step must be positive");
    if (hi < lo) throw std::invalid_argument("grid needs lo <= hi");
    if ((hi - lo) / step > Rational(100000)) throw std::invalid_argument("grid too large");
    std::vector<Rational> out;
    for (Rational v = lo; v <= hi; v += step) out.push_back(v);
    return out;
}

namespace {

GridSpec default_grid(const GqmSpace& s) {
    if (s.carrier().kind() == Carrier::Kind::box) {
        Rational lo = s.carrier().lo(), hi = s.carrier().hi();
        Rational step = hi == lo ? Rational(1) : (hi - lo) / Rational(12);
        return GridSpec{lo, hi, step};
    }
    Rational r = std::max(s.index(), Rational(1));
    return GridSpec{Rational(-5) * r, Rational(5) * r, r / Rational(10)};
}

std::vector<Point> sample_points(const GqmSpace& s, const SampleSpec& sample, bool& exhaustive,
                                 size_t cap) {
    if (s.carrier().is_finite()) {
        exhaustive = true;
        return s.carrier().enumerate();
    }
    if (s.carrier().kind() == Carrier::Kind::product)
        throw std::invalid_argument("sampling a product with an infinite factor is not supported");
    exhaustive = false;
    GridSpec grid = sample.grid ? *sample.grid : default_grid(s);
    if (s.carrier().kind() == Carrier::Kind::box) {
        grid.lo = std::max(grid.lo, s.carrier().lo());
        grid.hi = std::min(grid.hi, s.carrier().hi());
    }
    auto vals = grid.values();
    if (vals.size() > cap)
        throw std::invalid_argument("sample grid too fine; use a coarser step");
    std::vector<Point> pts;
    pts.reserve(vals.size());
    for (auto& v : vals) pts.push_back(Point::rat(std::move(v)));
    return pts;
}

}  // namespace

AxiomReport verify_axioms(const GqmSpace& s, const SampleSpec& sample) {
    AxiomReport rep;
    rep.index = s.index();

    bool exhaustive = false;
    auto pts = sample_points(s, sample, exhaustive, 201);
    rep.exhaustive = exhaustive;
    const size_t n = pts.size();

    std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) d[i][j] = s.distance(pts[i], pts[j]);

    for (size_t i = 0; i < n && rep.symmetric; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (d[i][j] != d[j][i]) {
                rep.symmetric = false;
                rep.asymmetry_witness = {pts[i], pts[j]};
                break;
            }

    // Axiom (a): d(x,y) >= r with equality exactly on the diagonal, r >= 0.
    if (rep.index.is_negative()) {
        rep.holds = false;
        rep.failed_axiom = "index";
        rep.witness = AxiomWitness{pts[0], pts[0], std::nullopt, rep.index, Rational(0)};
        return rep;
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            ++rep.pairs_checked;
            bool ok = (i == j) ? d[i][j] == rep.index : d[i][j] > rep.index;
            if (!ok) {
                rep.holds = false;
                rep.failed_axiom = "index";
                rep.witness = AxiomWitness{pts[i], pts[j], std::nullopt, d[i][j], rep.index};
                return rep;
            }
        }

    // Axiom (b): d(x,y) <= d(x,z) + d(z,y). Witness = most violating triple.
    const auto* pw = std::get_if<RulePiecewise>(&s.rule());
    bool tri_fail = false;
    Rational best_violation;
    size_t bi = 0, bj = 0, bk = 0;
    auto record = [&](size_t i, size_t j, size_t k, const Rational& violation) {
        if (!tri_fail || violation > best_violation) {
            tri_fail = true;
            best_violation = violation;
            bi = i; bj = j; bk = k;
        }
    };
    if (pw) {
        // Scale the sampled values and r by their common denominator; the
        // case split then runs on integers with no per-triple gcd work. The
        // scaled distance matrix is cross-checked against the rule first.
        BigInt lcm_den = pw->r.denominator();
        std::vector<Rational> xs;
        xs.reserve(n);
        for (const auto& p : pts) {
            xs.push_back(p.rat_value());
            lcm_den = boost::multiprecision::lcm(lcm_den, xs.back().denominator());
        }
        auto scaled = [&lcm_den](const Rational& q) -> BigInt {
            return q.numerator() * (lcm_den / q.denominator());
        };
        const BigInt ir = scaled(pw->r);
        const BigInt two_r = ir * 2;
        std::vector<BigInt> a(n);
        for (size_t i = 0; i < n; ++i) a[i] = scaled(xs[i]);
        std::vector<std::vector<BigInt>> ag(n, std::vector<BigInt>(n));
        std::vector<std::vector<BigInt>> id(n, std::vector<BigInt>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                ag[i][j] = boost::multiprecision::abs(a[i] - a[j]);
                id[i][j] = i == j ? ir : (ag[i][j] <= ir ? two_r : ag[i][j]);
                if (Rational(id[i][j], lcm_den) != d[i][j])
                    throw std::logic_error("scaled piecewise distance disagrees with the rule");
            }
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                const BigInt& axy = ag[i][j];
                const bool xy_trivial = axy <= ir;
                for (size_t k = 0; k < n; ++k) {
                    ++rep.triples_checked;
                    BigInt sum = id[i][k] + id[k][j];
                    bool ok;
                    // Case split on |x-z| and |z-y|; each chain is checked
                    // link by link, not just the end-to-end inequality.
                    if (xy_trivial) {
                        rep.triangle_cases["trivial"]++;
                        ok = id[i][j] <= two_r && sum >= two_r;
                    } else {
                        const BigInt& axz = ag[i][k];
                        const BigInt& azy = ag[k][j];
                        if (axz.is_zero() || azy.is_zero()) {
                            rep.triangle_cases["zero-leg"]++;
                            ok = sum == id[i][j] + ir && sum >= id[i][j];
                        } else if (axz > ir && azy > ir) {
                            rep.triangle_cases["both-long"]++;
                            ok = axy <= axz + azy && sum == axz + azy && id[i][j] <= sum;
                        } else if (axz <= ir && azy <= ir) {
                            rep.triangle_cases["both-short"]++;
                            ok = axy <= axz + azy && axz + azy <= two_r &&
                                 sum == two_r + two_r && id[i][j] <= sum;
                        } else if (axz > ir) {
                            rep.triangle_cases["long-short"]++;
                            ok = axy <= axz + azy && azy <= ir && sum == axz + two_r &&
                                 id[i][j] <= sum;
                        } else {
                            rep.triangle_cases["short-long"]++;
                            ok = axy <= axz + azy && axz <= ir && sum == azy + two_r &&
                                 id[i][j] <= sum;
                        }
                    }
                    if (!ok) record(i, j, k, Rational(id[i][j] - sum, lcm_den));
                }
            }
    } else {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (size_t k = 0; k < n; ++k) {
                    ++rep.triples_checked;
                    Rational sum = d[i][k] + d[k][j];
                    if (!(d[i][j] <= sum)) record(i, j, k, d[i][j] - sum);
                }
    }
    if (tri_fail) {
        rep.holds = false;
        rep.failed_axiom = "triangle";
        rep.witness = AxiomWitness{pts[bi], pts[bj], pts[bk], d[bi][bj], d[bi][bk] + d[bk][bj]};
        return rep;
    }
    rep.holds = true;
    return rep;
}

GqmSpace shift_quasi_metric(const QuasiRule& base, const Rational& shift, Carrier carrier) {
    if (shift.is_negative()) throw std::invalid_argument("shift must be nonnegative");
    GqmSpace candidate = GqmSpace::shifted_quasi(base, Rational(0), carrier);
    AxiomReport rep = verify_axioms(candidate);
    if (!rep.holds) {
        std::string what = "base is not a quasi-metric: axiom " + *rep.failed_axiom +
                           " fails at (" + rep.witness->x.str() + "," + rep.witness->y.str();
        if (rep.witness->z) what += "," + rep.witness->z->str();
        what += ")";
        throw std::invalid_argument(what);
    }
    return GqmSpace::shifted_quasi(base, shift, std::move(carrier));
}

IntervalSet piecewise_ball(const Rational& r, const Rational& center, const Rational& radius) {
    if (!r.is_positive()) throw std::invalid_argument("piecewise rule needs r > 0");
    if (radius <= r) return IntervalSet{};
    Rational two_r = Rational(2) * r;
    if (radius <= two_r)
        return IntervalSet::of(
            {{center - radius, center - r}, {center + r, center + radius}}, {center});
    return IntervalSet::interval(center - radius, center + radius);
}

BallResult ball(const GqmSpace& s, const Point& center, const Rational& radius) {
    if (!s.carrier().contains(center))
        throw std::domain_error("center " + center.str() + " outside carrier");
    if (s.carrier().is_finite()) {
        std::vector<Point> out;
        for (const auto& p : s.carrier().enumerate())
            if (s.distance(center, p) < radius) out.push_back(p);
        return out;
    }
    if (s.carrier().kind() == Carrier::Kind::product)
        throw std::invalid_argument("balls in a product with an infinite factor are not supported");

    // Rational line or box: shapes with exact rational boundaries only.
    IntervalSet shape;
    const Rational& c = center.rat_value();
    if (const auto* pw = std::get_if<RulePiecewise>(&s.rule())) {
        shape = piecewise_ball(pw->r, c, radius);
    } else if (const auto* sq = std::get_if<RuleShiftedQuasi>(&s.rule());
               sq && sq->base.kind() == QuasiRule::Kind::abs_diff) {
        Rational reach = radius - sq->shift;
        shape = reach.is_positive() ? IntervalSet::interval(c - reach, c + reach) : IntervalSet{};
    } else {
        throw std::invalid_argument("ball shape is not an exact rational interval set for this rule");
    }
    if (s.carrier().kind() == Carrier::Kind::box) {
        const Rational& lo = s.carrier().lo();
        const Rational& hi = s.carrier().hi();
        IntervalSet clipped = intersect(shape, IntervalSet::interval(lo, hi));
        if (shape.contains(lo)) clipped = unite(clipped, IntervalSet::point(lo));
        if (shape.contains(hi)) clipped = unite(clipped, IntervalSet::point(hi));
        return clipped;
    }
    return shape;
}

}  // namespace gqm
