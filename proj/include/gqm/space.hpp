#pragma once

#include "gqm/interval_set.hpp"
#include "gqm/point.hpp"
#include "gqm/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gqm {

/// Where the points live. `finite` holds an explicit list; `line` is all of
/// the rationals; `box` is a closed rational interval; `product` pairs two
/// carriers.
class Carrier {
public:
    enum class Kind { finite, line, box, product };

    static Carrier finite(std::vector<Point> points);
    static Carrier line();
    static Carrier box(Rational lo, Rational hi);
    static Carrier product(Carrier left, Carrier right);

    Kind kind() const { return kind_; }
    const std::vector<Point>& points() const;
    const Rational& lo() const;
    const Rational& hi() const;
    const Carrier& left() const;
    const Carrier& right() const;

    bool contains(const Point& p) const;
    /// True when the carrier has finitely many points (finite, or product of
    /// finite factors).
    bool is_finite() const;
    /// All points of a finite carrier, in canonical order. Product carriers
    /// enumerate row-major (left index varies slowest). Throws on infinite
    /// carriers.
    std::vector<Point> enumerate() const;

private:
    Carrier() = default;
    Kind kind_ = Kind::line;
    std::vector<Point> points_;
    Rational lo_, hi_;
    std::shared_ptr<const Carrier> left_, right_;
};

/// A quasi-metric rule (index 0): zero self-distance, triangle inequality,
/// possibly asymmetric. Used as the base of the shift construction.
class QuasiRule {
public:
    enum class Kind { table, abs_diff, discrete };

    static QuasiRule table(std::vector<std::vector<Rational>> matrix);
    static QuasiRule abs_diff();
    static QuasiRule discrete();

    Kind kind() const { return kind_; }
    const std::vector<std::vector<Rational>>& matrix() const { return matrix_; }

private:
    Kind kind_ = Kind::abs_diff;
    std::vector<std::vector<Rational>> matrix_;
};

class GqmSpace;

struct RuleTable {
    std::vector<std::vector<Rational>> matrix;  // row = from, col = to
};
struct RuleShiftedQuasi {
    QuasiRule base;
    Rational shift;
};
/// d(x,y) = (x-y)^2 + offset on rational points.
struct RuleSquareShift {
    Rational offset;
};
/// d(x,y) = r if x==y; 2r if 0<|x-y|<=r; |x-y| otherwise.
struct RulePiecewise {
    Rational r;
};
struct RuleProduct {
    std::shared_ptr<const GqmSpace> left;
    std::shared_ptr<const GqmSpace> right;
};

/// A candidate g-quasi metric space: a carrier plus a distance rule and the
/// claimed index. Construction does not enforce the axioms (verify_axioms
/// diagnoses them), but it does enforce shape: tables square and matching the
/// carrier, rational rules on rational carriers, product factors sharing one
/// index.
class GqmSpace {
public:
    using Rule = std::variant<RuleTable, RuleShiftedQuasi, RuleSquareShift,
                              RulePiecewise, RuleProduct>;

    static GqmSpace table(std::vector<Point> points,
                          std::vector<std::vector<Rational>> matrix);
    static GqmSpace shifted_quasi(QuasiRule base, Rational shift, Carrier carrier);
    static GqmSpace square_shift(Rational offset, Carrier carrier);
    static GqmSpace piecewise(Rational r);
    static GqmSpace piecewise_on(Rational r, Carrier carrier);
    static GqmSpace product(GqmSpace left, GqmSpace right);

    const Carrier& carrier() const { return carrier_; }
    const Rule& rule() const { return rule_; }
    /// The claimed index: the constant self-distance the axioms require.
    const Rational& index() const { return index_; }

    Rational distance(const Point& x, const Point& y) const;

private:
    GqmSpace(Carrier c, Rule r, Rational idx);
    Carrier carrier_;
    Rule rule_;
    Rational index_;
};

/// How to sample an infinite carrier: rational grid lo, lo+step, ..., <= hi.
struct GridSpec {
    Rational lo;
    Rational hi;
    Rational step;
    std::vector<Rational> values() const;
};

struct SampleSpec {
    bool exhaustive = true;
    std::optional<GridSpec> grid;
    static SampleSpec all() { return SampleSpec{}; }
    static SampleSpec on_grid(GridSpec g) { return SampleSpec{false, std::move(g)}; }
};

struct AxiomWitness {
    Point x, y;
    std::optional<Point> z;  // set for triangle failures
    Rational lhs, rhs;       // the inequality that failed, as evaluated
};

struct AxiomReport {
    bool holds = false;
    /// "index" (d >= r, equality iff x==y) or "triangle".
    std::optional<std::string> failed_axiom;
    std::optional<AxiomWitness> witness;
    Rational index;
    bool symmetric = true;
    std::optional<std::pair<Point, Point>> asymmetry_witness;
    bool exhaustive = false;  // true when every pair/triple was checked
    long long pairs_checked = 0;
    long long triples_checked = 0;
    /// Per-case triple counts for the piecewise rule; empty otherwise.
    std::map<std::string, long long> triangle_cases;
};

/// Checks the two axioms over the carrier (exhaustively when finite, on the
/// sample grid otherwise). For the piecewise rule the triangle check runs the
/// case split on |x-z|, |z-y| and validates each chain link exactly.
AxiomReport verify_axioms(const GqmSpace& s, const SampleSpec& sample = SampleSpec::all());

/// d(x,y) = base(x,y) + shift. Validates that the base is a quasi-metric on
/// the carrier (exhaustively when finite, else on the default grid) and that
/// shift >= 0; throws std::invalid_argument with a witness otherwise.
GqmSpace shift_quasi_metric(const QuasiRule& base, const Rational& shift, Carrier carrier);

/// B(center, radius) = { y : d(center, y) < radius }.
using BallResult = std::variant<std::vector<Point>, IntervalSet>;
BallResult ball(const GqmSpace& s, const Point& center, const Rational& radius);

/// Closed-form ball of the piecewise rule on the line:
///   radius <= r            -> empty
///   r < radius <= 2r       -> {x} u (x-radius, x-r) u (x+r, x+radius)
///   radius > 2r            -> (x-radius, x+radius)
IntervalSet piecewise_ball(const Rational& r, const Rational& center, const Rational& radius);

}  // namespace gqm
