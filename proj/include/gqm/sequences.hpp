#pragma once

#include "gqm/space.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gqm {

/// Exactly evaluable sequences: closed-form rational families, finite tables
/// with an eventually-constant tail, and pairings for product spaces.
class SeqSpec {
public:
    enum class Family { constant, affine, drift_gap, alt_pow, alt_pow_mirror, table, pair };

    static SeqSpec constant(Point c);
    /// n -> a*n + b
    static SeqSpec affine(Rational a, Rational b);
    /// n -> r*n - r/n
    static SeqSpec drift_gap(Rational r);
    /// n -> odd_value if n odd, base^n if n even
    static SeqSpec alt_pow(Rational base, Rational odd_value);
    /// n -> base^n if n odd, odd_value if n even
    static SeqSpec alt_pow_mirror(Rational base, Rational odd_value);
    /// n -> terms[n-1] for n <= len, terms[len-1] beyond (constant tail)
    static SeqSpec table(std::vector<Point> terms);
    static SeqSpec pair(SeqSpec first, SeqSpec second);

    Family family() const { return family_; }
    const Rational& param_a() const { return a_; }
    const Rational& param_b() const { return b_; }
    const std::vector<Point>& terms() const { return terms_; }
    const SeqSpec& first() const;
    const SeqSpec& second() const;

    Point term(std::uint64_t n) const;  // n >= 1

    /// Index from which the sequence is provably constant, when that is
    /// structural (constant family, table tail).
    std::optional<std::uint64_t> constant_from() const;

private:
    SeqSpec() = default;
    Family family_ = Family::constant;
    Rational a_, b_;
    std::vector<Point> terms_;
    std::shared_ptr<const SeqSpec> first_, second_;
};

enum class SeqProperty { cauchy, g_cauchy, pseudo_cauchy };
std::string to_string(SeqProperty p);

/// Outcome of checking one sequence property at fixed (epsilon, k) over
/// indices up to the horizon. `exact` marks the cases where the bounded scan
/// settles the unbounded statement: a violating pair refutes a universal
/// property outright, a found pair verifies the existential pseudo-cauchy
/// property outright, and tails that are provably constant (or provably
/// monotone, for the drift family's consecutive distances) extend a verified
/// scan beyond the horizon.
struct Certificate {
    SeqProperty property = SeqProperty::cauchy;
    Rational epsilon;
    std::uint64_t k = 1;
    std::uint64_t horizon = 1;
    bool verified = false;
    bool exact = false;
    long long pairs_checked = 0;
    /// Violating pair (refuted cauchy/g-cauchy) or the found pair (verified
    /// pseudo-cauchy), with its distance.
    std::optional<std::pair<std::uint64_t, std::uint64_t>> pair_witness;
    std::optional<Rational> witness_distance;
    /// Largest distance seen (verified cauchy/g-cauchy) or smallest distance
    /// seen (refuted pseudo-cauchy), with the pair realizing it.
    std::optional<std::pair<std::uint64_t, std::uint64_t>> extremal_pair;
    std::optional<Rational> extremal_distance;
};

Certificate certify(const SeqSpec& seq, const GqmSpace& space, SeqProperty property,
                    const Rational& epsilon, std::uint64_t k, std::uint64_t horizon);

/// All indices n <= horizon whose term lies in B(center, radius), plus a
/// cutoff N (no term with n >= N is in the ball) when the family's monotone
/// growth makes one derivable. `all_beyond` marks the opposite exact claim:
/// every index past the table tail (or of a constant sequence) is in the
/// ball.
struct ClusterScan {
    std::vector<std::uint64_t> indices;
    std::optional<std::uint64_t> cutoff;
    bool all_beyond = false;
    bool exact = false;  // cutoff or all_beyond present
};
ClusterScan cluster_scan(const SeqSpec& seq, const GqmSpace& space, const Point& center,
                         const Rational& radius, std::uint64_t horizon);

/// The executable content of the weak-G-incompleteness argument for the
/// piecewise space: the drift sequence is G-Cauchy (epsilon sweep r + 1/j,
/// with exact monotone-tail certificates), yet around every candidate
/// cluster center the ball of radius 3r/2 contains finitely many terms,
/// certified by an analytic cutoff.
struct WeakGDemoCenter {
    Rational center;
    std::vector<std::uint64_t> indices;
    std::uint64_t cutoff = 0;
    bool bounded = false;  // all indices below the cutoff
};
struct WeakGDemo {
    Rational r;
    Rational radius;  // 3r/2
    std::vector<Certificate> g_cauchy_certs;
    std::vector<WeakGDemoCenter> centers;
    bool all_verified() const;
};
WeakGDemo weak_g_incompleteness_demo(const Rational& r, const std::vector<Rational>& centers,
                                     std::uint64_t horizon);

/// Certifies the property for both components and the paired sequence in the
/// product space at identical (epsilon, k, horizon), then checks the exact
/// pointwise relation: for cauchy and g-cauchy the paired verdict equals the
/// conjunction of the component verdicts; for pseudo-cauchy a verified pair
/// forces verified components (one direction only).
struct ProductLemmaResult {
    Certificate x, y, paired;
    bool consistent = false;
};
ProductLemmaResult product_lemma_check(const SeqSpec& seq_x, const SeqSpec& seq_y,
                                       const GqmSpace& space_x, const GqmSpace& space_y,
                                       SeqProperty property, const Rational& epsilon,
                                       std::uint64_t k, std::uint64_t horizon);

/// Completeness hierarchy on a finite carrier. All five properties hold on
/// every finite space; the report carries the exact parameters that make the
/// normal-form arguments run: a threshold eps0 strictly between the index
/// and the smallest off-diagonal distance (distances below eps0 force
/// equality, so Cauchy tails are constant), and the pigeonhole facts for the
/// cluster-point properties.
struct CompletenessSeqCheck {
    Certificate cauchy, g_cauchy, pseudo;
    bool implications_ok = false;  // cauchy => g-cauchy and pseudo at same parameters
    std::optional<std::uint64_t> constant_from;  // observed constancy index when cauchy verified
};
struct CompletenessReport {
    std::size_t points = 0;
    Rational index;
    std::optional<Rational> min_offdiagonal;  // absent for one-point spaces
    Rational threshold_eps;
    bool threshold_separates = false;  // d(x,y) < eps0 implies x == y, checked exhaustively
    bool complete = false;
    bool g_complete = false;
    bool weak_g_complete = false;
    bool lebesgue = false;
    bool strongly_lebesgue = false;
    std::vector<std::string> reasoning;
    std::vector<CompletenessSeqCheck> sequence_checks;
};
CompletenessReport finite_space_completeness(const GqmSpace& space,
                                             const std::vector<SeqSpec>& sample_seqs = {});

}  // namespace gqm
