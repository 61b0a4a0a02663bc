#include "gqm/sequences.hpp"

#include <algorithm>
#include <stdexcept>

namespace gqm {

// ------------------------------------------------------------------ SeqSpec

SeqSpec SeqSpec::constant(Point c) {
    SeqSpec s;
    s.family_ = Family::constant;
    s.terms_ = {std::move(c)};
    return s;
}

SeqSpec SeqSpec::affine(Rational a, Rational b) {
    SeqSpec s;
    s.family_ = Family::affine;
    s.a_ = std::move(a);
    s.b_ = std::move(b);
    return s;
}

SeqSpec SeqSpec::drift_gap(Rational r) {
    if (!r.is_positive()) throw std::invalid_argument("drift-gap needs r > 0");
    SeqSpec s;
    s.family_ = Family::drift_gap;
    s.a_ = std::move(r);
    return s;
}

SeqSpec SeqSpec::alt_pow(Rational base, Rational odd_value) {
    SeqSpec s;
    s.family_ = Family::alt_pow;
    s.a_ = std::move(base);
    s.b_ = std::move(odd_value);
    return s;
}

SeqSpec SeqSpec::alt_pow_mirror(Rational base, Rational odd_value) {
    SeqSpec s;
    s.family_ = Family::alt_pow_mirror;
    s.a_ = std::move(base);
    s.b_ = std::move(odd_value);
    return s;
}

SeqSpec SeqSpec::table(std::vector<Point> terms) {
    if (terms.empty()) throw std::invalid_argument("table sequence needs at least one term");
    SeqSpec s;
    s.family_ = Family::table;
    s.terms_ = std::move(terms);
    return s;
}

SeqSpec SeqSpec::pair(SeqSpec first, SeqSpec second) {
    SeqSpec s;
    s.family_ = Family::pair;
    s.first_ = std::make_shared<const SeqSpec>(std::move(first));
    s.second_ = std::make_shared<const SeqSpec>(std::move(second));
    return s;
}

const SeqSpec& SeqSpec::first() const {
    if (family_ != Family::pair) throw std::logic_error("sequence is not a pairing");
    return *first_;
}

const SeqSpec& SeqSpec::second() const {
    if (family_ != Family::pair) throw std::logic_error("sequence is not a pairing");
    return *second_;
}

Point SeqSpec::term(std::uint64_t n) const {
    if (n == 0) throw std::invalid_argument("sequence indices start at 1");
    switch (family_) {
        case Family::constant:
            return terms_[0];
        case Family::affine:
            return Point::rat(a_ * Rational(static_cast<long long>(n)) + b_);
        case Family::drift_gap: {
            Rational nr(static_cast<long long>(n));
            return Point::rat(a_ * nr - a_ / nr);
        }
        case Family::alt_pow:
            if (n % 2 == 1) return Point::rat(b_);
            if (n > 4096) throw std::invalid_argument("alt-pow exponent too large");
            return Point::rat(Rational::pow(a_, static_cast<unsigned>(n)));
        case Family::alt_pow_mirror:
            if (n % 2 == 0) return Point::rat(b_);
            if (n > 4096) throw std::invalid_argument("alt-pow exponent too large");
            return Point::rat(Rational::pow(a_, static_cast<unsigned>(n)));
        case Family::table:
            return terms_[std::min<std::uint64_t>(n, terms_.size()) - 1];
        case Family::pair:
            return Point::pair(first_->term(n), second_->term(n));
    }
    throw std::logic_error("unknown sequence family");
}

std::optional<std::uint64_t> SeqSpec::constant_from() const {
    switch (family_) {
        case Family::constant:
            return 1;
        case Family::affine:
            return a_.is_zero() ? std::optional<std::uint64_t>(1) : std::nullopt;
        case Family::table:
            return terms_.size();
        case Family::pair: {
            auto f = first_->constant_from();
            auto s = second_->constant_from();
            if (f && s) return std::max(*f, *s);
            return std::nullopt;
        }
        default:
            return std::nullopt;
    }
}

std::string to_string(SeqProperty p) {
    switch (p) {
        case SeqProperty::cauchy: return "cauchy";
        case SeqProperty::g_cauchy: return "g-cauchy";
        case SeqProperty::pseudo_cauchy: return "pseudo-cauchy";
    }
    return "?";
}

// ---------------------------------------------------------------- certify

Certificate certify(const SeqSpec& seq, const GqmSpace& space, SeqProperty property,
                    const Rational& epsilon, std::uint64_t k, std::uint64_t horizon) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    if (horizon < k) throw std::invalid_argument("horizon must be at least k");
    if (!(epsilon > space.index()))
        throw std::invalid_argument("epsilon must exceed the index");
    const std::uint64_t count = horizon - k + 1;
    const std::uint64_t pair_cap = 4000, linear_cap = 1000000;
    if ((property == SeqProperty::cauchy || property == SeqProperty::pseudo_cauchy) &&
        count > pair_cap)
        throw std::invalid_argument("horizon too large for a pairwise scan");
    if (count > linear_cap) throw std::invalid_argument("horizon too large");

    std::vector<Point> terms;
    terms.reserve(count);
    for (std::uint64_t n = k; n <= horizon; ++n) terms.push_back(seq.term(n));
    auto dist = [&](std::uint64_t m, std::uint64_t n) {
        return space.distance(terms[m - k], terms[n - k]);
    };

    Certificate cert;
    cert.property = property;
    cert.epsilon = epsilon;
    cert.k = k;
    cert.horizon = horizon;

    auto tail_const = seq.constant_from();
    const bool const_tail = tail_const && *tail_const <= k;

    if (property == SeqProperty::cauchy) {
        cert.verified = true;
        for (std::uint64_t m = k; m <= horizon && cert.verified; ++m)
            for (std::uint64_t n = k; n <= horizon; ++n) {
                Rational d = dist(m, n);
                ++cert.pairs_checked;
                if (!cert.extremal_distance || d > *cert.extremal_distance) {
                    cert.extremal_distance = d;
                    cert.extremal_pair = {{m, n}};
                }
                if (!(d < epsilon)) {
                    cert.verified = false;
                    cert.exact = true;  // one bad pair refutes the universal claim
                    cert.pair_witness = {{m, n}};
                    cert.witness_distance = std::move(d);
                    break;
                }
            }
        if (cert.verified && const_tail) cert.exact = true;
        return cert;
    }

    if (property == SeqProperty::g_cauchy) {
        cert.verified = true;
        // Consecutive distances of the drift family in the piecewise space
        // follow a strictly decreasing closed form; when every scanned value
        // matches it, a verified scan extends past the horizon.
        const auto* pw = std::get_if<RulePiecewise>(&space.rule());
        bool drift_monotone = seq.family() == SeqSpec::Family::drift_gap && pw &&
                              space.index() <= seq.param_a() && horizon > k;
        for (std::uint64_t n = k; n + 1 <= horizon && cert.verified; ++n) {
            Point next = seq.term(n + 1);
            Rational d = space.distance(terms[n - k], next);
            ++cert.pairs_checked;
            if (drift_monotone) {
                Rational nn(static_cast<long long>(n));
                Rational expected =
                    seq.param_a() + seq.param_a() / (nn * (nn + Rational(1)));
                if (d != expected) drift_monotone = false;
            }
            if (!cert.extremal_distance || d > *cert.extremal_distance) {
                cert.extremal_distance = d;
                cert.extremal_pair = {{n, n + 1}};
            }
            if (!(d < epsilon)) {
                cert.verified = false;
                cert.exact = true;
                cert.pair_witness = {{n, n + 1}};
                cert.witness_distance = std::move(d);
            }
        }
        if (cert.verified && (const_tail || drift_monotone)) cert.exact = true;
        return cert;
    }

    // pseudo-cauchy: one distinct pair below epsilon suffices, so a find is
    // exact; a refutation only covers the horizon.
    cert.verified = false;
    for (std::uint64_t p = k; p <= horizon && !cert.verified; ++p)
        for (std::uint64_t q = k; q <= horizon; ++q) {
            if (p == q) continue;
            Rational d = dist(p, q);
            ++cert.pairs_checked;
            if (!cert.extremal_distance || d < *cert.extremal_distance) {
                cert.extremal_distance = d;
                cert.extremal_pair = {{p, q}};
            }
            if (d < epsilon) {
                cert.verified = true;
                cert.exact = true;
                cert.pair_witness = {{p, q}};
                cert.witness_distance = std::move(d);
                break;
            }
        }
    return cert;
}

// ------------------------------------------------------------ cluster scan

ClusterScan cluster_scan(const SeqSpec& seq, const GqmSpace& space, const Point& center,
                         const Rational& radius, std::uint64_t horizon) {
    const bool finite = space.carrier().is_finite();
    const auto* pw = std::get_if<RulePiecewise>(&space.rule());
    const bool piecewise_line = pw && space.carrier().kind() == Carrier::Kind::line;
    if (!finite && !piecewise_line)
        throw std::invalid_argument("unsupported space family for cluster scan");
    if (!space.carrier().contains(center))
        throw std::domain_error("center " + center.str() + " outside carrier");
    if (horizon == 0 || horizon > 1000000)
        throw std::invalid_argument("horizon must be between 1 and 1000000");

    ClusterScan scan;
    for (std::uint64_t n = 1; n <= horizon; ++n)
        if (space.distance(center, seq.term(n)) < radius) scan.indices.push_back(n);

    // Exact tail claims. A constant tail settles membership for good; for
    // monotone families on the piecewise line, every ball member y satisfies
    // c - radius < y < c + radius, so terms drifting past c + radius (or
    // below c - radius) never return.
    if (auto t = seq.constant_from()) {
        std::uint64_t start = std::max<std::uint64_t>(*t, 1);
        if (space.distance(center, seq.term(start)) < radius)
            scan.all_beyond = true;
        else
            scan.cutoff = start;
    } else if (piecewise_line && center.is_rat()) {
        const Rational& c = center.rat_value();
        if (seq.family() == SeqSpec::Family::drift_gap) {
            BigInt n_big = ((c + radius) / seq.param_a() + Rational(1)).ceil();
            if (n_big < 1) n_big = 1;
            scan.cutoff = static_cast<std::uint64_t>(n_big);
        } else if (seq.family() == SeqSpec::Family::affine && !seq.param_a().is_zero()) {
            Rational bound = seq.param_a().is_positive() ? (c + radius - seq.param_b())
                                                         : (c - radius - seq.param_b());
            BigInt n_big = (bound / seq.param_a()).ceil();
            if (n_big < 1) n_big = 1;
            scan.cutoff = static_cast<std::uint64_t>(n_big);
        }
    }
    scan.exact = scan.cutoff.has_value() || scan.all_beyond;
    if (scan.cutoff)
        for (auto idx : scan.indices)
            if (idx >= *scan.cutoff) throw std::logic_error("cluster cutoff violated by a scan hit");
    return scan;
}

// ------------------------------------------------- weak-G-incompleteness

bool WeakGDemo::all_verified() const {
    for (const auto& c : g_cauchy_certs)
        if (!c.verified || !c.exact) return false;
    for (const auto& c : centers)
        if (!c.bounded) return false;
    return !g_cauchy_certs.empty() && !centers.empty();
}

WeakGDemo weak_g_incompleteness_demo(const Rational& r, const std::vector<Rational>& centers,
                                     std::uint64_t horizon) {
    if (!r.is_positive()) throw std::invalid_argument("need r > 0");
    if (centers.empty()) throw std::invalid_argument("need at least one center");
    if (horizon < 2) horizon = 2;

    WeakGDemo demo;
    demo.r = r;
    demo.radius = Rational(3) * r / Rational(2);
    SeqSpec seq = SeqSpec::drift_gap(r);
    GqmSpace space = GqmSpace::piecewise(r);

    for (long long j = 1; j <= 10; ++j) {
        Rational eps = r + Rational(1, j);
        // Start index 10j, bumped to the smallest k with r/(k(k+1)) < 1/j
        // (i.e. k(k+1) > r*j) when the index is large.
        std::uint64_t k = static_cast<std::uint64_t>(10 * j);
        while (!(Rational(static_cast<long long>(k)) *
                     Rational(static_cast<long long>(k + 1)) >
                 r * Rational(j)))
            ++k;
        std::uint64_t local_horizon = std::max<std::uint64_t>(horizon, k + 10);
        demo.g_cauchy_certs.push_back(
            certify(seq, space, SeqProperty::g_cauchy, eps, k, local_horizon));
    }

    for (const auto& c : centers) {
        ClusterScan scan = cluster_scan(seq, space, Point::rat(c), demo.radius, horizon);
        WeakGDemoCenter entry;
        entry.center = c;
        entry.indices = scan.indices;
        entry.cutoff = scan.cutoff.value_or(0);
        entry.bounded = scan.cutoff.has_value();
        for (auto idx : entry.indices)
            if (entry.bounded && idx >= entry.cutoff) entry.bounded = false;
        demo.centers.push_back(std::move(entry));
    }
    return demo;
}

// --------------------------------------------------------- product lemmas

ProductLemmaResult product_lemma_check(const SeqSpec& seq_x, const SeqSpec& seq_y,
                                       const GqmSpace& space_x, const GqmSpace& space_y,
                                       SeqProperty property, const Rational& epsilon,
                                       std::uint64_t k, std::uint64_t horizon) {
    GqmSpace prod = GqmSpace::product(space_x, space_y);
    Certificate cx = certify(seq_x, space_x, property, epsilon, k, horizon);
    Certificate cy = certify(seq_y, space_y, property, epsilon, k, horizon);
    Certificate cp =
        certify(SeqSpec::pair(seq_x, seq_y), prod, property, epsilon, k, horizon);
    bool consistent;
    if (property == SeqProperty::pseudo_cauchy)
        consistent = !cp.verified || (cx.verified && cy.verified);
    else
        consistent = cp.verified == (cx.verified && cy.verified);
    return ProductLemmaResult{std::move(cx), std::move(cy), std::move(cp), consistent};
}

// ------------------------------------------------- completeness hierarchy

CompletenessReport finite_space_completeness(const GqmSpace& space,
                                             const std::vector<SeqSpec>& sample_seqs) {
    if (!space.carrier().is_finite())
        throw std::invalid_argument("completeness hierarchy is decided on finite carriers only");
    AxiomReport axioms = verify_axioms(space);
    if (!axioms.holds)
        throw std::invalid_argument("space fails axiom " + *axioms.failed_axiom +
                                    "; the completeness hierarchy is undefined");

    auto pts = space.carrier().enumerate();
    const size_t n = pts.size();

    CompletenessReport rep;
    rep.points = n;
    rep.index = space.index();
    if (n >= 2) {
        std::optional<Rational> m;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                Rational d = space.distance(pts[i], pts[j]);
                if (!m || d < *m) m = std::move(d);
            }
        rep.min_offdiagonal = m;
        rep.threshold_eps = (rep.index + *m) / Rational(2);
    } else {
        rep.threshold_eps = rep.index + Rational(1);
    }

    rep.threshold_separates = true;
    for (size_t i = 0; i < n && rep.threshold_separates; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j && space.distance(pts[i], pts[j]) < rep.threshold_eps) {
                rep.threshold_separates = false;
                break;
            }

    const bool all = rep.threshold_separates;
    rep.complete = all;
    rep.g_complete = all;
    rep.weak_g_complete = all;
    rep.lebesgue = all;
    rep.strongly_lebesgue = all;

    rep.reasoning.push_back("index " + rep.index.str() +
                            (rep.min_offdiagonal
                                 ? ", smallest off-diagonal distance " + rep.min_offdiagonal->str()
                                 : std::string(", single point")) +
                            ", threshold eps0 = " + rep.threshold_eps.str());
    rep.reasoning.push_back("any two points closer than eps0 coincide (checked over " +
                            std::to_string(n * n) + " ordered pairs)");
    rep.reasoning.push_back(
        "complete and g-complete: below eps0 a Cauchy (or G-Cauchy) tail is constant, and a "
        "constant tail converges to its value through every basic ball around it");
    rep.reasoning.push_back(
        "weak g-complete: a convergent sequence clusters at its limit");
    rep.reasoning.push_back("lebesgue: pairwise-distinct terms are impossible past " +
                            std::to_string(n) +
                            " indices, so the premise is vacuous on this carrier");
    rep.reasoning.push_back(
        "strongly lebesgue: over " + std::to_string(n) +
        " points some value recurs infinitely often and every ball around it catches that "
        "subsequence");

    for (const auto& seq : sample_seqs) {
        CompletenessSeqCheck chk;
        std::uint64_t k = seq.constant_from().value_or(1);
        std::uint64_t horizon = k + 24;
        chk.cauchy = certify(seq, space, SeqProperty::cauchy, rep.threshold_eps, k, horizon);
        chk.g_cauchy = certify(seq, space, SeqProperty::g_cauchy, rep.threshold_eps, k, horizon);
        chk.pseudo =
            certify(seq, space, SeqProperty::pseudo_cauchy, rep.threshold_eps, k, horizon);
        std::uint64_t from = horizon;
        Point last = seq.term(horizon);
        while (from > k && seq.term(from - 1) == last) --from;
        chk.constant_from = from;
        chk.implications_ok =
            !chk.cauchy.verified ||
            (chk.g_cauchy.verified && chk.pseudo.verified && from <= k);
        rep.sequence_checks.push_back(std::move(chk));
    }
    return rep;
}

}  // namespace gqm
