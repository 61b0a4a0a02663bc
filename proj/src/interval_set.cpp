#include "gqm/interval_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gqm {

IntervalSet IntervalSet::interval(const Rational& lo, const Rational& hi) {
    IntervalSet s;
    if (lo < hi) s.intervals_.push_back({lo, hi});
    return s;
}

IntervalSet IntervalSet::point(const Rational& x) {
    IntervalSet s;
    s.points_.push_back(x);
    return s;
}

IntervalSet IntervalSet::of(std::vector<Interval> intervals, std::vector<Rational> points) {
    for (const auto& iv : intervals) {
        if (!(iv.lo < iv.hi)) {
            throw std::invalid_argument("IntervalSet: interval requires lo < hi, got (" +
                                        iv.lo.str() + "," + iv.hi.str() + ")");
        }
    }
    IntervalSet s;
    s.intervals_ = std::move(intervals);
    s.points_ = std::move(points);
    s.normalize();
    return s;
}

void IntervalSet::normalize() {
    auto by_lo = [](const Interval& a, const Interval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    };
    std::sort(intervals_.begin(), intervals_.end(), by_lo);

    // Merge overlapping intervals. Touching intervals stay separate here;
    // a shared endpoint is a genuine hole unless an isolated point fills it.
    std::vector<Interval> merged;
    for (const auto& iv : intervals_) {
        if (!merged.empty() && iv.lo < merged.back().hi) {
            merged.back().hi = max(merged.back().hi, iv.hi);
        } else {
            merged.push_back(iv);
        }
    }

    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());

    auto inside = [&merged](const Rational& x) {
        for (const auto& iv : merged) {
            if (iv.lo < x && x < iv.hi) return true;
        }
        return false;
    };
    std::erase_if(points_, inside);

    // Fuse (a,p) u {p} u (p,b) into (a,b); left-to-right so chains collapse.
    std::vector<Interval> fused;
    std::vector<Rational> consumed;
    for (const auto& iv : merged) {
        if (!fused.empty() && fused.back().hi == iv.lo &&
            std::binary_search(points_.begin(), points_.end(), iv.lo)) {
            consumed.push_back(iv.lo);
            fused.back().hi = iv.hi;
        } else {
            fused.push_back(iv);
        }
    }
    std::erase_if(points_, [&consumed](const Rational& p) {
        return std::find(consumed.begin(), consumed.end(), p) != consumed.end();
    });

    intervals_ = std::move(fused);
}

bool IntervalSet::contains(const Rational& x) const {
    for (const auto& iv : intervals_) {
        if (iv.lo < x && x < iv.hi) return true;
    }
    return std::binary_search(points_.begin(), points_.end(), x);
}

IntervalSet::Extent IntervalSet::extent() const {
    if (empty()) return {ExtentKind::empty, Rational()};
    bool started = false;
    Rational inf, sup;
    auto widen = [&](const Rational& lo, const Rational& hi) {
        if (!started) {
            inf = lo;
            sup = hi;
            started = true;
        } else {
            inf = min(inf, lo);
            sup = max(sup, hi);
        }
    };
    for (const auto& iv : intervals_) widen(iv.lo, iv.hi);
    for (const auto& p : points_) widen(p, p);
    return {ExtentKind::finite, sup - inf};
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
    std::vector<IntervalSet::Interval> intervals;
    std::vector<Rational> points;
    for (const auto& ia : a.intervals_) {
        for (const auto& ib : b.intervals_) {
            Rational lo = max(ia.lo, ib.lo);
            Rational hi = min(ia.hi, ib.hi);
            if (lo < hi) intervals.push_back({lo, hi});
        }
    }
    for (const auto& p : a.points_) {
        if (b.contains(p)) points.push_back(p);
    }
    for (const auto& p : b.points_) {
        for (const auto& ia : a.intervals_) {
            if (ia.lo < p && p < ia.hi) points.push_back(p);
        }
    }
    return IntervalSet::of(std::move(intervals), std::move(points));
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
    std::vector<IntervalSet::Interval> intervals = a.intervals_;
    intervals.insert(intervals.end(), b.intervals_.begin(), b.intervals_.end());
    std::vector<Rational> points = a.points_;
    points.insert(points.end(), b.points_.begin(), b.points_.end());
    return IntervalSet::of(std::move(intervals), std::move(points));
}

IntervalSet::SubsetResult subset_of(const IntervalSet& a, const IntervalSet& b) {
    for (const auto& p : a.points_) {
        if (!b.contains(p)) return {false, p};
    }
    for (const auto& ia : a.intervals_) {
        bool covered = false;
        for (const auto& ib : b.intervals_) {
            if (ib.lo <= ia.lo && ia.hi <= ib.hi) {
                covered = true;
                break;
            }
        }
        if (covered) continue;

        // Not inside a single b-interval: since b is in normal form, some
        // rational of (lo,hi) escapes b. Probe b's boundary values inside
        // (lo,hi) and the midpoints between consecutive boundaries.
        std::vector<Rational> cuts{ia.lo, ia.hi};
        auto note = [&](const Rational& x) {
            if (ia.lo < x && x < ia.hi) cuts.push_back(x);
        };
        for (const auto& ib : b.intervals_) {
            note(ib.lo);
            note(ib.hi);
        }
        for (const auto& p : b.points_) note(p);
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            if (i > 0 && !b.contains(cuts[i])) return {false, cuts[i]};
            Rational mid = (cuts[i] + cuts[i + 1]) / Rational(2);
            if (!b.contains(mid)) return {false, mid};
        }
        throw std::logic_error("IntervalSet: uncovered interval yielded no witness");
    }
    return {true, std::nullopt};
}

std::string IntervalSet::str() const {
    if (empty()) return "{}";
    struct Part {
        Rational key;
        bool is_point;
        std::string text;
    };
    std::vector<Part> parts;
    for (const auto& iv : intervals_) {
        parts.push_back({iv.lo, false, "(" + iv.lo.str() + "," + iv.hi.str() + ")"});
    }
    for (const auto& p : points_) {
        parts.push_back({p, true, "{" + p.str() + "}"});
    }
    std::sort(parts.begin(), parts.end(), [](const Part& x, const Part& y) {
        if (x.key != y.key) return x.key < y.key;
        return x.is_point && !y.is_point;  // {p} before (p,q)
    });
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " u ";
        out += parts[i].text;
    }
    return out;
}

IntervalSet IntervalSet::parse(std::string_view text) {
    auto fail = [&]() -> std::invalid_argument {
        return std::invalid_argument("IntervalSet: cannot parse \"" + std::string(text) + "\"");
    };
    std::vector<Interval> intervals;
    std::vector<Rational> points;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && text[i] == ' ') ++i;
    };
    auto read_until = [&](char stop) {
        std::size_t start = i;
        while (i < text.size() && text[i] != stop) ++i;
        if (i == text.size()) throw fail();
        return text.substr(start, i - start);
    };
    skip_ws();
    if (text.substr(i) == "{}") return IntervalSet();
    while (i < text.size()) {
        if (text[i] == '(') {
            ++i;
            Rational lo = Rational::parse(read_until(','));
            ++i;
            Rational hi = Rational::parse(read_until(')'));
            ++i;
            intervals.push_back({lo, hi});
        } else if (text[i] == '{') {
            ++i;
            points.push_back(Rational::parse(read_until('}')));
            ++i;
        } else {
            throw fail();
        }
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != 'u') throw fail();
        ++i;
        skip_ws();
    }
    return of(std::move(intervals), std::move(points));
}

}  // namespace gqm
