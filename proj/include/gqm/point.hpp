#pragma once

#include "gqm/rational.hpp"

#include <memory>
#include <string>
#include <variant>

namespace gqm {

/// A carrier element: a symbolic label, an exact rational, or an ordered
/// pair of points (for product carriers).
class Point {
public:
    Point() : v_(std::string{}) {}

    static Point sym(std::string label);
    static Point rat(Rational value);
    static Point pair(Point first, Point second);

    bool is_sym() const { return std::holds_alternative<std::string>(v_); }
    bool is_rat() const { return std::holds_alternative<Rational>(v_); }
    bool is_pair() const;

    const std::string& sym_label() const;
    const Rational& rat_value() const;
    const Point& first() const;
    const Point& second() const;

    /// "a", "3/4", "(a,3/4)"
    std::string str() const;

    friend bool operator==(const Point& a, const Point& b);
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool operator<(const Point& a, const Point& b);

private:
    struct PairBox;
    std::variant<std::string, Rational, std::shared_ptr<const PairBox>> v_;
};

struct Point::PairBox {
    Point first;
    Point second;
};

}  // namespace gqm
