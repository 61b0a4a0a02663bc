#include "gqm/point.hpp"

#include <stdexcept>

namespace gqm {

Point Point::sym(std::string label) {
    Point p;
    p.v_ = std::move(label);
    return p;
}

Point Point::rat(Rational value) {
    Point p;
    p.v_ = std::move(value);
    return p;
}

Point Point::pair(Point first, Point second) {
    Point p;
    p.v_ = std::make_shared<const PairBox>(PairBox{std::move(first), std::move(second)});
    return p;
}

bool Point::is_pair() const {
    return std::holds_alternative<std::shared_ptr<const PairBox>>(v_);
}

const std::string& Point::sym_label() const {
    if (!is_sym()) throw std::logic_error("point is not symbolic");
    return std::get<std::string>(v_);
}

const Rational& Point::rat_value() const {
    if (!is_rat()) throw std::logic_error("point is not rational");
    return std::get<Rational>(v_);
}

const Point& Point::first() const {
    if (!is_pair()) throw std::logic_error("point is not a pair");
    return std::get<std::shared_ptr<const PairBox>>(v_)->first;
}

const Point& Point::second() const {
    if (!is_pair()) throw std::logic_error("point is not a pair");
    return std::get<std::shared_ptr<const PairBox>>(v_)->second;
}

std::string Point::str() const {
    if (is_sym()) return sym_label();
    if (is_rat()) return rat_value().str();
    return "(" + first().str() + "," + second().str() + ")";
}

namespace {

int kind_rank(const Point& p) {
    if (p.is_sym()) return 0;
    if (p.is_rat()) return 1;
    return 2;
}

}  // namespace

bool operator==(const Point& a, const Point& b) {
    if (kind_rank(a) != kind_rank(b)) return false;
    if (a.is_sym()) return a.sym_label() == b.sym_label();
    if (a.is_rat()) return a.rat_value() == b.rat_value();
    return a.first() == b.first() && a.second() == b.second();
}

bool operator<(const Point& a, const Point& b) {
    int ra = kind_rank(a), rb = kind_rank(b);
    if (ra != rb) return ra < rb;
    if (a.is_sym()) return a.sym_label() < b.sym_label();
    if (a.is_rat()) return a.rat_value() < b.rat_value();
    if (a.first() != b.first()) return a.first() < b.first();
    return a.second() < b.second();
}

}  // namespace gqm
