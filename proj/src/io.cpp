#include "gqm/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gqm::io {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what, const json& j) {
    throw std::invalid_argument(what + ": " + j.dump());
}

Rational rational_from_json(const json& j) {
    if (!j.is_string()) bad("rational values are \"p/q\" strings", j);
    return Rational::parse(j.get<std::string>());
}

Point point_from_text(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty point");
    if (auto r = Rational::try_parse(text)) return Point::rat(*r);
    return Point::sym(text);
}

json carrier_to_json(const Carrier& c) {
    switch (c.kind()) {
        case Carrier::Kind::finite: {
            json pts = json::array();
            for (const auto& p : c.points()) pts.push_back(point_to_json(p));
            return json{{"kind", "finite"}, {"points", pts}};
        }
        case Carrier::Kind::line:
            return json{{"kind", "line"}};
        case Carrier::Kind::box:
            return json{{"kind", "box"}, {"lo", c.lo().str()}, {"hi", c.hi().str()}};
        case Carrier::Kind::product:
            break;
    }
    throw std::logic_error("product carriers serialize through their rule");
}

Carrier carrier_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) bad("carrier needs a kind", j);
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "finite") {
        std::vector<Point> pts;
        for (const auto& p : j.at("points")) pts.push_back(point_from_json(p));
        return Carrier::finite(std::move(pts));
    }
    if (kind == "line") return Carrier::line();
    if (kind == "box")
        return Carrier::box(rational_from_json(j.at("lo")), rational_from_json(j.at("hi")));
    bad("unknown carrier kind", j);
}

std::vector<std::vector<Rational>> matrix_from_json(const json& j) {
    if (!j.is_array()) bad("matrix must be an array of rows", j);
    std::vector<std::vector<Rational>> m;
    for (const auto& row : j) {
        if (!row.is_array()) bad("matrix row must be an array", row);
        std::vector<Rational> r;
        for (const auto& cell : row) r.push_back(rational_from_json(cell));
        m.push_back(std::move(r));
    }
    return m;
}

json matrix_to_json(const std::vector<std::vector<Rational>>& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& cell : row) r.push_back(cell.str());
        rows.push_back(std::move(r));
    }
    return rows;
}

QuasiRule quasi_base_from_json(const json& j) {
    if (j.is_string()) {
        const std::string k = j.get<std::string>();
        if (k == "abs-diff") return QuasiRule::abs_diff();
        if (k == "discrete") return QuasiRule::discrete();
        bad("unknown quasi-metric base", j);
    }
    if (j.is_object() && j.value("kind", "") == "table")
        return QuasiRule::table(matrix_from_json(j.at("matrix")));
    bad("quasi-metric base must be \"abs-diff\", \"discrete\", or a table object", j);
}

json quasi_base_to_json(const QuasiRule& q) {
    switch (q.kind()) {
        case QuasiRule::Kind::abs_diff:
            return "abs-diff";
        case QuasiRule::Kind::discrete:
            return "discrete";
        case QuasiRule::Kind::table:
            return json{{"kind", "table"}, {"matrix", matrix_to_json(q.matrix())}};
    }
    throw std::logic_error("unknown quasi-metric base");
}

}  // namespace

Point point_from_json(const json& j) {
    if (j.is_string()) return point_from_text(j.get<std::string>());
    if (j.is_array() && j.size() == 2)
        return Point::pair(point_from_json(j[0]), point_from_json(j[1]));
    bad("bad point", j);
}

json point_to_json(const Point& p) {
    if (p.is_rat()) return p.rat_value().str();
    if (p.is_sym()) {
        if (Rational::try_parse(p.sym_label()))
            throw std::logic_error("label " + p.sym_label() + " would reparse as a rational");
        return p.sym_label();
    }
    return json::array({point_to_json(p.first()), point_to_json(p.second())});
}

GqmSpace space_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rule")) bad("space needs a rule", j);
    const json& rule = j.at("rule");
    const std::string kind = rule.at("kind").get<std::string>();
    if (kind == "product")
        return GqmSpace::product(space_from_json(rule.at("left")),
                                 space_from_json(rule.at("right")));

    Carrier carrier = carrier_from_json(j.at("carrier"));
    if (kind == "table") {
        if (carrier.kind() != Carrier::Kind::finite)
            bad("table rules need a finite carrier", j);
        return GqmSpace::table(carrier.points(), matrix_from_json(rule.at("matrix")));
    }
    if (kind == "piecewise") {
        Rational r = rational_from_json(rule.at("r"));
        if (carrier.kind() == Carrier::Kind::line) return GqmSpace::piecewise(std::move(r));
        return GqmSpace::piecewise_on(std::move(r), std::move(carrier));
    }
    if (kind == "square-shift")
        return GqmSpace::square_shift(rational_from_json(rule.at("offset")), std::move(carrier));
    if (kind == "shifted-quasi")
        return GqmSpace::shifted_quasi(quasi_base_from_json(rule.at("base")),
                                       rational_from_json(rule.at("shift")), std::move(carrier));
    bad("unknown rule kind", rule);
}

json space_to_json(const GqmSpace& s) {
    struct Visitor {
        const GqmSpace& s;
        json operator()(const RuleTable& r) const {
            return json{{"carrier", carrier_to_json(s.carrier())},
                        {"rule", json{{"kind", "table"}, {"matrix", matrix_to_json(r.matrix)}}}};
        }
        json operator()(const RuleShiftedQuasi& r) const {
            return json{{"carrier", carrier_to_json(s.carrier())},
                        {"rule", json{{"kind", "shifted-quasi"},
                                      {"base", quasi_base_to_json(r.base)},
                                      {"shift", r.shift.str()}}}};
        }
        json operator()(const RuleSquareShift& r) const {
            return json{{"carrier", carrier_to_json(s.carrier())},
                        {"rule", json{{"kind", "square-shift"}, {"offset", r.offset.str()}}}};
        }
        json operator()(const RulePiecewise& r) const {
            return json{{"carrier", carrier_to_json(s.carrier())},
                        {"rule", json{{"kind", "piecewise"}, {"r", r.r.str()}}}};
        }
        json operator()(const RuleProduct& r) const {
            return json{{"rule", json{{"kind", "product"},
                                      {"left", space_to_json(*r.left)},
                                      {"right", space_to_json(*r.right)}}}};
        }
    };
    return std::visit(Visitor{s}, s.rule());
}

SeqSpec seq_from_json(const json& j) {
    if (!j.is_object() || !j.contains("family")) bad("sequence needs a family", j);
    const std::string family = j.at("family").get<std::string>();
    if (family == "constant") return SeqSpec::constant(point_from_json(j.at("value")));
    if (family == "affine")
        return SeqSpec::affine(rational_from_json(j.at("a")), rational_from_json(j.at("b")));
    if (family == "drift-gap") return SeqSpec::drift_gap(rational_from_json(j.at("r")));
    if (family == "alt-pow")
        return SeqSpec::alt_pow(rational_from_json(j.at("base")),
                                rational_from_json(j.at("odd")));
    if (family == "alt-pow-mirror")
        return SeqSpec::alt_pow_mirror(rational_from_json(j.at("base")),
                                       rational_from_json(j.at("odd")));
    if (family == "table") {
        std::vector<Point> terms;
        for (const auto& t : j.at("terms")) terms.push_back(point_from_json(t));
        return SeqSpec::table(std::move(terms));
    }
    if (family == "pair")
        return SeqSpec::pair(seq_from_json(j.at("first")), seq_from_json(j.at("second")));
    bad("unknown sequence family", j);
}

json seq_to_json(const SeqSpec& q) {
    switch (q.family()) {
        case SeqSpec::Family::constant:
            return json{{"family", "constant"}, {"value", point_to_json(q.terms()[0])}};
        case SeqSpec::Family::affine:
            return json{{"family", "affine"}, {"a", q.param_a().str()}, {"b", q.param_b().str()}};
        case SeqSpec::Family::drift_gap:
            return json{{"family", "drift-gap"}, {"r", q.param_a().str()}};
        case SeqSpec::Family::alt_pow:
            return json{{"family", "alt-pow"},
                        {"base", q.param_a().str()},
                        {"odd", q.param_b().str()}};
        case SeqSpec::Family::alt_pow_mirror:
            return json{{"family", "alt-pow-mirror"},
                        {"base", q.param_a().str()},
                        {"odd", q.param_b().str()}};
        case SeqSpec::Family::table: {
            json terms = json::array();
            for (const auto& t : q.terms()) terms.push_back(point_to_json(t));
            return json{{"family", "table"}, {"terms", terms}};
        }
        case SeqSpec::Family::pair:
            return json{{"family", "pair"},
                        {"first", seq_to_json(q.first())},
                        {"second", seq_to_json(q.second())}};
    }
    throw std::logic_error("unknown sequence family");
}

BaseFamily base_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ground") || !j.contains("base"))
        bad("base family needs ground and base", j);
    BaseFamily out;
    for (const auto& p : j.at("ground")) out.ground.push_back(point_from_json(p));
    for (const auto& set : j.at("base")) {
        if (!set.is_array()) bad("base element must be an array of points", set);
        std::vector<Point> members;
        for (const auto& p : set) members.push_back(point_from_json(p));
        out.base.push_back(std::move(members));
    }
    return out;
}

std::vector<std::pair<Point, Point>> map_pairs_from_text(const std::string& text) {
    std::vector<std::pair<Point, Point>> pairs;
    std::istringstream lines(text);
    std::string line;
    long long lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a) || a[0] == '#') continue;
        if (!(fields >> b) || (fields >> extra))
            throw std::invalid_argument("map line " + std::to_string(lineno) +
                                        ": expected exactly two points");
        pairs.emplace_back(point_from_text(a), point_from_text(b));
    }
    return pairs;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

namespace {
json parse_with_lines(const std::string& text, const std::string& path) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i)
            if (text[i] == '\n') ++line;
        throw std::invalid_argument(path + " line " + std::to_string(line) + ": " + e.what());
    }
}
}  // namespace

GqmSpace load_space(const std::string& path) {
    return space_from_json(parse_with_lines(read_file(path), path));
}

SeqSpec load_seq(const std::string& path) {
    return seq_from_json(parse_with_lines(read_file(path), path));
}

BaseFamily load_base(const std::string& path) {
    return base_from_json(parse_with_lines(read_file(path), path));
}

std::vector<std::pair<Point, Point>> load_map_pairs(const std::string& path) {
    return map_pairs_from_text(read_file(path));
}

}  // namespace gqm::io
