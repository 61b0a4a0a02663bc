#include "gqm/report.hpp"

#include <json.hpp>

#include <cstdint>
#include <sstream>

namespace gqm {

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::paper_formula: return "paper-formula";
        case Provenance::derived: return "derived";
        case Provenance::trivial: return "trivial";
    }
    return "?";
}

ReportCheck& ReportCheck::detail(std::string key, std::string value) {
    details.emplace_back(std::move(key), std::move(value));
    return *this;
}

ReportCheck& ReportCheck::number(std::string key, const Rational& value, Provenance p) {
    numbers.push_back({std::move(key), value.str(), p});
    return *this;
}

ReportCheck& ReportCheck::number(std::string key, std::string value, Provenance p) {
    numbers.push_back({std::move(key), std::move(value), p});
    return *this;
}

ReportCheck& ReportCheck::count(std::string key, long long value) {
    numbers.push_back({std::move(key), std::to_string(value), Provenance::derived});
    return *this;
}

void Report::add_input(std::string key, std::string value) {
    inputs_.emplace_back(std::move(key), std::move(value));
}

ReportCheck& Report::add_check(std::string name, bool pass) {
    checks_.push_back(ReportCheck{std::move(name), pass, {}, {}});
    return checks_.back();
}

bool Report::pass() const {
    for (const auto& c : checks_)
        if (!c.pass) return false;
    return true;
}

std::string Report::digest() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    auto eat = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 0x100000001b3ull;
        }
        h ^= '\n';
        h *= 0x100000001b3ull;
    };
    eat(command_);
    for (const auto& [k, v] : inputs_) {
        eat(k);
        eat(v);
    }
    std::ostringstream hex;
    hex << std::hex;
    for (int shift = 60; shift >= 0; shift -= 4) hex << ((h >> shift) & 0xf);
    return hex.str();
}

std::string Report::render_text() const {
    std::ostringstream out;
    out << "gqm " << command_ << "\n";
    for (const auto& [k, v] : inputs_) out << "  input " << k << " = " << v << "\n";
    out << "  digest " << digest() << "\n";
    for (const auto& c : checks_) {
        out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "\n";
        for (const auto& [k, v] : c.details) out << "    " << k << ": " << v << "\n";
        for (const auto& n : c.numbers)
            out << "    " << n.key << " = " << n.value << " (" << to_string(n.provenance)
                << ")\n";
    }
    out << "overall: " << (pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string Report::render_structured() const {
    using nlohmann::json;
    std::ostringstream out;
    json header{{"record", "header"},
                {"command", command_},
                {"digest", digest()},
                {"pass", pass()}};
    json inputs = json::object();
    for (const auto& [k, v] : inputs_) inputs[k] = v;
    header["inputs"] = inputs;
    out << header.dump() << "\n";
    for (const auto& c : checks_) {
        json rec{{"record", "check"}, {"name", c.name}, {"pass", c.pass}};
        json details = json::object();
        for (const auto& [k, v] : c.details) details[k] = v;
        rec["details"] = details;
        json numbers = json::object();
        for (const auto& n : c.numbers)
            numbers[n.key] = json{{"value", n.value}, {"provenance", to_string(n.provenance)}};
        rec["numbers"] = numbers;
        out << rec.dump() << "\n";
    }
    return out.str();
}

}  // namespace gqm
