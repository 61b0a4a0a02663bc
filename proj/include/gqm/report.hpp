#pragma once

#include "gqm/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gqm {

/// Where a reported number comes from: a formula stated in print, a value
/// derived by this library, or an immediate consequence of a definition.
enum class Provenance { paper_formula, derived, trivial };
const char* to_string(Provenance p);

struct ReportNumber {
    std::string key;
    std::string value;  // "p/q" or an interval-set / integer rendering
    Provenance provenance = Provenance::derived;
};

struct ReportCheck {
    std::string name;
    bool pass = false;
    std::vector<std::pair<std::string, std::string>> details;
    std::vector<ReportNumber> numbers;

    ReportCheck& detail(std::string key, std::string value);
    ReportCheck& number(std::string key, const Rational& value, Provenance p);
    ReportCheck& number(std::string key, std::string value, Provenance p);
    ReportCheck& count(std::string key, long long value);
};

/// One command's outcome: the echoed invocation, a digest of the echoed
/// inputs, and one pass/fail record per check. Rendering is deterministic;
/// identical inputs give byte-identical structured output.
class Report {
public:
    explicit Report(std::string command) : command_(std::move(command)) {}

    void add_input(std::string key, std::string value);
    ReportCheck& add_check(std::string name, bool pass);

    bool pass() const;
    /// FNV-1a 64 over the echoed inputs, as 16 hex digits.
    std::string digest() const;

    std::string render_text() const;
    /// Line-delimited JSON: a header record, then one record per check.
    std::string render_structured() const;

    const std::vector<ReportCheck>& checks() const { return checks_; }

private:
    std::string command_;
    std::vector<std::pair<std::string, std::string>> inputs_;
    std::vector<ReportCheck> checks_;
};

}  // namespace gqm
