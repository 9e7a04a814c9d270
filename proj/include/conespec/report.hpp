#ifndef CONESPEC_REPORT_HPP
#define CONESPEC_REPORT_HPP

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "conespec/curve.hpp"

namespace conespec {

/// First differing cell of a failed comparison. For checks that are not
/// table-shaped, `e` is -1 and `note` says what `i` indexes.
struct Mismatch {
  std::int64_t i = 0;
  int e = -1;
  std::int64_t expected = 0;
  std::int64_t actual = 0;
  std::string note;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::optional<Mismatch> mismatch;
  std::string detail;
};

class CheckReport {
public:
  void add(CheckResult r) { checks_.push_back(std::move(r)); }

  void pass(std::string name, std::string detail = {}) { add({std::move(name), true, std::nullopt, std::move(detail)}); }

  void fail(std::string name, Mismatch m, std::string detail = {}) {
    add({std::move(name), false, std::move(m), std::move(detail)});
  }

  const std::vector<CheckResult>& checks() const noexcept { return checks_; }
  bool all_passed() const {
    for (const auto& c : checks_)
      if (!c.passed) return false;
    return true;
  }
  const CheckResult* first_failure() const {
    for (const auto& c : checks_)
      if (!c.passed) return &c;
    return nullptr;
  }

  std::string text() const {
    std::ostringstream out;
    for (const auto& c : checks_) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << "  (" << c.detail << ")";
      if (c.mismatch) {
        const auto& m = *c.mismatch;
        out << "  first mismatch: i=" << m.i;
        if (m.e >= 0) out << " e=" << m.e;
        out << " expected=" << m.expected << " actual=" << m.actual;
        if (!m.note.empty()) out << " [" << m.note << "]";
      }
      out << "\n";
    }
    out << (all_passed() ? "result: all checks passed\n" : "result: FAILED\n");
    return out.str();
  }

  nlohmann::json json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks_) {
      nlohmann::json j{{"name", c.name}, {"passed", c.passed}};
      if (!c.detail.empty()) j["detail"] = c.detail;
      if (c.mismatch) {
        const auto& m = *c.mismatch;
        j["mismatch"] = {{"i", m.i}, {"e", m.e}, {"expected", m.expected}, {"actual", m.actual}, {"note", m.note}};
      }
      arr.push_back(std::move(j));
    }
    return nlohmann::json{{"passed", all_passed()}, {"checks", std::move(arr)}};
  }

private:
  std::vector<CheckResult> checks_;
};

/// First cell (in e-major, i-minor order) where two tables differ, restricted
/// to the rows listed in `rows`.
inline std::optional<Mismatch> first_table_mismatch(const ConeSpectrumTable& expected, const ConeSpectrumTable& actual,
                                                    std::initializer_list<int> rows = {0, 1, 2}) {
  if (expected.d != actual.d)
    return Mismatch{0, -1, expected.d, actual.d, "degree d differs"};
  for (int e : rows)
    for (std::int64_t i = 1; i <= expected.d; ++i)
      if (expected.at(e, i) != actual.at(e, i)) return Mismatch{i, e, expected.at(e, i), actual.at(e, i), {}};
  return std::nullopt;
}

inline std::optional<Mismatch> first_row_mismatch(const std::vector<std::int64_t>& expected,
                                                  const std::vector<std::int64_t>& actual, int e) {
  if (expected.size() != actual.size())
    return Mismatch{0, e, static_cast<std::int64_t>(expected.size()), static_cast<std::int64_t>(actual.size()),
                    "row length differs"};
  for (std::size_t k = 0; k < expected.size(); ++k)
    if (expected[k] != actual[k]) return Mismatch{static_cast<std::int64_t>(k + 1), e, expected[k], actual[k], {}};
  return std::nullopt;
}

/// sum_e row_e[i] + delta_{i,d} == chi(U) for every i.
inline std::optional<Mismatch> row_sum_mismatch(const ConeSpectrumTable& t) {
  for (std::int64_t i = 1; i <= t.d; ++i) {
    const std::int64_t s = t.at(0, i) + t.at(1, i) + t.at(2, i) + (i == t.d ? 1 : 0);
    if (s != t.chi_u) return Mismatch{i, -1, t.chi_u, s, "column sum plus delta vs chi(U)"};
  }
  return std::nullopt;
}

/// row_e[i] >= 0 for i < d.
inline std::optional<Mismatch> negativity_mismatch(const ConeSpectrumTable& t) {
  for (int e = 0; e < 3; ++e)
    for (std::int64_t i = 1; i < t.d; ++i)
      if (t.at(e, i) < 0) return Mismatch{i, e, 0, t.at(e, i), "negative multiplicity below i=d"};
  return std::nullopt;
}

}  // namespace conespec

#endif  // CONESPEC_REPORT_HPP
