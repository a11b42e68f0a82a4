#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "metricdim/graph.hpp"

namespace metricdim::harness {

enum class Status { holds, violated, skipped_precondition, inexact_budget };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::holds: return "holds";
    case Status::violated: return "violated";
    case Status::skipped_precondition: return "skipped-precondition";
    case Status::inexact_budget: return "inexact-budget";
  }
  return "unknown";
}

/// The registered comparison a theorem makes about a measured quantity.
struct Claim {
  enum class Relation { at_most, at_least, equals, within };
  Relation relation = Relation::equals;
  long long lo = 0;  // bound for at_least/equals/within
  long long hi = 0;  // bound for at_most/equals/within

  static Claim at_most(long long v) { return {Relation::at_most, v, v}; }
  static Claim at_least(long long v) { return {Relation::at_least, v, v}; }
  static Claim equals(long long v) { return {Relation::equals, v, v}; }
  static Claim within(long long a, long long b) { return {Relation::within, a, b}; }

  std::string str() const {
    switch (relation) {
      case Relation::at_most: return "<=" + std::to_string(hi);
      case Relation::at_least: return ">=" + std::to_string(lo);
      case Relation::equals: return "=" + std::to_string(lo);
      case Relation::within: return std::to_string(lo) + ".." + std::to_string(hi);
    }
    return "";
  }

  /// Verdict for a quantity known to lie in [m_lo, m_hi].
  Status judge(long long m_lo, long long m_hi) const {
    long long a = lo, b = hi;
    if (relation == Relation::at_most) a = std::min(lo, m_lo);
    if (relation == Relation::at_least) b = std::max(hi, m_hi);
    if (a <= m_lo && m_hi <= b) return Status::holds;
    if (m_hi < a || m_lo > b) return Status::violated;
    return Status::inexact_budget;
  }
};

struct VerificationReport {
  std::string theorem_id;
  std::map<std::string, std::string> params;
  std::optional<int> n1;
  std::optional<int> n2;
  /// Unset when the point was skipped before a claim was formed.
  std::optional<Claim> claimed;
  long long measured_lo = 0;
  long long measured_hi = 0;
  Status status = Status::skipped_precondition;
  /// Failed hypothesis for skipped points, or a short remark.
  std::string note;
  /// Counterexample payload; present whenever status is violated.
  std::optional<nlohmann::json> witness;
  /// Supporting data such as bases and construction sets.
  nlohmann::json evidence = nlohmann::json::object();
  long long runtime_ms = 0;

  bool measured_exact() const noexcept { return measured_lo == measured_hi; }
  std::string measured_str() const {
    if (status == Status::skipped_precondition) return "";
    return measured_exact() ? std::to_string(measured_lo)
                            : std::to_string(measured_lo) + ".." + std::to_string(measured_hi);
  }
  /// Parameters other than n1/n2, as k=v pairs joined by ';'.
  std::string extra_str() const {
    std::string out;
    for (const auto& [k, v] : params) {
      if (k == "n1" || k == "n2") continue;
      if (!out.empty()) out += ';';
      out += k + "=" + v;
    }
    return out;
  }
};

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["theorem_id"] = r.theorem_id;
  j["params"] = r.params;
  j["n1"] = r.n1 ? nlohmann::json(*r.n1) : nlohmann::json(nullptr);
  j["n2"] = r.n2 ? nlohmann::json(*r.n2) : nlohmann::json(nullptr);
  j["claimed"] = r.claimed ? nlohmann::json(r.claimed->str()) : nlohmann::json(nullptr);
  if (r.status != Status::skipped_precondition) {
    j["measured"] = {{"lo", r.measured_lo}, {"hi", r.measured_hi}, {"exact", r.measured_exact()}};
  }
  j["status"] = to_string(r.status);
  if (!r.note.empty()) j["note"] = r.note;
  if (r.witness) j["witness"] = *r.witness;
  if (!r.evidence.empty()) j["evidence"] = r.evidence;
  j["runtime_ms"] = r.runtime_ms;
  return j;
}

inline const char* csv_header() { return "theorem_id,n1,n2,extra,claimed,measured,status,runtime_ms"; }

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string to_csv_row(const VerificationReport& r) {
  std::ostringstream os;
  os << csv_quote(r.theorem_id) << ',' << (r.n1 ? std::to_string(*r.n1) : "") << ','
     << (r.n2 ? std::to_string(*r.n2) : "") << ',' << csv_quote(r.extra_str()) << ',' << (r.claimed ? r.claimed->str() : "") << ','
     << r.measured_str() << ',' << to_string(r.status) << ',' << r.runtime_ms;
  return os.str();
}

struct Summary {
  int holds = 0;
  int violated = 0;
  int skipped = 0;
  int inexact = 0;

  /// 0 = no violations, 2 = violation found, 3 = inconclusive points remain.
  int exit_code() const noexcept { return violated > 0 ? 2 : inexact > 0 ? 3 : 0; }
  std::string str() const {
    return "holds=" + std::to_string(holds) + " violated=" + std::to_string(violated) +
           " skipped-precondition=" + std::to_string(skipped) + " inexact-budget=" + std::to_string(inexact);
  }
};

inline Summary summarize(const std::vector<VerificationReport>& reports) {
  Summary s;
  for (const auto& r : reports) {
    switch (r.status) {
      case Status::holds: ++s.holds; break;
      case Status::violated: ++s.violated; break;
      case Status::skipped_precondition: ++s.skipped; break;
      case Status::inexact_budget: ++s.inexact; break;
    }
  }
  return s;
}

inline void write_csv(std::ostream& os, const std::vector<VerificationReport>& reports) {
  os << csv_header() << '\n';
  for (const auto& r : reports) os << to_csv_row(r) << '\n';
}

inline nlohmann::json to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  const auto s = summarize(reports);
  return {{"reports", arr},
          {"summary", {{"holds", s.holds}, {"violated", s.violated}, {"skipped-precondition", s.skipped},
                       {"inexact-budget", s.inexact}}}};
}

}  // namespace metricdim::harness
