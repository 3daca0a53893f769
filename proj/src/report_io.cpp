#include "valsemi/report_io.hpp"

#include <iomanip>
#include <sstream>

namespace valsemi {

namespace {

const char* kNecessaryOnlyNote =
    "necessary condition only: consistency is not a realizability proof";

}  // namespace

nlohmann::json to_json(const ObstructionReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"d", row.d},
                    {"count", row.count.str()},
                    {"bound", row.bound.str()},
                    {"violated", row.violated}});
  }
  nlohmann::json verdict;
  if (report.violated_at) {
    verdict = {{"kind", "ViolatedAt"}, {"d", *report.violated_at}};
  } else {
    verdict = {{"kind", "ConsistentUpTo"}, {"d_max", report.d_max}, {"note", kNecessaryOnlyNote}};
  }
  return {{"schema", kReportSchema}, {"n", report.n},           {"s0", report.s0.str()},
          {"d_max", report.d_max},   {"complete", report.complete}, {"rows", rows},
          {"verdict", verdict}};
}

nlohmann::json to_json(const Certificate& cert) {
  return {{"schema", kReportSchema},
          {"n", cert.n},
          {"lhs", cert.lhs.str()},
          {"mid", cert.mid.str()},
          {"rhs", cert.rhs.str()},
          {"chain_holds", cert.chain_holds}};
}

nlohmann::json to_json(const Lemma1Report& report) {
  return {{"schema", kReportSchema},
          {"n", report.n},
          {"d", report.d},
          {"cardinality", report.cardinality.str()},
          {"bound", report.bound.str()},
          {"holds", report.holds}};
}

nlohmann::json to_json(const Lemma2Report& report) {
  return {{"schema", kReportSchema},
          {"n", report.n},
          {"d", report.d},
          {"s0", report.s0.str()},
          {"count", report.count.str()},
          {"bound", report.bound.str()},
          {"holds", report.holds},
          {"truncation_identity", report.truncation_identity}};
}

std::string to_text(const ObstructionReport& report) {
  std::ostringstream os;
  os << "obstruction check: n = " << report.n << ", s0 = " << report.s0
     << ", d = 1.." << report.d_max << "\n";
  std::size_t wc = 5, wb = 5;
  for (const auto& row : report.rows) {
    wc = std::max(wc, row.count.str().size());
    wb = std::max(wb, row.bound.str().size());
  }
  os << std::right << std::setw(4) << "d" << "  " << std::setw(static_cast<int>(wc)) << "count"
     << "  " << std::setw(static_cast<int>(wb)) << "bound" << "  violated\n";
  for (const auto& row : report.rows) {
    os << std::setw(4) << row.d << "  " << std::setw(static_cast<int>(wc)) << row.count.str()
       << "  " << std::setw(static_cast<int>(wb)) << row.bound.str() << "  "
       << (row.violated ? "yes" : "no") << "\n";
  }
  if (!report.complete) os << "(enumeration stopped early; later counts are partial)\n";
  if (report.violated_at) {
    os << "verdict: ViolatedAt(d = " << *report.violated_at
       << ") -- not a value semigroup at embedding dimension " << report.n << "\n";
  } else {
    os << "verdict: ConsistentUpTo(d = " << report.d_max << ") -- " << kNecessaryOnlyNote << "\n";
  }
  return os.str();
}

std::string to_text(const Certificate& cert) {
  std::ostringstream os;
  os << "certificate n = " << cert.n << ": |T ∩ [n, n+1)| = " << cert.lhs.str()
     << " <= |U ∩ [0, n+1)| = " << cert.mid.str() << ", but the obstruction caps it at "
     << cert.rhs.str() << "\n"
     << "chain_holds: " << (cert.chain_holds ? "true" : "false")
     << (cert.chain_holds ? " (U is not a value semigroup at embedding dimension "
                          : " (no contradiction at embedding dimension ")
     << cert.n << ")\n";
  return os.str();
}

std::string to_text(const Lemma1Report& report) {
  std::ostringstream os;
  os << "lemma1: n = " << report.n << ", d = " << report.d
     << ": |S_d| = " << report.cardinality.str() << " < " << report.bound.str() << " : "
     << (report.holds ? "holds" : "FAILS") << "\n";
  return os.str();
}

std::string to_text(const Lemma2Report& report) {
  std::ostringstream os;
  os << "lemma2: n = " << report.n << ", d = " << report.d << ", s0 = " << report.s0
     << ": |S ∩ [0,(d+1)s0)| = " << report.count.str() << " < " << report.bound.str() << " : "
     << (report.holds ? "holds" : "FAILS") << "; truncation identity "
     << (report.truncation_identity ? "exact" : "BROKEN") << "\n";
  return os.str();
}

std::string to_csv(const ObstructionReport& report) {
  std::ostringstream os;
  os << "d,count,bound,violated\n";
  for (const auto& row : report.rows) {
    os << row.d << "," << row.count.str() << "," << row.bound.str() << ","
       << (row.violated ? "true" : "false") << "\n";
  }
  return os.str();
}

}  // namespace valsemi
