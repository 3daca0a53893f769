#ifndef VALSEMI_REPORT_IO_HPP
#define VALSEMI_REPORT_IO_HPP

#include <string>

#include <json.hpp>

#include "valsemi/obstruction.hpp"
#include "valsemi/semigroup.hpp"
#include "valsemi/valuation.hpp"

namespace valsemi {

// All counts and bounds serialize as decimal strings: C(2n, n) outgrows
// 53-bit float precision by n = 29 and JSON consumers must not round.
inline constexpr int kReportSchema = 1;

nlohmann::json to_json(const ObstructionReport& report);
nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const Lemma1Report& report);
nlohmann::json to_json(const Lemma2Report& report);

std::string to_text(const ObstructionReport& report);
std::string to_text(const Certificate& cert);
std::string to_text(const Lemma1Report& report);
std::string to_text(const Lemma2Report& report);

/// CSV rows d,count,bound,violated with a header line.
std::string to_csv(const ObstructionReport& report);

}  // namespace valsemi

#endif
