#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ngauss/distributions.hpp"
#include "ngauss/gof.hpp"
#include "ngauss/pipeline.hpp"
#include "ngauss/power_transform.hpp"

// Field names used here are frozen in docs/report_schema.md.

namespace ngauss {

[[nodiscard]] nlohmann::json to_json(const MomentSummary& s);
[[nodiscard]] nlohmann::json to_json(const FittedModel& model);
[[nodiscard]] nlohmann::json to_json(const GofReport& r);
[[nodiscard]] nlohmann::json to_json(const AcfReport& r);
[[nodiscard]] nlohmann::json to_json(const WhitenessVerdict& v);
[[nodiscard]] nlohmann::json to_json(const ExponentCandidate& c);
[[nodiscard]] nlohmann::json to_json(const AnalysisReport& r);
[[nodiscard]] nlohmann::json to_json(const StudyReport& r);
[[nodiscard]] nlohmann::json table_to_json(const std::vector<KurtosisRow>& rows);
[[nodiscard]] nlohmann::json histogram_to_json(const std::vector<HistogramRow>& rows);

[[nodiscard]] std::string to_text(const MomentSummary& s);
[[nodiscard]] std::string to_text(const FittedModel& model);
[[nodiscard]] std::string to_text(const GofReport& r);
[[nodiscard]] std::string to_text(const AcfReport& r);
[[nodiscard]] std::string to_text(const std::vector<ExponentCandidate>& candidates);
[[nodiscard]] std::string to_text(const AnalysisReport& r);
[[nodiscard]] std::string to_text(const StudyReport& r);
/// beta2 printed to `digits` significant figures.
[[nodiscard]] std::string table_to_text(const std::vector<KurtosisRow>& rows, int digits = 4);
/// CSV with columns lo,hi,count,density,overlay; undefined cells are empty.
[[nodiscard]] std::string histogram_to_csv(const std::vector<HistogramRow>& rows);

/// "%#.{digits}g" formatting: fixed significant figures, trailing zeros kept.
[[nodiscard]] std::string format_significant(double value, int digits);

}  // namespace ngauss
