#pragma once

#include <string>

#include <json.hpp>

#include "relchar/verify.hpp"

namespace relchar {

inline constexpr int kReportSchemaVersion = 1;

enum class ReportFormat { Human, Structured };

/// Structured report. Timings are omitted unless requested so that
/// repeated runs produce identical documents.
nlohmann::json report_to_json(const SuiteReport& r, bool timing = false);
std::string render_report(const SuiteReport& r, ReportFormat format, bool timing = false);

/// Exact table document: class sizes, orders, representative words,
/// power maps and rows as (conductor, coefficients) pairs.
nlohmann::json table_to_json(const CharacterTable& t, const std::string& name);
std::string render_table(const CharacterTable& t, const std::string& name, ReportFormat format);

nlohmann::json section_to_json(const SectionRecord& s);
nlohmann::json cyclotomic_to_json(const Cyclotomic& c);

/// Left-aligned columns separated by two spaces.
std::string format_columns(const std::vector<std::vector<std::string>>& rows);

}  // namespace relchar
