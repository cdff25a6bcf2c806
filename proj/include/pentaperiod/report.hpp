#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "pentaperiod/cyclotomic.hpp"
#include "pentaperiod/identities.hpp"

namespace pentaperiod {

inline constexpr const char* kSchema = "pentaperiod/1";

/// [re, im].
nlohmann::json to_json(cplx z);
nlohmann::json to_json(const VerificationReport& r);

/// Rows of the payload matrix with labels; falls back to per-sample deviations.
std::string to_csv(const VerificationReport& r);

enum class OutputFormat { json, csv };

OutputFormat parse_format(const std::string& s);

/// Serializes in one piece; writes to path, or to os when path is empty.
void write_report(const VerificationReport& r, OutputFormat f, const std::string& path, std::ostream& os);

/// Writes text to path, or to os when path is empty; throws InvalidInput on I/O failure.
void emit(const std::string& text, const std::string& path, std::ostream& os);

}  // namespace pentaperiod
