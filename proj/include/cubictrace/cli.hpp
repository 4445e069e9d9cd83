#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cubictrace/enumerate.hpp"
#include "json.hpp"

namespace cubictrace::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // verification failed, or "not isomorphic"
  kUsage = 2,
  kInvalidInput = 3,
};

inline constexpr int kSchemaVersion = 1;

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::ordered_json field_to_json(const FieldClass& field);
nlohmann::ordered_json rows_to_json(const FieldClass& field, const std::vector<EnumerationRow>& rows,
                                    bool nonzero_only);

/// "N,height_sq,a,b,polynomial", one line per polynomial; an empty row is one
/// line with blank b and polynomial (and blank a when a is not integral).
std::string rows_to_csv(const std::vector<EnumerationRow>& rows, bool nonzero_only);
std::vector<EnumerationRow> rows_from_csv(std::string_view csv);

}  // namespace cubictrace::cli
