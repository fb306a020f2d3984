#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covol/bounds.hpp"
#include "covol/catalog.hpp"
#include "covol/constants.hpp"

namespace covol {

enum class OutputFormat { Table, Json, Csv };

// One emitted row of the bound pipeline. Field names double as the JSON keys
// and the CSV header.
struct OutputRecord {
  std::string space_id;
  long long N = 0;
  long long d = 0;
  long long alpha_G = 0;
  double C1 = 0.0;
  double C2 = 0.0;
  double r = 0.0;
  double k = 0.0;
  double integration_limit = 0.0;
  double bound_log10 = 0.0;
  std::string bound_scientific;
  std::string mode;
};

OutputRecord make_output_record(const BoundResult& result, const SymmetricSpaceSpec& space,
                                int digits);

std::string format_records(const std::vector<OutputRecord>& records, OutputFormat format,
                           int digits, bool header);

// Error rows carry only the space id and the message.
struct RecordOrError {
  std::optional<OutputRecord> record;
  std::string space_id;
  std::string error;
};

std::string format_rows(const std::vector<RecordOrError>& rows, OutputFormat format, int digits,
                        bool header);

struct ListRow {
  std::string id;
  long long N = 0, d = 0, alpha_G = 0;
  std::string constants_class;
};

std::string format_list(const std::vector<ListRow>& rows, OutputFormat format, bool header);

// User-registered spaces and root systems, layered over the built-in catalog.
class SpaceRegistry {
 public:
  // Built-in catalog first, then user registrations.
  std::optional<SymmetricSpaceSpec> find(std::string_view id) const;

  void register_space(SymmetricSpaceSpec space);  // rejects duplicate ids
  void register_root_system(const std::string& space_id, RestrictedRootSystem rrs);

  const std::vector<SymmetricSpaceSpec>& user_spaces() const { return spaces_; }
  const std::map<std::string, RestrictedRootSystem>& user_root_systems() const { return roots_; }

 private:
  std::vector<SymmetricSpaceSpec> spaces_;
  std::map<std::string, RestrictedRootSystem> roots_;
};

// Structured text file with [space] and [roots] sections (see README for the
// schema). Throws std::runtime_error with file/line context on bad input.
void load_structured_file(const std::string& path, SpaceRegistry& registry);

OutputFormat output_format_from_string(std::string_view text);  // throws on unknown

}  // namespace covol
