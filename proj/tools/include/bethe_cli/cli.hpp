#ifndef BETHE_CLI_CLI_HPP
#define BETHE_CLI_CLI_HPP

// Verification tasks and expansion commands behind the bethe-series tool.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bethe/json.hpp"

namespace bethe::cli {

struct VerifyParams {
  std::optional<int> N;
  std::optional<MultiIndex> bound;
  std::uint64_t seed = 1;
  bool randomized = false;
};

struct VerifyTask {
  std::string name;
  VerifyParams params;
};

enum class Status { Pass, Fail, Error };

struct Report {
  std::string task;
  Status status = Status::Error;
  double elapsed = 0;
  Json details = Json::object();
  std::uint64_t seed = 0;
};

const std::vector<std::string>& task_names();

/// Runs one task; unknown names and guard violations become error reports.
Report run_verify(const VerifyTask& task);

/// Every task with shared params, at most `threads` at a time; reports in task_names() order.
std::vector<Report> run_verify_all(const VerifyParams& params, int threads);

/// BETHE_SERIES_THREADS when set and positive, hardware concurrency otherwise.
int default_threads();

int exit_code(Status s);
int exit_code(const std::vector<Report>& reports);
std::string to_string(Status s);
Json to_json(const Report& r);
Report report_from_json(const Json& j);
/// One line: "task: status (1.234 s)".
std::string summary_line(const Report& r);

struct ExpandParams {
  std::optional<int> N;
  std::optional<int> j;
  std::optional<int> i;
  std::optional<int> k;
  std::optional<std::vector<int>> index;
  std::string which = "current";
  std::string rows;
  bool assign = false;
  bool expand = false;
};

const std::vector<std::string>& expand_targets();

/// Text or JSON rendering of the requested object; throws GuardExceeded or UnknownTask.
std::string run_expand(const std::string& what, const ExpandParams& params, bool json);

/// "3,2,1|3|1,1" with rows bottom to top.
Tableaux parse_rows(const std::string& text);
/// ASCII grid with the top row first.
std::string render_grid(const Tableaux& t);

}  // namespace bethe::cli

#endif  // BETHE_CLI_CLI_HPP
