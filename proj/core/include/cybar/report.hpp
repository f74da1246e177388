#pragma once

#include <string>
#include <vector>

namespace cybar {

enum class Status { pass, fail, flagged };

std::string to_string(Status s);

/// One verification outcome. `witness` names the first offending element
/// when the check failed; `note` carries caveats such as a homological
/// surrogate standing in for a homotopical statement.
struct CheckRecord {
  std::string check;
  std::string instance;
  int degrees_checked = -1;
  Status status = Status::pass;
  std::string witness;
  std::string note;
};

/// Worst status of a list: fail over flagged over pass.
Status overall(const std::vector<CheckRecord>& records);

}  // namespace cybar
