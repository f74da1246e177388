#include "cybar/report.hpp"

namespace cybar {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::flagged:
      return "flagged";
  }
  return "?";
}

Status overall(const std::vector<CheckRecord>& records) {
  Status worst = Status::pass;
  for (const auto& r : records) {
    if (r.status == Status::fail) return Status::fail;
    if (r.status == Status::flagged) worst = Status::flagged;
  }
  return worst;
}

}  // namespace cybar
