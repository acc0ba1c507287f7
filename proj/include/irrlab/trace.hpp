#pragma once

#include <string>
#include <vector>

namespace irrlab::trace {

// One row of the claim-to-check traceability table: which statement is
// verified where, or why it is out of scope.
struct TraceEntry {
  std::string statement;
  std::string realization;
  bool in_scope = true;
};

const std::vector<TraceEntry>& table();

std::string text();

}  // namespace irrlab::trace
