#pragma once

#include <string>
#include <vector>

#include "frobenian/recurrence.hpp"

namespace frobenian {

struct CorpusEntry {
  std::string name;
  std::string text;  // "c1,..,ck;a0,.."
  Recurrence recurrence() const { return Recurrence::parse(text); }
};

/// Recurrences of order 1 to 3 used by the tests and the acceptance run.
const std::vector<CorpusEntry>& recurrence_corpus();

}  // namespace frobenian
