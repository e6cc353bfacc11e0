#pragma once

#include <string>
#include <vector>

namespace qsk {

// One named verification outcome; sweeps return lists of these.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

bool all_pass(const std::vector<Check>& checks);
std::string checks_json(const std::vector<Check>& checks);

}  // namespace qsk
