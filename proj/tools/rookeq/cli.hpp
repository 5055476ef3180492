#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rookeq {

// Exit codes: 0 ok, 1 false predicate, 2 invalid input.
enum Status : int { kOk = 0, kPropertyFalse = 1, kInvalidInput = 2 };

// Runs one CLI invocation. argv excludes the program name.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace rookeq
