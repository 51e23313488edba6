#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace gforge::cli {

struct RunConfig {
  std::string command;
  std::string input;
  std::string expr;               // adjoint only
  std::string which = "objects";  // emit: objects | arrows | comp | groupoid
  std::string suite = "all";      // verify: laws | adjunction | frobenius | closure | all
  std::string format = "text";    // text | json
  int k = 2;
  unsigned seed = 1;
  bool unsafe_no_guard = false;
  int max_meet = 2;           // verification budget: largest meet arity
  std::size_t samples = 1000; // verification budget: sampled checks per suite
  bool list_models = false;
};

// Exit status: 0 success, 1 semantic failure (validation, verification,
// size guard), 2 I/O or usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gforge::cli
