#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace grasstropic::verify {

struct Options {
  int n = 0;            // size bound; 0 picks the suite default
  int samples = -1;     // random draws; -1 picks the suite default
  std::uint64_t seed = 1;
  int threads = 1;
};

struct Report {
  std::string suite;
  bool pass = true;
  long checked = 0;
  long skipped = 0;  // inputs outside the hypotheses (non-generic plots)
  std::uint64_t seed = 0;
  std::vector<std::string> failures;  // at most 20 kept
  std::vector<std::string> notes;

  void fail(const std::string& what);
};

std::vector<std::string> suite_names();
// Throws grasstropic::Error on an unknown suite.
Report run(const std::string& suite, const Options& opts);

// Threads from GRASSTROPIC_THREADS, else the hardware count.
int default_threads();
// Runs fn(i) for i in [0, count) on up to `threads` workers.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

}  // namespace grasstropic::verify
