#include "suite.hpp"

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::atoi(argv[i]));
  const auto outcomes = minkprob::suite::run(which, 1, &std::cout);
  int failed = 0;
  for (const auto& o : outcomes) failed += o.passed ? 0 : 1;
  std::cout << outcomes.size() - failed << "/" << outcomes.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
