#include "cli.hpp"

#include <string>
#include <vector>

int main(int argc, char** argv) {
  return ssbm::cli::run(std::vector<std::string>(argv, argv + argc));
}
