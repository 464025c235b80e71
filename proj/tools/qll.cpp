#include "qll/cli.hpp"

int main(int argc, char** argv) {
  return qll::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
