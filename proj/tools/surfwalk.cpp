#include <iostream>

#include <surfwalk/cli.hpp>

int main(int argc, char** argv) {
  return surfwalk::run_cli(argc, argv, std::cout, std::cerr);
}
