#include <cstdlib>
#include <iostream>

#include "app/app.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::optional<std::string> out_env;
  if (const char* v = std::getenv("LEVYSLAB_OUT")) out_env = v;
  const std::vector<std::string> args(argv + 1, argv + argc);
  const int code = levyslab::cli::run(args, std::cout, std::cerr, out_env);
  std::cout.flush();
  return code;
}
