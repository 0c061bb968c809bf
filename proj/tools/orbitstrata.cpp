#include <iostream>

#include "orbitstrata/cli/app.hpp"
#include "schemas.hpp"

int main(int argc, char** argv) {
  return orbitstrata::cli::main_entry(argc, argv, std::cout, std::cerr, embedded_schema);
}
