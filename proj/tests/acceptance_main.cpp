#include <iostream>

#include "ncplane/selftest.hpp"

int main() { return ncplane::selftest::run_and_print(std::cout) ? 0 : 1; }
