#include <iostream>

#include "warpiso/app.hpp"

int main(int argc, char** argv) { return warpiso::app::run(argc, argv, std::cout, std::cerr); }
