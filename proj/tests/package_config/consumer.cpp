#include <iostream>

#include "derspec/eigenvalues.hpp"

int main() { std::cout << derspec::to_decimal(derspec::eta({6, 4})) << '\n'; }
