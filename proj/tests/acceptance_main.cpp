#include <iostream>

int main() {
  std::cout << "acceptance suite placeholder" << std::endl;
  return 1;
}
