#include <iostream>

int main() {
  std::cout << "rspin cli placeholder\n";
  return 0;
}
