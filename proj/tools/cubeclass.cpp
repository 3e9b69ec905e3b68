#include <cstdio>

int main() {
  std::puts("cubeclass: subcommands not wired yet");
  return 64;
}
