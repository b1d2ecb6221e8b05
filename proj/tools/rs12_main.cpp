#include <cstdio>
int main() { std::puts("rs12: subcommands pending"); return 0; }
