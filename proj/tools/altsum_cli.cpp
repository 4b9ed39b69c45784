#include "altsum/altsum.hpp"
int main() { return 0; }
