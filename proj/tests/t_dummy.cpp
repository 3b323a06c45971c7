#include "apg/spec_io.hpp"
#include <cstdio>
int main(){ auto s = apg::builtin_spec("brownian"); std::printf("%s d=%d\n", s.label.c_str(), s.d); return 0; }
