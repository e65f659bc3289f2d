// Runs the full acceptance suite and prints one line per criterion.
// Exit code 0 if everything passes, 3 otherwise.

#include <cstdio>
#include <cstring>

#include "acceptance.hpp"

int main(int argc, char** argv) {
  accept::Scale scale = accept::Scale::desk;
  if (argc > 1) {
    if (std::strcmp(argv[1], "smoke") == 0) scale = accept::Scale::smoke;
    else if (std::strcmp(argv[1], "desk") == 0) scale = accept::Scale::desk;
    else if (std::strcmp(argv[1], "extended") == 0)
      scale = accept::Scale::extended;
    else {
      std::fprintf(stderr, "usage: %s [smoke|desk|extended]\n", argv[0]);
      return 2;
    }
  }
  bool all = true;
  for (const accept::Result& r : accept::run_all(scale)) {
    std::printf("%s criterion %2d: %s (%s) [%.2fs]\n",
                r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.c_str(), r.seconds);
    all = all && r.pass;
  }
  return all ? 0 : 3;
}
