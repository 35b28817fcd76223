#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include "takagi/real.hpp"

int main(int argc, char** argv) {
    takagi::set_precision_bits(200);
    doctest::Context ctx;
    ctx.applyCommandLine(argc, argv);
    return ctx.run();
}
