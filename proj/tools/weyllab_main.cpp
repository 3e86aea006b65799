#include "weyllab/runner.hpp"

int main(int argc, char** argv) {
    return weyllab::run(argc, argv);
}
