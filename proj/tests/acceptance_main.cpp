#include <iostream>

#include "autoshift/acceptance.hpp"

int main() {
    const bool ok = autoshift::run_acceptance(std::cout);
    return ok ? 0 : 1;
}
