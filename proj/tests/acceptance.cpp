#include <iostream>

#include "acceptance_suite.hpp"

int main() {
    auto r = acceptance::run_all();
    std::cout << acceptance::report(r);
    for (auto& o : r)
        if (!o.pass) return 1;
    return 0;
}
