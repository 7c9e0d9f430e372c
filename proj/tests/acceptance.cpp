#include "focktiles/verify.hpp"

#include <iostream>

int main(int argc, char** argv) {
    using namespace focktiles;
    std::vector<std::string> names;
    for (int i = 1; i < argc; ++i) names.push_back(argv[i]);
    if (names.empty()) names = suite_names();
    bool all = true;
    for (const auto& n : names) {
        auto r = run_suite(n);
        std::cout << format_result(r) << std::endl;
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
