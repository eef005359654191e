#include "hcs/cli.hpp"

int main(int argc, char** argv) {
    return hcs::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
