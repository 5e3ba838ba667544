// Command-line front end; subcommands are filled in alongside the library.

#include <cstdio>

int main(int argc, char** argv) {
    (void)argc;
    (void)argv;
    std::fputs("pachner: not wired up yet\n", stderr);
    return 2;
}
