#include "cli_app.hpp"

int main(int argc, char** argv) { return pgw::cli::main(argc, argv); }
