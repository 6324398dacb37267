#include "ucurve/report.hpp"

int main(int argc, char** argv) { return ucurve::run_cli(argc, argv); }
