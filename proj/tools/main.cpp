// rgqme command-line entry point

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rgqme/execute.hpp"

int main(int argc, char** argv) {
    CLI::App app{"renormalization-group dynamics of open quantum systems"};

    std::string config_path;
    std::string out_dir = ".";
    bool quiet = false;
    app.add_option("--config", config_path, "path to a JSON run configuration")->required();
    app.add_option("--out", out_dir, "output directory for CSV/JSON results");
    app.add_flag("--quiet", quiet, "suppress progress output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    // reserved for future stochastic components; nothing here draws random numbers
    if (std::getenv("RGQ_SEED") != nullptr) {
        std::cerr << "rgqme: warning: RGQ_SEED is set but ignored (no stochastic components)\n";
    }

    std::ifstream in(config_path, std::ios::binary);
    if (!in) {
        std::cerr << "rgqme: ParseError: cannot read config file " << config_path << "\n";
        return 1;
    }
    std::ostringstream text;
    text << in.rdbuf();

    return rgqme::cli::run(text.str(), out_dir, quiet);
}
