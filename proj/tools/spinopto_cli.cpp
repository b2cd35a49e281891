// Copyright 2026 The spinopto Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end:
//
//   spinopto fig <fig2|fig3a|fig3b|fig4|fig5|fig6a|fig6b> [--config PATH] [--key value ...] --out DIR
//   spinopto sweep --axis A --range R --quantity Q [--config PATH] [--key value ...] --out DIR
//   spinopto oracle [--config PATH] [--key value ...] --out DIR
//   spinopto validate [--config PATH] [--key value ...]
//
// Exit codes: 0 success, 1 usage/config error, 2 domain error, 3 internal
// invariant breach.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spinopto.hpp"

namespace fs = std::filesystem;
using namespace spinopto;

namespace {

struct CommonOptions {
    std::string config_path;
    std::map<std::string, std::string> overrides;
};

void add_common(CLI::App& cmd, CommonOptions& opts) {
    cmd.add_option("--config", opts.config_path, "key = value configuration file");
    for (const auto& [key, fallback] : kConfigKeys) {
        const std::string name(key);
        const std::string flag = name == "output_path" ? "--out,--output_path" : "--" + name;
        std::string help = fallback.empty() ? std::string() : "default: " + std::string(fallback);
        cmd.add_option(flag, opts.overrides[name], help);
    }
}

RunConfig load(const CommonOptions& opts, const CLI::App& cmd) {
    ConfigBuilder builder;
    if (!opts.config_path.empty()) {
        std::ifstream in(opts.config_path);
        if (!in)
            throw ConfigError("cannot read config file '" + opts.config_path + "'");
        std::stringstream text;
        text << in.rdbuf();
        builder.load_text(text.str());
    }
    for (const auto& [key, unused] : kConfigKeys) {
        const std::string name(key);
        const std::string flag = name == "output_path" ? "--out" : "--" + name;
        if (cmd.count(flag) > 0)
            builder.set(name, opts.overrides.at(name));
    }
    return builder.build();
}

// Writes every table or none: on failure anything already written is removed.
void write_all(const std::string& dir, const std::vector<OutputFile>& files) {
    if (dir.empty())
        throw ConfigError("--out DIR is required");
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw ConfigError("cannot create output directory '" + dir + "': " + ec.message());
    std::vector<fs::path> written;
    try {
        for (const OutputFile& f : files) {
            const fs::path target = fs::path(dir) / f.name;
            const fs::path tmp = fs::path(dir) / (f.name + ".partial");
            {
                std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
                out << f.table.str();
                if (!out)
                    throw ConfigError("cannot write '" + tmp.string() + "'");
            }
            written.push_back(tmp);
            fs::rename(tmp, target);
            written.back() = target;
        }
    } catch (...) {
        for (const fs::path& p : written)
            fs::remove(p, ec);
        throw;
    }
    for (const OutputFile& f : files)
        std::cout << (fs::path(dir) / f.name).string() << '\n';
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Photon-assisted spin-optomechanics simulator"};
    app.require_subcommand(1);

    CommonOptions fig_opts, sweep_opts, oracle_opts, validate_opts;
    std::string figure;
    CLI::App* fig = app.add_subcommand("fig", "reproduce one figure as CSV");
    fig->add_option("figure", figure, "fig2, fig3a, fig3b, fig4, fig5, fig6a or fig6b")->required();
    add_common(*fig, fig_opts);

    CLI::App* sweep = app.add_subcommand("sweep", "sweep one axis and tabulate a quantity");
    add_common(*sweep, sweep_opts);

    CLI::App* oracle = app.add_subcommand("oracle", "compare the open dynamics with the full Fock-space master equation");
    add_common(*oracle, oracle_opts);

    CLI::App* validate = app.add_subcommand("validate", "print the derived frame and regime checks");
    add_common(*validate, validate_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (fig->parsed()) {
            const RunConfig c = load(fig_opts, *fig);
            const auto files = run_fig(parse_figure(figure), c);
            write_all(c.output_path, files);
        } else if (sweep->parsed()) {
            const RunConfig c = load(sweep_opts, *sweep);
            CsvTable table = run_sweep(c);
            write_all(c.output_path, {{"sweep_" + c.axis + "_" + c.quantity + ".csv", std::move(table)}});
        } else if (oracle->parsed()) {
            const RunConfig c = load(oracle_opts, *oracle);
            if (c.output_path.empty())
                throw ConfigError("--out DIR is required");
            OracleComparison cmp = run_oracle(c);
            write_all(c.output_path, {std::move(cmp.file)});
            std::cout << "max_gap = " << format_double(cmp.max_gap) << '\n'
                      << "max_rho22 = " << format_double(cmp.max_outside) << '\n';
        } else if (validate->parsed()) {
            const RunConfig c = load(validate_opts, *validate);
            std::cout << format_report(validate_config(c));
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
