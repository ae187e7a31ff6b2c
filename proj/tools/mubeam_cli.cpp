// SPDX-License-Identifier: Apache-2.0
//
// mubeam: multi-user mmWave hybrid beamforming simulation library
// Copyright (C) 2026 The mubeam Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mubeam/channel.hpp"
#include "mubeam/codebook.hpp"
#include "mubeam/config.hpp"
#include "mubeam/simulation.hpp"
#include "mubeam/summary.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

using namespace mubeam;

std::ofstream open_out(const std::string &path)
{
    std::ofstream out(path);
    if (!out)
        throw ConfigError("cannot write " + path);
    return out;
}

int cmd_run(const std::string &config_path, const std::string &out_path, int workers)
{
    SimConfig cfg = load_config(config_path);
    std::string path = out_path.empty() ? cfg.output : out_path;
    if (path.empty())
        throw ConfigError("no output path: pass --out or set sim.output");
    if (workers > 0)
        cfg.workers = workers;
    cfg.validate();
    const auto records = run_trials(cfg, cfg.workers);
    auto out = open_out(path);
    write_csv(out, cfg, records);
    out.close();
    if (!out)
        throw Error("failed writing " + path);
    std::cerr << "wrote " << records.size() << " trials to " << path << '\n';
    return 0;
}

// Gain N_t |b^H a(az, zen_b)|^2 in dB, sweeping azimuth across each beam's own zenith.
int cmd_inspect(const std::string &preset, const std::string &out_path)
{
    Codebook cb;
    try {
        cb = codebook_preset(preset);
    } catch (const UnknownPreset &e) {
        throw ConfigError(e.what());
    }
    auto out = open_out(out_path);
    out << "beam_index,az_deg,gain_db\n" << std::setprecision(10);
    const double n = static_cast<double>(cb.geom.size());
    for (int b = 0; b < cb.size(); ++b) {
        const double zen = std::acos(std::clamp(cb.uz[static_cast<std::size_t>(b)], -1.0, 1.0));
        for (int az = -90; az <= 90; ++az) {
            const CVector a = steering_vector(cb.geom, az * kPi / 180.0, zen);
            const double gain = n * std::norm(cb[b].dot(a));
            out << b << ',' << az << ',' << 10.0 * std::log10(std::max(gain, 1e-30)) << '\n';
        }
    }
    return 0;
}

int cmd_report(const std::string &in_path)
{
    const auto rows = read_csv_file(in_path);
    const auto groups = summarize(rows);
    print_summary(std::cout, groups);
    std::cout << summary_json(groups).dump(2) << '\n';
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Multi-user mmWave hybrid beamforming Monte Carlo simulator"};
    app.require_subcommand(1);

    std::string config_path, out_path, preset, in_path;
    int workers = 0;

    auto *run = app.add_subcommand("run", "Run the Monte Carlo simulation and write a CSV");
    run->add_option("--config", config_path, "Configuration file")->required();
    run->add_option("--out", out_path, "Output CSV (defaults to sim.output)");
    run->add_option("--workers", workers, "Worker threads (overrides sim.workers)");

    auto *inspect = app.add_subcommand("inspect-codebook", "Write azimuth-cut gains of a codebook");
    inspect->add_option("--preset", preset, "Codebook preset (bs4, bs8, bs16, bs32, bs256, ue4, ue16)")
        ->required();
    inspect->add_option("--out", out_path, "Output CSV")->required();

    auto *report = app.add_subcommand("report", "Print sum-rate percentiles of a run CSV");
    report->add_option("--in", in_path, "Input CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        if (*run)
            return cmd_run(config_path, out_path, workers);
        if (*inspect)
            return cmd_inspect(preset, out_path);
        return cmd_report(in_path);
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}
