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

#include "mubeam/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "mubeam/codebook.hpp"

namespace mubeam {

namespace {

constexpr double kDeg = kPi / 180.0;

std::string trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

// Drops a trailing comment that is not inside a quoted string.
std::string strip_comment(const std::string &line)
{
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"')
            quoted = !quoted;
        else if (line[i] == '#' && !quoted)
            return line.substr(0, i);
    }
    return line;
}

class Table {
public:
    explicit Table(std::map<std::string, std::string> kv) : kv_(std::move(kv)) {}

    bool has(const std::string &key) const { return kv_.count(key) != 0; }

    const std::string &raw(const std::string &key)
    {
        used_.insert(key);
        return kv_.at(key);
    }

    template <typename T, typename F>
    void read(const std::string &key, T &dst, F &&convert)
    {
        if (!has(key))
            return;
        try {
            dst = convert(raw(key));
        } catch (const ConfigError &e) {
            throw ConfigError(key + ": " + e.what());
        }
    }

    void reject_unused() const
    {
        for (const auto &[k, v] : kv_)
            if (!used_.count(k))
                throw ConfigError("unknown config key '" + k + "'");
    }

private:
    std::map<std::string, std::string> kv_;
    std::set<std::string> used_;
};

double to_double(const std::string &s)
{
    if (s == "inf" || s == "+inf")
        return std::numeric_limits<double>::infinity();
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size())
            throw ConfigError("expected a number, got '" + s + "'");
        return v;
    } catch (const std::logic_error &) {
        throw ConfigError("expected a number, got '" + s + "'");
    }
}

long long to_integer(const std::string &s)
{
    long long v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw ConfigError("expected an integer, got '" + s + "'");
    return v;
}

int to_int(const std::string &s) { return static_cast<int>(to_integer(s)); }

bool to_bool(const std::string &s)
{
    if (s == "true")
        return true;
    if (s == "false")
        return false;
    throw ConfigError("expected true or false, got '" + s + "'");
}

std::string to_string_value(const std::string &s)
{
    if (s.size() < 2 || s.front() != '"' || s.back() != '"')
        throw ConfigError("expected a quoted string, got '" + s + "'");
    return s.substr(1, s.size() - 2);
}

std::vector<std::string> to_list(const std::string &s)
{
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ConfigError("expected an array, got '" + s + "'");
    std::vector<std::string> out;
    std::stringstream ss(s.substr(1, s.size() - 2));
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty())
            out.push_back(item);
    }
    return out;
}

Bits to_bits(const std::string &s)
{
    if (s == "inf" || s == "\"inf\"")
        return kUnquantized;
    const int b = to_int(s);
    if (b < 1)
        throw ConfigError("bit depth must be >= 1 or inf");
    return b;
}

std::pair<double, double> to_deg_range(const std::string &s)
{
    const auto items = to_list(s);
    if (items.size() != 2)
        throw ConfigError("expected [min, max] in degrees");
    return {to_double(items[0]) * kDeg, to_double(items[1]) * kDeg};
}

} // namespace

std::map<std::string, std::string> parse_key_values(const std::string &text)
{
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(strip_comment(line));
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) + ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": empty key or value");
        const std::string full = section.empty() ? key : section + "." + key;
        if (!kv.emplace(full, value).second)
            throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + full + "'");
    }
    return kv;
}

int SimConfig::max_P() const { return *std::max_element(P.begin(), P.end()); }

bool SimConfig::has(Scheme s) const
{
    return std::find(schemes.begin(), schemes.end(), s) != schemes.end();
}

void SimConfig::validate() const
{
    const auto fail = [](const std::string &msg) { throw ConfigError(msg); };
    if (L < 1)
        fail("channel.L must be >= 1");
    if (K != 2)
        fail("sim.K must be 2 (the scheduler pairs two users)");
    if (K_cell < K)
        fail("sim.K_cell must be >= K");
    if (trials < 1)
        fail("sim.trials must be >= 1");
    if (workers < 1)
        fail("sim.workers must be >= 1");
    if (P.empty())
        fail("sim.P must list at least one rank");
    if (schemes.empty())
        fail("sim.schemes must not be empty");
    try {
        aod.validate();
        aoa.validate();
        const Codebook bs = codebook_preset(bs_codebook);
        const Codebook ue = codebook_preset(ue_codebook);
        for (int p : P)
            if (p < 1 || p > bs.size())
                fail("sim.P entries must lie in [1, N]");
        if (feedback.snr_bits) {
            if (!(feedback.snr_span_db > 0))
                fail("feedback.snr_span_db must be positive");
        }
        if (beam_quant)
            beam_quant->amplitude_levels_db();
    } catch (const UnknownPreset &e) {
        fail(e.what());
    } catch (const OutOfRange &e) {
        fail(e.what());
    }
    if (scalar_ub.restarts < 1)
        fail("bounds.scalar_ub.restarts must be >= 1");
    if (alt_opt.n_stop < 1)
        fail("bounds.alt_opt.n_stop must be >= 1");
    if (alt_opt.eta_grid.empty())
        fail("bounds.alt_opt.eta_grid must not be empty");
}

SimConfig parse_config(const std::string &text)
{
    Table t(parse_key_values(text));
    SimConfig c;

    t.read("sim.trials", c.trials, to_int);
    t.read("sim.master_seed", c.master_seed,
           [](const std::string &s) { return static_cast<std::uint64_t>(to_integer(s)); });
    t.read("sim.workers", c.workers, to_int);
    t.read("sim.K_cell", c.K_cell, to_int);
    t.read("sim.K", c.K, to_int);
    t.read("sim.rho_db", c.rho_db, to_double);
    t.read("sim.noiseless_phase", c.noiseless_phase, to_bool);
    t.read("sim.output", c.output, to_string_value);
    t.read("sim.P", c.P, [](const std::string &s) {
        std::vector<int> out;
        for (const auto &it : to_list(s))
            out.push_back(to_int(it));
        return out;
    });
    t.read("sim.schemes", c.schemes, [](const std::string &s) {
        std::vector<Scheme> out;
        for (const auto &it : to_list(s))
            out.push_back(parse_scheme(to_string_value(it)));
        return out;
    });

    t.read("channel.L", c.L, to_int);
    const auto read_range = [&](const std::string &key, double &lo, double &hi) {
        if (t.has(key)) {
            try {
                std::tie(lo, hi) = to_deg_range(t.raw(key));
            } catch (const ConfigError &e) {
                throw ConfigError(key + ": " + e.what());
            }
        }
    };
    read_range("channel.aod_az_deg", c.aod.az_min, c.aod.az_max);
    read_range("channel.aod_zen_deg", c.aod.zen_min, c.aod.zen_max);
    read_range("channel.aoa_az_deg", c.aoa.az_min, c.aoa.az_max);
    read_range("channel.aoa_zen_deg", c.aoa.zen_min, c.aoa.zen_max);

    t.read("codebook.bs", c.bs_codebook, to_string_value);
    t.read("codebook.ue", c.ue_codebook, to_string_value);

    if (t.has("feedback.preset")) {
        const std::string preset = to_string_value(t.raw("feedback.preset"));
        if (preset == "heuristic")
            c.feedback = heuristic_feedback_spec(*std::max_element(c.P.begin(), c.P.end()));
        else if (preset != "infinite")
            throw ConfigError("feedback.preset must be \"heuristic\" or \"infinite\"");
    }
    t.read("feedback.snr_bits", c.feedback.snr_bits, to_bits);
    if (c.feedback.snr_bits)
        c.feedback.snr_span_db = default_snr_span_db(*c.feedback.snr_bits);
    t.read("feedback.snr_max_db", c.feedback.snr_max_db, to_double);
    t.read("feedback.snr_span_db", c.feedback.snr_span_db, to_double);
    t.read("feedback.est_phase_bits", c.feedback.est_phase_bits, to_bits);
    t.read("feedback.corr_amp_bits", c.feedback.corr_amp_bits, to_bits);
    t.read("feedback.corr_phase_bits", c.feedback.corr_phase_bits, to_bits);

    bool quant = false;
    t.read("beam_quant.enabled", quant, to_bool);
    if (quant) {
        BeamQuantSpec bq = beam_preset_b4();
        if (t.has("beam_quant.preset")) {
            const std::string p = to_string_value(t.raw("beam_quant.preset"));
            if (p == "b4")
                bq = beam_preset_b4();
            else if (p == "b6")
                bq = beam_preset_b6();
            else
                throw ConfigError("beam_quant.preset must be \"b4\" or \"b6\"");
        }
        t.read("beam_quant.amp_bits", bq.amp_bits, to_bits);
        t.read("beam_quant.phase_bits", bq.phase_bits, to_bits);
        t.read("beam_quant.step_db", bq.step_db, to_double);
        c.beam_quant = bq;
    } else {
        for (const char *k : {"beam_quant.preset", "beam_quant.amp_bits", "beam_quant.phase_bits",
                              "beam_quant.step_db"})
            if (t.has(k))
                t.raw(k);
    }

    t.read("precoders.ge.eta_factor", c.ge_eta_factor, to_double);

    t.read("bounds.scalar_ub.restarts", c.scalar_ub.restarts, to_int);
    t.read("bounds.scalar_ub.max_iters", c.scalar_ub.max_iters, to_int);
    t.read("bounds.scalar_ub.step_init", c.scalar_ub.step_init, to_double);
    t.read("bounds.scalar_ub.grad_eps", c.scalar_ub.grad_eps, to_double);
    t.read("bounds.scalar_ub.tol", c.scalar_ub.tol, to_double);

    t.read("bounds.alt_opt.n_stop", c.alt_opt.n_stop, to_int);
    t.read("bounds.alt_opt.tol", c.alt_opt.tol, to_double);
    t.read("bounds.alt_opt.eta_grid", c.alt_opt.eta_grid, [](const std::string &s) {
        std::vector<double> out;
        for (const auto &it : to_list(s))
            out.push_back(to_double(it));
        return out;
    });

    t.reject_unused();
    c.validate();
    return c;
}

SimConfig load_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

} // namespace mubeam
