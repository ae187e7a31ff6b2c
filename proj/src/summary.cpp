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

#include "mubeam/summary.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

#include "mubeam/types.hpp"

namespace mubeam {

namespace {

std::vector<std::string> split(const std::string &s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        out.push_back(cur);
    if (!s.empty() && s.back() == sep)
        out.emplace_back();
    return out;
}

double to_double(const std::string &s, int line)
{
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception &) {
        throw ConfigError("csv line " + std::to_string(line) + ": bad number '" + s + "'");
    }
}

int to_int(const std::string &s, int line)
{
    const double v = to_double(s, line);
    if (v != std::floor(v))
        throw ConfigError("csv line " + std::to_string(line) + ": expected integer '" + s + "'");
    return static_cast<int>(v);
}

} // namespace

double percentile(std::span<const double> data, double q)
{
    if (data.empty())
        throw EmptyInput("percentile of empty data");
    if (!(q >= 0.0 && q <= 100.0))
        throw OutOfRange("percentile must lie in [0, 100]");
    std::vector<double> v(data.begin(), data.end());
    std::sort(v.begin(), v.end());
    const double pos = q / 100.0 * static_cast<double>(v.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, v.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return v[lo] + frac * (v[hi] - v[lo]);
}

bool CsvRow::quantized() const
{
    return std::find(flags.begin(), flags.end(), "quantized") != flags.end();
}

std::vector<CsvRow> read_csv(std::istream &in)
{
    std::string line;
    if (!std::getline(in, line))
        throw EmptyInput("csv has no header");
    if (!line.empty() && line.back() == '\r')
        line.pop_back();
    const auto header = split(line, ',');
    if (header.size() < 10 || header[0] != "trial_id" || header[1] != "scheme")
        throw ConfigError("unrecognized csv header: " + line);

    std::vector<CsvRow> rows;
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        const auto f = split(line, ',');
        if (f.size() != header.size())
            throw ConfigError("csv line " + std::to_string(lineno) + ": expected " +
                              std::to_string(header.size()) + " fields");
        CsvRow r;
        r.trial_id = to_int(f[0], lineno);
        r.scheme = f[1];
        r.P = to_int(f[2], lineno);
        r.N = to_int(f[3], lineno);
        r.M = to_int(f[4], lineno);
        r.rho_db = to_double(f[5], lineno);
        r.sum_rate = to_double(f[6], lineno);
        for (std::size_t i = 7; i + 1 < f.size(); ++i)
            if (!f[i].empty())
                r.user_rates.push_back(to_double(f[i], lineno));
        if (!f.back().empty())
            r.flags = split(f.back(), ';');
        rows.push_back(std::move(r));
    }
    return rows;
}

std::vector<CsvRow> read_csv_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open " + path);
    return read_csv(in);
}

std::vector<GroupSummary> summarize(std::span<const CsvRow> rows)
{
    if (rows.empty())
        throw EmptyInput("no rows to summarize");
    using Key = std::tuple<std::string, int, bool>;
    std::map<Key, std::size_t> index;
    std::vector<Key> order;
    std::vector<std::vector<double>> values;
    for (const auto &r : rows) {
        Key key{r.scheme, r.P, r.quantized()};
        auto [it, inserted] = index.try_emplace(key, values.size());
        if (inserted) {
            order.push_back(key);
            values.emplace_back();
        }
        values[it->second].push_back(r.sum_rate);
    }

    std::vector<GroupSummary> out;
    constexpr std::array<double, 5> qs{5, 25, 50, 75, 95};
    for (std::size_t g = 0; g < order.size(); ++g) {
        GroupSummary s;
        std::tie(s.scheme, s.P, s.quantized) = order[g];
        const auto &v = values[g];
        s.count = static_cast<int>(v.size());
        for (double x : v)
            s.mean += x;
        s.mean /= static_cast<double>(v.size());
        for (std::size_t i = 0; i < qs.size(); ++i)
            s.pct[i] = percentile(v, qs[i]);
        out.push_back(std::move(s));
    }
    return out;
}

void print_summary(std::ostream &out, std::span<const GroupSummary> groups)
{
    const auto flags = out.flags();
    out << std::left << std::setw(12) << "scheme" << std::right << std::setw(4) << "P"
        << std::setw(6) << "quant" << std::setw(8) << "n" << std::setw(10) << "mean";
    for (const char *h : {"p5", "p25", "p50", "p75", "p95"})
        out << std::setw(10) << h;
    out << '\n' << std::fixed << std::setprecision(4);
    for (const auto &g : groups) {
        out << std::left << std::setw(12) << g.scheme << std::right << std::setw(4) << g.P
            << std::setw(6) << (g.quantized ? "yes" : "no") << std::setw(8) << g.count
            << std::setw(10) << g.mean;
        for (double p : g.pct)
            out << std::setw(10) << p;
        out << '\n';
    }
    out.flags(flags);
}

nlohmann::json summary_json(std::span<const GroupSummary> groups)
{
    auto arr = nlohmann::json::array();
    for (const auto &g : groups) {
        arr.push_back({{"scheme", g.scheme},
                       {"P", g.P},
                       {"quantized", g.quantized},
                       {"count", g.count},
                       {"mean", g.mean},
                       {"p5", g.pct[0]},
                       {"p25", g.pct[1]},
                       {"p50", g.pct[2]},
                       {"p75", g.pct[3]},
                       {"p95", g.pct[4]}});
    }
    return arr;
}

} // namespace mubeam
