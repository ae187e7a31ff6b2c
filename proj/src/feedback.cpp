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

#include "mubeam/feedback.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace mubeam {

BeamReport build_report(const CMatrix &H, const Codebook &tx, const Codebook &rx, int P,
                        double rho, const FeedbackQuantSpec &fq, Rng &rng, bool noiseless_phase)
{
    const SnrTable table = sweep_snr(H, tx, rx);
    const TopPairs pairs = top_pairs(table, P);
    const auto snr_q = fq.snr_spec();

    BeamReport rep;
    rep.g_rx = pairs.front().m;
    const CVector &g = rx[rep.g_rx];

    double phi_1 = 0.0;
    double nu_1 = 0.0;
    for (std::size_t l = 0; l < pairs.size(); ++l) {
        const BeamPair &bp = pairs[l];
        ReportRow row;
        row.n_idx = bp.n;

        double snr = bp.snr;
        if (snr_q)
            snr = db_to_linear(quantize_snr_db(linear_to_db(snr), *snr_q));
        row.gamma = std::sqrt(snr);

        const double phi = quantize_phase(
            estimate_pair_phase(H, tx[bp.n], rx[bp.m], rho, rng, noiseless_phase), fq.est_phase_bits);
        const cd beta = g.dot(rx[bp.m]);
        row.mu = quantize_amplitude(std::min(std::abs(beta), 1.0), fq.corr_amp_bits);
        const double nu = quantize_phase(std::arg(beta), fq.corr_phase_bits);

        if (l == 0) {
            phi_1 = phi;
            nu_1 = nu;
        } else {
            row.rel_phase = phi - phi_1;
            row.rel_corr_phase = nu - nu_1;
        }
        rep.rows.push_back(row);
    }
    return rep;
}

BeamReport truncated(const BeamReport &report, int P)
{
    if (P < 1 || P > report.P())
        throw OutOfRange("truncated: P outside [1, report size]");
    BeamReport out = report;
    out.rows.resize(static_cast<std::size_t>(P));
    return out;
}

CRowVector reconstruct_row(const BeamReport &report, const Codebook &tx)
{
    CRowVector row = CRowVector::Zero(tx.geom.size());
    for (const ReportRow &r : report.rows) {
        if (r.n_idx < 0 || r.n_idx >= tx.size())
            throw BadIndex("reconstruct_row: beam index " + std::to_string(r.n_idx) +
                           " outside codebook");
        const cd w = r.mu * r.gamma * std::polar(1.0, r.rel_phase + r.rel_corr_phase);
        row += w * tx[r.n_idx].adjoint();
    }
    return row;
}

int feedback_bits(int P, int N, const FeedbackQuantSpec &fq)
{
    if (P < 1 || N < 1)
        throw OutOfRange("feedback_bits: P and N must be positive");
    const auto need = [](Bits b, const char *name) {
        if (!b)
            throw OutOfRange(std::string("feedback_bits: field ") + name + " has infinite precision");
        return *b;
    };
    // ceil(log2 N) bits address the codebook.
    const int index_bits = std::bit_width(static_cast<unsigned>(N - 1));
    const int per_row = index_bits + need(fq.snr_bits, "snr") + need(fq.corr_amp_bits, "corr_amp");
    if (P == 1)
        return per_row;
    return P * per_row +
           (P - 1) * (need(fq.est_phase_bits, "est_phase") + need(fq.corr_phase_bits, "corr_phase"));
}

FeedbackQuantSpec heuristic_feedback_spec(int P)
{
    FeedbackQuantSpec fq;
    fq.snr_bits = 2;
    fq.snr_span_db = default_snr_span_db(2);
    fq.corr_amp_bits = P;
    fq.est_phase_bits = (P + 1) / 2;
    fq.corr_phase_bits = std::max(1, P / 2); // unused when P = 1
    return fq;
}

nlohmann::json to_json(const BeamReport &report)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const ReportRow &r : report.rows)
        rows.push_back({{"n_idx", r.n_idx},
                        {"gamma", r.gamma},
                        {"rel_phase", r.rel_phase},
                        {"mu", r.mu},
                        {"rel_corr_phase", r.rel_corr_phase}});
    return {{"rows", rows}, {"g_rx", report.g_rx}};
}

BeamReport report_from_json(const nlohmann::json &j)
{
    BeamReport rep;
    rep.g_rx = j.at("g_rx").get<int>();
    for (const auto &r : j.at("rows"))
        rep.rows.push_back({r.at("n_idx").get<int>(), r.at("gamma").get<double>(),
                            r.at("rel_phase").get<double>(), r.at("mu").get<double>(),
                            r.at("rel_corr_phase").get<double>()});
    return rep;
}

} // namespace mubeam
