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

#include "mubeam/simulation.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "mubeam/alignment.hpp"
#include "mubeam/codebook.hpp"
#include "mubeam/feedback.hpp"
#include "mubeam/rates.hpp"
#include "mubeam/scheduler.hpp"

namespace mubeam {

namespace {

constexpr int kMaxRedraws = 1000;

struct Setup {
    Codebook bs;
    Codebook ue;
    double rho;
};

SchemeResult evaluate(Scheme scheme, int P, const PrecoderSet &p, std::span<const CMatrix> H,
                      std::span<const CVector> g, double rho)
{
    SchemeResult r;
    r.scheme = scheme;
    r.P = P;
    r.quantized = p.quantized;
    r.user_rates = user_rates(H, p.beams, g, rho);
    for (double u : r.user_rates)
        r.sum_rate += u;
    if (p.quantized)
        r.flags.push_back("quantized");
    return r;
}

TrialRecord run_trial_with(const SimConfig &cfg, const Setup &s, int trial_id)
{
    Rng rng = trial_rng(cfg.master_seed, static_cast<std::uint64_t>(trial_id));
    TrialRecord rec;
    rec.trial_id = trial_id;

    const int p_max = cfg.max_P();
    std::vector<ChannelRealization> channels;
    std::vector<BeamReport> reports;
    std::pair<int, int> pair{};
    for (;;) {
        channels.clear();
        reports.clear();
        for (int u = 0; u < cfg.K_cell; ++u) {
            channels.push_back(draw_channel(s.bs.geom, s.ue.geom, cfg.L, cfg.aod, cfg.aoa, rng));
            reports.push_back(build_report(channels.back().H, s.bs, s.ue, p_max, s.rho, cfg.feedback,
                                           rng, cfg.noiseless_phase));
        }
        try {
            pair = schedule_pair(reports, rng);
            break;
        } catch (const NoEligibleUser &) {
            if (++rec.redraws > kMaxRedraws)
                throw;
        }
    }

    const std::array<int, 2> users{pair.first, pair.second};
    std::vector<CMatrix> H;
    std::vector<CVector> g;
    std::vector<BeamReport> reps;
    for (int u : users) {
        H.push_back(channels[static_cast<std::size_t>(u)].H);
        reps.push_back(reports[static_cast<std::size_t>(u)]);
        g.push_back(s.ue[reps.back().g_rx]);
    }

    const auto add = [&](Scheme scheme, int P, const PrecoderSet &p,
                         std::vector<std::string> flags = {}) {
        auto r = evaluate(scheme, P, p, H, g, s.rho);
        r.flags.insert(r.flags.end(), flags.begin(), flags.end());
        rec.results.push_back(std::move(r));
        if (cfg.beam_quant && !p.quantized) {
            auto q = evaluate(scheme, P, quantize_precoder(p, *cfg.beam_quant), H, g, s.rho);
            q.flags.insert(q.flags.end(), flags.begin(), flags.end());
            rec.results.push_back(std::move(q));
        }
    };

    const PrecoderSet steer = steer_best(reps, s.bs);
    if (cfg.has(Scheme::steer))
        add(Scheme::steer, 1, steer);

    std::vector<std::vector<CVector>> zf_sets;
    for (int P : cfg.P) {
        std::vector<CRowVector> rows;
        for (const auto &r : reps)
            rows.push_back(reconstruct_row(truncated(r, P), s.bs));
        const CMatrix stacked = stack_rows(rows);

        if (cfg.has(Scheme::zf) || cfg.has(Scheme::scalar_ub)) {
            PrecoderSet zf;
            std::vector<std::string> flags;
            try {
                zf = zf_beams(stacked);
            } catch (const RankDeficient &) {
                zf = steer;
                zf.scheme = Scheme::zf;
                flags.push_back("zf_fallback");
                rec.zf_fallback = true;
            }
            zf_sets.push_back(zf.beams);
            if (cfg.has(Scheme::zf))
                add(Scheme::zf, P, zf, flags);
        }
        if (cfg.has(Scheme::ge)) {
            const RMatrix eta = uniform_eta(cfg.K, cfg.ge_eta_factor * s.rho / cfg.K);
            add(Scheme::ge, P, ge_beams(stacked, eta));
        }
    }

    if (cfg.has(Scheme::scalar_ub)) {
        const auto ub = scalar_ub(H, g, s.bs, s.rho, cfg.scalar_ub, zf_sets, rng);
        SchemeResult r = evaluate(Scheme::scalar_ub, p_max, ub.beams, H, g, s.rho);
        rec.results.push_back(std::move(r));
    }

    if (cfg.has(Scheme::alt_opt)) {
        const auto alt = alternating_opt(H, s.rho, cfg.alt_opt, rng);
        PrecoderSet p;
        p.scheme = Scheme::alt_opt;
        p.beams = alt.beams;
        SchemeResult r = evaluate(Scheme::alt_opt, 0, p, H, alt.rx_beams, s.rho);
        r.flags.push_back("iters=" + std::to_string(alt.n_iters));
        if (alt.converged)
            r.flags.push_back("converged");
        rec.alt_opt_iters = alt.n_iters;
        rec.alt_opt_converged = alt.converged;
        rec.results.push_back(std::move(r));
    }

    if (cfg.has(Scheme::mrt_mrc_zf)) {
        try {
            const auto dig = mrt_mrc_zf(H, s.rho);
            rec.results.push_back(evaluate(Scheme::mrt_mrc_zf, 0, dig.beams, H, dig.rx_beams, s.rho));
        } catch (const RankDeficient &) {
            SchemeResult r;
            r.scheme = Scheme::mrt_mrc_zf;
            r.user_rates.assign(H.size(), 0.0);
            r.flags.push_back("rank_deficient");
            rec.results.push_back(std::move(r));
        }
    }

    if (rec.redraws > 0)
        for (auto &r : rec.results)
            r.flags.push_back("redraws=" + std::to_string(rec.redraws));
    return rec;
}

Setup make_setup(const SimConfig &cfg)
{
    return {codebook_preset(cfg.bs_codebook), codebook_preset(cfg.ue_codebook), cfg.rho()};
}

} // namespace

TrialRecord run_trial(const SimConfig &cfg, int trial_id)
{
    cfg.validate();
    return run_trial_with(cfg, make_setup(cfg), trial_id);
}

std::vector<TrialRecord> run_trials(const SimConfig &cfg, int workers)
{
    cfg.validate();
    const Setup setup = make_setup(cfg);
    if (workers <= 0)
        workers = cfg.workers;
    workers = std::max(1, std::min(workers, cfg.trials));

    std::vector<TrialRecord> out(static_cast<std::size_t>(cfg.trials));
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    const auto work = [&] {
        for (;;) {
            const int t = next.fetch_add(1);
            if (t >= cfg.trials)
                return;
            try {
                out[static_cast<std::size_t>(t)] = run_trial_with(cfg, setup, t);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(cfg.trials);
                return;
            }
        }
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (auto &th : pool)
            th.join();
    }
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

std::string csv_header() { return "trial_id,scheme,P,N,M,rho_db,sum_rate,rate_u1,rate_u2,flags"; }

void write_csv(std::ostream &out, const SimConfig &cfg, const std::vector<TrialRecord> &records)
{
    const int N = codebook_preset(cfg.bs_codebook).size();
    const int M = codebook_preset(cfg.ue_codebook).size();
    std::ostringstream line;
    line << std::setprecision(12);
    out << csv_header() << '\n';
    for (const auto &rec : records) {
        for (const auto &r : rec.results) {
            line.str("");
            line << rec.trial_id << ',' << to_string(r.scheme) << ',' << r.P << ',' << N << ','
                 << M << ',' << cfg.rho_db << ',' << r.sum_rate;
            for (std::size_t u = 0; u < 2; ++u) {
                line << ',';
                if (u < r.user_rates.size())
                    line << r.user_rates[u];
            }
            line << ',';
            for (std::size_t f = 0; f < r.flags.size(); ++f)
                line << (f ? ";" : "") << r.flags[f];
            out << line.str() << '\n';
        }
    }
}

} // namespace mubeam
