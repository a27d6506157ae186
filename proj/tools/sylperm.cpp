/*
 * Copyright 2026 The sylperm authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end: generate Sylvester matrices, compute exact
// permanents, run verification campaigns, benchmark engines.
//
// Exit codes: 0 = success / all checks pass; 1 = a verification failed;
// 2 = usage, parse, or I/O error.

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sylperm/errors.hpp"
#include "sylperm/matrix.hpp"
#include "sylperm/permanent.hpp"
#include "sylperm/valuation.hpp"
#include "sylperm/verify.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path + " for reading");
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("failed writing " + path);
}

sylperm::EngineChoice parse_engine(const std::string& name) {
    const auto engine = sylperm::engine_from_name(name);
    if (!engine) throw std::invalid_argument("unknown engine '" + name + "'");
    return *engine;
}

int run_gen(int n, const std::string& out_path) {
    const std::string text = sylperm::format_matrix(sylperm::sylvester(n));
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return 0;
}

int run_per(const std::string& file, std::optional<int> sylvester_n,
            const std::string& engine_name, int threads, const std::string& expect) {
    sylperm::ExactInt value;
    if (sylvester_n) {
        const sylperm::SignMatrix h = sylperm::sylvester(*sylvester_n);
        const sylperm::EngineChoice engine =
            engine_name.empty()
                ? (*sylvester_n >= 2 && *sylvester_n <= 5 ? sylperm::EngineChoice::SylvesterFast
                                                          : sylperm::EngineChoice::Ryser)
                : parse_engine(engine_name);
        value = sylperm::permanent(h, engine, threads);
    } else {
        const sylperm::IntMatrix a = sylperm::parse_matrix(read_file(file));
        const sylperm::EngineChoice engine =
            engine_name.empty() ? sylperm::EngineChoice::Ryser : parse_engine(engine_name);
        value = sylperm::permanent(a, engine, threads);
    }
    if (!expect.empty()) {
        const sylperm::ExactInt expected(expect);
        if (value != expected) {
            std::cerr << "permanent mismatch: computed " << value.str() << ", expected "
                      << expected.str() << "\n";
            return 1;
        }
    }
    std::cout << value.str() << "\n";
    return 0;
}

int run_verify(int n_min, int n_max, bool deep, int threads, const std::string& out_path) {
    sylperm::CampaignOptions opts;
    opts.n_min = n_min;
    opts.n_max = n_max;
    opts.deep = deep;
    opts.threads = threads;

    std::ofstream file_out;
    if (!out_path.empty()) {
        file_out.open(out_path, std::ios::binary);
        if (!file_out) throw std::runtime_error("cannot open " + out_path + " for writing");
    }
    std::ostream& out = out_path.empty() ? std::cout : file_out;

    const auto reports = sylperm::run_campaign(
        opts, [&](const sylperm::VerifyReport& r) { out << sylperm::report_line(r) << std::endl; });

    std::size_t failed = 0, waived = 0;
    for (const auto& r : reports)
        if (!r.pass)
            (r.expected_fail ? waived : failed) += 1;
    std::cerr << reports.size() << " checks, " << failed << " failed";
    if (waived) std::cerr << ", " << waived << " expected-fail";
    std::cerr << "\n";
    return sylperm::campaign_exit_code(reports);
}

std::vector<sylperm::EngineChoice> default_bench_engines(int n) {
    using sylperm::EngineChoice;
    const sylperm::Index m = sylperm::Index(1) << n;
    const sylperm::EngineLimits limits;
    std::vector<EngineChoice> engines;
    if (m <= limits.naive_max) engines.push_back(EngineChoice::Naive);
    if (m <= limits.laplace_max) engines.push_back(EngineChoice::Laplace);
    if (m <= limits.ryser_max) engines.push_back(EngineChoice::Ryser);
    if (m <= limits.glynn_max) engines.push_back(EngineChoice::Glynn);
    if (m <= limits.expansion_max) engines.push_back(EngineChoice::SumExpansion);
    if (n >= 2 && n <= 5) engines.push_back(EngineChoice::SylvesterFast);
    return engines;
}

int run_bench(int n_min, int n_max, const std::string& engines_csv) {
    if (n_min < 0 || n_min > n_max) throw std::invalid_argument("bench range is empty");
    std::vector<sylperm::EngineChoice> requested;
    if (!engines_csv.empty()) {
        std::stringstream ss(engines_csv);
        std::string token;
        while (std::getline(ss, token, ',')) requested.push_back(parse_engine(token));
    }
    for (int n = n_min; n <= n_max; ++n) {
        const sylperm::SignMatrix h = sylperm::sylvester(n);
        const auto engines = requested.empty() ? default_bench_engines(n) : requested;
        for (const auto engine : engines) {
            sylperm::ExactInt value;
            std::vector<std::int64_t> runs;
            for (int rep = 0; rep < 4; ++rep) { // one warm-up, three timed
                const auto t0 = std::chrono::steady_clock::now();
                value = sylperm::permanent(h, engine, 0);
                const auto t1 = std::chrono::steady_clock::now();
                if (rep > 0)
                    runs.push_back(
                        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count());
            }
            std::sort(runs.begin(), runs.end());
            nlohmann::json line{{"check", "bench"},
                                {"n", n},
                                {"size", h.size()},
                                {"value", value.str()},
                                {"pass", true},
                                {"engine", std::string(sylperm::engine_name(engine))},
                                {"elapsed_ms", runs[runs.size() / 2]}};
            std::cout << line.dump() << std::endl;
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact permanents and 2-adic valuations of Sylvester +-1 matrices"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "emit a Sylvester matrix in the text format");
    int gen_n = 0;
    std::string gen_out;
    gen->add_option("--n", gen_n, "construction order (0..12)")->required();
    gen->add_option("--out", gen_out, "output path (default: stdout)");

    auto* per = app.add_subcommand("per", "compute one exact permanent");
    std::string per_file;
    int per_n = 0;
    std::string per_engine;
    int per_threads = 0;
    std::string per_expect;
    auto* per_file_opt = per->add_option("--file", per_file, "matrix file in the text format");
    auto* per_syl_opt = per->add_option("--sylvester", per_n, "use sylvester(N) as the input");
    per_file_opt->excludes(per_syl_opt);
    per_syl_opt->excludes(per_file_opt);
    per->add_option("--engine", per_engine,
                    "naive|laplace|ryser|glynn|sum-expansion|sylvester-fast (default: auto)");
    per->add_option("--threads", per_threads, "worker count (default: auto)")
        ->check(CLI::PositiveNumber);
    per->add_option("--expect", per_expect,
                    "exit 1 unless the permanent equals this decimal value");

    auto* verify = app.add_subcommand("verify", "run the verification campaign");
    int v_min = 0, v_max = 0;
    bool v_deep = false;
    int v_threads = 0;
    std::string v_out;
    verify->add_option("--n-min", v_min, "first order")->required();
    verify->add_option("--n-max", v_max, "last order")->required();
    verify->add_flag("--deep", v_deep, "include minor-equality, expansion and n=5 checks");
    verify->add_option("--threads", v_threads, "worker count (default: auto)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--out", v_out, "write report lines here instead of stdout");

    auto* bench = app.add_subcommand("bench", "time each engine per order");
    int b_min = 0, b_max = 0;
    std::string b_engines;
    bench->add_option("--n-min", b_min, "first order")->required();
    bench->add_option("--n-max", b_max, "last order")->required();
    bench->add_option("--engines", b_engines, "comma-separated engine list (default: all valid)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return run_gen(gen_n, gen_out);
        if (per->parsed()) {
            if (per_file_opt->count() == 0 && per_syl_opt->count() == 0) {
                std::cerr << "per requires --file or --sylvester\n";
                return 2;
            }
            return run_per(per_file,
                           per_syl_opt->count() ? std::optional<int>(per_n) : std::nullopt,
                           per_engine, per_threads, per_expect);
        }
        if (verify->parsed()) return run_verify(v_min, v_max, v_deep, v_threads, v_out);
        if (bench->parsed()) return run_bench(b_min, b_max, b_engines);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
