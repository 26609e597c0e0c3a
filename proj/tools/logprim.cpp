// logprim: closed forms of iterated antiderivatives of ln^j(1+x), their
// denominator structure, and infinite-log-concavity certification.

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "logprim/denoms.hpp"
#include "logprim/harmonic.hpp"
#include "logprim/iterated.hpp"
#include "logprim/logconcave.hpp"
#include "logprim/numtheory.hpp"
#include "logprim/oeis.hpp"

namespace {

using namespace logprim;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitDegraded = 4;

std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v ? v : fallback;
}

int cmd_compute(int n, int j, const std::string& format) {
    if (n > 60 || j > 8)
        throw BudgetExceeded("compute: n <= 60, j <= 8");
    IteratedResult r = f_closed(n, j);
    if (format == "json") {
        nlohmann::json out{{"n", n},
                           {"j", j},
                           {"a_part", nlohmann::json::parse(
                                          polynomial_to_json(r.a_part))},
                           {"expr", nlohmann::json::parse(
                                        logpoly_to_json(r.expr))}};
        nlohmann::json bs = nlohmann::json::array();
        for (const auto& b : r.b_coeffs) bs.push_back(rational_to_string(b));
        out["b_coeffs"] = bs;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "f_{" << n << "," << j << "}(x) = " << r.expr.to_string()
                  << "\n";
        std::cout << "A-part: " << r.a_part.to_string() << "\n";
        for (int k = 1; k <= (int)r.b_coeffs.size(); ++k)
            std::cout << "b_{" << n << "," << k << "," << j
                      << "} = " << rational_to_string(r.b_coeffs[k - 1]) << "\n";
    }
    return kExitPass;
}

struct Failure {
    std::string what;
};

int report_sweep(const std::string& suite, const std::vector<Failure>& fails,
                 long checks) {
    if (fails.empty()) {
        std::cout << suite << ": PASS (" << checks << " checks)\n";
        return kExitPass;
    }
    std::cout << suite << ": FAIL (" << fails.size() << "/" << checks
              << " checks failed)\n";
    std::cout << "smallest counterexample: " << fails.front().what << "\n";
    return kExitVerifyFail;
}

int cmd_verify(const std::string& suite, int max_n, int max_j) {
    std::vector<Failure> fails;
    long checks = 0;
    if (suite == "closed-forms") {
        for (int n = 0; n <= max_n && fails.empty(); ++n)
            for (int j = 1; j <= max_j && fails.empty(); ++j) {
                ++checks;
                if (!(f_closed(n, j).expr == f_oracle(n, j, max_n, max_j)))
                    fails.push_back({"f_closed != f_oracle at n=" +
                                     std::to_string(n) + " j=" +
                                     std::to_string(j)});
            }
    } else if (suite == "denominators") {
        for (int n = 0; n <= max_n; ++n) {
            ++checks;
            DenominatorReport r = denominator_report(n);
            if (!r.match || (n >= 2 && r.beta != r.mangoldt)) {
                fails.push_back({"denominator mismatch at n=" +
                                 std::to_string(n) + ": " + r.to_json()});
                break;
            }
            std::cout << r.to_json() << "\n";
        }
    } else if (suite == "lemma32") {
        for (int n = 1; n <= max_n && fails.empty(); ++n)
            for (const auto& pp : prime_powers_up_to(n)) {
                ++checks;
                if (!lemma32_check(n, pp.p, (int)pp.k)) {
                    fails.push_back({"lemma 3.2 fails at n=" +
                                     std::to_string(n) + " p=" +
                                     std::to_string(pp.p) + " k=" +
                                     std::to_string(pp.k)});
                    break;
                }
            }
    } else if (suite == "identity") {
        for (int n = 1; n <= max_n && fails.empty(); ++n) {
            ++checks;
            if (!identity_check(n))
                fails.push_back({"identity fails at n=" + std::to_string(n)});
        }
    } else if (suite == "b-coeffs") {
        for (int n = 0; n <= max_n && fails.empty(); ++n)
            for (int j = 1; j <= max_j && fails.empty(); ++j)
                for (int k = 1; k <= j; ++k) {
                    ++checks;
                    if (b_coeff(n, k, j) != b_coeff_rec(n, k, j)) {
                        fails.push_back({"b_coeff != b_coeff_rec at n=" +
                                         std::to_string(n) + " k=" +
                                         std::to_string(k) + " j=" +
                                         std::to_string(j)});
                        break;
                    }
                }
    } else if (suite == "cor58") {
        for (int n = 0; n <= max_n && fails.empty(); ++n)
            for (int j = 1; j <= max_j && fails.empty(); ++j)
                for (int k = 1; k <= j; ++k) {
                    ++checks;
                    if (!cor58_check(n, k, j)) {
                        fails.push_back(
                            {"prime bound violated: b_{" + std::to_string(n) +
                             "," + std::to_string(k) + "," + std::to_string(j) +
                             "} = " + rational_to_string(b_coeff(n, k, j))});
                        break;
                    }
                }
    } else {
        std::cerr << "unknown suite: " << suite << "\n";
        return kExitUsage;
    }
    return report_sweep(suite, fails, checks);
}

int cmd_certify(const std::string& family, int from, int to, int max_iter,
                const std::string& format, int parallelism) {
    auto make_seq = [&](int n) -> Seq {
        if (family == "An") return a_poly(n).coeffs();
        if (family == "binomial") return binomial_row(n);
        return d_row(n);  // dlm: n plays the role of m
    };
    std::vector<Certificate> certs(to - from + 1);
    std::atomic<int> cursor{from};
    auto worker = [&] {
        for (;;) {
            int n = cursor.fetch_add(1);
            if (n > to) return;
            certs[n - from] = certify(make_seq(n), max_iter, family, n);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, parallelism); ++t)
        pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    bool all_certified = true;
    if (format == "csv") std::cout << "family,n,iterations_used,status\n";
    for (const auto& c : certs) {
        if (c.status != CertStatus::Certified) all_certified = false;
        if (format == "json")
            std::cout << c.to_json() << "\n";
        else if (format == "csv")
            std::cout << c.family << ',' << c.n << ',' << c.iterations_used
                      << ',' << c.status_string() << "\n";
        else
            std::cout << c.family << " n=" << c.n << ": " << c.status_string()
                      << " (iterations=" << c.iterations_used << ")\n";
        if (c.status == CertStatus::Refuted)
            std::cerr << "REFUTATION WITNESS (check this by hand!): "
                      << c.to_json() << "\n";
    }
    return all_certified ? kExitPass : kExitVerifyFail;
}

int cmd_table(const std::string& which, int max_n) {
    if (which == "alpha") {
        std::cout << DenominatorReport::csv_header() << "\n";
        for (int n = 0; n <= max_n; ++n)
            std::cout << denominator_report(n).to_csv_row() << "\n";
    } else {
        std::cout << "n,beta,mangoldt\n";
        for (int n = 2; n <= max_n; ++n)
            std::cout << n << ',' << beta(n).get_str() << ','
                      << mangoldt_exp(n) << "\n";
    }
    return kExitPass;
}

int cmd_oeis(const std::string& seq_csv, bool offline,
             const std::string& cache_dir) {
    std::vector<Integer> seq;
    std::stringstream ss(seq_csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        // trim spaces
        size_t b = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) continue;
        seq.emplace_back(tok.substr(b, e - b + 1));
    }
    if (seq.empty() || seq.size() > 64) {
        std::cerr << "oeis: sequence must have 1..64 terms\n";
        return kExitUsage;
    }
    OeisClient client(offline, cache_dir);
    OeisResult res = client.lookup(seq);
    if (res.outcome == OeisOutcome::NetworkFallback)
        std::cerr << "warning: network unavailable, served from cache\n";
    if (res.outcome == OeisOutcome::CacheMiss) {
        std::cout << "no cached result for this sequence\n";
        return kExitDegraded;
    }
    if (res.matches.empty()) {
        std::cout << "no OEIS matches on record\n";
        return kExitPass;
    }
    for (const auto& m : res.matches)
        std::cout << m.sequence_id << " (prefix " << m.matched_prefix_len
                  << "): " << m.name << "\n";
    if (res.truncated) std::cout << "(truncated to top 10)\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Iterated antiderivatives of powers of ln(1+x): exact closed "
                 "forms, denominator tables, log-concavity certificates"};
    app.require_subcommand(1);

    std::string cache_dir = env_or("LOGPRIM_CACHE_DIR", "");
    bool env_offline = env_or("LOGPRIM_OEIS_OFFLINE", "") == "1";

    int n = 1, j = 1, max_n = 20, max_j = 6, from = 1, to = 100, max_iter = 12;
    int parallelism = (int)std::max(1u, std::thread::hardware_concurrency());
    std::string format = "plain", suite, family, which = "alpha", seq_csv;
    bool offline = false;

    auto* compute = app.add_subcommand("compute", "Print the closed form f_{n,j}");
    compute->add_option("--n", n, "iteration count")->required();
    compute->add_option("--j", j, "log power")->required();
    compute->add_option("--format", format)->check(CLI::IsMember({"plain", "json", "csv"}));

    auto* verify = app.add_subcommand("verify", "Run a verification sweep");
    verify->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"closed-forms", "denominators", "lemma32",
                               "identity", "b-coeffs", "cor58"}));
    verify->add_option("--max-n", max_n);
    verify->add_option("--max-j", max_j);

    auto* certify_cmd = app.add_subcommand("certify", "Certify infinite log-concavity");
    certify_cmd->add_option("--family", family)
        ->required()
        ->check(CLI::IsMember({"An", "binomial", "dlm"}));
    certify_cmd->add_option("--from", from);
    certify_cmd->add_option("--to", to);
    certify_cmd->add_option("--max-iter", max_iter);
    certify_cmd->add_option("--format", format)->check(CLI::IsMember({"plain", "json", "csv"}));
    certify_cmd->add_option("--parallelism", parallelism)->check(CLI::PositiveNumber);

    auto* table = app.add_subcommand("table", "Denominator tables (CSV)");
    table->add_option("--which", which)->check(CLI::IsMember({"alpha", "beta"}));
    table->add_option("--max-n", max_n);

    auto* oeis = app.add_subcommand("oeis", "Look a sequence up in the OEIS");
    oeis->add_option("--seq", seq_csv, "comma-separated terms")->required();
    oeis->add_flag("--offline", offline, "use only cache and bundled fixtures");
    oeis->add_option("--cache-dir", cache_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (compute->parsed()) return cmd_compute(n, j, format);
        if (verify->parsed()) return cmd_verify(suite, max_n, max_j);
        if (certify_cmd->parsed())
            return cmd_certify(family, from, to, max_iter, format, parallelism);
        if (table->parsed()) return cmd_table(which, max_n);
        if (oeis->parsed())
            return cmd_oeis(seq_csv, offline || env_offline, cache_dir);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::length_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
