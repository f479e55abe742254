// Acceptance battery: one pass/fail line per criterion, exact arithmetic
// throughout. Criterion 9 drives the CLI binary and compares report bytes
// against the golden files.
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "wittsuper/suites.hpp"

using namespace wittsuper;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    int id;
    std::string label;
    bool pass;
    std::string detail;
};

std::vector<Criterion> results;

void record(int id, const std::string& label, bool pass, const std::string& detail = "") {
    results.push_back({id, label, pass, detail});
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << label
              << (detail.empty() ? "" : " [" + detail + "]") << "\n";
}

double run_timed(const std::function<bool()>& fn, bool& ok) {
    auto start = std::chrono::steady_clock::now();
    ok = fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& cli, const std::string& args, const fs::path& out) {
    std::string cmd = cli + " " + args + " --out " + out.string() + " >/dev/null 2>&1";
    return std::system(cmd.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli, src, tmp;
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string flag = argv[i];
        if (flag == "--cli") cli = argv[i + 1];
        if (flag == "--src") src = argv[i + 1];
        if (flag == "--tmp") tmp = argv[i + 1];
    }
    int jobs = 2;

    // 1. super-Jacobi and antisymmetry on W_{2,2}, degree <= 3, under 60 s
    {
        bool ok = false;
        double secs = run_timed(
            [&] {
                SuiteOptions opt{2, 2, 1, 3, jobs, 8};
                return run_suite("antisym", opt).pass() && run_suite("jacobi", opt).pass();
            },
            ok);
        record(1, "super-Jacobi + antisymmetry, W_{2,2} deg<=3", ok && secs < 60.0,
               "elapsed " + std::to_string(secs) + " s");
    }

    // 2. pi homomorphism at (1,1), (2,1), (1,2), degree <= 3, < 60 s each
    {
        bool all = true;
        std::string detail;
        for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}}) {
            bool ok = false;
            double secs = run_timed(
                [&, m = m, n = n] {
                    SuiteOptions opt{m, n, 1, 3, jobs, 8};
                    return run_suite("pi", opt).pass();
                },
                ok);
            all = all && ok && secs < 60.0;
            detail += "(" + std::to_string(m) + "," + std::to_string(n) + ") " + std::to_string(secs) + "s ";
        }
        record(2, "pi([x,y]) = [pi(x),pi(y)] after the sign audit", all, detail);
    }

    // 3. diff^2 = 0 and [diff, pi(x)] = 0 on windows, all basis x deg <= 3
    {
        SuiteOptions opt{1, 1, 1, 3, jobs, 8};
        SuiteResult r = run_suite("diffcomm", opt);
        bool dims_ok = true;
        for (const SuiteItem& item : r.items)
            if (item.detail.find("dim ") != std::string::npos) {
                auto pos = item.detail.rfind("dim ");
                long d = std::atol(item.detail.c_str() + pos + 4);
                if (d > 2000) dims_ok = false;
            }
        record(3, "diff^2 = 0 and [diff, pi(x)] = 0 as exact window identities", r.pass() && dims_ok);
    }

    // 4. omega r = 2 annihilation of C[t]; omegabar r0 found on >= 3 fixtures
    {
        SuiteOptions opt{2, 1, 1, 3, jobs, 8};
        SuiteResult a = run_suite("omega", opt);
        SuiteResult b = run_suite("omegabar", opt);
        std::string r0s;
        int found = 0;
        for (const auto& [k, v] : b.metrics)
            if (k.rfind("r0.", 0) == 0) {
                r0s += k + "=" + v + " ";
                if (v != "none") ++found;
            }
        record(4, "omega/omegabar annihilation with recorded r0", a.pass() && b.pass() && found >= 3, r0s);
    }

    // 5. X/Y reconstruction identities, commutant laws, T closure
    {
        bool ok = true;
        for (int q : {1, 2}) {
            SuiteOptions opt{q + 1, 1, q, 3, jobs, 10};
            ok = ok && run_suite("recon", opt).pass();
        }
        SuiteOptions opt{2, 1, 1, 2, jobs, 10};
        ok = ok && run_suite("tclosure", opt).pass();
        record(5, "reconstruction identities, commutants, T closure at (1,1) and (2,1)", ok);
    }

    // 6. shadow machinery across the cone fixture battery
    {
        SuiteOptions opt{2, 1, 1, 3, jobs, 8};
        SuiteResult r = run_suite("shadowfix", opt);
        record(6, "shadow partitions, closure laws, parabolic feasibility on >= 6 fixtures", r.pass(),
               std::to_string(shadow_fixtures().size()) + " fixtures");
    }

    // 7. classification battery with diff-image window evidence
    {
        SuiteOptions opt{1, 1, 1, 3, jobs, 8};
        SuiteResult r = run_suite("classify", opt);
        record(7, "main-theorem trichotomy on the fixture battery", r.pass(),
               std::to_string(r.items.size()) + " checks");
    }

    // 8. hc condition: product bound and strict growth across nested windows
    {
        SuiteOptions opt{2, 1, 1, 3, jobs, 8};
        SuiteResult r = run_suite("hc", opt);
        record(8, "finite-multiplicity condition with window evidence", r.pass());
    }

    // 9. CLI determinism and golden reports
    {
        bool ok = true;
        std::string detail;
        if (cli.empty() || src.empty() || tmp.empty()) {
            ok = false;
            detail = "missing --cli/--src/--tmp";
        } else {
            fs::create_directories(tmp);
            struct Job {
                std::string name;
                std::string args;
            };
            std::vector<Job> jobs_list = {
                {"verify_recon", "verify --suite recon --q 1 --n 1 --deg 3"},
                {"shadow_zline", "shadow --support " + src + "/fixtures/zline.cone"},
                {"classify_trivial", "classify --P A --M trivial --m 1 --n 1"},
                {"levi_rank3", "levi --support " + src + "/fixtures/rank3.cone --n 1"},
                {"bracket_fields",
                 "bracket " + src + "/fixtures/x_field.json " + src + "/fixtures/y_field.json --m 1 --n 1"},
            };
            for (const Job& j : jobs_list) {
                fs::path out1 = fs::path(tmp) / (j.name + ".1.report");
                fs::path out2 = fs::path(tmp) / (j.name + ".2.report");
                int rc1 = run_cli(cli, j.args, out1);
                int rc2 = run_cli(cli, j.args, out2);
                if (rc1 != 0 || rc2 != 0) {
                    ok = false;
                    detail += j.name + ":exit ";
                    continue;
                }
                std::string a = slurp(out1), b = slurp(out2);
                if (a.empty() || a != b) {
                    ok = false;
                    detail += j.name + ":nondeterministic ";
                    continue;
                }
                fs::path golden = fs::path(src) / "tests" / "golden" / (j.name + ".golden");
                if (!fs::exists(golden)) {
                    ok = false;
                    detail += j.name + ":missing-golden ";
                    continue;
                }
                if (slurp(golden) != a) {
                    ok = false;
                    detail += j.name + ":golden-mismatch ";
                }
            }
        }
        record(9, "CLI determinism and golden reports", ok, detail.empty() ? "5 jobs" : detail);
    }

    bool all = true;
    for (const Criterion& c : results) all = all && c.pass;
    std::cout << (all ? "ACCEPTANCE: all criteria pass" : "ACCEPTANCE: failures present") << "\n";
    return all ? 0 : 1;
}
