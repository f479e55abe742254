#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "wittsuper/suites.hpp"

using namespace wittsuper;

namespace {

constexpr const char* kReportHeader = "wittsuper-report v1";

int write_report(const std::string& out_path, const Json& job, const Json& body, const std::string& verdict) {
    std::string text = std::string(kReportHeader) + "\n" + "job " + job.dump() + "\n" + body.dump(2) + "\n" +
                       "verdict " + verdict + "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        f << text;
    }
    return verdict == "pass" ? 0 : (verdict == "fail" ? 1 : 2);
}

Weight default_base_point(const SupportSet& s) {
    if (s.components.empty()) fail(ErrorKind::BadInput, "support has no components");
    return s.components.front().base;
}

// deterministic lex-positive split of Delta'^{F,0}
void default_tri_split(const ShadowPartition& sh, const Weight& lam, std::vector<Root>& plus,
                       std::vector<Root>& minus) {
    for (const Root& a : sh.finite) {
        if (pairing(lam, a) != 0) continue;
        bool pos = false;
        for (int c : a) {
            if (c > 0) {
                pos = true;
                break;
            }
            if (c < 0) break;
        }
        (pos ? plus : minus).push_back(a);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for vector-field superalgebras and their weight modules"};
    app.require_subcommand(1);

    int m = 2, n = 2, q = 1, deg = 3, jobs = 1;
    std::string suite, support_path, P_spec, M_spec, S_spec, window_spec, out_path;

    long max_degree_cap = 8;
    if (const char* env = std::getenv("WITTSUPER_MAX_DEGREE")) max_degree_cap = std::atol(env);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--m", m, "even variables");
        cmd->add_option("--n", n, "odd variables");
        cmd->add_option("--q", q, "Levi rank");
        cmd->add_option("--deg", deg, "degree bound");
        cmd->add_option("--jobs", jobs, "parallelism across independent items");
        cmd->add_option("--out", out_path, "report file");
    };

    CLI::App* verify = app.add_subcommand("verify", "run a named identity suite");
    verify->add_option("--suite", suite, "suite name")->required();
    add_common(verify);

    CLI::App* bracket = app.add_subcommand("bracket", "bracket of two vector fields");
    std::string x_path, y_path;
    bracket->add_option("x", x_path, "field term-list file")->required();
    bracket->add_option("y", y_path, "field term-list file")->required();
    add_common(bracket);

    CLI::App* shadow_cmd = app.add_subcommand("shadow", "shadow partition of a support set");
    shadow_cmd->add_option("--support", support_path, "support-set file")->required();
    add_common(shadow_cmd);

    CLI::App* parabolic_cmd = app.add_subcommand("parabolic", "parabolic decomposition from a support set");
    parabolic_cmd->add_option("--support", support_path, "support-set file")->required();
    add_common(parabolic_cmd);

    CLI::App* levi_cmd = app.add_subcommand("levi", "Levi shape of a support set");
    levi_cmd->add_option("--support", support_path, "support-set file")->required();
    add_common(levi_cmd);

    CLI::App* classify_cmd = app.add_subcommand("classify", "simplicity classification of tensor modules");
    classify_cmd->add_option("--P", P_spec, "K-module descriptor")->required();
    classify_cmd->add_option("--M", M_spec, "gl-module tag")->required();
    classify_cmd->add_option("--S", S_spec, "optional k-module: trivial | char:<c>");
    classify_cmd->add_option("--window", window_spec, "weight box lo:hi,...");
    add_common(classify_cmd);

    CLI::App* omega_cmd = app.add_subcommand("omega", "annihilation-operator searches");
    add_common(omega_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    deg = static_cast<int>(std::min<long>(deg, max_degree_cap));

    try {
        if (*verify) {
            SuiteOptions opt{m, n, q, deg, jobs, max_degree_cap};
            SuiteResult r = run_suite(suite, opt);
            Json job{{"command", "verify"}, {"suite", suite}, {"m", m}, {"n", n}, {"q", q}, {"deg", deg}};
            for (const SuiteItem& item : r.items)
                std::cout << (item.pass ? "PASS " : "FAIL ") << item.label
                          << (item.detail.empty() ? "" : " [" + item.detail + "]") << "\n";
            std::cout << "suite " << r.name << (r.pass() ? ": pass" : ": fail") << "\n";
            return write_report(out_path, job, suite_to_json(r), r.pass() ? "pass" : "fail");
        }
        if (*bracket) {
            Signature sig{m, n};
            VectorField x = field_from_json(read_json_file(x_path), sig);
            VectorField y = field_from_json(read_json_file(y_path), sig);
            VectorField b = bracket_w(x, y);
            Json body;
            body["bracket"] = field_to_json(b);
            Json job{{"command", "bracket"},
                     {"m", m},
                     {"n", n},
                     {"x", std::filesystem::path(x_path).filename().string()},
                     {"y", std::filesystem::path(y_path).filename().string()}};
            std::cout << body.dump(2) << "\n";
            return write_report(out_path, job, body, "pass");
        }
        if (*shadow_cmd) {
            SupportSet s = support_from_json(read_json_file(support_path));
            Weight lam = default_base_point(s);
            ShadowPartition sh = shadow(s, lam);
            Json body = shadow_to_json(sh);
            body["lam"] = weight_to_string(lam);
            Json job{{"command", "shadow"}, {"support", std::filesystem::path(support_path).filename().string()}};
            std::cout << "shadow partition at " << weight_to_string(lam) << "\n";
            std::cout << body.dump(2) << "\n";
            return write_report(out_path, job, body, sh.gamma_consistent ? "pass" : "fail");
        }
        if (*parabolic_cmd) {
            SupportSet s = support_from_json(read_json_file(support_path));
            Weight lam = default_base_point(s);
            ShadowPartition sh = shadow(s, lam);
            std::vector<Root> tp, tm;
            default_tri_split(sh, lam, tp, tm);
            ParabolicDecomposition pd = parabolic_decomposition(sh, lam, tp, tm, deg);
            Json body;
            body["zero"] = pd.zero;
            body["plus"] = pd.plus;
            body["minus"] = pd.minus;
            body["lam"] = weight_to_string(lam);
            Json job{{"command", "parabolic"},
                     {"support", std::filesystem::path(support_path).filename().string()},
                     {"deg", deg}};
            std::cout << body.dump(2) << "\n";
            return write_report(out_path, job, body, "pass");
        }
        if (*levi_cmd) {
            SupportSet s = support_from_json(read_json_file(support_path));
            Weight lam = default_base_point(s);
            LeviSpec spec = levi_shape(shadow(s, lam), n);
            Json body = levi_to_json(spec);
            Json job{{"command", "levi"},
                     {"support", std::filesystem::path(support_path).filename().string()},
                     {"n", n}};
            std::cout << body.dump(2) << "\n";
            return write_report(out_path, job, body, "pass");
        }
        if (*classify_cmd) {
            ModuleDescriptor P = parse_descriptor(P_spec, m, n);
            MTag M = parse_mtag(M_spec, Signature{m, n});
            MainVerdict v = main_theorem_classify(P, M);
            Json body = main_verdict_to_json(v);
            if (!S_spec.empty()) {
                Rational c(0);
                if (S_spec.rfind("char:", 0) == 0) c = rat_from_string(S_spec.substr(5));
                else if (S_spec != "trivial")
                    fail(ErrorKind::BadInput, "S wants trivial or char:<c>");
                FinDimModule S = gl0_character(Signature{m + 1, 0}, [&] {
                    Weight w(static_cast<size_t>(m + 1), Rational(0));
                    w.back() = c;
                    return w;
                }());
                body["f2"] = verdict_to_json(f2_simplicity(S, v.simplicity));
            }
            if (!window_spec.empty() && v.case_id == 2 && M.kind != MTagKind::NonFundamental) {
                MTag norm = normalize_mtag(M, Signature{m, n});
                DiffEvidence ev =
                    diff_image_evidence(P, norm.base, norm.level - 1, parse_box(window_spec, m), std::min(deg, 3));
                Json evidence;
                evidence["nonzero"] = ev.nonzero;
                evidence["proper"] = ev.proper;
                evidence["invariant"] = ev.invariant;
                evidence["image_rank"] = ev.image_rank;
                evidence["window_dim"] = ev.window_dim;
                body["diff_evidence"] = evidence;
            }
            Json job{{"command", "classify"}, {"P", P_spec}, {"M", M_spec}, {"m", m}, {"n", n}};
            if (!S_spec.empty()) job["S"] = S_spec;
            if (!window_spec.empty()) job["window"] = window_spec;
            std::cout << "case (" << v.case_id << "): " << v.description << "\n";
            std::cout << body.dump(2) << "\n";
            return write_report(out_path, job, body, "pass");
        }
        if (*omega_cmd) {
            SuiteOptions opt{m, n, q, deg, jobs, max_degree_cap};
            SuiteResult a = run_suite("omega", opt);
            SuiteResult b = run_suite("omegabar", opt);
            Json body;
            body["omega"] = suite_to_json(a);
            body["omegabar"] = suite_to_json(b);
            Json job{{"command", "omega"}, {"q", q}, {"n", n}};
            for (const auto& [k, v] : b.metrics) std::cout << k << " = " << v << "\n";
            bool ok = a.pass() && b.pass();
            std::cout << (ok ? "pass" : "fail") << "\n";
            return write_report(out_path, job, body, ok ? "pass" : "fail");
        }
    } catch (const Error& e) {
        // Undecided outcomes and usage problems both map to exit code 2.
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
