#pragma once

#include <string>
#include <vector>

#include "wittsuper/io.hpp"

namespace wittsuper {

struct SuiteItem {
    std::string label;
    bool pass = false;
    std::string detail;
};

struct SuiteResult {
    std::string name;
    std::vector<SuiteItem> items;
    std::vector<std::pair<std::string, std::string>> metrics;  // ordered, e.g. r0 per fixture
    bool undecided = false;

    bool pass() const {
        return std::all_of(items.begin(), items.end(), [](const SuiteItem& i) { return i.pass; });
    }
    void add(const std::string& label, bool ok, const std::string& detail = "") {
        items.push_back({label, ok, detail});
    }
};

struct SuiteOptions {
    int m = 2, n = 2, q = 1;
    int deg = 3;
    int jobs = 1;
    long degree_cap = 8;
};

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

// named shadow fixtures (also used by the CLI golden jobs)
struct ConeFixture {
    std::string name;
    SupportSet support;
    Weight lam;  // base point used by the suite
};
std::vector<ConeFixture> shadow_fixtures();

Json suite_to_json(const SuiteResult& r);

}  // namespace wittsuper
