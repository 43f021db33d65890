#pragma once

#include <string>
#include <vector>

namespace eqschub {

// Result of a batch of named checks; used by the identity and verification
// suites and rendered by the CLI.
struct check_report {
    struct item {
        std::string name;     // which identity or property
        std::string instance; // which parameters
        bool pass = false;
        std::string detail;   // shown on failure
    };

    std::vector<item> items;

    void add(std::string name, std::string instance, bool pass, std::string detail = "") {
        items.push_back({std::move(name), std::move(instance), pass, std::move(detail)});
    }

    void merge(const check_report& other) {
        items.insert(items.end(), other.items.begin(), other.items.end());
    }

    int failures() const {
        int n = 0;
        for (const auto& it : items)
            if (!it.pass) ++n;
        return n;
    }

    bool all_pass() const { return failures() == 0; }
};

} // namespace eqschub
