#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toda/laurent.hpp"

namespace toda {

struct CheckRecord {
    std::string name;
    std::string identity;  // the identity this record checks, or "plumbing"
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;
};

struct RunConfig {
    TruncationParams truncation;
    std::string point_spec = "special:0,0.5";  // or @file.json
    std::vector<std::string> suites;           // empty means invalid
    std::map<std::string, double> tolerance_overrides;
    std::string out_dir = ".";
    int jobs = 1;
    unsigned long long seed = 12345;

    void validate() const;
    static RunConfig from_file(const std::string& path);
    void apply_kv(const std::string& key, const std::string& value);
};

struct Report {
    std::string schema = "toda-stokes-report/1";
    std::vector<CheckRecord> records;
    std::string environment;
    std::string config_echo;
    unsigned long long seed = 0;

    bool all_pass() const;
    int failed_count() const;
    void print_summary(std::ostream& os) const;
    std::string to_json_string() const;
};

std::string environment_stamp();

const std::vector<std::string>& known_suites();

}  // namespace toda
