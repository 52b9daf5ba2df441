#include "toda/report.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace toda {

using nlohmann::ordered_json;

const std::vector<std::string>& known_suites() {
    static const std::vector<std::string> s = {
        "spectrum", "metric",    "formal",          "integral",
        "resurgence", "stokes",  "specfun-selftest"};
    return s;
}

void RunConfig::validate() const {
    truncation.validate();
    if (suites.empty())
        throw Error(ErrorKind::ConfigInvalid, "empty suite selection");
    for (const auto& s : suites) {
        bool ok = false;
        for (const auto& k : known_suites()) ok = ok || (s == k);
        if (!ok) throw Error(ErrorKind::ConfigInvalid, "unknown suite: " + s);
    }
    if (jobs < 1) throw Error(ErrorKind::ConfigInvalid, "jobs must be >= 1");
}

void RunConfig::apply_kv(const std::string& key, const std::string& value) {
    if (key == "N") truncation.N = std::stoi(value);
    else if (key == "M") truncation.M = std::stoi(value);
    else if (key == "tol") truncation.tol = std::stod(value);
    else if (key == "point") point_spec = value;
    else if (key == "out") out_dir = value;
    else if (key == "jobs") jobs = std::stoi(value);
    else if (key == "seed") seed = std::stoull(value);
    else if (key == "suites") {
        suites.clear();
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ',')) if (!item.empty()) suites.push_back(item);
    } else if (key.rfind("tol.", 0) == 0) {
        tolerance_overrides[key.substr(4)] = std::stod(value);
    } else {
        throw Error(ErrorKind::ConfigInvalid, "unknown config key: " + key);
    }
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ConfigInvalid, "cannot open config " + path);
    RunConfig cfg;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (!key.empty()) cfg.apply_kv(key, val);
    }
    return cfg;
}

bool Report::all_pass() const {
    for (const auto& r : records)
        if (!r.pass) return false;
    return true;
}

int Report::failed_count() const {
    int n = 0;
    for (const auto& r : records)
        if (!r.pass) ++n;
    return n;
}

void Report::print_summary(std::ostream& os) const {
    size_t w = 8;
    for (const auto& r : records) w = std::max(w, r.name.size());
    for (const auto& r : records) {
        os << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(int(w) + 2)
           << r.name << std::scientific << std::setprecision(3)
           << " measured=" << r.measured << "  tol=" << r.tolerance;
        if (!r.note.empty()) os << "  [" << r.note << "]";
        os << "\n";
    }
    os << records.size() << " checks, " << failed_count() << " failures\n";
}

std::string Report::to_json_string() const {
    ordered_json j;
    j["schema"] = schema;
    j["environment"] = environment;
    j["seed"] = seed;
    j["config"] = config_echo;
    ordered_json arr = ordered_json::array();
    for (const auto& r : records) {
        ordered_json e;
        e["name"] = r.name;
        e["identity"] = r.identity;
        e["measured"] = r.measured;
        e["tolerance"] = r.tolerance;
        e["pass"] = r.pass;
        if (!r.note.empty()) e["note"] = r.note;
        arr.push_back(e);
    }
    j["records"] = arr;
    j["failures"] = failed_count();
    return j.dump(2);
}

std::string environment_stamp() {
    std::ostringstream ss;
    ss << "cxx=" <<
#if defined(__clang__)
        "clang-" << __clang_major__ << "." << __clang_minor__;
#elif defined(__GNUC__)
        "gcc-" << __GNUC__ << "." << __GNUC_MINOR__;
#else
        "unknown";
#endif
    ss << ";eigen=" << EIGEN_WORLD_VERSION << "." << EIGEN_MAJOR_VERSION << "."
       << EIGEN_MINOR_VERSION;
    ss << ";float=ieee754-binary64";
    return ss.str();
}

}  // namespace toda
