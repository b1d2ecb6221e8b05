#include "rs12/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace rs12::fixtures {

std::string data_dir() {
    if (const char* env = std::getenv("RS12_DATA_DIR")) return env;
    return RS12_DATA_DIR;
}

std::string path(const std::string& name) { return data_dir() + "/" + name; }

EMatrix load(const std::string& name) {
    std::ifstream in(path(name));
    if (!in) throw std::runtime_error("cannot open fixture " + path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return EMatrix::from_json_string(ss.str());
}

EMatrix load(const std::string& name, uint32_t p) {
    std::ifstream in(path(name));
    if (!in) throw std::runtime_error("cannot open fixture " + path(name));
    auto j = nlohmann::json::parse(in);
    j["p"] = p;
    return EMatrix::from_json(j);
}

EMatrix b1(uint32_t p) { return load("b1.json", p); }
EMatrix b2_f5() { return load("b2_f5.json"); }
EMatrix b2_printed_f5() { return load("b2_printed_f5.json"); }
EMatrix b_f5() { return hcat(b2_f5(), b1(5)); }

EMatrix a1(int index) {
    switch (index) {
        case 1: return load("a1_i.json");
        case 2: return load("a1_ii.json");
        case 3: return load("a1_iii.json");
        case 4: return load("a1_iv.json");
        default: throw std::invalid_argument("a1 fixture index must be 1..4");
    }
}

EMatrix a1_f3() { return load("a1_f3.json"); }

}  // namespace rs12::fixtures
