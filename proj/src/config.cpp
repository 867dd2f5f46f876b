#include "ormer/config.hpp"

#include <charconv>
#include <fstream>

#include "ormer/errors.hpp"

namespace ormer {

namespace {

std::string trim(std::string_view s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string_view::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return std::string(s.substr(a, b - a + 1));
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        std::string item = trim(std::string_view(s).substr(pos, comma - pos));
        if (!item.empty()) out.push_back(item);
        pos = comma + 1;
    }
    return out;
}

template <typename T>
T parse_number(const std::string& value, const std::string& key) {
    T v{};
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        raise(Errc::config_error, "bad value for " + key + ": " + value);
    }
    return v;
}

double parse_double(const std::string& value, const std::string& key) {
    try {
        size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        raise(Errc::config_error, "bad value for " + key + ": " + value);
    }
}

bool parse_bool(const std::string& value, const std::string& key) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    raise(Errc::config_error, "bad boolean for " + key + ": " + value);
}

}  // namespace

std::vector<OracleKind> parse_oracle_list(const std::string& csv) {
    std::vector<OracleKind> kinds;
    for (const auto& name : split_csv(csv)) {
        kinds.push_back(parse_oracle_kind(name));
    }
    if (kinds.empty()) {
        raise(Errc::config_error, "empty oracle list");
    }
    return kinds;
}

std::vector<size_t> parse_index_list(const std::string& csv) {
    std::vector<size_t> out;
    for (const auto& item : split_csv(csv)) {
        out.push_back(parse_number<size_t>(item, "index list"));
    }
    return out;
}

AttackSpec HarnessConfig::attack_spec() const {
    AttackSpec spec;
    spec.window = attack_window.value_or(window);
    spec.indices = attack_indices;
    spec.magnitude = FixedQ64::parse_decimal(attack_magnitude);
    spec.beta = attack_beta;
    if (spec.beta == 0 && !spec.indices.empty()) {
        // explicit target lists imply their own per-window budget
        spec.beta = static_cast<uint32_t>(
            std::min<size_t>(spec.indices.size(), spec.window));
    }
    return spec;
}

HarnessConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        raise(Errc::io_error, "cannot open config: " + path.string());
    }
    HarnessConfig cfg;
    std::string line;
    size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        size_t eq = s.find('=');
        if (eq == std::string::npos) {
            raise(Errc::config_error,
                  "config row " + std::to_string(row) + " has no '='");
        }
        std::string key = trim(std::string_view(s).substr(0, eq));
        std::string value = trim(std::string_view(s).substr(eq + 1));

        if (key == "oracles") cfg.oracles = parse_oracle_list(value);
        else if (key == "window") cfg.window = parse_number<uint16_t>(value, key);
        else if (key == "seed") cfg.seed = parse_number<uint64_t>(value, key);
        else if (key == "sample_rate") cfg.sample_rate = parse_double(value, key);
        else if (key == "grid_step") cfg.grid_step = parse_number<int64_t>(value, key);
        else if (key == "delay_cap_seconds")
            cfg.delay_cap_seconds = parse_number<int64_t>(value, key);
        else if (key == "delay_window_seconds")
            cfg.delay_window_seconds = parse_number<int64_t>(value, key);
        else if (key == "epsilon") cfg.epsilon = parse_double(value, key);
        else if (key == "epsilon_percent")
            cfg.epsilon_percent = parse_bool(value, key);
        else if (key == "twap_ring_capacity")
            cfg.twap_ring_capacity = parse_number<size_t>(value, key);
        else if (key == "weights") {
            auto parts = split_csv(value);
            if (parts.size() != 3) {
                raise(Errc::config_error, "weights needs three values");
            }
            cfg.weights.w0 = parse_double(parts[0], key);
            cfg.weights.w1 = parse_double(parts[1], key);
            cfg.weights.w2 = parse_double(parts[2], key);
        } else if (key == "attack_beta")
            cfg.attack_beta = parse_number<uint32_t>(value, key);
        else if (key == "attack_window")
            cfg.attack_window = parse_number<uint16_t>(value, key);
        else if (key == "attack_magnitude") cfg.attack_magnitude = value;
        else if (key == "attack_indices") cfg.attack_indices = parse_index_list(value);
        else if (key == "cost.read_cold")
            cfg.cost.read_cold = parse_number<uint64_t>(value, key);
        else if (key == "cost.read_warm")
            cfg.cost.read_warm = parse_number<uint64_t>(value, key);
        else if (key == "cost.write_zero_to_nonzero")
            cfg.cost.write_zero_to_nonzero = parse_number<uint64_t>(value, key);
        else if (key == "cost.write_nonzero_to_nonzero")
            cfg.cost.write_nonzero_to_nonzero = parse_number<uint64_t>(value, key);
        else if (key == "cost.write_to_zero")
            cfg.cost.write_to_zero = parse_number<uint64_t>(value, key);
        else if (key == "cost.tx_base")
            cfg.cost.tx_base = parse_number<uint64_t>(value, key);
        else if (key == "cost.arithmetic_unit")
            cfg.cost.arithmetic_unit = parse_number<uint64_t>(value, key);
        else {
            raise(Errc::config_error, "unknown config key: " + key);
        }
    }
    return cfg;
}

}  // namespace ormer
