#include "lrsos/variety.hpp"

#include <cmath>
#include <sstream>

#include "lrsos/errors.hpp"
#include "json.hpp"

namespace lrsos {

void validate(const VarietySpec& spec) {
    std::visit(
        [](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ScrollSpec>) {
                if (s.heights.empty()) throw InvalidSpecError("scroll: heights must be nonempty");
                int prev = 1;
                for (int h : s.heights) {
                    if (h < 1) throw InvalidSpecError("scroll: heights must be >= 1");
                    if (h < prev) throw InvalidSpecError("scroll: heights must be nondecreasing");
                    prev = h;
                }
            } else if constexpr (std::is_same_v<T, VeroneseSpec>) {
                if (s.m < 1 || s.d < 1) throw InvalidSpecError("veronese: requires m >= 1 and d >= 1");
            } else {
                if (s.d < 3) throw InvalidSpecError("plane_cubic: requires d >= 3");
                bool nonzero = false;
                for (double c : s.cubic) {
                    if (!std::isfinite(c)) throw InvalidSpecError("plane_cubic: non-finite coefficient");
                    if (c != 0.0) nonzero = true;
                }
                if (!nonzero) throw InvalidSpecError("plane_cubic: cubic is identically zero");
            }
        },
        spec);
}

std::string variety_label(const VarietySpec& spec) {
    std::ostringstream os;
    std::visit(
        [&os](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ScrollSpec>) {
                os << "scroll";
                for (int h : s.heights) os << "_" << h;
            } else if constexpr (std::is_same_v<T, VeroneseSpec>) {
                os << "veronese_m" << s.m << "_d" << s.d;
            } else {
                os << "plane_cubic_d" << s.d;
            }
        },
        spec);
    return os.str();
}

VarietySpec parse_variety_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSpecError(std::string("variety json: ") + e.what());
    }
    try {
        const std::string family = j.at("family").get<std::string>();
        VarietySpec spec;
        if (family == "scroll") {
            spec = ScrollSpec{j.at("heights").get<std::vector<int>>()};
        } else if (family == "veronese") {
            spec = VeroneseSpec{j.at("m").get<int>(), j.at("d").get<int>()};
        } else if (family == "plane_cubic") {
            auto coeffs = j.at("cubic").get<std::vector<double>>();
            if (coeffs.size() != 10)
                throw InvalidSpecError("plane_cubic: expected 10 cubic coefficients");
            PlaneCubicSpec pc;
            std::copy(coeffs.begin(), coeffs.end(), pc.cubic.begin());
            pc.d = j.at("d").get<int>();
            spec = pc;
        } else {
            throw InvalidSpecError("unknown variety family: " + family);
        }
        validate(spec);
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidSpecError(std::string("variety json: ") + e.what());
    }
}

std::string variety_to_json(const VarietySpec& spec) {
    nlohmann::json j;
    std::visit(
        [&j](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ScrollSpec>) {
                j["family"] = "scroll";
                j["heights"] = s.heights;
            } else if constexpr (std::is_same_v<T, VeroneseSpec>) {
                j["family"] = "veronese";
                j["m"] = s.m;
                j["d"] = s.d;
            } else {
                j["family"] = "plane_cubic";
                j["cubic"] = std::vector<double>(s.cubic.begin(), s.cubic.end());
                j["d"] = s.d;
            }
        },
        spec);
    return j.dump();
}

}  // namespace lrsos
