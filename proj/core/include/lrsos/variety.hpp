#ifndef LRSOS_VARIETY_HPP
#define LRSOS_VARIETY_HPP

#include <array>
#include <string>
#include <variant>
#include <vector>

namespace lrsos {

/// Rational normal scroll with Lawrence-prism heights n1 <= ... <= nm.
struct ScrollSpec {
    std::vector<int> heights;
};

/// Veronese embedding nu_d(P^m).
struct VeroneseSpec {
    int m = 0;
    int d = 0;
};

/// Plane cubic curve re-embedded by degree-d forms. Coefficients are listed
/// in exponent-lexicographic order: x0^3, x0^2*x1, x0^2*x2, x0*x1^2,
/// x0*x1*x2, x0*x2^2, x1^3, x1^2*x2, x1*x2^2, x2^3.
struct PlaneCubicSpec {
    std::array<double, 10> cubic{};
    int d = 0;
};

using VarietySpec = std::variant<ScrollSpec, VeroneseSpec, PlaneCubicSpec>;

/// Throws InvalidSpecError when the spec violates its invariants.
void validate(const VarietySpec& spec);

/// Short comma-free identifier, e.g. scroll_5_10, veronese_m4_d2.
std::string variety_label(const VarietySpec& spec);

/// Parses {"family":"scroll","heights":[...]} and friends.
VarietySpec parse_variety_json(const std::string& text);
std::string variety_to_json(const VarietySpec& spec);

}  // namespace lrsos

#endif
