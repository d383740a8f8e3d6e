#pragma once

#include <stdexcept>
#include <string>

namespace miacomp {

// Physical / model constants of the downlink: BS density, path loss, packet size.
struct NetworkParams {
    double lambda = 1.0;  // BS density per unit area
    double alpha = 3.0;   // path-loss exponent, > 2
    double kbits = 75.0;  // packet size K in bits

    double delta() const { return 2.0 / alpha; }

    void validate() const {
        if (!(lambda > 0.0))
            throw std::domain_error("NetworkParams: lambda must be positive");
        if (!(alpha > 2.0))
            throw std::domain_error("NetworkParams: alpha must exceed 2");
        if (!(kbits > 0.0))
            throw std::domain_error("NetworkParams: kbits must be positive");
    }
};

enum class UserClass { general, worst_case };
enum class Cooperation { nc, mia };

struct Scenario {
    UserClass user_class;
    Cooperation cooperation;

    int codewords() const { return cooperation == Cooperation::mia ? 2 : 1; }
    bool operator==(const Scenario&) const = default;
};

inline constexpr Scenario kGuNc{UserClass::general, Cooperation::nc};
inline constexpr Scenario kGuMia{UserClass::general, Cooperation::mia};
inline constexpr Scenario kWuNc{UserClass::worst_case, Cooperation::nc};
inline constexpr Scenario kWuMia{UserClass::worst_case, Cooperation::mia};

inline std::string scenario_name(Scenario s) {
    if (s == kGuNc) return "gu-nc";
    if (s == kGuMia) return "gu-mia";
    if (s == kWuNc) return "wu-nc";
    return "wu-mia";
}

}  // namespace miacomp
