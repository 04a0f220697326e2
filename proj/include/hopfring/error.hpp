#pragma once

#include <stdexcept>
#include <string>

namespace hopf {

// One exception type for the whole engine; Kind lets callers (notably the
// CLI, which maps usage errors to a distinct exit code) branch without
// string matching.
class HopfError : public std::runtime_error {
public:
    enum class Kind {
        UnknownPair,       // (group, prime) has no torsion / no such algebra
        UnknownGenerator,  // symbol absent from the presentation at hand
        NonHomogeneous,    // mixed-degree input where homogeneity is required
        NotInTorsionImage, // delta_lift target not in im(beta_p)
        NotInSubring,      // element outside the subring a map is defined on
        NotInE,            // C_I subscript set not contained in e(G,p)
        CorruptData,       // catalog self-validation failure
        Syntax             // expression parse error
    };

    HopfError(Kind k, std::string msg) : std::runtime_error(std::move(msg)), kind_(k) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

[[noreturn]] inline void fail(HopfError::Kind k, const std::string& msg) {
    throw HopfError(k, msg);
}

} // namespace hopf
