#ifndef CODEDESIGN_COMMON_HPP
#define CODEDESIGN_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace codedesign {

// Desk-scale limits. Raise at your own risk via the caps struct below;
// everything past them is exponential or memory-bound.
struct Caps {
    int subset_enum = 24;                      // max k/m for 2^k subset sweeps
    std::uint64_t bruteforce = 1ull << 26;     // max q^k for exhaustive distance
    int enum_k = 4;                            // instance enumeration limits
    int enum_n = 4;
};

inline constexpr std::uint64_t kMaxPrimeExt = 1ull << 20;   // p cap when m >= 2
inline constexpr std::uint64_t kMaxPrime = 1ull << 62;      // p cap when m == 1
inline constexpr unsigned kMaxExtDegree = 16;
inline constexpr std::uint64_t kMaxFieldSize = 1ull << 62;
inline constexpr std::uint64_t kTableFieldCap = 1ull << 21;      // exp/log tables
inline constexpr std::uint64_t kMaxBruteforceWork = 1ull << 26;  // enumeration

class CapExceededError : public std::runtime_error {
public:
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when the point search exhausts the whole field without finding a
// valid assignment. Existence is guaranteed at q >= n+ell-1, so hitting this
// means a defect in the library, not bad user input.
class SearchBugError : public std::runtime_error {
public:
    explicit SearchBugError(const std::string& what) : std::runtime_error(what) {}
};

class MismatchError : public std::runtime_error {
public:
    explicit MismatchError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace codedesign

#endif
