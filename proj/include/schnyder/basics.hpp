#pragma once

// Shared scalar types, colour arithmetic, error types and the deterministic
// random stream used across the library.
//
// All combinatorial ids are 32-bit; all coordinates are 64-bit integers
// (coordinates live on a grid of side 6n-15, so 64 bits is generous).
// Exact decisions (certification, recognition) use boost::multiprecision.

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace schnyder {

using Vid = std::int32_t;     // vertex id, 0-based
using EdgeId = std::int32_t;  // undirected edge id
using FaceId = std::int32_t;  // interior face id
using Coord = std::int64_t;   // one barycentric coordinate / face weight

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr FaceId kOuterFace = -1;

// The three tree colours. Stored 1-based to match the on-disk format.
enum class Colour : std::uint8_t { C1 = 1, C2 = 2, C3 = 3 };

inline int index_of(Colour c) { return static_cast<int>(c) - 1; }
inline Colour colour_from_index(int i) { return static_cast<Colour>(i % 3 + 1); }
inline Colour next_colour(Colour c) { return colour_from_index(index_of(c) + 1); }
inline Colour prev_colour(Colour c) { return colour_from_index(index_of(c) + 2); }

// Input that is not a valid object of the requested kind (exit code 1 paths).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A morph step whose certification failed where success was required
// (exit code 2 paths).
class CertificationError : public std::runtime_error {
public:
    explicit CertificationError(const std::string& what) : std::runtime_error(what) {}
};

// File / JSON trouble (exit code 3 paths).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Deterministic random stream. std::uniform_int_distribution is not portable
// across standard libraries, so bounded draws are done by rejection sampling
// on raw 64-bit output; results are identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform value in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
        std::uint64_t x = engine_();
        while (x > limit) x = engine_();
        return x % bound;
    }

    // Uniform value in [lo, hi] inclusive.
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace schnyder
