#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "signcert/signomial.hpp"

namespace signcert {

enum class Strictness : std::uint8_t { not_separating, nonstrict, strict, very_strict };

const char* to_string(Strictness s);

/// A direction v and offset a with every positive point on the <= side and
/// every negative point on the >= side of the hyperplane v.x = a.
/// strict: some negative point strictly above; very_strict: all of them.
struct SeparationWitness {
    Point v;
    double a = 0.0;
    Strictness strictness = Strictness::nonstrict;
    bool marginal = false;  // the deciding slack sits near the tolerance
};

/// A direction whose slab [a, b] holds all negative points of the support
/// while the positive points avoid the open slab. strict: positive points
/// exist strictly below a and strictly above b.
struct EnclosingWitness {
    Point v;
    double a = 0.0, b = 0.0;
    bool strict = false;
    bool marginal = false;
    std::vector<Point> lower_set, upper_set;  // the outside points by side
};

struct EnclosingSearchResult {
    std::optional<EnclosingWitness> witness;
    bool truncated = false;  // the partition search hit its cap; absence of a
                             // witness must not be read as nonexistence
};

/// Basis of very strict separating vectors sharing one offset c, with the
/// seed vector in the open cone they span.
struct VeryStrictBasis {
    std::vector<Point> vectors;
    double c = 0.0;
};

struct SeparationOptions {
    double strict_tol = 1e-7;          // slack threshold after box normalization
    std::size_t partition_cap = 16;    // max outside points for exhaustive search
    std::uint64_t rng_seed = 0x5eed5eedULL;
    std::size_t heuristic_samples = 256;
};

/// Classification of a given direction against the support, with the
/// canonical offset a = max over positive points of v.alpha.
Strictness classify_strictness(const Point& v, const SignedSupport& s, double tol = 1e-7,
                               bool* marginal = nullptr);

/// Search the cone of separating vectors for a nonzero element, reporting the
/// maximal strictness the cone admits. Returns nothing when the cone is {0}.
/// A slack-maximizing LP decides very strict; per-point slack LPs decide
/// strict; a coordinate-normalization scan finds nonzero nonstrict vectors.
std::optional<SeparationWitness> find_separating_vector(const SignedSupport& s,
                                                        const SeparationOptions& opts = {});

/// Direct check of the enclosing definition for a given v; nullopt when some
/// outside point lies strictly inside the open slab.
std::optional<EnclosingWitness> classify_enclosing(const Point& v, const SignedSupport& s,
                                                   double tol = 1e-7);

/// Search for an enclosing vector: exhaustive over two-sided partitions of
/// the outside points up to the cap, then a direction-sampling heuristic with
/// the truncation flag set. Prefers strict witnesses.
EnclosingSearchResult find_enclosing_vector(const SignedSupport& s,
                                            const SeparationOptions& opts = {});

/// Perturbation basis w_i = v + eps_i v_i around a very strict separating
/// vector v, all very strict with a common offset, spanning R^n, with v in
/// the open cone of the w_i. Throws std::invalid_argument when v is not very
/// strict or a side of the support is empty. Optional seed directions override
/// the default perturbation directions.
VeryStrictBasis very_strict_basis(const Point& v, const SignedSupport& s,
                                  const std::vector<Point>& seed_directions = {},
                                  const SeparationOptions& opts = {});

}  // namespace signcert
