#pragma once

#include "gqm/maps.hpp"
#include "gqm/sequences.hpp"
#include "gqm/space.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

namespace gqm {

/// Seeded generators for property suites. Every generated table satisfies
/// the axioms by construction: the diagonal is the index, off-diagonal
/// entries lie in [m, 2m] for some m > index, so any two-leg path is at
/// least 2m and the triangle inequality cannot fail.
struct RandomSpaceOptions {
    std::size_t min_points = 2;
    std::size_t max_points = 6;
    std::optional<Rational> index;  // drawn from a small menu when absent
    std::string label_prefix = "p";
};

GqmSpace random_table_space(std::uint64_t seed, const RandomSpaceOptions& options = {});

/// Finite table sequence over the space's carrier with a constant tail.
SeqSpec random_table_sequence(const GqmSpace& space, std::uint64_t seed,
                              std::size_t min_len = 3, std::size_t max_len = 10);

/// Random bijection from the space's carrier onto a freshly labeled copy,
/// ready for pulling the metric through.
struct RandomBijection {
    std::shared_ptr<const GqmSpace> domain;
    std::shared_ptr<const GqmSpace> codomain;
    PointMap map;
};
RandomBijection random_bijection(std::uint64_t seed, const RandomSpaceOptions& options = {});

}  // namespace gqm
