#include "gqm/random_spaces.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace gqm {
namespace {

Rational pick_index(std::mt19937_64& rng) {
    static const Rational menu[] = {Rational(0), Rational(1, 2), Rational(1), Rational(2),
                                    Rational(3)};
    std::uniform_int_distribution<std::size_t> d(0, std::size(menu) - 1);
    return menu[d(rng)];
}

Rational pick_gap(std::mt19937_64& rng) {
    static const Rational menu[] = {Rational(1, 3), Rational(1, 2), Rational(1),
                                    Rational(3, 2)};
    std::uniform_int_distribution<std::size_t> d(0, std::size(menu) - 1);
    return menu[d(rng)];
}

}  // namespace

GqmSpace random_table_space(std::uint64_t seed, const RandomSpaceOptions& options) {
    if (options.min_points < 1 || options.max_points < options.min_points)
        throw std::invalid_argument("bad point-count range");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size_d(options.min_points, options.max_points);
    const std::size_t n = size_d(rng);

    Rational index = options.index ? *options.index : pick_index(rng);
    if (index.is_negative()) throw std::invalid_argument("index must be >= 0");
    const Rational m = index + pick_gap(rng);

    std::vector<Point> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        pts.push_back(Point::sym(options.label_prefix + std::to_string(i)));

    // Off-diagonal entries in [m, 2m] with m > index: any two-leg path is at
    // least 2m, so no triangle can fail regardless of the draws.
    std::uniform_int_distribution<int> t(0, 24);
    std::vector<std::vector<Rational>> matrix(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            matrix[i][j] = i == j ? index : m + Rational(t(rng)) * m / Rational(24);
    return GqmSpace::table(std::move(pts), std::move(matrix));
}

SeqSpec random_table_sequence(const GqmSpace& space, std::uint64_t seed, std::size_t min_len,
                              std::size_t max_len) {
    if (!space.carrier().is_finite())
        throw std::invalid_argument("table sequences need a finite carrier");
    if (min_len < 1 || max_len < min_len) throw std::invalid_argument("bad length range");
    auto pts = space.carrier().enumerate();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> len_d(min_len, max_len);
    std::uniform_int_distribution<std::size_t> pt_d(0, pts.size() - 1);
    const std::size_t len = len_d(rng);
    std::vector<Point> terms;
    terms.reserve(len);
    for (std::size_t i = 0; i < len; ++i) terms.push_back(pts[pt_d(rng)]);
    return SeqSpec::table(std::move(terms));
}

RandomBijection random_bijection(std::uint64_t seed, const RandomSpaceOptions& options) {
    auto domain = std::make_shared<const GqmSpace>(random_table_space(seed, options));
    auto pts = domain->carrier().enumerate();
    const std::size_t n = pts.size();

    std::vector<Point> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(Point::sym("q" + std::to_string(i)));

    // Placeholder discrete metric: the pulled-back table replaces it, only
    // the carrier matters.
    std::vector<std::vector<Rational>> discrete(n, std::vector<Rational>(n, Rational(1)));
    for (std::size_t i = 0; i < n; ++i) discrete[i][i] = Rational(0);
    auto codomain = std::make_shared<const GqmSpace>(GqmSpace::table(labels, std::move(discrete)));

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);

    std::vector<std::pair<Point, Point>> pairs;
    pairs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(pts[i], labels[perm[i]]);
    PointMap f = PointMap::table(domain, codomain, std::move(pairs));
    return RandomBijection{std::move(domain), std::move(codomain), std::move(f)};
}

}  // namespace gqm
