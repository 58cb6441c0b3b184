#pragma once

#include "omstat/core.hpp"
#include "omstat/qpoly.hpp"

#include <optional>
#include <string>

namespace omstat {

enum class Stat { inv, maj, dinv, minimaj };
enum class Variant { tail_positive, all };

const char* stat_name(Stat s);
Stat parse_stat(const std::string& s);  // throws std::invalid_argument
long evaluate(Stat s, const OMP& omp);

struct DistributionKey {
    int r = 0;
    Composition beta;
    int k = 0;
    Variant variant = Variant::tail_positive;
    Stat stat = Stat::inv;
    std::optional<Composition> shape;
    auto operator<=>(const DistributionKey&) const = default;
};

QTPoly q_int(int n);
QTPoly q_factorial(int n);
QTPoly q_binomial(int n, int k);
QTPoly q_stirling(int n, int k);

// Memoized sum of q^stat over the selected set.
QTPoly brute_force_D(const DistributionKey& key);
// All-variant distribution read off the relabelled content (r, beta_1, ...) with no zeros.
QTPoly D_plus(const DistributionKey& key);

QTPoly I_shape_recursive(int r, const Composition& beta, const Composition& alpha);
QTPoly I_recursive(int r, const Composition& beta, int k);
QTPoly M_recursive(int r, const Composition& beta, int k);
QTPoly D_mahonian_recursive(int r, const Composition& beta, int k);

// Both sides by brute force; requires alpha_k = 1.
bool lemma_l36_check(int r, const Composition& beta, const Composition& alpha);
// Same left side against the cyclically relabelled contents before r is permuted back into place.
bool lemma_l36_unpermuted_check(int r, const Composition& beta, const Composition& alpha);

}  // namespace omstat
