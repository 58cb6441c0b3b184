#pragma once

#include "omstat/core.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace omstat {

// For a tail-positive pi, B is the full multiset; otherwise B holds B' and a 0 is adjoined.
struct InsertionInput {
    OMP pi;
    std::vector<int> U;  // increasing, distinct
    std::vector<int> B;  // weakly increasing
    bool branch_b() const { return !pi.tail_positive(); }
    bool operator==(const InsertionInput&) const = default;
};

// Throws DomainError naming the first violated condition.
void check_insertion_domain(const InsertionInput& in, int r, const Composition& beta, int k);

OMP phi_inv(const InsertionInput& in, int r, const Composition& beta, int k);
OMP phi_maj(const InsertionInput& in, int r, const Composition& beta, int k);
OMP phi_dinv(const InsertionInput& in, int r, const Composition& beta, int k);

// Sum of U plus sum of the effective B (including the adjoined 0).
long insertion_weight(const InsertionInput& in);

void for_each_insertion_input(const Composition& beta, int r, int k, int ell,
                              const std::function<void(const InsertionInput&)>& visit);
std::vector<InsertionInput> enumerate_insertion_domain(const Composition& beta, int r, int k, int ell);

}  // namespace omstat
