#pragma once

#include "omstat/core.hpp"

#include <set>
#include <vector>

namespace omstat {

using Word = std::vector<Letter>;

// Blocks written decreasingly; stars are 1-indexed positions i with w_i, w_{i+1} in one block.
struct StarredWord {
    Word word;
    std::set<int> stars;
    bool operator==(const StarredWord&) const = default;
};

struct SegmentedWord {
    Word word;
    Composition shape;
    std::vector<Word> segments() const;
    bool operator==(const SegmentedWord&) const = default;
};

struct InversionPair {
    Letter a, b;
    int block_a, block_b;  // 0-indexed
};

struct DinvTriple {
    int h, i, j;  // h 1-indexed rank, i<j 0-indexed blocks
    bool secondary;
};

long inv(const OMP& omp);
long dinv(const OMP& omp);
long maj(const OMP& omp);
long minimaj(const OMP& omp);
long maj_of_word(const Word& w);

std::vector<InversionPair> inversion_pairs(const OMP& omp);
std::vector<DinvTriple> dinv_triples(const OMP& omp);

Word sigma_word(const OMP& omp);
Word ind_word(const OMP& omp);

SegmentedWord miniword(const OMP& omp);
StarredWord descent_starred(const OMP& omp);
// throws std::invalid_argument when a star sits on a non-descent
OMP from_starred(const StarredWord& sw);

// x -> (x-1) mod modulus; throws std::invalid_argument on a letter >= modulus
Word cyclic_decrement(const Word& w, int modulus);
OMP cyclic_decrement(const OMP& omp, int modulus);
SegmentedWord cyclic_decrement(const SegmentedWord& w, int modulus);

std::string word_to_string(const Word& w);

}  // namespace omstat
