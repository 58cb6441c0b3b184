#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace omstat {

using Letter = int;

// Weak composition; zero parts are allowed.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    bool strong() const;
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
    int last() const { return parts_.back(); }
    Composition drop_last() const;
    std::string to_string() const;

    bool operator==(const Composition&) const = default;
    auto operator<=>(const Composition&) const = default;

private:
    std::vector<int> parts_;
};

// The multiset {0^r, 1^beta_1, ..., m^beta_m}.
struct Content {
    Composition beta;
    int r = 0;

    // multiplicity of each letter 0..m
    std::vector<int> multiplicities() const;
    int total() const { return beta.size() + r; }
    int max_letter() const { return beta.length(); }
    std::string to_string() const;

    static Content from_multiplicities(const std::vector<int>& mult);

    bool operator==(const Content&) const = default;
};

class Block {
public:
    explicit Block(std::vector<Letter> elems);

    const std::vector<Letter>& elements() const { return elems_; }
    int size() const { return static_cast<int>(elems_.size()); }
    Letter min() const { return elems_.front(); }
    Letter max() const { return elems_.back(); }
    // h-th smallest element, 1-indexed
    Letter nth(int h) const { return elems_[static_cast<std::size_t>(h - 1)]; }
    bool contains(Letter x) const;

    bool operator==(const Block&) const = default;
    auto operator<=>(const Block&) const = default;

private:
    std::vector<Letter> elems_;
};

class OrderedMultisetPartition {
public:
    OrderedMultisetPartition() = default;
    explicit OrderedMultisetPartition(std::vector<Block> blocks);
    // throws std::invalid_argument when a block is empty or not strictly increasing
    static OrderedMultisetPartition from_lists(const std::vector<std::vector<Letter>>& blocks);

    const std::vector<Block>& blocks() const { return blocks_; }
    const Block& block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }
    int k() const { return static_cast<int>(blocks_.size()); }
    bool empty() const { return blocks_.empty(); }
    int total_size() const;
    Composition shape() const;
    // letter multiplicities, index = letter
    std::vector<int> letter_counts() const;
    bool tail_positive() const;
    Letter max_letter() const;

    bool operator==(const OrderedMultisetPartition&) const = default;
    auto operator<=>(const OrderedMultisetPartition&) const = default;

private:
    std::vector<Block> blocks_;
};

using OMP = OrderedMultisetPartition;

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos);
    std::size_t position;
};

// Precondition violation of a map or generating function.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

bool validate(const OMP& omp, const Content& content, int k, bool tail_positive);

// Sorted lexicographically by serialized text.
std::vector<OMP> enumerate_omps(const Content& content, int k, bool tail_positive);
// Same set, generation order; avoids materializing.
void for_each_omp(const Content& content, int k, bool tail_positive,
                  const std::function<void(const OMP&)>& visit);
void for_each_omp_shape(const Content& content, const Composition& shape, bool tail_positive,
                        const std::function<void(const OMP&)>& visit);

OMP parse_omp(std::string_view text);
std::string serialize(const OMP& omp);

// All strong compositions of n in lexicographic order.
std::vector<Composition> strong_compositions(int n);
// All weak compositions of n with exactly len parts.
std::vector<Composition> weak_compositions(int n, int len);

}  // namespace omstat
