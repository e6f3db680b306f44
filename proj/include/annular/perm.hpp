#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace annular {

// Elements are 0-based in memory. Every textual form (parsing, printing,
// JSON) is 1-based.

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    // cycles given 1-based; elements not mentioned are fixed
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
    // "(1,3,5)(2)(4)"; n = 0 means "largest element mentioned"
    static Permutation parse(std::string_view text, int n = 0);

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const;
    int cycle_count() const;
    int length() const { return size() - cycle_count(); }
    bool is_pairing() const;
    // 0-based cycles, each rotated to start at its minimum, sorted by minimum
    std::vector<std::vector<int>> cycles() const;
    std::string str() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> img_;
};

class SetPartition {
public:
    SetPartition() = default;

    // labels[i] = any key; equal keys share a block
    static SetPartition from_labels(const std::vector<int>& labels);
    static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
    // "{1,3,5|2|4}"; n = 0 means "largest element mentioned"
    static SetPartition parse(std::string_view text, int n = 0);
    static SetPartition zero(int n);
    static SetPartition one(int n);

    int size() const { return static_cast<int>(label_.size()); }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    int length() const { return size() - block_count(); }
    // canonical: blocks ordered by minimum, elements ascending
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_of(int i) const { return label_[i]; }
    // restricted growth string: label of i is the rank of its block
    const std::vector<int>& labels() const { return label_; }
    std::string str() const;

    bool operator==(const SetPartition& o) const { return label_ == o.label_; }
    auto operator<=>(const SetPartition& o) const { return label_ <=> o.label_; }

private:
    std::vector<int> label_;
    std::vector<std::vector<int>> blocks_;
};

class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<int> parts);
    static Shape parse(std::string_view text); // "4,3,4,3"

    const std::vector<int>& parts() const { return parts_; }
    int part(int j) const { return parts_[j]; }
    int r() const { return static_cast<int>(parts_.size()); }
    int m() const { return m_; }
    int start(int j) const { return start_[j]; }
    int circle_of(int i) const { return circle_[i]; }
    // (1..m1)(m1+1..m1+m2)...
    Permutation gamma() const;
    std::string str() const;

    bool operator==(const Shape& o) const { return parts_ == o.parts_; }

private:
    std::vector<int> parts_;
    std::vector<int> start_;
    std::vector<int> circle_;
    int m_ = 0;
};

// compose(p, q)(i) = p(q(i))
Permutation compose(const Permutation& p, const Permutation& q);
SetPartition cycles(const Permutation& p);
SetPartition join(const SetPartition& a, const SetPartition& b);
SetPartition kernel(const std::vector<std::int64_t>& values);
bool leq(const SetPartition& a, const SetPartition& b);
bool leq_perm_part(const Permutation& p, const SetPartition& b);

// #(p v q) for two permutations, without building partitions
int join_block_count(const Permutation& p, const Permutation& q);

} // namespace annular
