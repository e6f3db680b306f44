#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "annular/perm.hpp"
#include "annular/poly.hpp"
#include "json.hpp"

namespace annular {

// T_{m1..mr}: vertex i for every point, edge e_i = (gamma(i), i) on basic cycle circle_of(i).
struct AnnulusGraph {
    Shape shape;
    std::vector<int> src, tgt, cycle;
    int m() const { return shape.m(); }
};
AnnulusGraph build(const Shape& shape);

// Vertices are the blocks of pi; edge indices are kept.
struct QuotientGraph {
    AnnulusGraph base;
    SetPartition pi;
    std::vector<int> src, tgt;
    int vertex_count() const { return pi.block_count(); }
};
QuotientGraph quotient(const AnnulusGraph& g, const SetPartition& pi);

struct EdgeClass {
    std::vector<int> edges;      // ascending
    int a = 0, b = 0;            // endpoint blocks, a <= b
    bool loop = false;
    bool cutting = false;
    std::vector<int> per_cycle;  // edges from each basic cycle
    std::vector<int> forward;    // per cycle, edges running a -> b

    int multiplicity() const { return static_cast<int>(edges.size()); }
    int cycles_touched() const;
    // equal count in each orientation on every basic cycle
    bool balanced() const;
};

struct Elementarization {
    int m = 0;
    int r = 0;
    std::vector<int> vertices;       // blocks incident to the included edges
    std::vector<EdgeClass> classes;  // ordered by smallest edge
    std::vector<int> class_of;       // edge -> class, -1 when the edge is excluded
    bool connected = false;

    int excess() const { return static_cast<int>(vertices.size()) - static_cast<int>(classes.size()); }
    // pi-bar; every edge must be included
    SetPartition pibar() const;
};
Elementarization elementarize(const QuotientGraph& qg);
// restriction to the basic cycles whose bit is set in cycle_mask
Elementarization elementarize(const QuotientGraph& qg, unsigned cycle_mask);

// Classes left after repeatedly deleting degree-one vertices; for a connected
// graph with |V| = |E| this is its unique circuit.
std::vector<int> circuit_classes(const Elementarization& el);

struct QVec {
    int q1 = 0;
    int q2_twice = 0; // q2 may be a half-integer
    int q_twice() const { return 2 * q1 + q2_twice; }
    std::string str() const;
};
QVec q_vec(const Shape& shape, const SetPartition& pi);

struct VertexDegree {
    int rdg = 0; // incoming
    int ldg = 0; // outgoing
};
// [vertex][basic cycle]
std::vector<std::vector<VertexDegree>> degree_profile(const QuotientGraph& qg);

bool is_double_tree(const Elementarization& sub);
bool is_double_uniloop(const Elementarization& sub);
// sub covers cycles j and k
bool is_double_unicircuit(const Elementarization& sub, int j, int k);

enum class LimitKind { T26, T244, UL24, UC24, DB, NotLimit };
enum class NotLimitReason {
    None,
    Disconnected,
    SingletonBlock,
    QTooLarge,
    QSubleading,
    OrientationMismatch,
    OddMultiplicity,
    CircuitNonconnecting,
    Unrecognized,
};
std::string kind_name(LimitKind k);
std::string reason_name(NotLimitReason r);
constexpr std::array<LimitKind, 5> kLimitKinds{LimitKind::T26, LimitKind::T244, LimitKind::UL24, LimitKind::UC24,
                                               LimitKind::DB};

struct LimitClass {
    LimitKind kind = LimitKind::NotLimit;
    NotLimitReason reason = NotLimitReason::None;
    QVec q;
    bool is_limit() const { return kind != LimitKind::NotLimit; }
    std::string str() const;
};
LimitClass classify(const Shape& shape, const SetPartition& pi);
LimitClass classify(const QuotientGraph& qg);

Poly weight(LimitKind kind);
Poly weight(const LimitClass& c);

// cycles of gamma * sigma for sigma in NC2(shape)
SetPartition pairing_to_partition(const Shape& shape, const Permutation& sigma);

struct LimitCounts {
    std::array<std::int64_t, 5> n{}; // indexed like kLimitKinds
    std::int64_t& operator[](LimitKind k) { return n[static_cast<int>(k)]; }
    std::int64_t operator[](LimitKind k) const { return n[static_cast<int>(k)]; }
    std::int64_t total() const { return n[0] + n[1] + n[2] + n[3] + n[4]; }
    bool operator==(const LimitCounts&) const = default;
    nlohmann::json to_json() const;
};
// classify every partition with m/2 - 1 blocks
LimitCounts count_limit_graphs_enumerated(const Shape& shape);
// family closed forms; DB needs |NC2(shape)| from enumeration
LimitCounts count_limit_graphs_closed(const Shape& shape);

// Image of NC2(shape) under pairing_to_partition.
struct FiberReport {
    std::int64_t pairings = 0;
    std::int64_t non_limit_images = 0;
    LimitCounts images;
    // fiber size -> number of limit partitions with that many preimages, per kind
    std::array<std::map<int, std::int64_t>, 5> fiber_sizes;
};
FiberReport pairing_fibers(const Shape& shape);

enum class DoubleStructure { Tree, Uniloop, Unicircuit };
// Enumerates P(m). Trees and uniloops need r = 1, unicircuits r = 2;
// circuit_length = 0 counts unicircuits of any circuit length.
std::int64_t count_double_structures(const Shape& shape, DoubleStructure kind, int circuit_length = 0);
std::optional<std::int64_t> count_double_structures_closed(const Shape& shape, DoubleStructure kind,
                                                           int circuit_length = 0);

// Every restricted growth string on m points with exactly `blocks` blocks
// (all of them when blocks < 0), dealt to `threads` workers by prefix.
void sweep_partitions(int m, int blocks, int threads,
                      const std::function<void(int worker, const std::vector<int>& labels)>& fn);

std::string to_dot(const QuotientGraph& qg);
std::string to_dot(const QuotientGraph& qg, const Elementarization& el);

} // namespace annular
