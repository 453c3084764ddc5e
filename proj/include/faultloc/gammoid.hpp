#pragma once

#include <optional>
#include <vector>

#include "faultloc/graph.hpp"

namespace faultloc {

struct LinkResult {
    bool linked = false;
    PathFamily witness;  // populated when linked
};

/// Decide whether S is linked in g into Z: card(S) mutually node-disjoint
/// directed paths, one from each node of S, each terminating in Z. A node in
/// both S and Z counts as a zero-length path. Decided by node-splitting
/// unit-capacity max-flow; the witness family is decoded from the flow.
LinkResult is_linked(const Gammoid& gammoid, const std::vector<int>& sources);

/// Matroid rank of S: size of the largest subset linked into Z. Equals the
/// max-flow value from S into Z.
int rank(const Gammoid& gammoid, const std::vector<int>& sources);

/// card(S) - rank(S).
int nullity(const Gammoid& gammoid, const std::vector<int>& sources);

struct SparkResult {
    /// Smallest cardinality of a dependent subset of the ground set, or
    /// card(L)+1 when every subset is independent (all_independent set).
    int spark = 0;
    bool all_independent = false;  // "exceeds ground set" sentinel
    std::vector<int> circuit;      // a smallest dependent set, when one exists
};

/// Exact spark by ascending subset enumeration. Enumeration never exceeds
/// size card(Z)+1 (no more than card(Z) disjoint paths can exist). A budget
/// below that ceiling throws BudgetExceeded carrying the verified lower
/// bound when enumeration is cut short.
SparkResult spark(const Gammoid& gammoid, std::optional<int> budget = std::nullopt);

/// Transposed gammoid: edges flipped, ground and output sets swapped.
Gammoid transpose(const Gammoid& gammoid);

/// Fuse the i-th output of `first` with the i-th ground node of `second`.
/// Result keeps `first`'s ground set and `second`'s output set (relabelled).
Gammoid concatenate(const Gammoid& first, const Gammoid& second);

/// Node ids of `second` inside concatenate(first, second): fused nodes map to
/// first's output node ids, all others are appended after first's nodes.
std::vector<int> concatenation_second_node_map(const Gammoid& first,
                                               const Gammoid& second);

/// Check a witness: paths node-disjoint, edges exist, starts match `sources`
/// one-to-one, every end lies in the output set.
bool verify_path_family(const Gammoid& gammoid, const std::vector<int>& sources,
                        const PathFamily& family);

} // namespace faultloc
