#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g7/cycles.hpp"
#include "g7/graph.hpp"
#include "g7/maps.hpp"
#include "g7/schemes.hpp"
#include "g7/symmetry.hpp"

namespace g7 {

// The five girth-7 signature conditions for cubic girth-regular graphs:
// even sum; a=0 forces (0,1,1); a>=1 forces a+b>c; a+4>=c; a+8>=b+c.
bool lemma_p1_filter(int a, int b, int c);

// a+b+c <= 17 (radius-3 ball count).
bool prop_sum_bound(int a, int b, int c);

// Every odd value in the signature appears exactly twice.
bool odd_twice_rule(int a, int b, int c);

// Searches for a multiset r_1 <= ... <= r_ell over {0,1,2,3} with sum
// 7*eps_o/2, at most one zero, and every nonzero value of multiplicity >= 4.
// Returns the least such multiset or nullopt.
std::optional<std::vector<int>> condition_satisfiable(int ell, int eps_o);

// Blind enumeration of all sorted triples through the filters above; the
// orbit condition is applied for each value of multiplicity one.
std::vector<Signature> candidate_signatures();

// Candidates minus the two signatures with no vertex-transitive graphs.
std::vector<Signature> realizable_signatures();

enum class CaseTag { truncation, rotary_map, coxeter, a_family, petersen };
const char* case_name(CaseTag t);

struct ClassificationReport {
    CaseTag tag{};
    Signature signature{};
    int girth = 7;
    int vertices = 0;

    // per-case witness
    std::optional<TruncationWitness> truncation;   // (0,1,1)
    bool scheme_arc_transitive = false;            // (0,1,1)
    std::optional<TrivalentMap> map;               // (2,2,2)
    std::optional<int> euler;                      // (2,2,2)
    std::optional<Permutation> iso;                // (4,4,4), (4,4,6), (4,5,5)
    std::optional<int> a_param;                    // (4,4,6): the n of A(n)
    std::optional<std::pair<int, int>> petersen;   // (4,5,5): (n,k)

    // diagnostics
    unsigned long long aut_order = 0;
    int girth_cycle_count = 0;
    int edge_orbit_count = 0;
};

// The five-way classification. Verifies cubic, connected, girth 7,
// vertex-transitive and girth-regular, then builds the machine-checkable
// witness for the matching case. A realizable signature whose witness cannot
// be built raises TheoremViolation: that is a bug, not an input error.
ClassificationReport classify(const SimpleGraph& g);

std::string report_json(const ClassificationReport& r);

struct EgrCheck {
    bool holds;   // arc-transitive, or vacuously true
    bool vacuous; // signature was not constant
};

// For cubic vertex-transitive girth-7 inputs: edge-girth-regular implies
// arc-transitive.
EgrCheck edge_girth_regular_implies_arc_transitive(const SimpleGraph& g);

} // namespace g7
