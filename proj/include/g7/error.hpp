#pragma once

#include <stdexcept>
#include <string>

namespace g7 {

// Domain failure modes. Each library operation documents which of these it can raise.
enum class errc {
    loop_rejected,
    vertex_out_of_range,
    malformed_graph6,
    schema_violation,
    dangling_arc_reference,
    acyclic_graph,
    edge_out_of_range,
    non_cubic_vertex,
    non_uniform_orbit,
    non_homogeneous,
    girth_not_7,
    too_small,
    budget_exceeded,
    n_too_small,
    not_divisible_by_3,
    bad_jump,
    not_inverse_closed,
    contains_identity,
    i_too_small,
    invalid_scheme,
    degenerate_degree,
    wrong_signature,
    coverage_failure,
    not_two_per_edge,
    invalid_map,
    search_failed,
    unsorted,
    not_cubic,
    not_connected,
    not_vertex_transitive,
    not_girth_regular,
    theorem_violation,
    unknown_suite,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

} // namespace g7
