#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wcpo {

/// Base class for everything thrown by this library.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed requests: bad file contents, unsupported presets, size caps,
/// mismatched carrier groups. CLI maps these to exit code 2.
struct input_error : error {
    using error::error;
};

/// Failed mathematical checks: an axiom, invariant or precondition does not
/// hold for otherwise well-formed data. CLI maps these to exit code 1.
struct check_error : error {
    using error::error;
};

struct unsupported_spec : input_error {
    using input_error::input_error;
};

struct too_large : input_error {
    using input_error::input_error;
};

struct group_mismatch : input_error {
    using input_error::input_error;
};

struct non_group_table : check_error {
    using check_error::check_error;
};

struct not_generating : check_error {
    std::vector<int> unreached;
    not_generating(const std::string& msg, std::vector<int> missing)
        : check_error(msg), unreached(std::move(missing)) {}
};

struct not_subadditive : check_error {
    std::vector<std::pair<int, int>> witnesses;
    not_subadditive(const std::string& msg, std::vector<std::pair<int, int>> pairs)
        : check_error(msg), witnesses(std::move(pairs)) {}
};

struct nonzero_at_identity : check_error {
    using check_error::check_error;
};

struct negative_value : check_error {
    using check_error::check_error;
};

struct not_normal : check_error {
    using check_error::check_error;
};

struct not_a_subgroup : check_error {
    using check_error::check_error;
};

struct not_bumpable : check_error {
    using check_error::check_error;
};

struct not_integral : check_error {
    using check_error::check_error;
};

struct not_integral_output : check_error {
    using check_error::check_error;
};

struct not_decomposable : check_error {
    using check_error::check_error;
};

struct not_in_inertial_group : check_error {
    using check_error::check_error;
};

struct axiom_failure : check_error {
    using check_error::check_error;
};

struct well_definedness_failure : check_error {
    using check_error::check_error;
};

/// A derived quantity failed a check that should hold by construction.
struct internal_inconsistency : check_error {
    using check_error::check_error;
};

}  // namespace wcpo
