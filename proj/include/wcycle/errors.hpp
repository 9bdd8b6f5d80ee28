// Copyright (c) 2026 The wcycle authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace wcycle {

// Invalid argument supplied to a library operation (bad genus, mismatched
// lengths, malformed sequences, unknown enum values, ...).  The CLI maps this
// to exit code 2.
class argument_error : public std::invalid_argument {
public:
    explicit argument_error(const std::string& what) : std::invalid_argument(what) {}
};

// A configured resource cap (genus cap, degree cap) was exceeded.  The CLI
// maps this to exit code 3.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// An exact polynomial division left a nonzero remainder.  All quotients taken
// by this library are exact by construction, so this always signals an
// upstream bug rather than a user error.
class divisibility_error : public std::runtime_error {
public:
    explicit divisibility_error(const std::string& what) : std::runtime_error(what) {}
};

// A polynomial expected to be symmetric in its root variables failed the
// symmetry check.
class symmetry_error : public std::runtime_error {
public:
    explicit symmetry_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace wcycle
