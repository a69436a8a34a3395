#pragma once

#include <stdexcept>
#include <string>

namespace igusa {

// Broad failure classes; the C API and the CLI map these to status/exit codes.
enum class errc {
    invalid,     // malformed argument or configuration
    hypothesis,  // input outside the family the engine handles exactly
    parse,       // syntax error in an input expression
    budget,      // enumeration would exceed the point budget
    internal,    // broken invariant; always a bug
};

struct error : std::runtime_error {
    errc kind;
    error(errc k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

[[noreturn]] inline void fail(errc k, const std::string& what) { throw error(k, what); }

} // namespace igusa
