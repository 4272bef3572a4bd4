#pragma once

// Text grammars and catalog files.
//   atom       := '(' factor (',' factor)* ')'   factor := DIGITS ('+'|'-'|'*')
//   subcomplex := atom (';' atom)*               empty  := '{}'
// Whitespace is insignificant.  '*' (Top) is valid only under a capped
// signature at the cap dimension.

#include <string>
#include <vector>

#include "gmol/subcomplex.hpp"

namespace gmol {

// Parse errors carry the character position.
struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& msg, size_t p)
        : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

Atom parse_atom(const std::string& text, const Signature& sig);
Subcomplex parse_subcomplex(const std::string& text, const Signature& sig);

// Catalog file: UTF-8 text, '#' comment lines (the first of which records
// the entry count), one canonical subcomplex serialization per line,
// sorted lexicographically.
void write_catalog(const std::string& path, const std::vector<Subcomplex>& entries);
std::vector<Subcomplex> read_catalog(const std::string& path, const Signature& sig);

// Canonical catalog order and helper: sorted serializations.
std::vector<std::string> catalog_lines(const std::vector<Subcomplex>& entries);

}  // namespace gmol
