#ifndef SGH_TABLE_IO_HPP_
#define SGH_TABLE_IO_HPP_

#include <string>

#include "sgh/semigroup.hpp"

namespace sgh {

// Table text format: optional comment lines starting with '#'; first
// non-comment line is the order n; then n lines of n whitespace-separated
// entries in [0, n). The parsed table is validated.
SemigroupTable parse_table(const std::string& text);

// Deterministic writer for the same format (no comments, single spaces).
std::string format_table(const SemigroupTable& s);

SemigroupTable read_table_file(const std::string& path);

}  // namespace sgh

#endif  // SGH_TABLE_IO_HPP_
