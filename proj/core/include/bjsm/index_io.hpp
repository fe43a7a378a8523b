#pragma once

// Line-oriented ASCII index files.
//
//   BJSM v1
//   type corner
//   n <n> zeros <z> ones <o>
//   bucket <B>
//   maxrun0 <a> maxrun1 <b>
//   LG <count>            followed by <count> lines "<zeros> <ones>"
//   Lg <count>            likewise
//
//   BJSM v1
//   type table
//   n <n>
//   maxone <n integers>
//   minone <n integers>
//
// Single spaces, decimal integers, every line newline-terminated. Synthetic
// bucket-boundary points of a corner index are not written; they are rebuilt
// on load.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "bjsm/corner_index.hpp"
#include "bjsm/ones_table.hpp"

namespace bjsm {

class IndexFormatError : public std::runtime_error {
public:
    IndexFormatError(std::size_t line, const std::string& what);

    /// 1-based line number the error refers to.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

using AnyIndex = std::variant<CornerIndex, OnesTable>;

std::string serialize(const CornerIndex& index);
std::string serialize(const OnesTable& table);

/// Parses either flavor. Throws IndexFormatError.
AnyIndex deserialize(std::string_view data);

bool occurs(const AnyIndex& index, const ParikhVector& pv);
std::uint32_t text_length(const AnyIndex& index);

}  // namespace bjsm
