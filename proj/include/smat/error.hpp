#pragma once

#include <stdexcept>
#include <string>

namespace smat {

// Single exception type for all pipeline errors. The message always names
// the offending file/line/entry where one exists.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace smat
