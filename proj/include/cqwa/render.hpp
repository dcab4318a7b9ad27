#pragma once

#include <string>
#include <vector>

#include "cqwa/pbw.hpp"
#include "cqwa/poisson.hpp"
#include "cqwa/qtorus.hpp"

namespace cqwa {

// stem + index, e.g. indexed_names("w", 3, 0) = {w0, w1, w2}.
std::vector<std::string> indexed_names(const std::string& stem, std::size_t count, int first = 1);

// Terms in the container order, coefficient first: "(q - 1)*x1*x2^2 - q^-1*x3".
// Empty names default to x1, x2, ...
std::string render(const NCPoly& f, const std::vector<std::string>& names = {});
std::string render(const TorusElement& f, const std::vector<std::string>& names = {});
std::string render(const CPoly& f, const std::vector<std::string>& names = {});

}  // namespace cqwa
