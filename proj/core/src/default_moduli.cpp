#include <stdexcept>
#include <string>
#include <vector>

#include "fqirr/errors.hpp"
#include "fqirr/field.hpp"

namespace fqirr {

namespace {

const std::vector<std::vector<int>> kModuliP2 = {
    {0,1},  // degree 1
    {1,1,1},  // degree 2
    {1,1,0,1},  // degree 3
    {1,1,0,0,1},  // degree 4
    {1,0,1,0,0,1},  // degree 5
    {1,1,0,0,0,0,1},  // degree 6
    {1,1,0,0,0,0,0,1},  // degree 7
    {1,1,0,1,1,0,0,0,1},  // degree 8
    {1,1,0,0,0,0,0,0,0,1},  // degree 9
    {1,0,0,1,0,0,0,0,0,0,1},  // degree 10
    {1,0,1,0,0,0,0,0,0,0,0,1},  // degree 11
    {1,0,0,1,0,0,0,0,0,0,0,0,1},  // degree 12
    {1,1,0,1,1,0,0,0,0,0,0,0,0,1},  // degree 13
    {1,0,0,0,0,1,0,0,0,0,0,0,0,0,1},  // degree 14
    {1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,1},  // degree 15
    {1,1,0,1,0,1,0,0,0,0,0,0,0,0,0,0,1},  // degree 16
    {1,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,1},  // degree 17
    {1,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1},  // degree 18
    {1,1,1,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,1},  // degree 19
    {1,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1},  // degree 20
    {1,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1},  // degree 21
    {1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1},  // degree 22
    {1,0,0,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1},  // degree 23
    {1,1,0,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1},  // degree 24
    {1,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1},  // degree 25
    {1,1,0,1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1},  // degree 26
    {1,1,1,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1},  // degree 27
    {1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1},  // degree 28
    {1,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1},  // degree 29
    {1,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1},  // degree 30
    {1,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1},  // degree 31
    {1,0,1,1,0,0,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1},  // degree 32
};

const std::vector<std::vector<int>> kModuliP3 = {
    {0,1},  // degree 1
    {1,0,1},  // degree 2
    {1,2,0,1},  // degree 3
    {2,1,0,0,1},  // degree 4
    {1,2,0,0,0,1},  // degree 5
    {2,1,0,0,0,0,1},  // degree 6
    {2,0,1,0,0,0,0,1},  // degree 7
    {2,0,1,0,0,0,0,0,1},  // degree 8
    {1,0,1,2,0,0,0,0,0,1},  // degree 9
    {1,0,2,0,0,0,0,0,0,0,1},  // degree 10
    {2,0,1,0,0,0,0,0,0,0,0,1},  // degree 11
    {2,0,1,0,0,0,0,0,0,0,0,0,1},  // degree 12
    {1,2,0,0,0,0,0,0,0,0,0,0,0,1},  // degree 13
    {2,1,0,0,0,0,0,0,0,0,0,0,0,0,1},  // degree 14
    {2,0,1,0,0,0,0,0,0,0,0,0,0,0,0,1},  // degree 15
    {1,0,1,1,0,0,0,0,0,0,0,0,0,0,0,0,1},  // degree 16
    {1,2,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1},  // degree 17
    {1,2,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1},  // degree 18
    {2,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1},  // degree 19
    {1,2,0,1,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1},  // degree 20
};

}  // namespace

int max_default_degree(int p) {
  if (p == 2) return static_cast<int>(kModuliP2.size());
  if (p == 3) return static_cast<int>(kModuliP3.size());
  throw ScopeError("unsupported characteristic " + std::to_string(p));
}

const std::vector<int>& default_modulus(int p, int n) {
  const int top = max_default_degree(p);
  if (n < 1 || n > top) {
    throw ScopeError("no default modulus of degree " + std::to_string(n) + " for p = " + std::to_string(p));
  }
  return (p == 2 ? kModuliP2 : kModuliP3)[static_cast<std::size_t>(n - 1)];
}

}  // namespace fqirr
