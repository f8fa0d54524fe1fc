#include "minuscule/limits.hpp"

#include <mutex>
#include <string>

#include "minuscule/error.hpp"

namespace minuscule {
namespace {

Limits g_limits;
std::mutex g_limits_mutex;

}  // namespace

const Limits& limits() { return g_limits; }

void set_limits(const Limits& l) {
  std::lock_guard lock(g_limits_mutex);
  g_limits = l;
}

void require_degree(long degree, const char* what) {
  if (degree > limits().degree_cap)
    throw BudgetError(std::string(what) + ": degree " + std::to_string(degree) +
                      " exceeds cap " + std::to_string(limits().degree_cap));
}

}  // namespace minuscule
