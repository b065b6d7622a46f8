#pragma once

#include <functional>
#include <string>
#include <vector>

#include "xlab/trig.hpp"

namespace xlab::corpus {

struct NamedFunction {
  std::string id;
  std::function<double(double)> f;  // continuous and 2pi-periodic, given on [-pi, pi)
};

// Fixed set of 20 continuous periodic test functions of varied smoothness.
const std::vector<NamedFunction>& standard();

std::vector<trig::SampledFunction> sampled(std::size_t M);

}  // namespace xlab::corpus
