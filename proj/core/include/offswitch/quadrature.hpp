#pragma once

#include <cstddef>
#include <vector>

namespace offswitch {

/// Nodes and weights of a fixed-order Gaussian rule.
///
/// Hermite rules are normalized to the standard normal density: for
/// X ~ N(0, 1), E[f(X)] ~= sum_i weights[i] * f(nodes[i]). Legendre rules
/// integrate over [-1, 1] against the unit weight.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
};

QuadratureRule gauss_hermite(std::size_t n);
QuadratureRule gauss_legendre(std::size_t n);

inline constexpr std::size_t kDefaultQuadratureNodes = 201;

// Cached 201-node rules; constructed once, read-only afterwards.
const QuadratureRule& default_hermite_rule();
const QuadratureRule& default_legendre_rule();

}  // namespace offswitch
