// Copyright 2026 The cohdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cohdist/blocks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cohdist {

namespace {

class UnionFind {
 public:
  explicit UnionFind(Index n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), Index{0});
  }

  Index find(Index x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }

  void unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

 private:
  std::vector<Index> parent_;
};

// Sums diagonal weights over a component in value-sorted order, so the
// result is bit-identical under any relabeling of the basis.
double component_weight(const ComplexMatrix& m, const SupportSet& members) {
  std::vector<double> diag;
  diag.reserve(members.size());
  for (Index i : members) diag.push_back(m(i, i).real());
  std::sort(diag.begin(), diag.end());
  double sum = 0.0;
  for (double d : diag) sum += d;
  return sum;
}

}  // namespace

CoherenceGraph coherence_graph(const DensityMatrix& rho, const TolerancePolicy& tol) {
  const ComplexMatrix& m = rho.mat();
  const double threshold = tol.magnitude_threshold(max_abs(m));
  CoherenceGraph graph;
  graph.dim = rho.dim();
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = i + 1; j < m.cols(); ++j) {
      if (std::abs(m(i, j)) > threshold) graph.edges.emplace_back(i, j);
    }
  }
  return graph;
}

BlockDecomposition irreducible_blocks(const DensityMatrix& rho, const TolerancePolicy& tol) {
  const ComplexMatrix& m = rho.mat();
  const Index n = rho.dim();
  const double threshold = tol.magnitude_threshold(max_abs(m));

  BlockDecomposition decomposition;
  decomposition.dim = n;

  UnionFind components(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const double mag = std::abs(m(i, j));
      if (mag > threshold) components.unite(i, j);
      if (mag > threshold / 10.0 && mag < threshold * 10.0) {
        decomposition.near_threshold_pairs.emplace_back(i, j);
      }
    }
  }

  // Group indices by component root; roots are component minima, so walking
  // them in ascending order yields blocks ordered by smallest member.
  std::vector<SupportSet> grouped(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    grouped[static_cast<std::size_t>(components.find(i))].push_back(i);
  }

  for (const SupportSet& members : grouped) {
    if (members.empty()) continue;
    const Index d = static_cast<Index>(members.size());
    const double weight = component_weight(m, members);
    const bool negligible = weight <= tol.abs_floor() * static_cast<double>(d);

    ComplexMatrix block(d, d);
    if (negligible) {
      block = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
    } else {
      for (Index r = 0; r < d; ++r) {
        for (Index c = 0; c < d; ++c) {
          block(r, c) = m(members[static_cast<std::size_t>(r)],
                          members[static_cast<std::size_t>(c)]) /
                        weight;
        }
      }
    }
    decomposition.blocks.push_back(
        Block{members, weight, DensityMatrix::validated(block, tol), negligible});
    decomposition.permutation.insert(decomposition.permutation.end(), members.begin(),
                                     members.end());
  }
  return decomposition;
}

bool is_irreducible(const DensityMatrix& rho, const TolerancePolicy& tol) {
  return irreducible_blocks(rho, tol).blocks.size() == 1;
}

}  // namespace cohdist
