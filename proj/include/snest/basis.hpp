#pragma once

// Traceless orthonormal Hermitian operator bases and their grouping into the
// N blocks of M-1 operators used by the (N,M)-POVM construction.

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "snest/matkernel.hpp"

namespace snest {

/// The d^2-1 traceless members of an orthonormal Hermitian basis. The
/// identity element I/sqrt(d) is implicit and never stored.
struct OperatorBasis {
  int d = 0;
  std::vector<ComplexMatrix> ops;
};

/// Generalized Gell-Mann matrices in canonical order: for each pair j<k
/// (lexicographic) the symmetric (|j><k| + |k><j|)/sqrt2 followed by the
/// antisymmetric (-i|j><k| + i|k><j|)/sqrt2, then the d-1 diagonal
/// operators diag(1,...,1,-m,0,...,0)/sqrt(m(m+1)), m = 1..d-1.
OperatorBasis gellmann_basis(int d);

enum class GellMannKind { symmetric, antisymmetric, diagonal };

/// Position of a Gell-Mann member in canonical order. Pairs use zero-based
/// j<k; diagonal members use m in [1, d-1] with k ignored.
int gellmann_index(int d, GellMannKind kind, int j, int k = 0);

struct GroupedBasis {
  int d = 0;
  int N = 0;
  int M = 0;
  std::vector<std::vector<ComplexMatrix>> groups;  // N groups of M-1

  const ComplexMatrix& op(int alpha, int k) const { return groups[alpha][k]; }
};

enum class GroupingScheme { sequential, appendix_a, appendix_b };

std::string_view to_string(GroupingScheme s) noexcept;

/// Accepts "sequential", "appendix-A", "appendix-B" (case-insensitive letter).
GroupingScheme parse_grouping_scheme(std::string_view name);

/// Canonical-index permutation realizing a named scheme. appendix-A is the
/// (5,4) grouping for d=4, appendix-B the (8,2) ordering for d=3.
std::vector<int> scheme_permutation(GroupingScheme scheme, int d);

GroupedBasis group_basis(const OperatorBasis& basis, int N, int M,
                         GroupingScheme scheme);

/// Group by an explicit permutation of canonical indices: group alpha takes
/// perm[alpha*(M-1) .. alpha*(M-1)+M-2].
GroupedBasis group_basis(const OperatorBasis& basis, int N, int M,
                         std::span<const int> perm);

struct PermutationFile {
  int d = 0;
  int N = 0;
  int M = 0;
  std::vector<int> perm;
};

/// {"d":4,"N":5,"M":4,"perm":[...]}
PermutationFile parse_permutation_json(std::string_view text);
PermutationFile load_permutation_file(const std::filesystem::path& path);

}  // namespace snest
