#include "snest/basis.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "snest/error.hpp"

namespace snest {

OperatorBasis gellmann_basis(int d) {
  if (d < 2) {
    throw Error(ErrorKind::invalid_argument,
                "gellmann_basis: d must be >= 2, got " + std::to_string(d));
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Complex I(0.0, 1.0);
  OperatorBasis basis;
  basis.d = d;
  basis.ops.reserve(std::size_t(d) * d - 1);
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix s = ComplexMatrix::Zero(d, d);
      s(j, k) = inv_sqrt2;
      s(k, j) = inv_sqrt2;
      basis.ops.push_back(std::move(s));

      ComplexMatrix a = ComplexMatrix::Zero(d, d);
      a(j, k) = -I * inv_sqrt2;
      a(k, j) = I * inv_sqrt2;
      basis.ops.push_back(std::move(a));
    }
  }
  for (int m = 1; m < d; ++m) {
    const double norm = std::sqrt(double(m) * (m + 1));
    ComplexMatrix g = ComplexMatrix::Zero(d, d);
    for (int i = 0; i < m; ++i) g(i, i) = 1.0 / norm;
    g(m, m) = -double(m) / norm;
    basis.ops.push_back(std::move(g));
  }
  return basis;
}

int gellmann_index(int d, GellMannKind kind, int j, int k) {
  if (kind == GellMannKind::diagonal) {
    if (j < 1 || j >= d) throw Error(ErrorKind::invalid_argument, "gellmann_index: bad diagonal index");
    return d * (d - 1) + (j - 1);
  }
  if (j < 0 || k <= j || k >= d) {
    throw Error(ErrorKind::invalid_argument, "gellmann_index: need 0 <= j < k < d");
  }
  // pairs before (j,k) in lexicographic order
  int pair = 0;
  for (int a = 0; a < j; ++a) pair += d - 1 - a;
  pair += k - j - 1;
  return 2 * pair + (kind == GellMannKind::antisymmetric ? 1 : 0);
}

std::string_view to_string(GroupingScheme s) noexcept {
  switch (s) {
    case GroupingScheme::sequential: return "sequential";
    case GroupingScheme::appendix_a: return "appendix-A";
    case GroupingScheme::appendix_b: return "appendix-B";
  }
  return "sequential";
}

GroupingScheme parse_grouping_scheme(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return char(std::tolower(c)); });
  if (lower == "sequential") return GroupingScheme::sequential;
  if (lower == "appendix-a") return GroupingScheme::appendix_a;
  if (lower == "appendix-b") return GroupingScheme::appendix_b;
  throw Error(ErrorKind::invalid_argument, "unknown grouping scheme '" + std::string(name) + "'");
}

std::vector<int> scheme_permutation(GroupingScheme scheme, int d) {
  using K = GellMannKind;
  switch (scheme) {
    case GroupingScheme::sequential: {
      std::vector<int> perm(std::size_t(d) * d - 1);
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = int(i);
      return perm;
    }
    case GroupingScheme::appendix_a: {
      if (d != 4) {
        throw Error(ErrorKind::scheme_dimension_mismatch, "appendix-A grouping requires d=4");
      }
      auto s = [](int j, int k) { return gellmann_index(4, K::symmetric, j, k); };
      auto a = [](int j, int k) { return gellmann_index(4, K::antisymmetric, j, k); };
      auto g = [](int m) { return gellmann_index(4, K::diagonal, m); };
      return {a(0, 1), a(0, 2), a(0, 3),   //
              s(0, 1), a(1, 2), a(1, 3),   //
              s(0, 2), s(1, 2), a(2, 3),   //
              s(0, 3), s(1, 3), s(2, 3),   //
              g(1),    g(2),    g(3)};
    }
    case GroupingScheme::appendix_b: {
      if (d != 3) {
        throw Error(ErrorKind::scheme_dimension_mismatch, "appendix-B grouping requires d=3");
      }
      auto s = [](int j, int k) { return gellmann_index(3, K::symmetric, j, k); };
      auto a = [](int j, int k) { return gellmann_index(3, K::antisymmetric, j, k); };
      auto g = [](int m) { return gellmann_index(3, K::diagonal, m); };
      return {s(0, 1), a(0, 1), s(0, 2), a(0, 2), s(1, 2), a(1, 2), g(1), g(2)};
    }
  }
  throw Error(ErrorKind::invalid_argument, "unknown grouping scheme");
}

GroupedBasis group_basis(const OperatorBasis& basis, int N, int M,
                         GroupingScheme scheme) {
  // count check first so a mismatched (N,M) is reported as such
  if (N < 1 || M < 2 || long(N) * (M - 1) != long(basis.d) * basis.d - 1) {
    throw Error(ErrorKind::count_mismatch,
                "N(M-1) = " + std::to_string(long(N) * (M - 1)) + " but d^2-1 = " +
                    std::to_string(long(basis.d) * basis.d - 1));
  }
  const auto perm = scheme_permutation(scheme, basis.d);
  return group_basis(basis, N, M, perm);
}

GroupedBasis group_basis(const OperatorBasis& basis, int N, int M,
                         std::span<const int> perm) {
  const long count = long(basis.d) * basis.d - 1;
  if (N < 1 || M < 2 || long(N) * (M - 1) != count) {
    throw Error(ErrorKind::count_mismatch,
                "N(M-1) = " + std::to_string(long(N) * (M - 1)) + " but d^2-1 = " +
                    std::to_string(count));
  }
  if (long(basis.ops.size()) != count || long(perm.size()) != count) {
    throw Error(ErrorKind::count_mismatch, "grouping permutation must have d^2-1 entries");
  }
  std::vector<bool> seen(std::size_t(count), false);
  for (int p : perm) {
    if (p < 0 || p >= count || seen[std::size_t(p)]) {
      throw Error(ErrorKind::invalid_argument, "grouping is not a permutation of 0..d^2-2");
    }
    seen[std::size_t(p)] = true;
  }
  GroupedBasis gb;
  gb.d = basis.d;
  gb.N = N;
  gb.M = M;
  gb.groups.resize(std::size_t(N));
  std::size_t next = 0;
  for (auto& group : gb.groups) {
    group.reserve(std::size_t(M - 1));
    for (int k = 0; k < M - 1; ++k) group.push_back(basis.ops[std::size_t(perm[next++])]);
  }
  return gb;
}

PermutationFile parse_permutation_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    PermutationFile f;
    f.d = j.at("d").get<int>();
    f.N = j.at("N").get<int>();
    f.M = j.at("M").get<int>();
    f.perm = j.at("perm").get<std::vector<int>>();
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse_error, std::string("permutation file: ") + e.what());
  }
}

PermutationFile load_permutation_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_permutation_json(ss.str());
}

}  // namespace snest
