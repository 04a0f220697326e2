#include "hopfring/linalg.hpp"

#include <cstdint>

namespace hopf {

namespace {

int inv_mod(int a, int p) {
  // p is a small prime and a is nonzero mod p, so Fermat suffices.
  int r = 1;
  int base = ((a % p) + p) % p;
  int e = p - 2;
  while (e > 0) {
    if (e & 1) r = (r * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return r;
}

// Packed-bit path for p = 2. Each pivot keeps the reduced column together
// with the combination of original columns it stands for, so coefficient
// recovery is a single xor sweep over the target.
std::optional<std::vector<int>> solve_mod_2(
    std::size_t rows,
    const std::vector<std::vector<std::pair<std::size_t, int>>>& cols,
    const std::vector<std::pair<std::size_t, int>>& target) {
  const std::size_t nwords = (rows + 63) / 64;
  const std::size_t ncols = cols.size();
  const std::size_t cwords = (ncols + 63) / 64;

  struct Pivot {
    std::size_t row;
    std::vector<std::uint64_t> vec;
    std::vector<std::uint64_t> comb;
  };
  std::vector<Pivot> pivots;

  auto test_bit = [](const std::vector<std::uint64_t>& v, std::size_t i) {
    return (v[i / 64] >> (i % 64)) & 1u;
  };
  auto flip_bit = [](std::vector<std::uint64_t>& v, std::size_t i) {
    v[i / 64] ^= (std::uint64_t{1} << (i % 64));
  };
  auto xor_into = [](std::vector<std::uint64_t>& a,
                     const std::vector<std::uint64_t>& b) {
    for (std::size_t w = 0; w < a.size(); ++w) a[w] ^= b[w];
  };
  auto lowest_bit = [&](const std::vector<std::uint64_t>& v)
      -> std::optional<std::size_t> {
    for (std::size_t w = 0; w < v.size(); ++w) {
      if (v[w]) {
        std::uint64_t x = v[w];
        std::size_t b = 0;
        while (!(x & 1u)) {
          x >>= 1;
          ++b;
        }
        return w * 64 + b;
      }
    }
    return std::nullopt;
  };

  for (std::size_t j = 0; j < ncols; ++j) {
    std::vector<std::uint64_t> vec(nwords, 0);
    for (const auto& [r, v] : cols[j]) {
      if (v % 2) flip_bit(vec, r);
    }
    std::vector<std::uint64_t> comb(cwords, 0);
    flip_bit(comb, j);
    for (const auto& pv : pivots) {
      if (test_bit(vec, pv.row)) {
        xor_into(vec, pv.vec);
        xor_into(comb, pv.comb);
      }
    }
    if (auto r = lowest_bit(vec)) {
      pivots.push_back({*r, std::move(vec), std::move(comb)});
    }
  }

  std::vector<std::uint64_t> tvec(nwords, 0);
  for (const auto& [r, v] : target) {
    if (v % 2) flip_bit(tvec, r);
  }
  std::vector<std::uint64_t> tcomb(cwords, 0);
  for (const auto& pv : pivots) {
    if (test_bit(tvec, pv.row)) {
      xor_into(tvec, pv.vec);
      xor_into(tcomb, pv.comb);
    }
  }
  for (std::size_t w = 0; w < nwords; ++w) {
    if (tvec[w]) return std::nullopt;
  }
  std::vector<int> sol(ncols, 0);
  for (std::size_t j = 0; j < ncols; ++j) {
    if (test_bit(tcomb, j)) sol[j] = 1;
  }
  return sol;
}

std::optional<std::vector<int>> solve_mod_odd(
    int p, std::size_t rows,
    const std::vector<std::vector<std::pair<std::size_t, int>>>& cols,
    const std::vector<std::pair<std::size_t, int>>& target) {
  const std::size_t ncols = cols.size();

  struct Pivot {
    std::size_t row;
    std::vector<int> vec;
    std::vector<int> comb;
  };
  std::vector<Pivot> pivots;

  auto reduce = [&](std::vector<int>& vec, std::vector<int>& comb) {
    for (const auto& pv : pivots) {
      int f = vec[pv.row];
      if (f == 0) continue;
      for (std::size_t r = 0; r < rows; ++r) {
        vec[r] = ((vec[r] - f * pv.vec[r]) % p + p) % p;
      }
      for (std::size_t c = 0; c < ncols; ++c) {
        comb[c] = ((comb[c] - f * pv.comb[c]) % p + p) % p;
      }
    }
  };

  for (std::size_t j = 0; j < ncols; ++j) {
    std::vector<int> vec(rows, 0);
    for (const auto& [r, v] : cols[j]) vec[r] = ((v % p) + p) % p;
    std::vector<int> comb(ncols, 0);
    comb[j] = 1;
    reduce(vec, comb);
    std::size_t r = 0;
    while (r < rows && vec[r] == 0) ++r;
    if (r < rows) {
      int f = inv_mod(vec[r], p);
      for (auto& x : vec) x = (x * f) % p;
      for (auto& x : comb) x = (x * f) % p;
      pivots.push_back({r, std::move(vec), std::move(comb)});
    }
  }

  std::vector<int> tvec(rows, 0);
  for (const auto& [r, v] : target) tvec[r] = ((v % p) + p) % p;
  std::vector<int> tcomb(ncols, 0);
  reduce(tvec, tcomb);
  for (std::size_t r = 0; r < rows; ++r) {
    if (tvec[r] != 0) return std::nullopt;
  }
  return tcomb;
}

}  // namespace

std::optional<std::vector<int>> solve_mod_p(
    int p, std::size_t rows,
    const std::vector<std::vector<std::pair<std::size_t, int>>>& cols,
    const std::vector<std::pair<std::size_t, int>>& target) {
  if (p == 2) return solve_mod_2(rows, cols, target);
  return solve_mod_odd(p, rows, cols, target);
}

}  // namespace hopf
