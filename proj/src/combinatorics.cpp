#include "scs/combinatorics.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "scs/errors.hpp"

namespace scs {

std::string subset_to_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (s & (Subset{1} << i)) {
      if (!first) out += ",";
      out += std::to_string(i + 1);
      first = false;
    }
  }
  return out + "}";
}

IntPartition::IntPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw DomainError("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int IntPartition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> IntPartition::type_counts() const {
  std::vector<int> m(static_cast<std::size_t>(weight()), 0);
  for (int p : parts_) ++m[static_cast<std::size_t>(p - 1)];
  return m;
}

std::string IntPartition::to_string() const {
  std::string out;
  std::size_t i = 0;
  while (i < parts_.size()) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (!out.empty()) out += " ";
    out += std::to_string(parts_[i]) + "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

IntPartition SetPartition::shape() const {
  std::vector<int> sizes;
  sizes.reserve(blocks.size());
  for (Subset b : blocks) sizes.push_back(subset_size(b));
  return IntPartition(std::move(sizes));
}

std::string SetPartition::to_string() const {
  std::string out;
  for (Subset b : blocks) out += subset_to_string(b);
  return out;
}

std::vector<IntPartition> integer_partitions(int s) {
  if (s < 1) throw DomainError("integer_partitions requires s >= 1");
  std::vector<IntPartition> out;
  std::vector<int> current;
  // Largest part first, then recursively partition the rest with parts no
  // larger than the previous one; iterating part sizes downward yields
  // lexicographically descending order.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(s, s);
  return out;
}

std::vector<SetPartition> set_partitions(Subset ground) {
  if (ground == 0) throw DomainError("set_partitions requires a nonempty set");
  std::vector<Subset> elements;
  for (Subset rest = ground; rest; rest &= rest - 1) elements.push_back(lowest_element(rest));

  std::vector<SetPartition> out;
  std::vector<Subset> blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == elements.size()) {
      out.push_back(SetPartition{ground, blocks});
      return;
    }
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b] |= elements[idx];
      rec(idx + 1);
      blocks[b] &= ~elements[idx];
    }
    blocks.push_back(elements[idx]);
    rec(idx + 1);
    blocks.pop_back();
  };
  rec(0);
  return out;
}

Integer bell_number(int s) {
  if (s < 0) throw DomainError("bell_number requires s >= 0");
  // Bell triangle.
  std::vector<Integer> row{Integer(1)};
  for (int i = 0; i < s; ++i) {
    std::vector<Integer> next{row.back()};
    for (const Integer& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

Integer factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer p_alpha(const IntPartition& alpha) {
  const int s = alpha.weight();
  Integer den(1);
  const auto m = alpha.type_counts();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    Integer block_fact = factorial(static_cast<int>(i) + 1);
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), block_fact.get_mpz_t(), static_cast<unsigned long>(m[i]));
    den *= pw * factorial(m[i]);
  }
  return factorial(s) / den;
}

Integer eulerian_number(int k, int i) {
  if (k < 1 || i < 1 || i > k) return Integer(0);
  // E(k,i) = i E(k-1,i) + (k-i+1) E(k-1,i-1), E(1,1) = 1.
  std::vector<Integer> row{Integer(0), Integer(1)};  // index 0 is a zero sentinel
  for (int kk = 2; kk <= k; ++kk) {
    std::vector<Integer> next(static_cast<std::size_t>(kk) + 1, Integer(0));
    for (int ii = 1; ii <= kk; ++ii) {
      const Integer same = ii < kk ? row[static_cast<std::size_t>(ii)] : Integer(0);
      next[static_cast<std::size_t>(ii)] =
          ii * same + (kk - ii + 1) * row[static_cast<std::size_t>(ii - 1)];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(i)];
}

Scalar eulerian_poly(int m, const Scalar& t) {
  if (m < 0) throw DomainError("eulerian_poly requires m >= 0");
  if (m == 0) return Scalar(1);
  // Horner on sum_{i=1}^m E(m,i) t^i = t * (E(m,1) + t (E(m,2) + ...)).
  Scalar acc(0);
  for (int i = m; i >= 1; --i) acc = acc * t + Scalar(eulerian_number(m, i));
  return acc * t;
}

Integer euler_number(int k) {
  if (k < 0) throw DomainError("euler_number requires k >= 0");
  // Seidel's boustrophedon triangle; E_k is the last entry of row k.
  std::vector<Integer> row{Integer(1)};
  for (int r = 1; r <= k; ++r) {
    std::vector<Integer> next(static_cast<std::size_t>(r) + 1, Integer(0));
    for (int j = 1; j <= r; ++j) {
      next[static_cast<std::size_t>(j)] =
          next[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(r - j)];
    }
    row = std::move(next);
  }
  return row.back();
}

}  // namespace scs
