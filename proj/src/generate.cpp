#include "skewpair/generate.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "skewpair/canon.hpp"

namespace skewpair {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<CanonicalBlock> parse_block_spec(std::string_view spec, FieldSpec field) {
  std::vector<CanonicalBlock> out;
  if (trim(spec).empty()) throw ParseError("empty block spec");
  for (std::string_view item : split(spec, ',')) {
    auto parts = split(trim(item), ':');
    if (parts.size() < 2) throw ParseError("block spec item \"" + std::string(item) + "\" needs kind:n");
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(parts[1].data(), parts[1].data() + parts[1].size(), n);
    if (ec != std::errc() || ptr != parts[1].data() + parts[1].size() || n == 0) {
      throw ParseError("bad block size in \"" + std::string(item) + "\"");
    }
    const std::string_view kind = parts[0];
    if (kind == "L" || kind == "K") {
      if (parts.size() != 2) throw ParseError("L and K blocks take no label: \"" + std::string(item) + "\"");
      out.push_back(kind == "L" ? CanonicalBlock::L(n) : CanonicalBlock::K(n));
    } else if (kind == "J") {
      if (parts.size() != 3) throw ParseError("J blocks need an eigenvalue: \"" + std::string(item) + "\"");
      out.push_back(CanonicalBlock::J(n, field.parse_scalar(parts[2])));
    } else {
      throw ParseError("unknown block kind in \"" + std::string(item) + "\"");
    }
  }
  return out;
}

FieldElement random_small_scalar(FieldSpec field, std::mt19937_64& rng) {
  if (!field.is_rational()) return FieldElement(rng() % field.characteristic(), field.characteristic());
  const auto num = static_cast<long long>(rng() % 19) - 9;
  const auto den = static_cast<long long>(rng() % 9) + 1;
  return field.from_fraction(num, den);
}

Matrix random_congruence(FieldSpec field, std::size_t n, std::mt19937_64& rng) {
  Matrix lower = Matrix::identity(field, n);
  Matrix upper = Matrix::identity(field, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) lower(i, j) = random_small_scalar(field, rng);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) upper(i, j) = random_small_scalar(field, rng);
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n; i-- > 1;) std::swap(order[i], order[rng() % (i + 1)]);
  return lower * upper * permutation_matrix(field, order);
}

GeneratedInstance generate_instance(const std::vector<CanonicalBlock>& blocks, FieldSpec field, std::uint64_t seed,
                                    bool random_congruence_enabled) {
  MatrixPair sum = realize_sum(blocks, field);
  std::mt19937_64 rng(seed);
  Matrix c = random_congruence_enabled ? random_congruence(field, sum.size(), rng)
                                       : Matrix::identity(field, sum.size());
  std::vector<CanonicalBlock> sorted;
  for (std::size_t i : canonical_block_order(blocks)) sorted.push_back(blocks[i]);
  return {congruence_unchecked(sum, c), std::move(sorted), std::move(c)};
}

}  // namespace skewpair
