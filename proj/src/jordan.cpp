#include "bicomplex/jordan.hpp"

#include <algorithm>
#include <map>

#include "bicomplex/subspace.hpp"

namespace bicx {

std::vector<std::size_t> ComplexJordanData::block_sizes(std::size_t k) const {
  std::vector<std::size_t> sizes;
  for (const auto& b : blocks)
    if (b.eigenvalue == eigenvalues.at(k)) sizes.push_back(b.size);
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

std::vector<std::size_t> ComplexJordanData::blocks_of(std::size_t k) const {
  std::vector<std::size_t> idx;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (blocks[b].eigenvalue == eigenvalues.at(k)) idx.push_back(b);
  return idx;
}

bool ComplexJordanData::is_diagonal() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const JordanBlock& b) { return b.size == 1; });
}

std::string to_string(SuperdiagonalSymbol s) {
  switch (s) {
    case SuperdiagonalSymbol::zero: return "0";
    case SuperdiagonalSymbol::one: return "1";
    case SuperdiagonalSymbol::e: return "e";
    case SuperdiagonalSymbol::e_dagger: return "e'";
  }
  return "?";
}

std::set<SuperdiagonalSymbol> BicomplexJordanData::superdiagonal_alphabet() const {
  std::set<SuperdiagonalSymbol> out;
  const std::size_t n = j.rows();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const ComplexQ& a = j.m1()(i, i + 1);
    const ComplexQ& b = j.m2()(i, i + 1);
    const bool one1 = a == ComplexQ(1);
    const bool one2 = b == ComplexQ(1);
    if ((!one1 && !a.is_zero()) || (!one2 && !b.is_zero())) {
      throw ConsistencyFailure("superdiagonal entry outside {0, 1} in a component Jordan matrix");
    }
    if (one1 && one2) out.insert(SuperdiagonalSymbol::one);
    else if (one1) out.insert(SuperdiagonalSymbol::e);
    else if (one2) out.insert(SuperdiagonalSymbol::e_dagger);
    else out.insert(SuperdiagonalSymbol::zero);
  }
  return out;
}

MatrixQ jordan_matrix(const std::vector<JordanBlock>& blocks, std::size_t n) {
  MatrixQ j(n, n);
  for (const auto& b : blocks) {
    for (std::size_t k = 0; k < b.size; ++k) {
      j(b.offset + k, b.offset + k) = b.eigenvalue;
      if (k + 1 < b.size) j(b.offset + k, b.offset + k + 1) = ComplexQ(1);
    }
  }
  return j;
}

namespace {

MatrixQ transition_matrix(const std::vector<JordanBlock>& blocks, std::size_t n) {
  MatrixQ p(n, n);
  for (const auto& b : blocks)
    for (std::size_t k = 0; k < b.size; ++k) p.set_column(b.offset + k, b.chain[k]);
  return p;
}

void assign_offsets(std::vector<JordanBlock>& blocks) {
  std::size_t offset = 0;
  for (auto& b : blocks) {
    b.offset = offset;
    offset += b.size;
  }
}

// Jordan chains for a single eigenvalue with algebraic multiplicity `mult`.
std::vector<JordanBlock> chains_for(const MatrixQ& a, const ComplexQ& lambda, std::size_t mult) {
  const std::size_t n = a.rows();
  const MatrixQ shifted = a - scalar_identity(n, lambda);

  // Powers of (A - λI) until the kernel reaches the algebraic multiplicity.
  std::vector<MatrixQ> powers{MatrixQ::identity(n)};
  std::vector<std::vector<ComplexVector<Rational>>> kernels{{}};
  while (kernels.back().size() < mult) {
    if (powers.size() > mult) throw ConsistencyFailure("kernel of (A - λI)^k never reached the multiplicity");
    powers.push_back(shifted * powers.back());
    kernels.push_back(kernel_basis(powers.back()));
  }
  const std::size_t top = powers.size() - 1;

  struct Head {
    ComplexVector<Rational> vector;
    std::size_t length;
  };
  std::vector<Head> heads;
  for (std::size_t level = top; level >= 1; --level) {
    Subspace known = Subspace::span(kernels[level - 1], n);
    for (const auto& h : heads) {
      // B^{len - level} h lies in ker B^level \ ker B^{level-1}.
      known.extend(powers[h.length - level] * h.vector);
    }
    for (const auto& candidate : kernels[level]) {
      if (known.extend(candidate)) heads.push_back({candidate, level});
    }
  }

  std::vector<JordanBlock> blocks;
  for (const auto& h : heads) {
    JordanBlock b;
    b.eigenvalue = lambda;
    b.size = h.length;
    b.chain.resize(h.length);
    b.chain[h.length - 1] = h.vector;
    for (std::size_t k = h.length - 1; k-- > 0;) b.chain[k] = shifted * b.chain[k + 1];
    blocks.push_back(std::move(b));
  }
  std::stable_sort(blocks.begin(), blocks.end(), [](const auto& x, const auto& y) { return x.size > y.size; });
  return blocks;
}

}  // namespace

ComplexJordanData complex_jordan(const MatrixQ& a) {
  if (!a.is_square()) throw NotSquare(a.rows(), a.cols());
  const std::size_t n = a.rows();
  ComplexJordanData out;
  for (const auto& [root, mult] : split_eigenvalues(char_poly(a))) {
    out.eigenvalues.push_back(root);
    auto blocks = chains_for(a, root, mult);
    std::size_t total = 0;
    for (const auto& b : blocks) total += b.size;
    if (total != mult) throw ConsistencyFailure("Jordan chains do not span the generalized eigenspace");
    for (auto& b : blocks) out.blocks.push_back(std::move(b));
  }
  assign_offsets(out.blocks);
  out.transition = transition_matrix(out.blocks, n);
  out.jordan = jordan_matrix(out.blocks, n);
  if (!(a * out.transition == out.transition * out.jordan) || rank(out.transition) != n) {
    throw ConsistencyFailure("A P != P J after Jordan chain construction");
  }
  return out;
}

BicomplexJordanData bicomplex_jordan(const BicomplexMatrixQ& a) {
  if (!a.is_square()) throw NotSquare(a.rows(), a.cols());
  auto component = [](const MatrixQ& m, std::size_t index) {
    try {
      return complex_jordan(m);
    } catch (const DoesNotSplit& e) {
      throw DoesNotSplit(e.remaining(), index);
    }
  };
  BicomplexJordanData out;
  out.comp1 = component(a.m1(), 1);
  out.comp2 = component(a.m2(), 2);
  out.p = BicomplexMatrixQ(out.comp1.transition, out.comp2.transition);
  out.j = BicomplexMatrixQ(out.comp1.jordan, out.comp2.jordan);
  if (!(out.p * out.j * inverse(out.p) == a)) throw ConsistencyFailure("p j p^{-1} != A");
  return out;
}

ComplexJordanData permute_blocks(const ComplexJordanData& data, const std::vector<std::size_t>& order) {
  if (order.size() != data.blocks.size()) throw InvalidArgument("block order has the wrong length");
  std::vector<bool> seen(order.size(), false);
  ComplexJordanData out;
  out.eigenvalues = data.eigenvalues;
  for (std::size_t idx : order) {
    if (idx >= order.size() || seen[idx]) throw InvalidArgument("block order is not a permutation");
    seen[idx] = true;
    out.blocks.push_back(data.blocks[idx]);
  }
  assign_offsets(out.blocks);
  out.transition = transition_matrix(out.blocks, data.dimension());
  out.jordan = jordan_matrix(out.blocks, data.dimension());
  return out;
}

namespace {

// Distinct orderings of blocks, identified by their (eigenvalue, size) keys.
std::vector<std::vector<std::size_t>> distinct_orders(const ComplexJordanData& data, std::size_t limit) {
  // Rank each block by the first block carrying the same key; canonical
  // output keeps equal keys adjacent, so the rank sequence starts sorted.
  std::vector<std::size_t> rank(data.blocks.size());
  std::vector<std::size_t> representative;
  for (std::size_t b = 0; b < data.blocks.size(); ++b) {
    std::size_t r = 0;
    while (r < representative.size() && !(data.blocks[representative[r]].eigenvalue == data.blocks[b].eigenvalue &&
                                          data.blocks[representative[r]].size == data.blocks[b].size)) {
      ++r;
    }
    if (r == representative.size()) representative.push_back(b);
    rank[b] = r;
  }
  std::vector<std::size_t> seq = rank;
  std::sort(seq.begin(), seq.end());
  std::vector<std::vector<std::size_t>> orders;
  do {
    // Map the key sequence back to block indices, equal keys in original order.
    std::map<std::size_t, std::size_t> next_of_rank;
    std::vector<std::size_t> order;
    for (std::size_t r : seq) {
      std::size_t& cursor = next_of_rank[r];
      while (rank[cursor] != r) ++cursor;
      order.push_back(cursor++);
    }
    orders.push_back(std::move(order));
  } while (orders.size() < limit && std::next_permutation(seq.begin(), seq.end()));
  return orders;
}

}  // namespace

std::vector<BicomplexJordanData> enumerate_block_orders(const BicomplexJordanData& data, std::size_t limit) {
  std::vector<BicomplexJordanData> out;
  const auto orders1 = distinct_orders(data.comp1, limit);
  const auto orders2 = distinct_orders(data.comp2, limit);
  for (const auto& o1 : orders1) {
    for (const auto& o2 : orders2) {
      if (out.size() >= limit) return out;
      BicomplexJordanData v;
      v.comp1 = permute_blocks(data.comp1, o1);
      v.comp2 = permute_blocks(data.comp2, o2);
      v.p = BicomplexMatrixQ(v.comp1.transition, v.comp2.transition);
      v.j = BicomplexMatrixQ(v.comp1.jordan, v.comp2.jordan);
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace bicx
