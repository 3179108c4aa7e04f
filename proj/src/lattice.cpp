#include "bicomplex/lattice.hpp"

#include <map>
#include <sstream>

namespace bicx {

namespace {

std::string shift_label(const std::vector<std::size_t>& tuple, const std::vector<std::size_t>& sizes) {
  std::string s = "Z[";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(sizes[i] - tuple[i]);
  }
  return s + "]";
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

template <class Space>
std::string render_dot(const Lattice<Space>& l, const std::vector<std::size_t>& ranks, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box, fontname=\"Helvetica\"];\n";
  for (std::size_t i = 0; i < l.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"" << escape(l.labels[i]) << "\"];\n";
  }
  std::map<std::size_t, std::vector<std::size_t>> by_rank;
  for (std::size_t i = 0; i < ranks.size(); ++i) by_rank[ranks[i]].push_back(i);
  for (const auto& [rank, members] : by_rank) {
    os << "  { rank=same;";
    for (std::size_t i : members) os << " n" << i << ";";
    os << " }  // dim " << rank << "\n";
  }
  for (const auto& [lo, hi] : l.covers) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace

ComponentLattice component_lattice(const ComplexJordanData& j) {
  const std::size_t n = j.dimension();
  ComponentLattice out;
  for (const auto& b : j.blocks) out.block_sizes.push_back(b.size);
  const std::size_t k = out.block_sizes.size();

  out.info.eigenspaces = j.eigenvalues.size();
  for (std::size_t e = 0; e < j.eigenvalues.size(); ++e) {
    const std::size_t blocks = j.blocks_of(e).size();
    if (blocks > 1) {
      out.info.complete = false;
      out.info.warnings.push_back("eigenvalue " + to_string(j.eigenvalues[e]) + " has " + std::to_string(blocks) +
                                  " Jordan blocks; the invariant subspace lattice is infinite and only "
                                  "Jordan-basis-aligned representatives are listed");
    }
  }
  if (j.eigenvalues.size() > 1) {
    out.info.warnings.push_back("composed as a direct sum over " + std::to_string(j.eigenvalues.size()) +
                                " generalized eigenspaces");
  }

  const MatrixQ a = j.transition * j.jordan * *try_inverse(j.transition);

  // Lexicographic enumeration of tuples 0 <= a_i <= n_i (mixed radix).
  std::map<std::vector<std::size_t>, std::size_t> index;
  std::vector<std::size_t> tuple(k, 0);
  while (true) {
    std::vector<ComplexVector<Rational>> vectors;
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < tuple[b]; ++c) vectors.push_back(j.blocks[b].chain[c]);
    Subspace s = Subspace::span(vectors, n);
    if (!is_invariant(a, s)) throw ConsistencyFailure("prefix span " + shift_label(tuple, out.block_sizes) +
                                                      " is not invariant");
    index[tuple] = out.nodes.size();
    out.nodes.push_back(std::move(s));
    out.labels.push_back(shift_label(tuple, out.block_sizes));
    out.tuples.push_back(tuple);

    std::size_t pos = k;
    while (pos > 0 && tuple[pos - 1] == out.block_sizes[pos - 1]) tuple[--pos] = 0;
    if (pos == 0) break;
    ++tuple[pos - 1];
  }

  for (std::size_t i = 0; i < out.tuples.size(); ++i) {
    for (std::size_t b = 0; b < k; ++b) {
      if (out.tuples[i][b] == out.block_sizes[b]) continue;
      auto up = out.tuples[i];
      ++up[b];
      out.covers.emplace_back(i, index.at(up));
    }
  }
  return out;
}

BicomplexLattice product_lattice(const Lattice<Subspace>& l1, const Lattice<Subspace>& l2) {
  BicomplexLattice out;
  const std::size_t n2 = l2.size();
  for (std::size_t i = 0; i < l1.size(); ++i) {
    for (std::size_t k = 0; k < n2; ++k) {
      out.nodes.push_back({l1.nodes[i], l2.nodes[k]});
      out.labels.push_back("[" + l1.labels[i] + " | " + l2.labels[k] + "]");
      out.factors.emplace_back(i, k);
    }
  }
  for (const auto& [lo, hi] : l1.covers)
    for (std::size_t k = 0; k < n2; ++k) out.covers.emplace_back(lo * n2 + k, hi * n2 + k);
  for (const auto& [lo, hi] : l2.covers)
    for (std::size_t i = 0; i < l1.size(); ++i) out.covers.emplace_back(i * n2 + lo, i * n2 + hi);
  std::sort(out.covers.begin(), out.covers.end());

  out.info.complete = l1.info.complete && l2.info.complete;
  out.info.eigenspaces = l1.info.eigenspaces + l2.info.eigenspaces;
  for (const auto& w : l1.info.warnings) out.info.warnings.push_back("component 1: " + w);
  for (const auto& w : l2.info.warnings) out.info.warnings.push_back("component 2: " + w);
  return out;
}

BicomplexLattice bicomplex_lattice(const BicomplexMatrixQ& a) {
  const auto jd = bicomplex_jordan(a);
  auto out = product_lattice(component_lattice(jd.comp1), component_lattice(jd.comp2));
  for (const auto& node : out.nodes) {
    if (!is_invariant(a, node)) throw ConsistencyFailure("product lattice node is not invariant under A");
  }
  return out;
}

std::string to_dot(const ComponentLattice& lattice) {
  std::vector<std::size_t> ranks;
  for (const auto& s : lattice.nodes) ranks.push_back(s.dim());
  return render_dot(lattice, ranks, "component_lattice");
}

std::string to_dot(const BicomplexLattice& lattice) {
  std::vector<std::size_t> ranks;
  for (const auto& s : lattice.nodes) ranks.push_back(s.s1.dim() + s.s2.dim());
  return render_dot(lattice, ranks, "bicomplex_lattice");
}

}  // namespace bicx
