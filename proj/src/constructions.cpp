#include "icpm/constructions.hpp"

#include "icpm/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <utility>

namespace icpm {
namespace {

constexpr int kBinary = 2;

class ProblemBuilder {
 public:
  explicit ProblemBuilder(MessageLayout layout) : layout_(std::move(layout)) {}

  void add(TraceEntry entry) {
    const Index t = layout_.total();
    FieldMatrix demand = FieldMatrix::unit_column(kBinary, t, entry.demand);
    FieldMatrix knowledge(kBinary, t, entry.has_is_sum ? 1 : static_cast<Index>(entry.has.size()));
    for (std::size_t c = 0; c < entry.has.size(); ++c) {
      knowledge.set(entry.has[c], entry.has_is_sum ? 0 : static_cast<Index>(c), 1);
    }
    auto key = std::make_pair(demand.to_columns(), knowledge.to_columns());
    auto [it, inserted] = index_.try_emplace(std::move(key), receivers_.size());
    if (inserted) {
      receivers_.push_back({std::move(knowledge), std::move(demand)});
      trace_.emplace_back();
    }
    trace_[it->second].push_back(std::move(entry));
  }

  ConstructedProblem finish() && {
    GicProblem problem(kBinary, layout_.total(), 1, std::move(receivers_));
    return ConstructedProblem{std::move(problem), std::move(layout_), std::move(trace_)};
  }

  const MessageLayout& layout() const { return layout_; }

 private:
  MessageLayout layout_;
  std::vector<Receiver> receivers_;
  std::vector<std::vector<TraceEntry>> trace_;
  std::map<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>, std::size_t> index_;
};

// Visits every way of picking sizes[l] of the copies of elements[l], for all l
// at once, in lexicographic order (first element outermost). The callback
// receives the chosen message positions, sorted.
void for_each_selection(const MessageLayout& layout, const std::vector<int>& chosen_elements,
                        const std::vector<int>& sizes, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> picked;
  std::function<void(std::size_t)> recurse = [&](std::size_t depth) {
    if (depth == chosen_elements.size()) {
      auto sorted = picked;
      std::sort(sorted.begin(), sorted.end());
      visit(sorted);
      return;
    }
    const int element = chosen_elements[depth];
    for (const auto& combo : combinations(layout.copies(element), sizes[depth])) {
      for (int p : combo) picked.push_back(layout.y(element, p));
      recurse(depth + 1);
      picked.resize(picked.size() - combo.size());
    }
  };
  recurse(0);
}

void add_r3(ProblemBuilder& builder) {
  const auto& layout = builder.layout();
  std::vector<int> xs(static_cast<std::size_t>(layout.x_count()));
  std::iota(xs.begin(), xs.end(), 0);
  for (int i = 0; i < layout.ground_size(); ++i)
    for (int p = 0; p < layout.copies(i); ++p)
      builder.add(TraceEntry{ReceiverFamily::R3, IntVector{}, layout.y(i, p), xs, false});
}

void require_binary(const FieldMatrix& m, const char* what) {
  if (m.modulus() != kBinary) throw ValidationError(std::string(what) + " must be over GF(2)");
}

}  // namespace

MessageLayout::MessageLayout(int k, std::vector<int> copies, bool single_copy_names)
    : k_(k), copies_(std::move(copies)), offsets_(copies_.size() + 1, 0), single_copy_names_(single_copy_names) {
  if (k < 0) throw ValidationError("x message count must be non-negative");
  for (int c : copies_)
    if (c < 0) throw ValidationError("copy counts must be non-negative");
  std::partial_sum(copies_.begin(), copies_.end(), offsets_.begin() + 1);
}

int MessageLayout::x(int j) const {
  if (j < 0 || j >= k_) throw ValidationError("x index out of range");
  return j;
}

int MessageLayout::y(int i, int p) const {
  if (i < 0 || i >= ground_size() || p < 0 || p >= copies(i)) throw ValidationError("y index out of range");
  return k_ + offsets_[static_cast<std::size_t>(i)] + p;
}

MessageIndex MessageLayout::at(int position) const {
  if (position < 0 || position >= total()) throw ValidationError("message position out of range");
  if (position < k_) return {MessageIndex::Kind::X, position, 0};
  const int rest = position - k_;
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), rest);
  const int i = static_cast<int>(it - offsets_.begin()) - 1;
  return {MessageIndex::Kind::Y, i, rest - offsets_[static_cast<std::size_t>(i)]};
}

std::string MessageLayout::name(int position) const {
  const MessageIndex m = at(position);
  if (m.kind == MessageIndex::Kind::X) return "x" + std::to_string(m.element + 1);
  std::string out = "y" + std::to_string(m.element + 1);
  if (!single_copy_names_) out += "^" + std::to_string(m.copy + 1);
  return out;
}

const char* to_string(ReceiverFamily f) noexcept {
  switch (f) {
    case ReceiverFamily::S1:
      return "S1";
    case ReceiverFamily::S2:
      return "S2";
    case ReceiverFamily::R1:
      return "R1";
    case ReceiverFamily::R2:
      return "R2";
    case ReceiverFamily::R3:
      return "R3";
  }
  return "?";
}

ConstructedProblem gic_from_polymatroid(const DiscretePolymatroid& d) {
  const int k = d.rank();
  if (k < 1) throw ValidationError("construction needs a polymatroid of rank at least 1");
  ProblemBuilder builder(MessageLayout(k, d.caps().components()));
  const auto& layout = builder.layout();

  for (const auto& b : basis_vectors(d)) {
    const auto support = elements(b.support());
    std::vector<int> sizes;
    for (int l : support) sizes.push_back(b[l]);
    for_each_selection(layout, support, sizes, [&](const std::vector<int>& has) {
      for (int j = 0; j < k; ++j) builder.add(TraceEntry{ReceiverFamily::S1, b, layout.x(j), has, false});
    });
  }

  for (const auto& c : minimal_excluded_vectors(d)) {
    const auto support = elements(c.support());
    for (int j : support) {
      std::vector<int> others;
      std::vector<int> sizes;
      for (int l : support) {
        if (l == j) continue;
        others.push_back(l);
        sizes.push_back(c[l]);
      }
      for (int p = 0; p < layout.copies(j); ++p) {
        // The rest of the Has-set: c_j - 1 copies of element j, never copy p itself.
        std::vector<int> rest;
        for (int other = 0; other < layout.copies(j); ++other)
          if (other != p) rest.push_back(layout.y(j, other));
        const auto gamma2_choices = combinations(static_cast<int>(rest.size()), c[j] - 1);
        for_each_selection(layout, others, sizes, [&](const std::vector<int>& gamma1) {
          for (const auto& pick : gamma2_choices) {
            std::vector<int> has = gamma1;
            for (int idx : pick) has.push_back(rest[static_cast<std::size_t>(idx)]);
            std::sort(has.begin(), has.end());
            builder.add(TraceEntry{ReceiverFamily::S2, c, layout.y(j, p), std::move(has), true});
          }
        });
      }
    }
  }

  add_r3(builder);
  return std::move(builder).finish();
}

ConstructedProblem gic_from_matroid(const Matroid& m) {
  const int k = m.rank();
  if (k < 1) throw ValidationError("construction needs a matroid of rank at least 1");
  const int size = m.ground_size();
  ProblemBuilder builder(MessageLayout(k, std::vector<int>(static_cast<std::size_t>(size), 1), true));
  const auto& layout = builder.layout();

  for (Subset basis : bases(m)) {
    std::vector<int> has;
    for (int e : elements(basis)) has.push_back(layout.y(e, 0));
    for (int j = 0; j < k; ++j)
      builder.add(TraceEntry{ReceiverFamily::R1, IntVector::indicator(size, basis), layout.x(j), has, false});
  }
  for (Subset circuit : circuits(m)) {
    for (int y : elements(circuit)) {
      std::vector<int> has;
      for (int e : elements(circuit))
        if (e != y) has.push_back(layout.y(e, 0));
      builder.add(TraceEntry{ReceiverFamily::R2, IntVector::indicator(size, circuit), layout.y(y, 0), has, true});
    }
  }
  add_r3(builder);
  return std::move(builder).finish();
}

IndexCode code_from_matroid_rep(const FieldMatrix& representation, const ConstructedProblem& p) {
  require_binary(representation, "matroid representation");
  if (p.problem.modulus() != kBinary) throw ValidationError("problem must be over GF(2)");
  const auto& layout = p.layout;
  if (representation.rows() != layout.x_count() || representation.cols() != layout.ground_size() ||
      layout.y_count() != layout.ground_size()) {
    throw ShapeMismatch("representation is " + std::to_string(representation.rows()) + "x" +
                        std::to_string(representation.cols()) + " but the problem was built from a rank-" +
                        std::to_string(layout.x_count()) + " matroid on " + std::to_string(layout.ground_size()) +
                        " elements");
  }
  FieldMatrix l(kBinary, layout.total(), layout.ground_size());
  for (int i = 0; i < layout.ground_size(); ++i) {
    l.set(layout.y(i, 0), i, 1);
    for (int j = 0; j < layout.x_count(); ++j) l.set(layout.x(j), i, representation(j, i));
  }
  return IndexCode{std::move(l)};
}

FieldMatrix matroid_rep_from_code(const ConstructedProblem& p, const IndexCode& code) {
  require_binary(code.matrix, "code");
  const auto& layout = p.layout;
  const int m = layout.ground_size();
  const int k = layout.x_count();
  if (layout.y_count() != m) throw ValidationError("problem was not built from a matroid");
  if (code.matrix.rows() != layout.total()) throw ShapeMismatch("code matrix row count does not match the problem");
  if (code.length() != m) throw NotPerfect("length " + std::to_string(code.length()) + " differs from " + std::to_string(m));

  const FieldMatrix x_block = code.matrix.row_block(0, k);
  const FieldMatrix y_block = code.matrix.row_block(k, m);
  if (rank(y_block) != m) throw NonInvertibleYBlock();
  if (!is_perfect(p.problem, code)) throw NotPerfect("some receiver cannot decode");

  FieldMatrix c = x_block * invert(y_block);

  // Bases stay invertible and each circuit keeps exactly one dependency.
  for (const auto& entries : p.trace) {
    for (const auto& e : entries) {
      if (e.family != ReceiverFamily::R1 && e.family != ReceiverFamily::R2) continue;
      std::vector<Index> cols;
      for (int el : elements(e.generator.support())) cols.push_back(el);
      const Index expected = e.family == ReceiverFamily::R1 ? k : static_cast<Index>(cols.size()) - 1;
      if (rank(c.select_columns(cols)) != expected) throw Error("internal: extracted matrix misses a basis or circuit");
    }
  }
  return c;
}

SubspaceRepresentation polymatroid_rep_from_code(const ConstructedProblem& p, const IndexCode& code,
                                                 const DiscretePolymatroid& d, int n) {
  require_binary(code.matrix, "code");
  if (n < 1) throw ValidationError("dimension must be at least 1");
  const auto& layout = p.layout;
  if (layout.x_count() != d.rank() || layout.ground_size() != d.ground_size()) {
    throw ValidationError("problem was not built from this polymatroid");
  }
  const Index upper = Index{n} * layout.x_count();
  const Index lower = Index{n} * layout.y_count();
  if (code.matrix.rows() != upper + lower) throw ShapeMismatch("code matrix row count does not match the problem");
  if (code.length() != lower) {
    throw NotPerfect("length " + std::to_string(code.length()) + " differs from n * sum rho({i}) = " +
                     std::to_string(lower));
  }
  const FieldMatrix lower_block = code.matrix.row_block(upper, lower);
  if (rank(lower_block) != lower) throw NonInvertibleLowerBlock();
  const GicProblem lifted = n == 1 ? p.problem : lift(p.problem, n);
  if (!is_perfect(lifted, code)) throw NotPerfect("code does not verify or is not of length n * mu");

  const FieldMatrix c = code.matrix.row_block(0, upper) * invert(lower_block);

  SubspaceRepresentation rep{c, {}};
  for (int i = 0; i < layout.ground_size(); ++i) rep.block_widths.push_back(Index{n} * layout.copies(i));
  if (!(from_subspaces(rep) == scale(d, n))) throw Error("internal: extracted subspaces do not represent nD");
  return rep;
}

}  // namespace icpm
