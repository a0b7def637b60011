#include "icpm/solver.hpp"

#include "icpm/errors.hpp"
#include "icpm/gf2_span.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <numeric>
#include <thread>

namespace icpm {
namespace {

constexpr std::uint64_t kNotFound = std::numeric_limits<std::uint64_t>::max();

// Receivers ordered so that those with the least side information, which
// reject the most candidates, are tried first.
std::vector<std::size_t> check_order(const GicProblem& p) {
  std::vector<std::size_t> order(p.receivers().size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p.receiver(a).knowledge.cols() < p.receiver(b).knowledge.cols();
  });
  return order;
}

class PackedChecker {
 public:
  PackedChecker(const GicProblem& p, const SearchLayout& layout) : layout_(layout) {
    for (std::size_t i : check_order(p)) {
      const Receiver& r = p.receiver(i);
      Entry e;
      for (Gf2Word w : pack_columns(r.knowledge)) e.knowledge.insert(w);
      for (Gf2Word w : pack_columns(r.demand))
        if (!e.knowledge.contains(w)) e.demand.push_back(e.knowledge.reduce(w));
      if (!e.demand.empty()) entries_.push_back(std::move(e));
    }
  }

  bool passes(std::uint64_t candidate, std::vector<Gf2Word>& columns) const {
    fill(candidate, columns);
    for (const Entry& e : entries_) {
      Gf2Span span = e.knowledge;
      for (Gf2Word c : columns) span.insert(c);
      for (Gf2Word d : e.demand)
        if (!span.contains(d)) return false;
    }
    return true;
  }

 private:
  struct Entry {
    Gf2Span knowledge;
    std::vector<Gf2Word> demand;
  };

  void fill(std::uint64_t candidate, std::vector<Gf2Word>& columns) const {
    const std::size_t l = layout_.length;
    columns.assign(l, 0);
    for (std::size_t c = 0; c < layout_.pinned_rows.size(); ++c) columns[c] = Gf2Word{1} << layout_.pinned_rows[c];
    for (std::size_t f = 0; f < layout_.free_rows.size(); ++f) {
      for (std::size_t c = 0; c < l; ++c) {
        if ((candidate >> (f * l + c)) & 1U) columns[c] |= Gf2Word{1} << layout_.free_rows[f];
      }
    }
  }

  const SearchLayout& layout_;
  std::vector<Entry> entries_;
};

FieldMatrix candidate_matrix(const GicProblem& p, const SearchLayout& layout, std::uint64_t candidate) {
  const Index l = static_cast<Index>(layout.length);
  FieldMatrix out(2, p.symbol_count(), l);
  for (std::size_t c = 0; c < layout.pinned_rows.size(); ++c) out.set(layout.pinned_rows[c], static_cast<Index>(c), 1);
  for (std::size_t f = 0; f < layout.free_rows.size(); ++f)
    for (Index c = 0; c < l; ++c)
      if ((candidate >> (f * static_cast<std::size_t>(l) + static_cast<std::size_t>(c))) & 1U) out.set(layout.free_rows[f], c, 1);
  return out;
}

class DenseChecker {
 public:
  DenseChecker(const GicProblem& p, const SearchLayout& layout) : p_(p), layout_(layout), order_(check_order(p)) {}

  bool passes(std::uint64_t candidate) const {
    const FieldMatrix l = candidate_matrix(p_, layout_, candidate);
    for (std::size_t i : order_) {
      const Receiver& r = p_.receiver(i);
      if (!in_column_span(hcat(r.knowledge, l), r.demand)) return false;
    }
    return true;
  }

 private:
  const GicProblem& p_;
  const SearchLayout& layout_;
  std::vector<std::size_t> order_;
};

struct WorkerResult {
  std::uint64_t count = 0;
  std::vector<std::uint64_t> hits;
};

template <class Check>
WorkerResult scan(std::uint64_t begin, std::uint64_t end, ReportMode mode, std::atomic<std::uint64_t>& best,
                  const Check& check) {
  WorkerResult out;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    if (mode == ReportMode::First && idx >= best.load(std::memory_order_relaxed)) break;
    if (!check(idx)) continue;
    if (mode == ReportMode::First) {
      std::uint64_t current = best.load();
      while (idx < current && !best.compare_exchange_weak(current, idx)) {
      }
      break;
    }
    ++out.count;
    if (mode == ReportMode::All) out.hits.push_back(idx);
  }
  return out;
}

void validate(const GicProblem& p, const SearchConfig& cfg) {
  if (p.modulus() != 2) throw ValidationError("solver handles GF(2) only, got q=" + std::to_string(p.modulus()));
  if (p.dimension() != 1) throw ValidationError("solver handles scalar codes only, got n=" + std::to_string(p.dimension()));
  if (cfg.budget == 0) throw ValidationError("budget must be positive");
  if (cfg.jobs < 1) throw ValidationError("jobs must be at least 1");
}

}  // namespace

const char* to_string(SolveVerdict v) noexcept {
  switch (v) {
    case SolveVerdict::Found:
      return "found";
    case SolveVerdict::NoneExists:
      return "none_exists";
    case SolveVerdict::BudgetExceeded:
      return "budget_exceeded";
  }
  return "?";
}

SearchLayout plan_search(const GicProblem& p, bool normalize) {
  SearchLayout layout;
  layout.length = mu(p);
  const Index t = p.symbol_count();
  const auto all_rows = [&] {
    layout.free_rows.resize(static_cast<std::size_t>(t));
    std::iota(layout.free_rows.begin(), layout.free_rows.end(), Index{0});
    return layout;
  };
  if (!normalize || layout.length == 0 || p.dimension() != 1) return all_rows();

  std::map<std::vector<std::vector<int>>, std::vector<std::size_t>> groups;
  std::vector<std::vector<std::vector<int>>> first_seen;
  for (std::size_t i = 0; i < p.receivers().size(); ++i) {
    auto key = column_space_key(p.receiver(i).knowledge).to_rows();
    auto& members = groups[key];
    if (members.empty()) first_seen.push_back(key);
    members.push_back(i);
  }

  for (const auto& key : first_seen) {
    // A reduced basis of unit rows means the span is a coordinate subspace.
    std::vector<bool> spanned(static_cast<std::size_t>(t), false);
    bool coordinate = true;
    for (const auto& row : key) {
      if (std::count(row.begin(), row.end(), 1) != 1) {
        coordinate = false;
        break;
      }
      spanned[static_cast<std::size_t>(std::find(row.begin(), row.end(), 1) - row.begin())] = true;
    }
    if (!coordinate) continue;
    std::vector<Index> pinned;
    std::vector<Index> free;
    for (Index r = 0; r < t; ++r) (spanned[static_cast<std::size_t>(r)] ? free : pinned).push_back(r);
    if (pinned.size() != layout.length) continue;

    std::vector<FieldMatrix> demands;
    for (std::size_t i : groups[key]) demands.push_back(p.receiver(i).demand);
    const FieldMatrix joined = hcat(demands);
    FieldMatrix projected(p.modulus(), static_cast<Index>(pinned.size()), joined.cols());
    for (std::size_t r = 0; r < pinned.size(); ++r)
      for (Index c = 0; c < joined.cols(); ++c) projected.set(static_cast<Index>(r), c, joined(pinned[r], c));
    if (rank(projected) != static_cast<Index>(pinned.size())) continue;

    layout.free_rows = std::move(free);
    layout.pinned_rows = std::move(pinned);
    return layout;
  }
  return all_rows();
}

SolveOutcome solve_perfect_scalar_binary(const GicProblem& p, const SearchConfig& cfg) {
  validate(p, cfg);
  const SearchLayout layout = plan_search(p, cfg.normalize_y_block);
  const std::size_t bits = layout.free_rows.size() * layout.length;

  SolveOutcome out;
  out.normalized = layout.normalized();
  const bool bounded = bits < 64;
  out.space_size = bounded ? std::uint64_t{1} << bits : 0;
  const std::uint64_t limit = bounded ? std::min(out.space_size, cfg.budget) : cfg.budget;
  const bool exhaustive = bounded && limit == out.space_size;

  std::atomic<std::uint64_t> best{kNotFound};
  const auto jobs = static_cast<std::uint64_t>(cfg.jobs);
  std::vector<WorkerResult> results(static_cast<std::size_t>(jobs));
  const bool packed = p.symbol_count() <= 64;

  auto work = [&](std::uint64_t w) {
    const std::uint64_t begin = limit / jobs * w + std::min(w, limit % jobs);
    const std::uint64_t end = begin + limit / jobs + (w < limit % jobs ? 1 : 0);
    if (packed) {
      PackedChecker checker(p, layout);
      std::vector<Gf2Word> columns;
      results[w] = scan(begin, end, cfg.report, best, [&](std::uint64_t idx) { return checker.passes(idx, columns); });
    } else {
      DenseChecker checker(p, layout);
      results[w] = scan(begin, end, cfg.report, best, [&](std::uint64_t idx) { return checker.passes(idx); });
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (std::uint64_t w = 0; w < jobs; ++w) threads.emplace_back(work, w);
  }

  if (cfg.report == ReportMode::First) {
    if (best != kNotFound) {
      out.verdict = SolveVerdict::Found;
      out.code = IndexCode{candidate_matrix(p, layout, best)};
      out.candidates_tested = best + 1;
      out.solutions = 1;
    } else {
      out.verdict = exhaustive ? SolveVerdict::NoneExists : SolveVerdict::BudgetExceeded;
      out.candidates_tested = limit;
    }
    return out;
  }

  std::vector<std::uint64_t> hits;
  for (const auto& r : results) {
    out.solutions += r.count;
    hits.insert(hits.end(), r.hits.begin(), r.hits.end());
  }
  out.candidates_tested = limit;
  for (std::uint64_t idx : hits) out.all.push_back(IndexCode{candidate_matrix(p, layout, idx)});
  if (!exhaustive) {
    out.verdict = SolveVerdict::BudgetExceeded;
  } else if (out.solutions == 0) {
    out.verdict = SolveVerdict::NoneExists;
  } else {
    out.verdict = SolveVerdict::Found;
    if (!out.all.empty()) out.code = out.all.front();
  }
  return out;
}

std::uint64_t count_solutions(const GicProblem& p, const SearchConfig& cfg) {
  SearchConfig counting = cfg;
  counting.report = ReportMode::Count;
  const SolveOutcome out = solve_perfect_scalar_binary(p, counting);
  if (out.verdict == SolveVerdict::BudgetExceeded) {
    throw BudgetExceeded("search space is larger than " + std::to_string(cfg.budget) + " candidates");
  }
  return out.solutions;
}

}  // namespace icpm
