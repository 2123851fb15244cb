#include <kseg/enumeration.hpp>

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include <kseg/k_analysis.hpp>
#include <kseg/structure.hpp>

namespace kseg {

namespace {

// Tables are flat n*n int vectors with element 0 as the zero; the free
// entries are the (n-1)^2 nonzero cells in row-major order.
struct TableSpace {
  int n;
  int free_count() const { return (n - 1) * (n - 1); }
  int row(int pos) const { return 1 + pos / (n - 1); }
  int col(int pos) const { return 1 + pos % (n - 1); }
};

// Checks every triple whose products are all determined by the first
// `filled` free entries. Sound for pruning: a failing determined triple can
// never be repaired by later entries.
bool partial_associative(const std::vector<int>& table, const TableSpace& sp,
                         int filled) {
  const int n = sp.n;
  auto pos_of = [&](int i, int j) { return (i - 1) * (n - 1) + (j - 1); };
  auto defined = [&](int i, int j) {
    return i == 0 || j == 0 || pos_of(i, j) < filled;
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!defined(a, b)) continue;
      const int ab = table[a * n + b];
      for (int c = 0; c < n; ++c) {
        if (!defined(b, c) || !defined(ab, c)) continue;
        const int bc = table[b * n + c];
        if (!defined(a, bc)) continue;
        if (table[ab * n + c] != table[a * n + bc]) return false;
      }
    }
  return true;
}

bool raw_categorical(const std::vector<int>& table, int n) {
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g) {
      const int fg = table[f * n + g];
      if (fg == 0) continue;
      for (int h = 0; h < n; ++h)
        if (table[g * n + h] != 0 && table[fg * n + h] == 0) return false;
    }
  return true;
}

// True when the free-entry vector is the lexicographically least member of
// its orbit under zero-fixing relabelings.
bool canonical_representative(const std::vector<int>& table, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<int> image(n * n);
  do {
    for (int i = 1; i < n; ++i)
      for (int j = 1; j < n; ++j)
        image[perm[i] * n + perm[j]] = perm[table[i * n + j]];
    // lexicographic comparison over free entries, row-major
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        const int mine = table[i * n + j];
        const int theirs = image[i * n + j];
        if (mine < theirs) goto next_perm;
        if (mine > theirs) return false;
      }
    }
  next_perm:;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return true;
}

std::string element_label(int i) {
  if (i == 0) return "0";
  if (i <= 26) return std::string(1, static_cast<char>('a' + i - 1));
  return "e" + std::to_string(i);
}

FiniteSemigroup build_semigroup(const std::vector<int>& table, int n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(element_label(i));
  return FiniteSemigroup::from_parts(std::move(labels), "0", table);
}

struct BlockResult {
  std::uint64_t associative = 0;
  std::uint64_t k_semigroups = 0;
  std::vector<std::vector<int>> tables;  // survivors of the task's filters
};

void enumerate_block(const EnumerationTask& task, const TableSpace& sp,
                     const std::vector<int>& prefix, BlockResult& out) {
  const int n = sp.n;
  std::vector<int> table(n * n, 0);

  auto leaf = [&](const std::vector<int>& t) {
    ++out.associative;
    const bool k = raw_categorical(t, n);
    if (k) ++out.k_semigroups;
    if (task.k_only && !k) return;
    if (task.dedup && !canonical_representative(t, n)) return;
    out.tables.push_back(t);
  };

  // Plant the prefix one entry at a time so a bad prefix prunes immediately.
  for (std::size_t d = 0; d < prefix.size(); ++d) {
    table[sp.row((int)d) * n + sp.col((int)d)] = prefix[d];
    if (!partial_associative(table, sp, (int)d + 1)) return;
  }
  if ((int)prefix.size() == sp.free_count()) {
    leaf(table);
    return;
  }

  // Iterative depth-first search over the remaining entries.
  const int base = static_cast<int>(prefix.size());
  std::vector<int> choice(sp.free_count() - base, -1);
  int depth = 0;
  while (depth >= 0) {
    ++choice[depth];
    if (choice[depth] == n) {
      choice[depth] = -1;
      --depth;
      continue;
    }
    const int pos = base + depth;
    table[sp.row(pos) * n + sp.col(pos)] = choice[depth];
    if (!partial_associative(table, sp, pos + 1)) continue;
    if (pos + 1 == sp.free_count()) {
      leaf(table);
      continue;
    }
    ++depth;
  }
}

EnumerationResult enumerate_exhaustive(const EnumerationTask& task) {
  const TableSpace sp{task.order};
  const int n = task.order;

  EnumerationResult result;
  result.stats.order = n;
  result.stats.candidates = 1;
  for (int i = 0; i < sp.free_count(); ++i) result.stats.candidates *= n;

  // Static partition of the space by the first free entries; blocks are
  // enumerated in lexicographic order, so concatenation preserves the
  // global order no matter how many workers run.
  const int prefix_depth = std::min(2, sp.free_count());
  int block_count = 1;
  for (int i = 0; i < prefix_depth; ++i) block_count *= n;

  std::vector<BlockResult> blocks(block_count);
  std::atomic<int> next{0};
  auto work = [&] {
    while (true) {
      const int b = next.fetch_add(1);
      if (b >= block_count) return;
      std::vector<int> prefix(prefix_depth);
      int rest = b;
      for (int d = prefix_depth - 1; d >= 0; --d) {
        prefix[d] = rest % n;
        rest /= n;
      }
      enumerate_block(task, sp, prefix, blocks[b]);
    }
  };

  const int workers = std::max(1, std::min(task.worker_count, block_count));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  for (const auto& block : blocks) {
    result.stats.associative += block.associative;
    result.stats.k_semigroups += block.k_semigroups;
    for (const auto& table : block.tables)
      result.semigroups.push_back(build_semigroup(table, n));
  }
  result.stats.emitted = result.semigroups.size();
  return result;
}

EnumerationResult enumerate_sampled(const EnumerationTask& task) {
  const int n = task.order;
  const TableSpace sp{n};
  EnumerationResult result;
  result.stats.order = n;
  result.stats.candidates = task.sample->count;

  std::mt19937_64 gen(task.sample->seed);
  std::vector<int> table(n * n, 0);
  for (std::uint64_t c = 0; c < task.sample->count; ++c) {
    for (int pos = 0; pos < sp.free_count(); ++pos)
      table[sp.row(pos) * n + sp.col(pos)] =
          static_cast<int>(gen() % static_cast<std::uint64_t>(n));
    if (!partial_associative(table, sp, sp.free_count())) continue;
    ++result.stats.associative;
    const bool k = raw_categorical(table, n);
    if (k) ++result.stats.k_semigroups;
    if (task.k_only && !k) continue;
    if (task.dedup && !canonical_representative(table, n)) continue;
    result.semigroups.push_back(build_semigroup(table, n));
  }
  result.stats.emitted = result.semigroups.size();
  return result;
}

}  // namespace

EnumerationResult enumerate_semigroups(const EnumerationTask& task) {
  if (task.order < 1) throw BoundError("order must be at least 1");
  if (!task.sample && task.order > kExhaustiveOrderCap)
    throw BoundError(
        "exhaustive enumeration is capped at order " +
        std::to_string(kExhaustiveOrderCap) +
        "; request sampling explicitly for larger orders");
  if (task.sample && task.order > 26)
    throw BoundError("sampling is capped at order 26");
  return task.sample ? enumerate_sampled(task) : enumerate_exhaustive(task);
}

namespace {

struct BatteryOutcome {
  std::vector<PropertyFailure> failures;
  bool exhibit = false;
};

BatteryOutcome run_battery(const FiniteSemigroup& s, int order,
                           std::uint64_t index) {
  BatteryOutcome outcome;
  auto failed = [&](const std::string& property, const std::string& witness) {
    outcome.failures.push_back({order, index, s.to_raw(), property, witness});
  };

  auto revalidated = FiniteSemigroup::validate(s.to_raw());
  if (!revalidated.ok())
    failed("revalidates", revalidated.violations.front().message);

  if (is_categorical_at_zero(s)) {
    try {
      const DecompositionReport report = decompose(s);
      for (const auto& [name, ok] : report.checks) {
        if (ok) continue;
        std::string witness;
        for (const auto& w : report.witnesses)
          if (w.rfind(name + ":", 0) == 0) witness = w;
        failed(name, witness);
      }
    } catch (const Error& e) {
      failed("decomposes", e.what());
    }
  } else {
    try {
      decompose(s);
      failed("refuses_non_categorical",
             "decomposition accepted a non-categorical table");
    } catch (const NotCategoricalError&) {
      // expected
    } catch (const Error& e) {
      failed("refuses_non_categorical",
             std::string("wrong refusal: ") + e.what());
    }
    const auto degree = nilpotency_degree(s);
    const bool three_nilpotent = degree.has_value() && *degree <= 3;
    const bool fully_annihilating =
        annihilators(s).quasi == ElementSet::all(s.size());
    if (three_nilpotent != fully_annihilating) outcome.exhibit = true;
  }
  return outcome;
}

}  // namespace

CorpusVerdict verify_corpus(int max_order, int worker_count) {
  if (max_order < 1) throw BoundError("max_order must be at least 1");
  if (max_order > kExhaustiveOrderCap)
    throw BoundError("corpus verification is capped at order " +
                     std::to_string(kExhaustiveOrderCap));

  CorpusVerdict verdict;
  verdict.max_order = max_order;

  for (int order = 1; order <= max_order; ++order) {
    EnumerationTask task;
    task.order = order;
    task.worker_count = worker_count;
    EnumerationResult enumerated = enumerate_semigroups(task);
    verdict.per_order.push_back(enumerated.stats);

    const auto& corpus = enumerated.semigroups;
    std::vector<BatteryOutcome> outcomes(corpus.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= corpus.size()) return;
        outcomes[i] = run_battery(corpus[i], order, i);
      }
    };
    const int workers = std::max(1, worker_count);
    if (workers == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }

    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      for (auto& f : outcomes[i].failures)
        verdict.property_failures.push_back(std::move(f));
      if (outcomes[i].exhibit) {
        ++verdict.equivalence_exhibits;
        if (!verdict.first_exhibit)
          verdict.first_exhibit = corpus[i].to_raw();
      }
    }
  }
  return verdict;
}

}  // namespace kseg
