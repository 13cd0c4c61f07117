#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <json.hpp>

#include "multider/arrangement.hpp"
#include "multider/logder.hpp"
#include "multider/multirestrict.hpp"

namespace multider::cli {

// Runs f(0..count-1) on up to `jobs` threads; results come back in index order.
template <typename F>
auto parallel_map(std::size_t count, int jobs, F f) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  std::vector<std::optional<R>> slots(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        slots[i].emplace(f(i));
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::size_t width = jobs < 1 ? 1 : static_cast<std::size_t>(jobs);
  if (width > count) width = count == 0 ? 1 : count;
  if (width == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < width; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

struct SweepRange {
  std::size_t hyperplane = 0;
  std::string name;
  int lo = 0;
  int hi = 0;
};

// "a=1..4,b=2,c=0..3" with a naming hyperplane 0; "*=1..3" covers the rest.
std::vector<SweepRange> parse_ranges(std::string_view spec, std::size_t hyperplanes);

enum class Predicate { Free, Universal, Balanced, Delta, Supersolvable };
std::vector<Predicate> parse_predicates(std::string_view spec);

struct SweepOptions {
  std::vector<SweepRange> ranges;
  std::vector<Predicate> predicates{Predicate::Free};
  int jobs = 1;
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_rows = 100000;
  std::optional<int> max_order;
  bool symmetry = false;
  std::optional<Filtration> filtration;
};

struct SweepRow {
  Multiplicity multiplicity;
  std::vector<std::string> fields;
};

struct SweepTable {
  std::vector<std::string> header;
  std::vector<SweepRow> rows;
};

// Grid points in nested-loop order, first range outermost.
std::vector<Multiplicity> sweep_grid(const Multiarrangement& family, const SweepOptions& options);

SweepTable run_sweep(const Multiarrangement& family, const SweepOptions& options);
void write_tsv(const SweepTable& table, std::ostream& out);
nlohmann::json table_to_json(const SweepTable& table);

}  // namespace multider::cli
