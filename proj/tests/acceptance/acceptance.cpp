// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/resource.h>

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "skolemgen/skolemgen.hpp"

using namespace skolemgen;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string join(const LevelCounts& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

std::set<SkolemSequence> as_set(const std::vector<SkolemSequence>& v) { return {v.begin(), v.end()}; }

std::vector<std::string> texts(const std::vector<OpenState>& states) {
  std::vector<std::string> out;
  for (const auto& s : states) out.push_back(to_text(s));
  return out;
}

long peak_rss_kib() {
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  return usage.ru_maxrss;  // KiB on Linux
}

struct Criterion {
  std::string id;
  std::string title;
  std::function<bool(std::ostream&)> check;
};

// Thresholds
constexpr double count_fourteen_seconds = 60.0;
constexpr double enumerate_eight_seconds = 120.0;
constexpr long memory_budget_kib = 1024L * 1024L;  // 1 GiB

bool open_count_regression(std::ostream& note) {
  const LevelCounts expected{1, 2, 4, 8, 20, 52, 146, 430, 1306, 4176, 13832, 47452, 169044, 619672};
  const auto start = Clock::now();
  const auto got = count_open_levels(14);
  const double elapsed = seconds_since(start);
  const auto fifteen = count_open_levels(15).back();
  note << "counts=" << join(got) << " time=" << elapsed << "s (limit " << count_fourteen_seconds
       << "s); computed |OS_15|=" << fifteen;
  return got == expected && elapsed < count_fourteen_seconds;
}

bool search_space_claim(std::ostream& note) {
  const auto report = dfs_enumerate(5, false, [](const SkolemSequence&) {});
  std::uint64_t factorial = 1;
  for (int i = 2; i <= 10; ++i) factorial *= i;
  note << "level-10 open sequences searched=" << report.visits(10) << " vs 10! permutations=" << factorial;
  return report.visits(10) == 4176 && factorial == 3'628'800;
}

bool skolem_counts(std::ostream& note) {
  bool ok = true;
  const std::vector<std::pair<int, std::size_t>> expected{{1, 1}, {2, 0}, {3, 0}, {6, 0}, {7, 0}, {4, 6}, {5, 10}};
  for (auto [n, count] : expected) {
    for (bool prune : {true, false}) {
      const auto got = enumerate_skolem(n, prune).size();
      if (got != count) {
        note << "N=" << n << (prune ? " pruned" : " unpruned") << " got " << got << "; ";
        ok = false;
      }
    }
  }
  auto start = Clock::now();
  const auto unpruned = dfs_enumerate(8, false, [](const SkolemSequence&) {});
  const double unpruned_s = seconds_since(start);
  start = Clock::now();
  const auto pruned = dfs_enumerate(8, true, [](const SkolemSequence&) {});
  const double pruned_s = seconds_since(start);
  note << "N=8 unpruned=" << unpruned.skolem_count << " in " << unpruned_s << "s, pruned=" << pruned.skolem_count
       << " in " << pruned_s << "s (limit " << enumerate_eight_seconds << "s)";
  return ok && unpruned.skolem_count == 504 && pruned.skolem_count == 504 &&
         unpruned_s < enumerate_eight_seconds && pruned_s <= unpruned_s;
}

bool oracle_equivalence(std::ostream& note) {
  bool ok = true;
  for (int n = 1; n <= 5; ++n) {
    const auto expected = oracle::enumerate(n);
    const bool same = as_set(enumerate_skolem(n, true)) == expected && as_set(enumerate_skolem(n, false)) == expected;
    note << "N=" << n << ":" << expected.size() << (same ? " " : "(MISMATCH) ");
    ok = ok && same;
  }
  const bool member = as_set(enumerate_skolem(4)).contains(SkolemSequence({3, 4, 2, 3, 2, 4, 1, 1}));
  note << "example at N=4 " << (member ? "present" : "missing");
  return ok && member;
}

bool golden_succession(std::ostream& note) {
  using Strings = std::vector<std::string>;
  const bool fig1 = texts(children(state_from_text("*1"))) == Strings{"*2,*1", "1,1"} &&
                    texts(children(state_from_text("*2,*1"))) == Strings{"*3,*2,*1", "*3,1,1", "2,*2,2"} &&
                    texts(children(state_from_text("1,1"))) == Strings{"1,1,*1"} &&
                    texts(children(OpenState{})) == Strings{"*1"};
  const bool fig2 = texts(children(state_from_text("*5,*4,1,1,*1"))) ==
                    Strings{"*6,*5,1,1,*2,*1", "*6,4,1,1,*2,4", "5,*5,1,1,*2,5"};
  const auto descendants = add_closers(state_from_text("*7,4,1,1,*3,4,*1"));
  const bool example = texts(descendants) == Strings{"*8,4,1,1,3,4,*2,3", "7,4,1,1,*4,4,*2,7"} &&
                       descendants[0].used() == std::set<int>{1, 3, 4} &&
                       descendants[1].used() == std::set<int>{1, 4, 7};
  note << "tree start " << (fig1 ? "ok" : "BAD") << ", (*5,*4,1,1,*1) " << (fig2 ? "ok" : "BAD")
       << ", order-7 descendants " << (example ? "ok" : "BAD");
  return fig1 && fig2 && example;
}

// Breadth-first list of every state up to length 12 through the OpenState API.
const std::vector<std::vector<OpenState>>& tree_upto_twelve() {
  static const auto levels = [] {
    std::vector<std::vector<OpenState>> out{{OpenState{}}};
    for (int n = 1; n <= 12; ++n) {
      std::vector<OpenState> next;
      for (const auto& s : out.back())
        for (auto& kid : children(s)) next.push_back(std::move(kid));
      out.push_back(std::move(next));
    }
    return out;
  }();
  return levels;
}

bool prop_one_consistency(std::ostream& note) {
  std::size_t states = 0, skolem = 0, disagreements = 0;
  for (const auto& level : tree_upto_twelve()) {
    for (const auto& s : level) {
      ++states;
      const auto plain = plain_values(s);
      const bool direct = plain && validate_skolem(*plain);
      if (is_skolem_label(s) != direct) ++disagreements;
      skolem += direct ? 1 : 0;
    }
  }
  std::size_t expected_skolem = 0;  // orders 1..6 fill lengths up to 12
  for (int n = 1; n <= 6; ++n) expected_skolem += oracle::enumerate(n).size();
  note << states << " states, " << skolem << " Skolem (oracle " << expected_skolem << "), " << disagreements
       << " disagreements";
  return disagreements == 0 && skolem == expected_skolem;
}

bool sts_reproduction(std::ostream& note) {
  const SkolemSequence w({3, 4, 2, 3, 2, 4, 1, 1});
  const auto base = sts::base_blocks(w, 0);
  const bool base_ok = base == std::vector<sts::Triple>{{0, 3, 8}, {0, 4, 10}, {0, 2, 9}, {0, 1, 12}};
  const auto system = sts::develop(base, 4);
  const bool system_ok = system.v == 25 && system.blocks.size() == 100 && sts::verify(system);
  std::size_t built = 0, verified = 0;
  for (int n : {4, 5})
    for (const auto& s : enumerate_skolem(n)) {
      ++built;
      verified += sts::verify(sts::develop(sts::base_blocks(s, 0), n)) ? 1 : 0;
    }
  note << "base blocks " << (base_ok ? "exact" : "WRONG") << ", STS(25) " << system.blocks.size() << " blocks "
       << (system_ok ? "verified" : "FAILED") << ", orders 4/5: " << verified << "/" << built << " verified";
  return base_ok && system_ok && built == 16 && verified == built;
}

bool property_suite(std::ostream& note) {
  // unique parent, no duplicates per level
  bool parents_ok = true;
  for (const auto& level : tree_upto_twelve()) {
    std::set<std::string> seen;
    for (const auto& s : level) {
      parents_ok = parents_ok && seen.insert(to_text(s)).second;
      for (const auto& kid : children(s)) parents_ok = parents_ok && parent(kid) == s;
    }
  }
  // reversal closure
  bool reversal_ok = true;
  for (int n : {4, 5, 8}) {
    const auto all = as_set(enumerate_skolem(n));
    for (const auto& w : all) reversal_ok = reversal_ok && validate_skolem(reverse(w).values()) && all.contains(reverse(w));
  }
  // parallel determinism
  const auto single = count_open_levels(12);
  const bool parallel_ok = parallel_count(12, 1) == single && parallel_count(12, 2) == single &&
                           parallel_count(12, 4) == single;
  // lower bound
  const auto eight = enumerate_skolem(8).size();
  const bool bound_ok = eight >= (std::size_t{1} << (8 / 3));
  note << "unique parents " << (parents_ok ? "ok" : "BAD") << ", reversal " << (reversal_ok ? "ok" : "BAD")
       << ", parallel 1/2/4 " << (parallel_ok ? "ok" : "BAD") << ", " << eight << " >= " << (1 << (8 / 3));
  return parents_ok && reversal_ok && parallel_ok && bound_ok;
}

bool memory_budget(std::ostream& note) {
  const auto got = count_open_levels(14).back();
  const long rss = peak_rss_kib();
  note << "n=14 count=" << got << ", peak RSS " << rss / 1024 << " MiB (budget " << memory_budget_kib / 1024
       << " MiB)";
  return got == 619672 && rss < memory_budget_kib;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1", "open-count regression", open_count_regression},
      {"2", "search-space claim", search_space_claim},
      {"3", "Skolem counts", skolem_counts},
      {"4", "oracle equivalence", oracle_equivalence},
      {"5", "golden succession", golden_succession},
      {"6", "label recognizer consistency", prop_one_consistency},
      {"7", "STS reproduction", sts_reproduction},
      {"8", "property suite", property_suite},
      {"9", "desk-scale memory budget", memory_budget},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    std::ostringstream note;
    bool ok = false;
    try {
      ok = c.check(note);
    } catch (const std::exception& e) {
      note << " exception: " << e.what();
    }
    failures += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << ": " << note.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
