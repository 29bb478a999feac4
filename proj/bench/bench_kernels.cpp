// Serial reference kernels against their OpenMP versions on corpus workloads.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <functional>

#include "mincodes/corpus.hpp"
#include "mincodes/kernels.hpp"
#include "mincodes/minimal.hpp"
#include "mincodes/search.hpp"

using namespace mincodes;
namespace kn = mincodes::kernels;

namespace {

double best_of(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

template <class T>
void row(const char* name, const char* workload, int reps, const std::function<T()>& serial,
         const std::function<T()>& parallel) {
  T a{}, b{};
  const double ts = best_of(reps, [&] { a = serial(); });
  const double tp = best_of(reps, [&] { b = parallel(); });
  std::printf("%-20s %-22s %10.4f %10.4f %7.2fx  %s\n", name, workload, ts, tp, ts / tp,
              a == b ? "agree" : "DISAGREE");
}

std::vector<std::uint64_t> codeword_points(const LinearCode& code) {
  const auto table = kn::build_support_table(code);
  std::vector<std::uint64_t> pts(table.bits);
  pts.resize(pts.size() + table.words, 0);  // the zero word
  return pts;
}

std::vector<std::uint64_t> column_masks(const LinearCode& code) {
  std::vector<std::uint64_t> out;
  for (std::size_t j = 0; j < code.n(); ++j) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < code.k(); ++i) m |= std::uint64_t(code.generator()(i, j)) << i;
    out.push_back(m);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs OpenMP kernel timings"};
  int threads = 0, reps = 3;
  app.add_option("--threads", threads, "OpenMP workers (0: default)");
  app.add_option("--reps", reps, "Repetitions; the best time is reported");
  CLI11_PARSE(app, argc, argv);
  kn::set_thread_count(threads);
  std::printf("threads: %d\n", kn::thread_count());
  std::printf("%-20s %-22s %10s %10s %8s\n", "kernel", "workload", "serial s", "omp s", "speedup");

  auto code = [](const char* id) { return load_entry_code(corpus_entry(id)); };

  for (const char* id : {"min-62-17", "rec-56-24-13"}) {
    const auto c = code(id);
    row<std::vector<std::uint64_t>>("weight_histogram", id, reps,
                                    [&] { return kn::serial::weight_histogram(c); },
                                    [&] { return kn::parallel::weight_histogram(c); });
  }
  for (const char* id : {"m10-30a", "min-43-13"}) {
    const auto c = code(id);
    const auto table = kn::build_support_table(c);
    const std::size_t gap = min_distance(c);
    row<bool>("has_nested_support", id, reps, [&] { return kn::serial::has_nested_support(table, gap); },
              [&] { return kn::parallel::has_nested_support(table, gap); });
    row<bool>("has_disjoint_pair", id, reps, [&] { return kn::serial::has_disjoint_pair(table); },
              [&] { return kn::parallel::has_disjoint_pair(table); });
  }
  for (const char* id : {"m9-26a", "m10-30a"}) {
    const auto pts = codeword_points(code(id));
    row<std::uint64_t>("count_right_angles", id, reps,
                       [&] { return kn::serial::count_right_angles(pts, 1); },
                       [&] { return kn::parallel::count_right_angles(pts, 1); });
  }
  for (const char* id : {"min-56-16", "min-62-17"}) {
    const auto c = code(id);
    const auto masks = column_masks(c);
    row<bool>("hyperplanes_spanned", id, reps, [&] { return kn::serial::hyperplanes_spanned(masks, c.k()); },
              [&] { return kn::parallel::hyperplanes_spanned(masks, c.k()); });
  }

  const int saved = kn::thread_count();
  auto search = [] { return *search_min_length({5, 2, 1, 13, true}).found_length; };
  kn::set_thread_count(1);
  const double t1 = best_of(1, search);
  kn::set_thread_count(saved);
  const double tn = best_of(1, search);
  std::printf("%-20s %-22s %10.4f %10.4f %7.2fx\n", "search_min_length", "m(5,2)", t1, tn, t1 / tn);
  return 0;
}
