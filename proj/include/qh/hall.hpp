#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qh/identify.hpp"

namespace qh {

struct OracleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HallConfig {
  std::vector<std::uint32_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  long long max_total_dim = 8;
  std::size_t max_subspaces = 50'000'000; // per prime and target
  std::size_t min_primes = 2; // interpolation primes including the held-out one
  bool parallel = true;
};

// Point counts of one Hall variety over several primes, the interpolating
// integer polynomial and its value at q = 1.
struct HallCount {
  std::string sub, quot, target;
  std::vector<std::uint32_t> primes; // interpolation primes; the last one is held out
  std::vector<Integer> counts;
  std::vector<Integer> poly;         // ascending coefficients
  Integer chi;
  bool held_out_ok = false;

  Json to_json() const;
};

// Lagrange interpolation through the first primes.size()-1 samples, checked
// for integer coefficients and against the last sample.
HallCount interpolate_count(std::string sub, std::string quot, std::string target,
                            const std::vector<std::uint32_t> &primes, const std::vector<Integer> &counts);

long long degree_bound(const DimVector &sub, const DimVector &total);

// Visits every subrepresentation W of c with dims d, passing W and c/W in the
// bases described in the source. Returns the number of visited subspaces.
std::size_t enumerate_subreps(const Quiver &q, const PrimeField &f, const Rep<PrimeField> &c, const DimVector &d,
                              const std::function<void(const Rep<PrimeField> &, const Rep<PrimeField> &)> &visit,
                              std::size_t limit);

using CountKey = std::pair<std::string, std::string>;
using CountTable = std::map<CountKey, HallCount>;

// Counting oracle for one quiver. Tables are keyed by a target class and a
// sub grade and hold one HallCount per (sub key, quotient key).
class HallEngine {
public:
  explicit HallEngine(const Quiver &q, HallConfig cfg = {});

  const Family &family() const { return *fam_; }
  std::shared_ptr<const Family> family_ptr() const { return fam_; }
  const Quiver &quiver() const { return fam_->q; }
  const HallConfig &config() const { return cfg_; }

  // Keys of the indecomposable classes of a grade: one per real root, the
  // generic "Tube(*,n)" plus exceptional labels at imaginary grades.
  std::vector<std::string> indecomposable_targets(const DimVector &grade) const;
  // Every isomorphism class of a grade as a sorted multiset key (finite type).
  std::vector<std::string> all_targets(const DimVector &grade) const;

  // full = true labels decomposable subs and quotients by their multiset
  // (finite type); otherwise they collapse to "~".
  const CountTable &table(const std::string &target, const DimVector &sub, bool full = false);

  HallCount hall_number(const Label &a, const Label &b, const std::vector<Label> &c);

  std::vector<HallCount> log() const;
  std::size_t tables_computed() const;

private:
  std::map<CountKey, Integer> count_at_prime(std::uint32_t p, const std::string &target, const DimVector &sub,
                                             bool full) const;
  std::vector<std::uint32_t> pick_primes(long long needed,
                                         const std::function<bool(std::uint32_t)> &usable) const;

  std::shared_ptr<const Family> fam_;
  HallConfig cfg_;
  mutable std::mutex mu_;
  std::map<std::tuple<std::string, DimVector, bool>, std::unique_ptr<CountTable>> tables_;
  std::vector<HallCount> log_;
};

} // namespace qh
