#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <string>
#include <vector>

#include <json.hpp>

#include "satake/hecke.hpp"

namespace satake {

using HeckeProduct = std::function<HeckeElement(const SphericalHecke&, const HeckeElement&, const HeckeElement&)>;

struct VerifyOptions {
  std::string group = "GL2";
  std::vector<std::int64_t> q{2, 3, 5};
  unsigned threads = 1;
  std::int64_t bound = 2;  // coordinate box for coweights; the oracle box on GL_2
  HeckeProduct product;    // empty: SphericalHecke::multiply
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::int64_t cases = 0;
  nlohmann::json detail = nlohmann::json::object();  // counterexample on failure
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass() const;
};

/// Suites: satake, characters, strata, duality, all.
std::vector<std::string> suite_names();
std::vector<SuiteReport> run_verification(const std::string& suite, const VerifyOptions& opt);
nlohmann::json emit_verification_report(const std::vector<SuiteReport>& suites);

/// n for presets GL<n>, 0 otherwise.
std::size_t gl_rank(const std::string& group);

/// Runs fn(i) for i in [0, n) on `threads` workers; results land by index.
template <typename T>
std::vector<T> parallel_map(std::size_t n, unsigned threads, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(n);
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, n); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

/// {exponent of v: coefficient}.
nlohmann::json to_json(const LaurentPolynomial& p);
nlohmann::json to_json(const std::map<Coweight, LaurentPolynomial>& h);

}  // namespace satake
