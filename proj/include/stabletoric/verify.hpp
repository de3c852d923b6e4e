#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace stabletoric {

/// key=value parameters of a suite run; values are comma separated lists.
class SuiteParams {
  public:
    SuiteParams() = default;
    /// Parses "key=value" tokens; throws std::invalid_argument otherwise.
    explicit SuiteParams(const std::vector<std::string> &tokens);

    int integer(const std::string &key, int fallback) const;
    std::vector<int> integers(const std::string &key, const std::vector<int> &fallback) const;
    std::string text(const std::string &key, const std::string &fallback) const;
    void set(const std::string &key, const std::string &value) { values_[key] = value; }

  private:
    std::map<std::string, std::string> values_;
};

struct SuiteResult {
    std::string name;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::string summary;
    double seconds = 0;

    bool passed() const { return failures == 0 && instances > 0; }
};

/// unimodularity, mu, generators, normality, twooddholes, witnesses,
/// keylemma, compressed, walks, cliquesum.
std::vector<std::string> suite_names();

/// Runs one suite at the given scale. Per-instance verdicts go to `log`
/// when it is not null. Throws std::invalid_argument for unknown suites.
SuiteResult run_suite(const std::string &name, const SuiteParams &params, std::ostream *log = nullptr);

} // namespace stabletoric
