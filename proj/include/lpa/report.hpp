#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lpa {

// Failure while reading one of the text inputs (graph file, hom file,
// expression). `location` is a 1-based line number for file formats and a
// 1-based column for expressions; the message already embeds it.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t location)
        : std::runtime_error(msg), location_(location) {}

    std::size_t location() const noexcept { return location_; }

private:
    std::size_t location_;
};

// Outcome of a verification pass. `failures` holds one rendered witness per
// violated instance; `notes` carries informational lines (inferred maps,
// counts) that do not affect the verdict.
struct CheckReport {
    bool passed = true;
    std::size_t checks = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void fail(std::string witness) {
        passed = false;
        failures.push_back(std::move(witness));
    }

    void note(std::string line) { notes.push_back(std::move(line)); }
};

} // namespace lpa
