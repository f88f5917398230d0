#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace casson {

// Domain error carrying a stable machine-readable name. what() always
// starts with the name, so callers (and the CLI) can surface it verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& detail)
        : std::runtime_error(detail.empty() ? name : name + ": " + detail),
          name_(std::move(name)) {}

    explicit Error(std::string name) : Error(std::move(name), "") {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

}  // namespace casson
