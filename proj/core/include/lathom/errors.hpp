#pragma once

#include <stdexcept>
#include <string>

namespace lathom {

// Construction refused: the lattice (or a combined one) would exceed the element cap.
class size_limit_error : public std::runtime_error {
public:
    explicit size_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// A search ran out of its node or coloring budget.  Partial progress is carried
// along so callers can report how much of the space was covered; a budget stop
// is never silently turned into a "none" answer.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what, long long covered = -1, long long total = -1)
        : std::runtime_error(what), covered_(covered), total_(total) {}

    long long covered() const noexcept { return covered_; }
    long long total() const noexcept { return total_; }

private:
    long long covered_;
    long long total_;
};

} // namespace lathom
