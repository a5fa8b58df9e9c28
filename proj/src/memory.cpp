#include <radixsa/memory.hpp>

#include <algorithm>

namespace radixsa {

namespace {

struct Counters {
    std::size_t current = 0;
    std::size_t peak = 0;
};

thread_local Counters counters;

} // namespace

void MemoryTracker::on_allocate(std::size_t bytes) noexcept {
    counters.current += bytes;
    counters.peak = std::max(counters.peak, counters.current);
}

void MemoryTracker::on_deallocate(std::size_t bytes) noexcept {
    counters.current -= std::min(bytes, counters.current);
}

std::size_t MemoryTracker::current() noexcept { return counters.current; }

std::size_t MemoryTracker::peak() noexcept { return counters.peak; }

void MemoryTracker::reset_peak() noexcept { counters.peak = counters.current; }

PeakScope::PeakScope() noexcept
    : base_(MemoryTracker::current()), outer_peak_(MemoryTracker::peak()) {
    MemoryTracker::reset_peak();
}

PeakScope::~PeakScope() {
    counters.peak = std::max(counters.peak, outer_peak_);
}

std::size_t PeakScope::peak_bytes() const noexcept {
    return MemoryTracker::peak() - base_;
}

} // namespace radixsa
