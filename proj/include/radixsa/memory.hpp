// Allocation accounting for builder-internal (auxiliary) storage.
//
// Containers that hold working state of a construction use TrackingAllocator,
// so the harness can report how many bytes a builder needed beyond its input
// text and output array. Counters are per thread.

#pragma once

#include <cstddef>
#include <cstdint>
#include <new>
#include <unordered_map>
#include <vector>

namespace radixsa {

class MemoryTracker
{
public:
    static void on_allocate(std::size_t bytes) noexcept;
    static void on_deallocate(std::size_t bytes) noexcept;

    //! bytes currently held by tracked containers on this thread
    static std::size_t current() noexcept;
    //! high-water mark since the last reset_peak()
    static std::size_t peak() noexcept;
    //! restart peak measurement from the current level
    static void reset_peak() noexcept;
};

//! RAII window measuring the peak of tracked bytes above the level at entry.
class PeakScope
{
public:
    PeakScope() noexcept;
    //! folds this window's peak back into any enclosing window
    ~PeakScope();
    PeakScope(const PeakScope&) = delete;
    PeakScope& operator = (const PeakScope&) = delete;

    std::size_t peak_bytes() const noexcept;

private:
    std::size_t base_;
    std::size_t outer_peak_;
};

template <typename T>
struct TrackingAllocator
{
    using value_type = T;

    TrackingAllocator() noexcept = default;
    template <typename U>
    TrackingAllocator(const TrackingAllocator<U>&) noexcept { }

    T* allocate(std::size_t count) {
        const std::size_t bytes = count * sizeof(T);
        T* p = static_cast<T*>(::operator new(bytes));
        MemoryTracker::on_allocate(bytes);
        return p;
    }

    void deallocate(T* p, std::size_t count) noexcept {
        MemoryTracker::on_deallocate(count * sizeof(T));
        ::operator delete(p);
    }

    template <typename U>
    bool operator == (const TrackingAllocator<U>&) const noexcept { return true; }
};

template <typename T>
using tracked_vector = std::vector<T, TrackingAllocator<T> >;

template <typename K, typename V>
using tracked_map = std::unordered_map<
    K, V, std::hash<K>, std::equal_to<K>,
    TrackingAllocator<std::pair<const K, V> > >;

} // namespace radixsa
