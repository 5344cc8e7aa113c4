/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hessim {

/// One timestamped value. The unit is owned by the containing series.
struct Sample {
    double t = 0.0;     // s
    double value = 0.0;

    bool operator==(const Sample&) const = default;
};

/// Ordered samples with strictly increasing timestamps.
class TimeSeries {
public:
    TimeSeries() = default;
    TimeSeries(std::string name, std::string unit)
        : name_(std::move(name)), unit_(std::move(unit)) {}

    const std::string& name() const { return name_; }
    const std::string& unit() const { return unit_; }
    const std::vector<Sample>& samples() const { return samples_; }
    std::size_t size() const { return samples_.size(); }
    bool empty() const { return samples_.empty(); }
    const Sample& operator[](std::size_t i) const { return samples_[i]; }
    const Sample& front() const { return samples_.front(); }
    const Sample& back() const { return samples_.back(); }

    /// Appends a sample; time must advance strictly and be finite and non-negative.
    void push(double t, double value);

    /// Zero-order hold: value of the last sample at or before t.
    /// t earlier than the first sample is an error.
    double value_at(double t) const;

    void reserve(std::size_t n) { samples_.reserve(n); }

    bool operator==(const TimeSeries&) const = default;

private:
    std::string name_;
    std::string unit_;
    std::vector<Sample> samples_;
};

/// Stateful zero-order-hold reader for monotone time queries; O(1) per step.
class ZohCursor {
public:
    explicit ZohCursor(const TimeSeries& series) : series_(&series) {}

    /// Value at time t; t must not decrease between calls.
    double value_at(double t);

private:
    const TimeSeries* series_;
    std::size_t idx_ = 0;
};

} // namespace hessim
