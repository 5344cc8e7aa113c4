/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hessim/timeseries.hpp"

#include <cmath>
#include <stdexcept>

namespace hessim {

void TimeSeries::push(double t, double value) {
    if (!std::isfinite(t) || t < 0.0) {
        throw std::invalid_argument("TimeSeries '" + name_ +
                                    "': sample time must be finite and non-negative");
    }
    if (!samples_.empty() && t <= samples_.back().t) {
        throw std::invalid_argument("TimeSeries '" + name_ +
                                    "': sample times must be strictly increasing");
    }
    samples_.push_back({t, value});
}

double TimeSeries::value_at(double t) const {
    if (samples_.empty() || t < samples_.front().t) {
        throw std::out_of_range("TimeSeries '" + name_ + "': no sample at or before t");
    }
    // Binary search for the last sample with sample.t <= t.
    std::size_t lo = 0;
    std::size_t hi = samples_.size();
    while (hi - lo > 1) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (samples_[mid].t <= t) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return samples_[lo].value;
}

double ZohCursor::value_at(double t) {
    const auto& s = series_->samples();
    if (s.empty() || t < s.front().t) {
        throw std::out_of_range("ZohCursor: no sample at or before t");
    }
    while (idx_ + 1 < s.size() && s[idx_ + 1].t <= t) {
        ++idx_;
    }
    return s[idx_].value;
}

} // namespace hessim
