#pragma once

#include <cstdint>
#include <memory>
#include <string>

namespace cdo {

// UTC instant, microseconds since the Unix epoch.
// Rendered everywhere as RFC 3339 with fixed microsecond precision:
// 2024-01-01T00:00:00.000000Z
using Timestamp = std::int64_t;

std::string render_timestamp(Timestamp t);

// Accepts the canonical form above; the fractional part may be 0-6 digits
// (shorter fractions and none at all are tolerated for hand-written input).
Timestamp parse_timestamp(const std::string& text);

// Timestamps are injected, never read ambiently, so runs are reproducible.
class Clock {
public:
    virtual ~Clock() = default;
    virtual Timestamp now() = 0;
};

class SystemClock final : public Clock {
public:
    Timestamp now() override;
};

// Test clock: advances by `step` microseconds per reading.
class ManualClock final : public Clock {
public:
    explicit ManualClock(Timestamp start = 0, Timestamp step = 0)
        : current_(start), step_(step) {}

    Timestamp now() override {
        Timestamp t = current_;
        current_ += step_;
        return t;
    }

    void set(Timestamp t) { current_ = t; }
    void advance(Timestamp delta) { current_ += delta; }

private:
    Timestamp current_;
    Timestamp step_;
};

} // namespace cdo
