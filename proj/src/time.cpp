#include "cdo/time.hpp"

#include "cdo/error.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

namespace cdo {

namespace {

constexpr std::int64_t kMicrosPerSecond = 1'000'000;
constexpr std::int64_t kSecondsPerDay = 86'400;

// Days since 1970-01-01 from a proleptic Gregorian date (Hinnant's algorithm).
std::int64_t days_from_civil(int y, unsigned m, unsigned d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, int& y, unsigned& m, unsigned& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t yr = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    d = doy - (153 * mp + 2) / 5 + 1;
    m = mp + (mp < 10 ? 3 : -9);
    y = static_cast<int>(yr + (m <= 2));
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace

std::string render_timestamp(Timestamp t) {
    const std::int64_t secs = floor_div(t, kMicrosPerSecond);
    const std::int64_t micros = t - secs * kMicrosPerSecond;
    const std::int64_t days = floor_div(secs, kSecondsPerDay);
    std::int64_t sod = secs - days * kSecondsPerDay;

    int year = 0;
    unsigned month = 0, day = 0;
    civil_from_days(days, year, month, day);

    const int hh = static_cast<int>(sod / 3600);
    const int mm = static_cast<int>((sod % 3600) / 60);
    const int ss = static_cast<int>(sod % 60);

    char buf[40];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02d:%02d:%02d.%06lldZ",
                  year, month, day, hh, mm, ss,
                  static_cast<long long>(micros));
    return buf;
}

Timestamp parse_timestamp(const std::string& text) {
    const auto bad = [&]() -> Timestamp {
        raise(ErrorCode::ParseError, "bad timestamp '" + text + "'");
    };

    // YYYY-MM-DDTHH:MM:SS[.ffffff]Z
    if (text.size() < 20) return bad();
    const char* s = text.c_str();
    auto digits = [&](size_t pos, size_t n, long long& out) {
        out = 0;
        for (size_t i = 0; i < n; ++i) {
            char c = s[pos + i];
            if (c < '0' || c > '9') return false;
            out = out * 10 + (c - '0');
        }
        return true;
    };

    long long y, mo, d, h, mi, se;
    if (!digits(0, 4, y) || s[4] != '-' || !digits(5, 2, mo) || s[7] != '-' ||
        !digits(8, 2, d) || (s[10] != 'T' && s[10] != 't') || !digits(11, 2, h) ||
        s[13] != ':' || !digits(14, 2, mi) || s[16] != ':' || !digits(17, 2, se)) {
        return bad();
    }
    if (mo < 1 || mo > 12 || d < 1 || d > 31 || h > 23 || mi > 59 || se > 59) return bad();

    size_t pos = 19;
    long long micros = 0;
    if (pos < text.size() && s[pos] == '.') {
        ++pos;
        int ndig = 0;
        while (pos < text.size() && s[pos] >= '0' && s[pos] <= '9' && ndig < 6) {
            micros = micros * 10 + (s[pos] - '0');
            ++pos;
            ++ndig;
        }
        if (ndig == 0) return bad();
        for (int i = ndig; i < 6; ++i) micros *= 10;
    }
    if (pos + 1 != text.size() || (s[pos] != 'Z' && s[pos] != 'z')) return bad();

    const std::int64_t days = days_from_civil(static_cast<int>(y),
                                              static_cast<unsigned>(mo),
                                              static_cast<unsigned>(d));
    return ((days * kSecondsPerDay) + h * 3600 + mi * 60 + se) * kMicrosPerSecond + micros;
}

Timestamp SystemClock::now() {
    using namespace std::chrono;
    return duration_cast<microseconds>(system_clock::now().time_since_epoch()).count();
}

} // namespace cdo
