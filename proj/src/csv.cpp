#include "csv.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sarima {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

int month_from_name(const std::string& name) {
    static const char* names[12] = {"jan", "feb", "mar", "apr", "may", "jun",
                                    "jul", "aug", "sep", "oct", "nov", "dec"};
    const std::string key = lower(name);
    for (int i = 0; i < 12; ++i)
        if (key == names[i])
            return i + 1;
    return 0;
}

// ISO YYYY-MM-DD or NSE DD-MMM-YYYY.
bool parse_date(const std::string& text, int& year, int& month, int& day) {
    const std::string t = trim(text);
    int a = 0, b = 0, c = 0;
    char extra = 0;
    if (std::sscanf(t.c_str(), "%d-%d-%d%c", &a, &b, &c, &extra) == 3) {
        year = a;
        month = b;
        day = c;
        return month >= 1 && month <= 12 && day >= 1 && day <= 31 && year >= 1000;
    }
    char mon[8] = {0};
    if (std::sscanf(t.c_str(), "%d-%3[A-Za-z]-%d%c", &a, mon, &c, &extra) == 3) {
        month = month_from_name(mon);
        day = a;
        year = c;
        return month != 0 && day >= 1 && day <= 31 && year >= 1000;
    }
    return false;
}

// Numeric field; tolerates thousands separators ("10,862.55") and quoting.
bool parse_number(const std::string& text, double& out) {
    std::string t = trim(text);
    t.erase(std::remove(t.begin(), t.end(), ','), t.end());
    if (t.empty())
        return false;
    char* end = nullptr;
    out = std::strtod(t.c_str(), &end);
    return end == t.c_str() + t.size() && std::isfinite(out);
}

std::string line_err(const std::string& path, std::size_t lineno, const std::string& what) {
    return path + ":" + std::to_string(lineno) + ": " + what;
}

} // namespace

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

DailyQuotes load_daily_csv(const std::string& path, const std::string& date_column,
                           const std::string& close_column) {
    std::ifstream in(path);
    if (!in)
        throw DataError("cannot open " + path);

    std::string line;
    if (!std::getline(in, line))
        throw DataError(path + ": empty file, header row required");

    const std::vector<std::string> header = split_csv_line(line);
    int date_idx = -1, close_idx = -1;
    for (std::size_t i = 0; i < header.size(); ++i) {
        const std::string name = lower(trim(header[i]));
        if (name == lower(date_column))
            date_idx = static_cast<int>(i);
        if (name == lower(close_column))
            close_idx = static_cast<int>(i);
    }
    if (date_idx < 0)
        throw DataError(path + ": date column '" + date_column + "' not found in header");
    if (close_idx < 0)
        throw DataError(path + ": close column '" + close_column + "' not found in header");

    std::vector<DailyQuote> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty())
            continue;
        const std::vector<std::string> fields = split_csv_line(line);
        const std::size_t need = static_cast<std::size_t>(std::max(date_idx, close_idx)) + 1;
        if (fields.size() < need)
            throw DataError(line_err(path, lineno, "expected at least " + std::to_string(need) +
                                                       " fields, got " +
                                                       std::to_string(fields.size())));
        DailyQuote q{};
        if (!parse_date(fields[static_cast<std::size_t>(date_idx)], q.year, q.month, q.day))
            throw DataError(line_err(path, lineno,
                                     "unparseable date '" +
                                         trim(fields[static_cast<std::size_t>(date_idx)]) + "'"));
        if (!parse_number(fields[static_cast<std::size_t>(close_idx)], q.close))
            throw DataError(line_err(path, lineno,
                                     "non-numeric close '" +
                                         trim(fields[static_cast<std::size_t>(close_idx)]) + "'"));
        rows.push_back(q);
    }
    if (rows.empty())
        throw DataError(path + ": no data rows");

    // Input may be newest-first (NSE exports are); normalize to ascending.
    bool ascending = true, descending = true;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const long prev = rows[i - 1].year * 10000L + rows[i - 1].month * 100L + rows[i - 1].day;
        const long cur = rows[i].year * 10000L + rows[i].month * 100L + rows[i].day;
        if (cur <= prev)
            ascending = false;
        if (cur >= prev)
            descending = false;
    }
    if (!ascending && descending)
        std::reverse(rows.begin(), rows.end());

    try {
        return DailyQuotes(std::move(rows));
    } catch (const DataError& e) {
        throw DataError(path + ": " + e.what());
    }
}

TimeSeries load_monthly_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw DataError("cannot open " + path);

    std::string line;
    if (!std::getline(in, line))
        throw DataError(path + ": empty file, header row required");

    std::vector<double> values;
    YearMonth start{};
    YearMonth expected{};
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty())
            continue;
        const std::vector<std::string> fields = split_csv_line(line);
        if (fields.size() < 2)
            throw DataError(line_err(path, lineno, "expected 'period,value'"));
        int y = 0, m = 0;
        char extra = 0;
        if (std::sscanf(trim(fields[0]).c_str(), "%d-%d%c", &y, &m, &extra) != 2 || m < 1 ||
            m > 12)
            throw DataError(line_err(path, lineno, "unparseable period '" + trim(fields[0]) + "'"));
        double v = 0.0;
        if (!parse_number(fields[1], v))
            throw DataError(line_err(path, lineno, "non-numeric value '" + trim(fields[1]) + "'"));
        const YearMonth p{y, m};
        if (values.empty()) {
            start = p;
        } else if (p != expected) {
            throw DataError(
                line_err(path, lineno, "period " + p.str() + " breaks monthly contiguity, expected " +
                                           expected.str()));
        }
        expected = p.plus(1);
        values.push_back(v);
    }
    if (values.empty())
        throw DataError(path + ": no data rows");
    return TimeSeries(std::move(values), start);
}

void save_monthly_csv(const TimeSeries& s, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw DataError("cannot write " + path);
    out << "period,value\n";
    char buf[64];
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.12g", s.values()[i]);
        out << s.period_at(i).str() << ',' << buf << '\n';
    }
    if (!out.good())
        throw DataError("write failure on " + path);
}

} // namespace sarima
