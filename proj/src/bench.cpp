#include "desinc/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <future>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "desinc/approximator.hpp"
#include "desinc/bounds.hpp"
#include "desinc/error.hpp"

namespace desinc::bench {

std::vector<double> evaluation_grid()
{
    // Magnitudes 2^{e/2} for e = -100..100. Odd e uses sqrt(2) * 2^{(e-1)/2}.
    std::vector<double> magnitudes;
    magnitudes.reserve(201);
    for (int e = -100; e <= 100; ++e) {
        magnitudes.push_back(e % 2 == 0 ? std::ldexp(1.0, e / 2) : std::ldexp(std::numbers::sqrt2, (e - 1) / 2));
    }
    std::vector<double> points;
    points.reserve(2 * magnitudes.size() + 1);
    for (auto it = magnitudes.rbegin(); it != magnitudes.rend(); ++it) {
        points.push_back(-*it);
    }
    points.push_back(0.0);
    points.insert(points.end(), magnitudes.begin(), magnitudes.end());
    return points;
}

std::vector<int> default_n_values(Method method)
{
    const int last = method == Method::T23 ? 57 : 142;
    std::vector<int> ns;
    for (int n = 2; n <= last; n += 5) {
        ns.push_back(n);
    }
    return ns;
}

DecayParams run_params(const RunConfig& config, Method method)
{
    DecayParams p = preset({config.function, method});
    if (config.d_override) {
        p.d = *config.d_override;
        p.validate();
    }
    return p;
}

ExperimentRow run_one(TestFunction function, Method method, const DecayParams& params, int n, bool bound_mode,
                      std::ostream* diagnostics)
{
    const RealFunction f = test_function(function);
    const Approximant approx = build(f, transform_for(method), params, n);
    const std::vector<double> points = evaluation_grid();

    ExperimentRow row;
    row.method = method;
    row.function = function;
    row.n = n;
    row.h = approx.grid().h;
    row.M = approx.grid().M;
    row.N = approx.grid().N;
    row.observed_max_error = max_error_on_grid(approx, f, points);

    if (has_bound(method)) {
        try {
            const ErrorBound b = method == Method::T23 ? de_bound(params, n) : se_bound(params, n);
            row.error_bound = b.bound_value;
        } catch (const RegimeError& e) {
            if (bound_mode) {
                throw;
            }
            if (diagnostics) {
                *diagnostics << "warning: " << to_string(method) << " n=" << n << ": bound omitted, " << e.what()
                             << '\n';
            }
        }
    }
    return row;
}

RunResult run(const RunConfig& config)
{
    if (config.methods.empty()) {
        throw DomainError("run: at least one method is required");
    }
    std::vector<Method> methods = config.methods;
    std::sort(methods.begin(), methods.end());
    methods.erase(std::unique(methods.begin(), methods.end()), methods.end());

    if (!config.n_values.empty()) {
        if (config.n_values.front() < 1) {
            throw DomainError("run: n values must be positive");
        }
        if (std::adjacent_find(config.n_values.begin(), config.n_values.end(), std::greater_equal<>()) !=
            config.n_values.end()) {
            throw DomainError("run: n values must be strictly ascending");
        }
    }

    struct Job {
        Method method;
        DecayParams params;
        int n;
    };
    std::vector<Job> jobs;
    for (const Method method : methods) {
        const DecayParams params = run_params(config, method);
        const std::vector<int> ns = config.n_values.empty() ? default_n_values(method) : config.n_values;
        for (const int n : ns) {
            jobs.push_back({method, params, n});
        }
    }

    // In bound mode, reject the whole run before doing any work.
    if (config.check_bounds) {
        for (const Job& job : jobs) {
            if (!has_bound(job.method)) {
                continue;
            }
            if (job.method == Method::T23) {
                if (auto violation = de_regime_violation(job.params, job.n)) {
                    throw RegimeError(std::string(to_string(job.method)) + ": " + *violation);
                }
            } else if (!(job.params.d < std::numbers::pi)) {
                throw RegimeError(std::string(to_string(job.method)) + ": d must satisfy 0 < d < pi");
            }
        }
    }

    // Warnings from workers are buffered per job so that the diagnostics
    // stream sees them in row order.
    std::vector<std::ostringstream> notes(jobs.size());
    std::vector<std::future<ExperimentRow>> pending;
    pending.reserve(jobs.size());
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        pending.push_back(std::async(std::launch::async, [&config, &job = jobs[i], &note = notes[i]] {
            return run_one(config.function, job.method, job.params, job.n, config.check_bounds, &note);
        }));
    }

    RunResult result;
    result.rows.reserve(jobs.size());
    for (std::size_t i = 0; i < pending.size(); ++i) {
        ExperimentRow row = pending[i].get();
        if (config.diagnostics) {
            *config.diagnostics << notes[i].str();
            *config.diagnostics << to_string(row.method) << " n=" << row.n << " observed=" << row.observed_max_error;
            if (row.error_bound) {
                *config.diagnostics << " bound=" << *row.error_bound;
            }
            *config.diagnostics << '\n';
        }
        if (config.check_bounds && !row.within_bound()) {
            result.exit_status = kExitBoundViolation;
            if (config.diagnostics) {
                *config.diagnostics << "violation: " << to_string(row.method) << " n=" << row.n
                                    << " observed error exceeds bound\n";
            }
        }
        result.rows.push_back(row);
    }
    return result;
}

namespace {

std::string format_double(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

std::vector<std::string_view> split(std::string_view line, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

template <typename T>
T parse_number(std::string_view field, std::size_t line_no)
{
    T value{};
    const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
    if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
        throw std::invalid_argument("parse_csv: line " + std::to_string(line_no) + ": bad number '" +
                                    std::string(field) + "'");
    }
    return value;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows)
{
    out << kCsvHeader << '\n';
    for (const ExperimentRow& r : rows) {
        out << to_string(r.method) << ',' << to_string(r.function) << ',' << r.n << ',' << format_double(r.h) << ','
            << r.M << ',' << r.N << ',' << format_double(r.observed_max_error) << ',';
        if (r.error_bound) {
            out << format_double(*r.error_bound);
        }
        out << '\n';
    }
}

std::string to_csv(const std::vector<ExperimentRow>& rows)
{
    std::ostringstream out;
    write_csv(out, rows);
    return out.str();
}

std::vector<ExperimentRow> parse_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw std::invalid_argument("parse_csv: missing or unexpected header");
    }
    std::vector<ExperimentRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const auto fields = split(line, ',');
        if (fields.size() != 8) {
            throw std::invalid_argument("parse_csv: line " + std::to_string(line_no) + ": expected 8 fields");
        }
        const auto method = parse_method(fields[0]);
        const auto function = parse_function(fields[1]);
        if (!method || !function) {
            throw std::invalid_argument("parse_csv: line " + std::to_string(line_no) + ": unknown method or function");
        }
        ExperimentRow r;
        r.method = *method;
        r.function = *function;
        r.n = parse_number<int>(fields[2], line_no);
        r.h = parse_number<double>(fields[3], line_no);
        r.M = parse_number<int>(fields[4], line_no);
        r.N = parse_number<int>(fields[5], line_no);
        r.observed_max_error = parse_number<double>(fields[6], line_no);
        if (!fields[7].empty()) {
            r.error_bound = parse_number<double>(fields[7], line_no);
        }
        rows.push_back(r);
    }
    return rows;
}

std::vector<ExperimentRow> parse_csv(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_csv(in);
}

std::optional<Method> parse_method(std::string_view name) noexcept
{
    if (name == "t21") return Method::T21;
    if (name == "t22") return Method::T22;
    if (name == "t23") return Method::T23;
    return std::nullopt;
}

std::optional<TestFunction> parse_function(std::string_view name) noexcept
{
    if (name == "f1") return TestFunction::F1;
    if (name == "f2") return TestFunction::F2;
    return std::nullopt;
}

}  // namespace desinc::bench
