#include "trimdist/piecewise.hpp"

#include "trimdist/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace trimdist::detail {

namespace {

double interp_on(double t0, double a, double t1, double b, double t) {
    return a + (b - a) * ((t - t0) / (t1 - t0));
}

} // namespace

Pw::Pw(std::vector<PwRow> rows) : rows_(std::move(rows)) {
    if (rows_.size() < 2) throw std::logic_error("Pw: needs at least two rows");
}

Pw Pw::from(const GridFunction& f) {
    const auto& t = f.nodes();
    const auto& v = f.values();
    const std::size_t m = t.size();
    std::vector<PwRow> rows(m);
    for (std::size_t i = 0; i < m; ++i) {
        double right = v[i];
        if (f.interp() == Interp::StepLeft && i + 1 < m) right = v[i + 1];
        rows[i] = PwRow{t[i], v[i], v[i], right};
    }
    return Pw(std::move(rows));
}

std::size_t Pw::cell_of(double t) const {
    // first index i with rows_[i].t >= t, then step back; callers guarantee t in [0,1]
    auto it = std::lower_bound(rows_.begin(), rows_.end(), t,
                               [](const PwRow& r, double x) { return r.t < x; });
    std::size_t i = static_cast<std::size_t>(it - rows_.begin());
    if (i == rows_.size()) --i;
    return i;
}

double Pw::value(double t) const {
    const std::size_t i = cell_of(t);
    if (rows_[i].t == t) return rows_[i].value;
    return interp_on(rows_[i - 1].t, rows_[i - 1].right, rows_[i].t, rows_[i].left, t);
}

double Pw::left(double t) const {
    const std::size_t i = cell_of(t);
    if (rows_[i].t == t) return rows_[i].left;
    return interp_on(rows_[i - 1].t, rows_[i - 1].right, rows_[i].t, rows_[i].left, t);
}

double Pw::right(double t) const {
    const std::size_t i = cell_of(t);
    if (rows_[i].t == t) return rows_[i].right;
    return interp_on(rows_[i - 1].t, rows_[i - 1].right, rows_[i].t, rows_[i].left, t);
}

Pw Pw::affine_add(double c0, double c1) const {
    std::vector<PwRow> out(rows_);
    for (auto& r : out) {
        const double s = c0 + c1 * r.t;
        r.left += s;
        r.value += s;
        r.right += s;
    }
    return Pw(std::move(out));
}

Pw Pw::scaled(double c) const {
    std::vector<PwRow> out(rows_);
    for (auto& r : out) {
        r.left *= c;
        r.value *= c;
        r.right *= c;
    }
    return Pw(std::move(out));
}

Pw Pw::reversed() const {
    std::vector<PwRow> out(rows_.size());
    const std::size_t m = rows_.size();
    for (std::size_t i = 0; i < m; ++i) {
        const PwRow& r = rows_[m - 1 - i];
        out[i] = PwRow{1.0 - r.t, r.right, r.value, r.left};
    }
    return Pw(std::move(out));
}

namespace {
// Rows of `ra` on the superset grid `ts`.
std::vector<PwRow> refined_rows_of(const std::vector<PwRow>& ra,
                                   const std::vector<double>& ts) {
    std::vector<PwRow> out;
    out.reserve(ts.size());
    std::size_t i = 0;
    for (double t : ts) {
        while (i + 1 < ra.size() && ra[i + 1].t <= t) ++i;
        if (ra[i].t == t) {
            out.push_back(ra[i]);
        } else {
            const double v =
                interp_on(ra[i].t, ra[i].right, ra[i + 1].t, ra[i + 1].left, t);
            out.push_back({t, v, v, v});
        }
    }
    return out;
}
} // namespace

std::vector<double> Pw::ts() const {
    std::vector<double> out(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) out[i] = rows_[i].t;
    return out;
}

Pw Pw::refined_to(const std::vector<double>& ts) const {
    return Pw(refined_rows_of(rows_, ts));
}

Pw Pw::prefix_inf() const {
    std::vector<PwRow> out;
    out.reserve(2 * rows_.size());
    double m = rows_.front().value;
    out.push_back({rows_.front().t, m, m, m});
    for (std::size_t i = 0; i + 1 < rows_.size(); ++i) {
        const double t0 = rows_[i].t, t1 = rows_[i + 1].t;
        const double a = rows_[i].right;    // start of the open cell (approached)
        const double b = rows_[i + 1].left; // end of the open cell
        double left_at_t1;
        if (b >= a) {
            // nonincreasing never happens inside: inf over (t0,x] is the
            // approached start value a
            const double c = std::min(m, a);
            out.back().right = c;
            left_at_t1 = c;
        } else if (a <= m) {
            // segment dips immediately below the running min: follow it
            out.back().right = a;
            left_at_t1 = b;
        } else if (b >= m) {
            out.back().right = m;
            left_at_t1 = m;
        } else {
            // a > m > b: constant m until the segment crosses it
            out.back().right = m;
            const double tau = t0 + (t1 - t0) * ((m - a) / (b - a));
            if (tau > t0 && tau < t1) out.push_back({tau, m, m, m});
            left_at_t1 = b;
        }
        m = std::min(m, std::min(a, b));
        const double v1 = std::min(m, rows_[i + 1].value);
        out.push_back({t1, left_at_t1, v1, v1});
        m = v1;
    }
    return Pw(std::move(out));
}

Pw Pw::clamp(double lo, double hi) const {
    Pw out = *this;
    if (std::isfinite(hi)) {
        std::vector<PwRow> c{{0.0, hi, hi, hi}, {1.0, hi, hi, hi}};
        out = pw_binary_min(out, Pw(std::move(c)));
    }
    if (std::isfinite(lo)) {
        std::vector<PwRow> c{{0.0, lo, lo, lo}, {1.0, lo, lo, lo}};
        out = pw_binary_max(out, Pw(std::move(c)));
    }
    return out;
}

double Pw::sup_abs() const {
    double s = 0.0;
    for (const auto& r : rows_)
        s = std::max({s, std::fabs(r.left), std::fabs(r.value), std::fabs(r.right)});
    return s;
}

double Pw::sup_signed() const {
    double s = -std::numeric_limits<double>::infinity();
    for (const auto& r : rows_) s = std::max({s, r.left, r.value, r.right});
    return s;
}

double Pw::inf_signed() const {
    double s = std::numeric_limits<double>::infinity();
    for (const auto& r : rows_) s = std::min({s, r.left, r.value, r.right});
    return s;
}

bool Pw::is_continuous() const {
    for (const auto& r : rows_)
        if (r.left != r.value || r.value != r.right) return false;
    return true;
}

GridFunction Pw::to_linear_grid() const {
    if (!is_continuous())
        throw std::logic_error("Pw::to_linear_grid: function has a jump");
    std::vector<double> t(rows_.size()), v(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        t[i] = rows_[i].t;
        v[i] = rows_[i].value;
    }
    return GridFunction(std::move(t), std::move(v), Interp::Linear);
}

GridFunction Pw::to_linear_grid_from_values() const {
    std::vector<double> t(rows_.size()), v(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        t[i] = rows_[i].t;
        v[i] = rows_[i].value;
    }
    return GridFunction(std::move(t), std::move(v), Interp::Linear);
}

GridFunction Pw::to_stepleft_grid() const {
    for (std::size_t i = 0; i + 1 < rows_.size(); ++i) {
        if (rows_[i].right != rows_[i + 1].left || rows_[i].left != rows_[i].value)
            throw std::logic_error("Pw::to_stepleft_grid: cells are not constant");
    }
    std::vector<double> t(rows_.size()), v(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        t[i] = rows_[i].t;
        v[i] = rows_[i].value;
    }
    return GridFunction(std::move(t), std::move(v), Interp::StepLeft);
}

namespace {

std::vector<double> union_ts(const Pw& a, const Pw& b) {
    std::vector<double> ts;
    ts.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    const auto& ra = a.rows();
    const auto& rb = b.rows();
    while (i < ra.size() || j < rb.size()) {
        double t;
        if (j == rb.size() || (i < ra.size() && ra[i].t <= rb[j].t)) {
            t = ra[i].t;
            if (j < rb.size() && rb[j].t == t) ++j;
            ++i;
        } else {
            t = rb[j].t;
            ++j;
        }
        ts.push_back(t);
    }
    return ts;
}

std::vector<PwRow> refined_rows(const Pw& a, const std::vector<double>& ts) {
    return refined_rows_of(a.rows(), ts);
}

std::vector<double> crossing_ts(const std::vector<PwRow>& a, const std::vector<PwRow>& b,
                                const std::vector<double>& ts) {
    std::vector<double> extra;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        const double d0 = a[i].right - b[i].right;
        const double d1 = a[i + 1].left - b[i + 1].left;
        if ((d0 > 0.0 && d1 < 0.0) || (d0 < 0.0 && d1 > 0.0)) {
            const double tau = ts[i] + (ts[i + 1] - ts[i]) * (d0 / (d0 - d1));
            if (tau > ts[i] && tau < ts[i + 1]) extra.push_back(tau);
        }
    }
    return extra;
}

template <typename Op>
Pw pw_pointwise(const Pw& a, const Pw& b, Op op, bool needs_crossings) {
    std::vector<double> ts = union_ts(a, b);
    if (needs_crossings) {
        auto ra = refined_rows(a, ts);
        auto rb = refined_rows(b, ts);
        auto extra = crossing_ts(ra, rb, ts);
        if (!extra.empty()) {
            ts.insert(ts.end(), extra.begin(), extra.end());
            std::sort(ts.begin(), ts.end());
            ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        }
    }
    auto ra = refined_rows(a, ts);
    auto rb = refined_rows(b, ts);
    std::vector<PwRow> out(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        out[i] = PwRow{ts[i], op(ra[i].left, rb[i].left), op(ra[i].value, rb[i].value),
                       op(ra[i].right, rb[i].right)};
    }
    return Pw(std::move(out));
}

} // namespace

Pw pw_binary_min(const Pw& a, const Pw& b) {
    return pw_pointwise(a, b, [](double x, double y) { return std::min(x, y); }, true);
}

Pw pw_binary_max(const Pw& a, const Pw& b) {
    return pw_pointwise(a, b, [](double x, double y) { return std::max(x, y); }, true);
}

Pw pw_combine(const Pw& a, double ca, const Pw& b, double cb) {
    return pw_pointwise(
        a, b, [ca, cb](double x, double y) { return ca * x + cb * y; }, false);
}

} // namespace trimdist::detail
