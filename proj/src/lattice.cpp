#include "pfh/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pfh {

namespace {

bool slope_less(const PrimitiveSegment& a, const PrimitiveSegment& b) {
    return Int(a.p) * b.q < Int(b.p) * a.q;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

long long parse_ll(const std::string& s, const char* what) {
    if (s.empty()) throw std::invalid_argument(std::string("empty ") + what + " in path literal");
    size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad ") + what + " in path literal: '" + s + "'");
    }
    if (pos != s.size())
        throw std::invalid_argument(std::string("bad ") + what + " in path literal: '" + s + "'");
    return v;
}

}  // namespace

LatticePath LatticePath::make(long long y0, std::vector<Run> runs) {
    if (runs.empty()) throw std::invalid_argument("path needs at least one run");
    for (const Run& r : runs) {
        if (r.seg.q < 1) throw std::invalid_argument("step span q must be >= 1");
        if (r.seg.p < 0) throw std::invalid_argument("step rise p must be >= 0");
        if (std::gcd(r.seg.q, r.seg.p) != 1)
            throw std::invalid_argument("step (q, p) must be primitive");
        if (r.mult < 1) throw std::invalid_argument("run multiplicity must be >= 1");
    }
    for (size_t i = 0; i + 1 < runs.size(); ++i) {
        if (!slope_less(runs[i].seg, runs[i + 1].seg))
            throw std::invalid_argument("run slopes must increase strictly");
    }
    LatticePath path;
    path.y0_ = y0;
    path.runs_ = std::move(runs);
    for (const Run& r : path.runs_) {
        path.degree_ += r.seg.q * r.mult;
        path.segments_ += r.mult;
        path.rise_ += r.seg.p * r.mult;
    }
    return path;
}

LatticePath LatticePath::parse(const std::string& text) {
    size_t semi = text.find(';');
    if (semi == std::string::npos)
        throw std::invalid_argument("path literal needs 'y0; runs'");
    long long y0 = parse_ll(trim(text.substr(0, semi)), "base height");
    std::string rest = text.substr(semi + 1);
    std::vector<Run> runs;
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (tok.empty()) throw std::invalid_argument("empty run in path literal");
        size_t colon = tok.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("run must look like q:p or q:p*m, got '" + tok + "'");
        Run run;
        run.seg.q = parse_ll(trim(tok.substr(0, colon)), "span");
        std::string tail = tok.substr(colon + 1);
        size_t star = tail.find('*');
        if (star == std::string::npos) {
            run.seg.p = parse_ll(trim(tail), "rise");
            run.mult = 1;
        } else {
            run.seg.p = parse_ll(trim(tail.substr(0, star)), "rise");
            run.mult = parse_ll(trim(tail.substr(star + 1)), "multiplicity");
        }
        runs.push_back(run);
    }
    return make(y0, std::move(runs));
}

std::string LatticePath::literal() const {
    std::ostringstream out;
    out << y0_ << ";";
    for (size_t i = 0; i < runs_.size(); ++i) {
        out << (i == 0 ? " " : ", ");
        out << runs_[i].seg.q << ":" << runs_[i].seg.p << "*" << runs_[i].mult;
    }
    return out.str();
}

Rat LatticePath::height_at(const Rat& x) const {
    if (x < 0 || x > degree_) throw std::domain_error("height_at outside [0, degree]");
    Rat xcur = 0;
    Rat ycur = y0_;
    for (const Run& r : runs_) {
        for (long long c = 0; c < r.mult; ++c) {
            Rat xnext = xcur + r.seg.q;
            if (x <= xnext) return ycur + Rat(r.seg.p) * (x - xcur) / Rat(r.seg.q);
            xcur = xnext;
            ycur += r.seg.p;
        }
    }
    return ycur;  // unreachable: x == degree is caught by the last guard
}

LatticePath LatticePath::shifted(long long dy) const {
    LatticePath copy = *this;
    copy.y0_ += dy;
    return copy;
}

bool LatticePath::operator==(const LatticePath& other) const {
    if (y0_ != other.y0_ || runs_.size() != other.runs_.size()) return false;
    for (size_t i = 0; i < runs_.size(); ++i) {
        if (runs_[i].seg.q != other.runs_[i].seg.q || runs_[i].seg.p != other.runs_[i].seg.p ||
            runs_[i].mult != other.runs_[i].mult)
            return false;
    }
    return true;
}

namespace {

// Vertex heights and step bookkeeping shared by both index routes.
struct Walk {
    long long y_min, y_max, e;
};

Walk walk_path(const LatticePath& path) {
    Walk w{path.y0(), path.y0(), 0};
    long long ycur = path.y0();
    for (const Run& r : path.runs()) {
        for (long long c = 0; c < r.mult; ++c) {
            ycur += r.seg.p;
            w.y_min = std::min(w.y_min, ycur);
            w.y_max = std::max(w.y_max, ycur);
            ++w.e;
        }
    }
    return w;
}

}  // namespace

IndexBreakdown index_by_count(const LatticePath& path) {
    IndexBreakdown out;
    long long d = path.degree();
    long long j_plus = 0, j_minus = 0;
    for (long long x = 0; x <= d; ++x) {
        Rat Y = path.height_at(Rat(x));
        for (long long t = 0; Rat(t) < Y; ++t) ++j_plus;
        for (long long t = -1; Rat(t) >= Y; --t) ++j_minus;  // t stays < 0
    }
    out.j_plus = j_plus;
    out.j_minus = j_minus;
    out.j = j_plus - j_minus;
    out.I = 2 * out.j - d;
    Walk w = walk_path(path);
    out.y = w.y_min;
    out.w = w.y_max;
    out.e = w.e;
    return out;
}

IndexBreakdown index_by_area(const LatticePath& path) {
    IndexBreakdown out;
    long long ycur = path.y0();
    long long a_twice = 0;
    for (const Run& r : path.runs()) {
        for (long long c = 0; c < r.mult; ++c) {
            a_twice += 2 * r.seg.q * ycur + r.seg.p * r.seg.q;
            ycur += r.seg.p;
        }
    }
    Walk w = walk_path(path);
    out.A_twice = a_twice;
    out.y = w.y_min;
    out.w = w.y_max;
    out.e = w.e;
    out.I = a_twice + out.y + out.w - out.e;
    if ((out.I + path.degree()) % 2 != 0)
        throw std::logic_error("area index parity violated");
    out.j = (out.I + path.degree()) / 2;
    return out;
}

Rat action(const LatticePath& path, const TwistProfile& tp) {
    Rat total = path.y0();
    for (const Run& r : path.runs()) {
        Rat z = tp.inverse_slope(Rat(r.seg.p, r.seg.q));
        Rat per_step = (Rat(r.seg.p) * (Rat(1) - z) + Rat(r.seg.q) * tp.eval(z)) / 2;
        total += per_step * r.mult;
    }
    return total;
}

std::vector<PrimitiveSegment> farey_slopes(long long d, const Rat& max_slope) {
    if (d < 1) throw std::invalid_argument("degree must be >= 1");
    if (max_slope < 0) throw std::invalid_argument("max slope must be >= 0");
    std::vector<PrimitiveSegment> out;
    for (long long q = 1; q <= d; ++q) {
        long long pmax = to_ll(floor_rat(max_slope * q));
        for (long long p = 0; p <= pmax; ++p) {
            if (std::gcd(q, p) != 1) continue;
            out.push_back({q, p});
            if (out.size() > 2'000'000)
                throw std::invalid_argument("slope set too large");
        }
    }
    std::sort(out.begin(), out.end(), [](const PrimitiveSegment& a, const PrimitiveSegment& b) {
        if (slope_less(a, b)) return true;
        if (slope_less(b, a)) return false;
        return a.q < b.q;  // unreachable for primitive steps, kept for safety
    });
    return out;
}

namespace {

void check_limits(long long d, const Rat& max_slope, const EnumerationLimits& limits) {
    if (d < 1) throw std::invalid_argument("degree must be >= 1");
    if (d > limits.max_d)
        throw std::invalid_argument("enumeration limited to degree <= " +
                                    std::to_string(limits.max_d));
    if (max_slope * d > limits.max_slope_times_d)
        throw std::invalid_argument("enumeration limited to max_slope * degree <= " +
                                    rat_str(limits.max_slope_times_d));
}

void recurse_shapes(const std::vector<PrimitiveSegment>& slopes, size_t idx, long long remaining,
                    std::vector<Run>& runs, const std::function<void(const LatticePath&)>& emit) {
    if (remaining == 0) {
        emit(LatticePath::make(0, runs));
        return;
    }
    if (idx == slopes.size()) return;
    // multiplicity 0 first, then 1, 2, ... keeps the visit order lexicographic
    recurse_shapes(slopes, idx + 1, remaining, runs, emit);
    const PrimitiveSegment& seg = slopes[idx];
    for (long long m = 1; m * seg.q <= remaining; ++m) {
        runs.push_back({seg, m});
        recurse_shapes(slopes, idx + 1, remaining - m * seg.q, runs, emit);
        runs.pop_back();
    }
}

}  // namespace

unsigned long long enumerate_shapes(long long d, const Rat& max_slope,
                                    const std::function<void(const LatticePath&)>& visit,
                                    const EnumerationLimits& limits) {
    check_limits(d, max_slope, limits);
    std::vector<PrimitiveSegment> slopes = farey_slopes(d, max_slope);
    unsigned long long count = 0;
    std::vector<Run> runs;
    recurse_shapes(slopes, 0, d, runs, [&](const LatticePath& path) {
        if (++count > limits.max_paths) throw std::runtime_error("path enumeration budget exceeded");
        visit(path);
    });
    return count;
}

unsigned long long enumerate_paths(long long d, const Rat& max_slope, long long y_lo,
                                   long long y_hi,
                                   const std::function<void(const LatticePath&)>& visit,
                                   const EnumerationLimits& limits) {
    if (y_lo > y_hi) throw std::invalid_argument("empty base height range");
    check_limits(d, max_slope, limits);
    std::vector<PrimitiveSegment> slopes = farey_slopes(d, max_slope);
    unsigned long long count = 0;
    std::vector<Run> runs;
    recurse_shapes(slopes, 0, d, runs, [&](const LatticePath& shape) {
        for (long long y0 = y_lo; y0 <= y_hi; ++y0) {
            if (++count > limits.max_paths)
                throw std::runtime_error("path enumeration budget exceeded");
            visit(shape.shifted(y0));
        }
    });
    return count;
}

bool path_order(const LatticePath& a, const LatticePath& b) {
    if (a.y0() != b.y0()) return a.y0() < b.y0();
    std::vector<PrimitiveSegment> ea, eb;
    for (const Run& r : a.runs())
        for (long long c = 0; c < r.mult; ++c) ea.push_back(r.seg);
    for (const Run& r : b.runs())
        for (long long c = 0; c < r.mult; ++c) eb.push_back(r.seg);
    size_t n = std::min(ea.size(), eb.size());
    for (size_t i = 0; i < n; ++i) {
        if (slope_less(ea[i], eb[i])) return true;
        if (slope_less(eb[i], ea[i])) return false;
        if (ea[i].q != eb[i].q) return ea[i].q < eb[i].q;
    }
    return ea.size() < eb.size();
}

}  // namespace pfh

