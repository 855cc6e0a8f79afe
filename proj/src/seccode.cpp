#include "secnet/seccode.hpp"

#include <cmath>

namespace secnet {

Mat ToeplitzHash::toeplitz() const {
    int tail = input_len - output_len;
    Mat t(ctx, output_len, tail);
    for (int a = 0; a < output_len; ++a)
        for (int b = 0; b < tail; ++b) t.at(a, b) = seed[(std::size_t)(a - b + tail - 1)];
    return t;
}

Mat ToeplitzHash::matrix() const {
    return mat_hconcat(Mat::identity(ctx, output_len), toeplitz());
}

std::vector<std::uint32_t> ToeplitzHash::apply(const std::vector<std::uint32_t>& x) const {
    if ((int)x.size() != input_len) throw DimensionError("hash input length mismatch");
    int tail = input_len - output_len;
    std::vector<std::uint32_t> y(x.begin(), x.begin() + output_len);
    for (int a = 0; a < output_len; ++a) {
        std::uint32_t acc = y[(std::size_t)a];
        for (int b = 0; b < tail; ++b) {
            std::uint32_t s = seed[(std::size_t)(a - b + tail - 1)];
            if (s != 0) acc = ctx.add(acc, ctx.mul(s, x[(std::size_t)(output_len + b)]));
        }
        y[(std::size_t)a] = acc;
    }
    return y;
}

ToeplitzHash make_toeplitz(const ArithCtx& ctx, std::vector<std::uint32_t> seed, int k,
                           int kbar) {
    if (!ctx.is_field()) throw Error("hashing needs a field context");
    if (kbar < 0 || kbar > k) throw DimensionError("output length must lie in 0..k");
    if ((int)seed.size() != k - 1) throw DimensionError("seed must hold k-1 elements");
    for (auto v : seed)
        if (!ctx.valid_element(v)) throw Error("seed element out of range");
    return ToeplitzHash{ctx, k, kbar, std::move(seed)};
}

ToeplitzHash random_toeplitz(const ArithCtx& ctx, int k, int kbar, Rng& rng) {
    std::vector<std::uint32_t> seed((std::size_t)(k - 1));
    for (auto& s : seed) s = (std::uint32_t)rng.below(ctx.size());
    return make_toeplitz(ctx, std::move(seed), k, kbar);
}

Universal2Audit universal2_audit(const ArithCtx& ctx, int k, int kbar) {
    double bits = k * std::log2((double)ctx.size());
    if (bits > 16.0) throw BudgetError("audit restricted to q^k <= 2^16");
    std::uint64_t q = ctx.size();
    std::uint64_t seeds = 1;
    for (int i = 0; i < k - 1; ++i) seeds *= q;
    std::uint64_t inputs = 1;
    for (int i = 0; i < k; ++i) inputs *= q;

    // Collisions of a linear family depend only on the difference x - x'.
    std::uint64_t worst = 0;
    std::vector<std::uint32_t> seed((std::size_t)(k - 1), 0);
    std::vector<std::uint32_t> delta((std::size_t)k);
    for (std::uint64_t dcode = 1; dcode < inputs; ++dcode) {
        std::uint64_t v = dcode;
        for (int i = 0; i < k; ++i) {
            delta[(std::size_t)i] = (std::uint32_t)(v % q);
            v /= q;
        }
        std::uint64_t hits = 0;
        for (std::uint64_t scode = 0; scode < seeds; ++scode) {
            std::uint64_t sv = scode;
            for (int i = 0; i < k - 1; ++i) {
                seed[(std::size_t)i] = (std::uint32_t)(sv % q);
                sv /= q;
            }
            ToeplitzHash h{ctx, k, kbar, seed};
            auto out = h.apply(delta);
            bool zero = true;
            for (auto o : out)
                if (o != 0) { zero = false; break; }
            if (zero) ++hits;
        }
        worst = std::max(worst, hits);
    }
    Universal2Audit audit;
    audit.max_collision = Rational((std::int64_t)worst, (std::int64_t)seeds);
    std::uint64_t qk = 1;
    for (int i = 0; i < kbar; ++i) qk *= q;
    audit.bound = Rational(1, (std::int64_t)qk);
    audit.ok = !(audit.bound < audit.max_collision);
    return audit;
}

std::vector<std::uint32_t> wrap_input(const ToeplitzHash& h,
                                      const std::vector<std::uint32_t>& message,
                                      const std::vector<std::uint32_t>& scramble) {
    int tail = h.input_len - h.output_len;
    if ((int)message.size() != h.output_len || (int)scramble.size() != tail)
        throw DimensionError("wrap input length mismatch");
    std::vector<std::uint32_t> out((std::size_t)h.input_len);
    for (int a = 0; a < h.output_len; ++a) {
        std::uint32_t acc = message[(std::size_t)a];
        for (int b = 0; b < tail; ++b) {
            std::uint32_t s = h.seed[(std::size_t)(a - b + tail - 1)];
            if (s != 0) acc = h.ctx.sub(acc, h.ctx.mul(s, scramble[(std::size_t)b]));
        }
        out[(std::size_t)a] = acc;
    }
    for (int b = 0; b < tail; ++b) out[(std::size_t)(h.output_len + b)] = scramble[(std::size_t)b];
    return out;
}

std::vector<std::uint32_t> wrap_output(const ToeplitzHash& h,
                                       const std::vector<std::uint32_t>& inner_decoded) {
    return h.apply(inner_decoded);
}

Code wrapped_identity_code(const ToeplitzHash& h, int m3, int n) {
    if (h.input_len != m3 * n) throw DimensionError("hash length must equal m3*n");
    Code c;
    c.ctx = h.ctx;
    c.m3 = m3;
    c.n = n;
    std::uint64_t q = h.ctx.size();
    std::uint64_t mc = 1, lc = 1;
    for (int i = 0; i < h.output_len; ++i) mc *= q;
    for (int i = 0; i < h.input_len - h.output_len; ++i) lc *= q;
    c.message_count = mc;
    c.scramble_count = lc;
    ToeplitzHash hh = h;
    c.encode = [hh, m3, n, q](std::uint64_t m, std::uint64_t l) {
        std::vector<std::uint32_t> msg((std::size_t)hh.output_len);
        std::vector<std::uint32_t> scr((std::size_t)(hh.input_len - hh.output_len));
        for (auto& s : msg) {
            s = (std::uint32_t)(m % q);
            m /= q;
        }
        for (auto& s : scr) {
            s = (std::uint32_t)(l % q);
            l /= q;
        }
        auto u = wrap_input(hh, msg, scr);
        Mat x(hh.ctx, m3, n);
        for (int t = 0; t < n; ++t)
            for (int r = 0; r < m3; ++r) x.at(r, t) = u[(std::size_t)(t * m3 + r)];
        return x;
    };
    c.decode = [hh, m3, n, q](const Mat& yb) {
        std::vector<std::uint32_t> u((std::size_t)(m3 * n));
        for (int t = 0; t < n; ++t)
            for (int r = 0; r < m3; ++r) u[(std::size_t)(t * m3 + r)] = yb.at(r, t);
        auto msg = hh.apply(u);
        std::uint64_t code = 0;
        for (std::size_t i = msg.size(); i-- > 0;) code = code * q + msg[i];
        return code;
    };
    return c;
}

int wrapped_leak_dims(const ToeplitzHash& h, int m3, int n, const Mat& k_e) {
    if (k_e.cols != m3) throw DimensionError("eavesdropper matrix must have m3 columns");
    const ArithCtx& f = h.ctx;
    int kbar = h.output_len, tail = h.input_len - kbar;
    auto response = [&](const std::vector<std::uint32_t>& msg,
                        const std::vector<std::uint32_t>& scr) {
        auto u = wrap_input(h, msg, scr);
        std::vector<std::uint32_t> y((std::size_t)(k_e.rows * n), 0);
        for (int t = 0; t < n; ++t)
            for (int r = 0; r < k_e.rows; ++r) {
                std::uint32_t acc = 0;
                for (int cc = 0; cc < m3; ++cc)
                    if (k_e.at(r, cc) != 0)
                        acc = f.add(acc, f.mul(k_e.at(r, cc), u[(std::size_t)(t * m3 + cc)]));
                y[(std::size_t)(t * k_e.rows + r)] = acc;
            }
        return y;
    };
    Mat a(f, k_e.rows * n, kbar), b(f, k_e.rows * n, tail);
    std::vector<std::uint32_t> msg((std::size_t)kbar, 0), scr((std::size_t)tail, 0);
    for (int j = 0; j < kbar; ++j) {
        msg[(std::size_t)j] = 1;
        auto y = response(msg, scr);
        msg[(std::size_t)j] = 0;
        for (int r = 0; r < a.rows; ++r) a.at(r, j) = y[(std::size_t)r];
    }
    for (int j = 0; j < tail; ++j) {
        scr[(std::size_t)j] = 1;
        auto y = response(msg, scr);
        scr[(std::size_t)j] = 0;
        for (int r = 0; r < b.rows; ++r) b.at(r, j) = y[(std::size_t)r];
    }
    return mat_rank(mat_hconcat(a, b)) - mat_rank(b);
}

SeedSearchResult seed_search(const ArithCtx& ctx, int k, int kbar, int m3, int n,
                             const std::vector<Mat>& family, bool scan_all) {
    if (family.empty()) throw Error("empty adversary family");
    std::uint64_t q = ctx.size();
    double bits = (k - 1) * std::log2((double)q);
    if (bits > 24.0) throw BudgetError("seed space above 2^24");
    std::uint64_t seeds = 1;
    for (int i = 0; i < k - 1; ++i) seeds *= q;
    SeedSearchResult res;
    res.min_leak_dims = INT32_MAX;
    std::vector<std::uint32_t> seed((std::size_t)(k - 1));
    for (std::uint64_t scode = 0; scode < seeds; ++scode) {
        // lexicographic: scode digits little-endian, so enumerate by direct
        // count and decode most-significant-first for the order guarantee
        std::uint64_t v = scode;
        for (int i = k - 2; i >= 0; --i) {
            seed[(std::size_t)i] = (std::uint32_t)(v % q);
            v /= q;
        }
        ToeplitzHash h{ctx, k, kbar, seed};
        int worst = 0;
        int witness = -1;
        for (std::size_t fi = 0; fi < family.size(); ++fi) {
            int leak = wrapped_leak_dims(h, m3, n, family[fi]);
            if (leak > worst) {
                worst = leak;
                witness = (int)fi;
            }
        }
        ++res.seeds_scanned;
        if (worst == 0) ++res.zero_leak_seeds;
        if (worst < res.min_leak_dims) {
            res.min_leak_dims = worst;
            res.best_seed = seed;
            res.witness_family_index = witness;
        }
        if (worst == 0 && !res.zero_leak_found) {
            res.zero_leak_found = true;
            res.seed = seed;
            if (!scan_all) return res;
        }
    }
    return res;
}

std::vector<Mat> enumerate_rank_matrices(const ArithCtx& ctx, int rows, int cols, int rank) {
    std::uint64_t q = ctx.size();
    double bits = rows * cols * std::log2((double)q);
    if (bits > 22.0) throw BudgetError("matrix family too large to enumerate");
    std::uint64_t total = 1;
    for (int i = 0; i < rows * cols; ++i) total *= q;
    std::vector<Mat> out;
    for (std::uint64_t code = 0; code < total; ++code) {
        Mat m(ctx, rows, cols);
        std::uint64_t v = code;
        for (auto& e : m.a) {
            e = (std::uint32_t)(v % q);
            v /= q;
        }
        if (mat_rank(m) == rank) out.push_back(std::move(m));
    }
    return out;
}

RateReport rate_report(int m0, int m1, int m2, RateRegime regime) {
    int rate = 0;
    switch (regime) {
        case RateRegime::SecrecyRobustness: rate = m0 - m1 - m2; break;
        case RateRegime::SecrecyOnly: rate = m0 - m2; break;
        case RateRegime::RobustnessOnly: rate = m0 - m1; break;
    }
    RateReport rep;
    rep.guaranteed = rate > 0;
    rep.rate = rate > 0 ? rate : 0;
    return rep;
}

}  // namespace secnet
