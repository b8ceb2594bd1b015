#include "signcert/region_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace signcert {

std::size_t LogBox::cell_count() const {
    std::size_t n = 1;
    for (std::size_t r : resolution) n *= r;
    return n;
}

LogBox LogBox::with_resolution(std::size_t r) const {
    LogBox b = *this;
    for (auto& x : b.resolution) x = r;
    return b;
}

namespace {

void validate_box(const Signomial& f, const LogBox& box, const OracleOptions& opts) {
    if (box.range.size() != f.dimension() || box.resolution.size() != f.dimension())
        throw std::invalid_argument("oracle: box dimension disagrees with the signomial");
    if (f.dimension() > opts.max_dimension)
        throw std::invalid_argument("oracle: dimension exceeds the sampling guard");
    for (const auto& [lo, hi] : box.range)
        if (!(lo < hi)) throw std::invalid_argument("oracle: box needs lo < hi per axis");
    for (std::size_t r : box.resolution)
        if (r < 2) throw std::invalid_argument("oracle: resolution must be at least 2");
}

unsigned thread_count(const OracleOptions& opts, std::size_t slabs) {
    unsigned t = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SIGNCERT_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) t = std::min<unsigned>(t, unsigned(cap));
    }
    return std::min<unsigned>(t, unsigned(std::max<std::size_t>(1, slabs)));
}

struct UnionFind {
    std::vector<std::int32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::int32_t find(std::int32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::int32_t a, std::int32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

GridLabeling grid_labeling(const Signomial& f, const LogBox& box, const OracleOptions& opts) {
    validate_box(f, box, opts);
    const std::size_t n = f.dimension();
    const std::size_t total = box.cell_count();
    const auto& terms = f.terms();

    // Per-term, per-axis tables of mu_i * g_i(k); a cell's exponent dot
    // product is the sum of n table lookups.
    std::vector<std::vector<std::vector<double>>> table(terms.size());
    for (std::size_t t = 0; t < terms.size(); ++t) {
        table[t].resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto [lo, hi] = box.range[i];
            const std::size_t res = box.resolution[i];
            const double step = (hi - lo) / double(res);
            table[t][i].resize(res);
            for (std::size_t k = 0; k < res; ++k)
                table[t][i][k] = terms[t].exponent[i] * (lo + (double(k) + 0.5) * step);
        }
    }

    std::vector<std::size_t> stride(n, 1);
    for (std::size_t i = n; i-- > 1;) stride[i - 1] = stride[i] * box.resolution[i];

    GridLabeling g;
    g.box = box;
    g.sign.assign(total, CellSign::band);

    const std::size_t slab = stride[0];
    auto eval_range = [&](std::size_t begin, std::size_t end) {
        std::vector<std::size_t> idx(n, 0);
        for (std::size_t cell = begin; cell < end; ++cell) {
            std::size_t rem = cell;
            for (std::size_t i = 0; i < n; ++i) {
                idx[i] = rem / stride[i];
                rem %= stride[i];
            }
            double sum = 0.0, peak = 0.0;
            bool bad = false;
            for (std::size_t t = 0; t < terms.size(); ++t) {
                double d = 0.0;
                for (std::size_t i = 0; i < n; ++i) d += table[t][i][idx[i]];
                const double val = terms[t].coeff * std::exp(d);
                if (!std::isfinite(val)) {
                    bad = true;
                    break;
                }
                sum += val;
                peak = std::max(peak, std::abs(val));
            }
            if (bad || !std::isfinite(sum))
                g.sign[cell] = CellSign::invalid;
            else if (std::abs(sum) <= opts.band_rel * peak)
                g.sign[cell] = CellSign::band;
            else
                g.sign[cell] = sum < 0.0 ? CellSign::negative : CellSign::positive;
        }
    };

    const unsigned nthreads = thread_count(opts, box.resolution[0]);
    if (nthreads <= 1) {
        eval_range(0, total);
    } else {
        std::vector<std::thread> pool;
        const std::size_t rows = box.resolution[0];
        for (unsigned w = 0; w < nthreads; ++w) {
            const std::size_t r0 = rows * w / nthreads, r1 = rows * (w + 1) / nthreads;
            pool.emplace_back(eval_range, r0 * slab, r1 * slab);
        }
        for (auto& th : pool) th.join();
    }

    // Deterministic single-threaded labeling after evaluation.
    UnionFind uf(total);
    std::vector<std::size_t> idx(n, 0);
    for (std::size_t cell = 0; cell < total; ++cell) {
        const CellSign sc = g.sign[cell];
        if (sc != CellSign::negative && sc != CellSign::positive) continue;
        std::size_t rem = cell;
        for (std::size_t i = 0; i < n; ++i) {
            idx[i] = rem / stride[i];
            rem %= stride[i];
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (idx[i] == 0) continue;
            const std::size_t prev = cell - stride[i];
            if (g.sign[prev] == sc) uf.unite(std::int32_t(cell), std::int32_t(prev));
        }
    }

    g.component.assign(total, -1);
    std::vector<std::int32_t> remap(total, -1);
    for (std::size_t cell = 0; cell < total; ++cell) {
        const CellSign sc = g.sign[cell];
        if (sc != CellSign::negative && sc != CellSign::positive) continue;
        const std::int32_t root = uf.find(std::int32_t(cell));
        if (remap[root] < 0) {
            remap[root] = std::int32_t(g.component_sign.size());
            g.component_sign.push_back(sc == CellSign::negative ? -1 : 1);
            g.component_touches_boundary.push_back(0);
        }
        const std::int32_t id = remap[root];
        g.component[cell] = id;
        std::size_t rem = cell;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t k = rem / stride[i];
            rem %= stride[i];
            if (k == 0 || k + 1 == box.resolution[i]) {
                g.component_touches_boundary[std::size_t(id)] = 1;
                break;
            }
        }
    }
    return g;
}

ComponentCount count_components(const GridLabeling& g, int sign) {
    ComponentCount c;
    for (std::size_t id = 0; id < g.component_count(); ++id) {
        if (g.component_sign[id] != sign) continue;
        ++c.count;
        if (g.component_touches_boundary[id]) ++c.touching_boundary;
    }
    return c;
}

StabilityReport stability_check(const Signomial& f, const LogBox& box, int sign,
                                const std::vector<std::size_t>& resolutions,
                                const OracleOptions& opts) {
    if (resolutions.size() < 2)
        throw std::invalid_argument("stability_check: need at least two resolutions");
    StabilityReport rep;
    for (std::size_t r : resolutions) {
        const GridLabeling g = grid_labeling(f, box.with_resolution(r), opts);
        const ComponentCount c = count_components(g, sign);
        rep.counts.push_back(c.count);
        rep.touches.push_back(c.touching_boundary);
    }
    const std::size_t last = rep.counts.size() - 1;
    rep.stable = rep.counts[last] == rep.counts[last - 1] &&
                 rep.touches[last] == rep.touches[last - 1];
    rep.count = rep.counts[last];
    return rep;
}

void write_ppm(const GridLabeling& g, const std::string& path) {
    if (g.box.dimensions() != 2)
        throw std::invalid_argument("write_ppm: raster dump is 2-D only");
    const std::size_t w = g.box.resolution[0], h = g.box.resolution[1];
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_ppm: cannot open " + path);
    out << "P6\n" << w << " " << h << "\n255\n";
    // Image rows run top-to-bottom; the grid's second axis runs bottom-to-top.
    for (std::size_t row = h; row-- > 0;) {
        for (std::size_t col = 0; col < w; ++col) {
            const CellSign s = g.sign[col * h + row];
            unsigned char rgb[3] = {255, 255, 255};
            switch (s) {
                case CellSign::negative: rgb[0] = 64, rgb[1] = 64, rgb[2] = 255; break;
                case CellSign::positive: rgb[0] = 255, rgb[1] = 64, rgb[2] = 64; break;
                case CellSign::band: break;
                case CellSign::invalid: rgb[0] = rgb[1] = rgb[2] = 128; break;
            }
            out.write(reinterpret_cast<const char*>(rgb), 3);
        }
    }
}

void write_csv(const GridLabeling& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_csv: cannot open " + path);
    const std::size_t n = g.box.dimensions();
    std::vector<std::size_t> stride(n, 1);
    for (std::size_t i = n; i-- > 1;) stride[i - 1] = stride[i] * g.box.resolution[i];
    for (std::size_t i = 0; i < n; ++i) out << "i" << i << ",";
    out << "sign,component\n";
    for (std::size_t cell = 0; cell < g.sign.size(); ++cell) {
        std::size_t rem = cell;
        for (std::size_t i = 0; i < n; ++i) {
            out << rem / stride[i] << ",";
            rem %= stride[i];
        }
        out << int(g.sign[cell]) << "," << g.component[cell] << "\n";
    }
}

}  // namespace signcert
