#include "mflab/grid.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include <nlohmann/json.hpp>

namespace mflab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Iterative radix-2 Cooley-Tukey, size must be a power of two.
void fft_pow2(std::vector<complex_t>& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    std::vector<complex_t> tw(n / 2);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        for (std::size_t k = 0; k < half; ++k)
            tw[k] = std::polar(1.0, sign * kTwoPi * double(k) / double(len));
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t k = 0; k < half; ++k) {
                complex_t u = a[i + k];
                complex_t v = a[i + k + half] * tw[k];
                a[i + k] = u + v;
                a[i + k + half] = u - v;
            }
        }
    }
}

// Bluestein's algorithm: arbitrary length via a power-of-two convolution.
// Twiddles use m^2 mod 2N so phases stay exact for large indices.
void fft_bluestein(std::vector<complex_t>& a, int sign) {
    const std::int64_t n = std::int64_t(a.size());
    std::size_t m = 1;
    while (m < std::size_t(2 * n - 1)) m <<= 1;

    std::vector<complex_t> w(n);
    for (std::int64_t k = 0; k < n; ++k) {
        std::int64_t kk = (k % (2 * n)) * (k % (2 * n)) % (2 * n);
        w[k] = std::polar(1.0, sign * std::numbers::pi * double(kk) / double(n));
    }
    std::vector<complex_t> u(m, complex_t{0.0, 0.0}), v(m, complex_t{0.0, 0.0});
    for (std::int64_t k = 0; k < n; ++k) u[k] = a[k] * w[k];
    v[0] = std::conj(w[0]);
    for (std::int64_t k = 1; k < n; ++k) v[k] = v[m - k] = std::conj(w[k]);

    fft_pow2(u, -1);
    fft_pow2(v, -1);
    for (std::size_t i = 0; i < m; ++i) u[i] *= v[i];
    fft_pow2(u, +1);
    const double scale = 1.0 / double(m);
    for (std::int64_t k = 0; k < n; ++k) a[k] = u[k] * w[k] * scale;
}

void transform_axis(const GridSpec& spec, std::vector<complex_t>& data, int axis, int sign) {
    const std::int64_t N = spec.N;
    std::int64_t stride = 1;
    for (int t = spec.n - 1; t > axis; --t) stride *= N;
    const std::int64_t total = spec.size();
    const std::int64_t block = stride * N;

    std::vector<complex_t> line(std::size_t(N));
    for (std::int64_t base = 0; base < total; base += block) {
        for (std::int64_t off = 0; off < stride; ++off) {
            for (std::int64_t i = 0; i < N; ++i) line[std::size_t(i)] = data[std::size_t(base + off + i * stride)];
            dft_1d_unscaled(line, sign);
            for (std::int64_t i = 0; i < N; ++i) data[std::size_t(base + off + i * stride)] = line[std::size_t(i)];
        }
    }
}

}  // namespace

complex_t unit_phase(double turns) {
    return std::polar(1.0, kTwoPi * turns);
}

GridSpec::GridSpec(int n_, std::int64_t N_) : n(n_), N(N_) {
    if (n < 1 || n > 3) throw parameter_error("GridSpec: dimension must be 1..3");
    if (N < 2 || N % 2 != 0) throw parameter_error("GridSpec: N must be a positive even integer >= 2");
    std::int64_t sz = 1;
    for (int i = 0; i < n; ++i) {
        if (sz > (std::int64_t(1) << 32) / N) throw size_error("GridSpec: N^n too large");
        sz *= N;
    }
}

std::int64_t GridSpec::size() const {
    std::int64_t sz = 1;
    for (int i = 0; i < n; ++i) sz *= N;
    return sz;
}

void GridSpec::index_to_coords(std::int64_t idx, std::int64_t* coords) const {
    for (int i = n - 1; i >= 0; --i) {
        coords[i] = idx % N;
        idx /= N;
    }
}

std::int64_t GridSpec::coords_to_index(const std::int64_t* coords) const {
    std::int64_t idx = 0;
    for (int i = 0; i < n; ++i) {
        std::int64_t c = ((coords[i] % N) + N) % N;
        idx = idx * N + c;
    }
    return idx;
}

GridSignal::GridSignal(GridSpec s, complex_t fill) : spec(s), values(std::size_t(s.size()), fill) {}

double GridSignal::norm_sq() const {
    double acc = 0.0;
    for (const auto& z : values) acc += std::norm(z);
    return acc;
}

double GridSignal::norm() const { return std::sqrt(norm_sq()); }

Multiplier::Multiplier(GridSpec s, complex_t fill) : spec(s), values(std::size_t(s.size()), fill) {}

double Multiplier::max_modulus() const {
    double m = 0.0;
    for (const auto& z : values) m = std::max(m, std::abs(z));
    return m;
}

void dft_1d_unscaled(std::vector<complex_t>& a, int sign) {
    const std::size_t n = a.size();
    if (n <= 1) return;
    if (std::has_single_bit(n)) {
        fft_pow2(a, sign);
    } else {
        fft_bluestein(a, sign);
    }
}

Multiplier forward_dft(const GridSignal& f) {
    Multiplier out(f.spec);
    out.values = f.values;
    for (int axis = 0; axis < f.spec.n; ++axis) transform_axis(f.spec, out.values, axis, -1);
    return out;
}

GridSignal inverse_dft(const Multiplier& F) {
    GridSignal out(F.spec);
    out.values = F.values;
    for (int axis = 0; axis < F.spec.n; ++axis) transform_axis(F.spec, out.values, axis, +1);
    const double scale = 1.0 / double(F.spec.size());
    for (auto& z : out.values) z *= scale;
    return out;
}

GridSignal apply_multiplier(const Multiplier& m, const GridSignal& f) {
    if (!(m.spec == f.spec)) throw dimension_error("apply_multiplier: grid specs differ");
    Multiplier F = forward_dft(f);
    for (std::size_t i = 0; i < F.values.size(); ++i) F.values[i] *= m.values[i];
    return inverse_dft(F);
}

std::string signal_to_json(const GridSignal& f) {
    nlohmann::json j;
    j["n"] = f.spec.n;
    j["N"] = f.spec.N;
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& z : f.values) vals.push_back({z.real(), z.imag()});
    j["values"] = std::move(vals);
    return j.dump();
}

GridSignal signal_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    GridSpec spec(j.at("n").get<int>(), j.at("N").get<std::int64_t>());
    GridSignal f(spec);
    const auto& vals = j.at("values");
    if (std::int64_t(vals.size()) != spec.size())
        throw dimension_error("signal_from_json: value count does not match N^n");
    for (std::size_t i = 0; i < vals.size(); ++i)
        f.values[i] = complex_t(vals[i].at(0).get<double>(), vals[i].at(1).get<double>());
    return f;
}

void write_signal_binary(const GridSignal& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw size_error("write_signal_binary: cannot open " + path);
    std::uint32_t n = std::uint32_t(f.spec.n), N = std::uint32_t(f.spec.N);
    out.write(reinterpret_cast<const char*>(&n), sizeof n);
    out.write(reinterpret_cast<const char*>(&N), sizeof N);
    for (const auto& z : f.values) {
        double re = z.real(), im = z.imag();
        out.write(reinterpret_cast<const char*>(&re), sizeof re);
        out.write(reinterpret_cast<const char*>(&im), sizeof im);
    }
}

GridSignal read_signal_binary(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw size_error("read_signal_binary: cannot open " + path);
    std::uint32_t n = 0, N = 0;
    in.read(reinterpret_cast<char*>(&n), sizeof n);
    in.read(reinterpret_cast<char*>(&N), sizeof N);
    GridSpec spec(int(n), std::int64_t(N));
    GridSignal f(spec);
    for (auto& z : f.values) {
        double re = 0, im = 0;
        in.read(reinterpret_cast<char*>(&re), sizeof re);
        in.read(reinterpret_cast<char*>(&im), sizeof im);
        z = complex_t(re, im);
    }
    if (!in) throw size_error("read_signal_binary: truncated file " + path);
    return f;
}

}  // namespace mflab
