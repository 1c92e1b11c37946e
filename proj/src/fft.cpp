#include "bvf/detail/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace bvf::detail {
namespace {

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct FftwFree {
    void operator()(void* p) const noexcept { fftw_free(p); }
};

using ComplexBuffer = std::unique_ptr<fftw_complex[], FftwFree>;

ComplexBuffer alloc_complex(std::size_t n) {
    auto* p = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
    if (p == nullptr) throw std::bad_alloc();
    return ComplexBuffer(p);
}

class Plan {
public:
    Plan(std::size_t n, fftw_complex* in, fftw_complex* out, int sign) {
        std::lock_guard lock(planner_mutex());
        plan_ = fftw_plan_dft_1d(static_cast<int>(n), in, out, sign, FFTW_ESTIMATE);
        if (plan_ == nullptr) throw std::runtime_error("FFTW planning failed");
    }
    Plan(const Plan&) = delete;
    Plan& operator=(const Plan&) = delete;
    ~Plan() {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan_);
    }
    void execute() const { fftw_execute(plan_); }

private:
    fftw_plan plan_ = nullptr;
};

// In-place transform of a buffer of length n.
void transform(fftw_complex* buf, std::size_t n, int sign) {
    Plan plan(n, buf, buf, sign);
    plan.execute();
}

}  // namespace

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

std::vector<cplx> dft(std::span<const cplx> x, bool inverse) {
    const std::size_t n = x.size();
    if (n == 0) return {};
    auto buf = alloc_complex(n);
    std::memcpy(buf.get(), x.data(), sizeof(fftw_complex) * n);
    transform(buf.get(), n, inverse ? FFTW_BACKWARD : FFTW_FORWARD);
    std::vector<cplx> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = {buf[i][0], buf[i][1]};
    return out;
}

std::vector<double> convolve_centered(std::span<const double> signal,
                                      std::span<const double> kernel) {
    const std::size_t n = signal.size();
    if (kernel.size() % 2 == 0) throw std::invalid_argument("centered kernel must have odd length");
    const std::size_t K = kernel.size() / 2;
    if (n == 0) return {};
    const std::size_t N = next_pow2(n + kernel.size() - 1);

    auto a = alloc_complex(N);
    auto b = alloc_complex(N);
    for (std::size_t i = 0; i < N; ++i) {
        a[i][0] = i < n ? signal[i] : 0.0;
        a[i][1] = 0.0;
        b[i][0] = i < kernel.size() ? kernel[i] : 0.0;
        b[i][1] = 0.0;
    }
    transform(a.get(), N, FFTW_FORWARD);
    transform(b.get(), N, FFTW_FORWARD);
    for (std::size_t i = 0; i < N; ++i) {
        const double re = a[i][0] * b[i][0] - a[i][1] * b[i][1];
        const double im = a[i][0] * b[i][1] + a[i][1] * b[i][0];
        a[i][0] = re;
        a[i][1] = im;
    }
    transform(a.get(), N, FFTW_BACKWARD);
    std::vector<double> out(n);
    const double scale = 1.0 / static_cast<double>(N);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i + K][0] * scale;
    return out;
}

std::vector<cplx> chirp_z(std::span<const cplx> x, double x0, double h, double t0, double dt,
                          std::size_t m) {
    const std::size_t n = x.size();
    if (n == 0 || m == 0) return std::vector<cplx>(m);
    // exp(-i t_k x_j) = exp(-i t_k x0) exp(-i t0 j h) exp(-i dt h k j),
    // k j = (k^2 + j^2 - (k-j)^2)/2.
    const double beta = dt * h;
    const std::size_t L = next_pow2(n + m - 1);
    auto chirp = [beta](std::size_t q) {
        const double qq = static_cast<double>(q);
        return std::polar(1.0, -0.5 * beta * qq * qq);
    };

    auto a = alloc_complex(L);
    auto b = alloc_complex(L);
    for (std::size_t i = 0; i < L; ++i) a[i][0] = a[i][1] = b[i][0] = b[i][1] = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const cplx v = x[j] * std::polar(1.0, -t0 * h * static_cast<double>(j)) * chirp(j);
        a[j][0] = v.real();
        a[j][1] = v.imag();
    }
    // b_q = conj(chirp(q)) for q in (-(n-1), m-1), stored circularly.
    for (std::size_t q = 0; q < m; ++q) {
        const cplx c = std::conj(chirp(q));
        b[q][0] = c.real();
        b[q][1] = c.imag();
    }
    for (std::size_t q = 1; q < n; ++q) {
        const cplx c = std::conj(chirp(q));
        b[L - q][0] = c.real();
        b[L - q][1] = c.imag();
    }
    transform(a.get(), L, FFTW_FORWARD);
    transform(b.get(), L, FFTW_FORWARD);
    for (std::size_t i = 0; i < L; ++i) {
        const double re = a[i][0] * b[i][0] - a[i][1] * b[i][1];
        const double im = a[i][0] * b[i][1] + a[i][1] * b[i][0];
        a[i][0] = re;
        a[i][1] = im;
    }
    transform(a.get(), L, FFTW_BACKWARD);

    std::vector<cplx> out(m);
    const double scale = 1.0 / static_cast<double>(L);
    for (std::size_t k = 0; k < m; ++k) {
        const double tk = t0 + dt * static_cast<double>(k);
        out[k] = cplx(a[k][0], a[k][1]) * scale * chirp(k) * std::polar(1.0, -tk * x0);
    }
    return out;
}

}  // namespace bvf::detail
