#include "gpw/lattice.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <numbers>
#include <sstream>

namespace gpw {
namespace {

constexpr double pi = std::numbers::pi;

template <class Multiplier>
Signal apply_symbol(const Torus& torus, const Signal& f, Multiplier&& m) {
    Eigen::VectorXcd coeffs = torus.dft(f);
    const Eigen::VectorXd& symbols = torus.symbol_grid();
    for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
        coeffs[i] *= m(symbols[i]);
    }
    return torus.idft(coeffs);
}

} // namespace

Torus::Torus(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) {
        raise(ErrorCode::InvalidArgument, "torus needs at least one axis");
    }
    total_ = 1;
    for (int n : dims_) {
        if (n < 3) {
            raise(ErrorCode::DimensionTooSmall,
                  "every torus axis must have length at least 3, got " + std::to_string(n));
        }
        total_ *= n;
    }
    symbols_.resize(total_);
    for (Eigen::Index i = 0; i < total_; ++i) {
        symbols_[i] = symbol(coordinates(i));
    }
}

Eigen::Index Torus::flat_index(const std::vector<int>& coords) const {
    if (coords.size() != dims_.size()) {
        raise(ErrorCode::InvalidArgument, "coordinate count does not match torus dimension");
    }
    Eigen::Index flat = 0;
    for (std::size_t j = 0; j < dims_.size(); ++j) {
        int n = dims_[j];
        int c = coords[j] % n;
        if (c < 0) {
            c += n;
        }
        flat = flat * n + c;
    }
    return flat;
}

std::vector<int> Torus::coordinates(Eigen::Index flat) const {
    if (flat < 0 || flat >= total_) {
        raise(ErrorCode::InvalidVertex,
              "site index " + std::to_string(flat) + " is outside the torus");
    }
    std::vector<int> coords(dims_.size());
    for (std::size_t j = dims_.size(); j-- > 0;) {
        coords[j] = static_cast<int>(flat % dims_[j]);
        flat /= dims_[j];
    }
    return coords;
}

double Torus::symbol(const std::vector<int>& freq) const {
    if (freq.size() != dims_.size()) {
        raise(ErrorCode::InvalidArgument, "frequency count does not match torus dimension");
    }
    double value = 0.0;
    for (std::size_t j = 0; j < dims_.size(); ++j) {
        double s = std::sin(pi * freq[j] / dims_[j]);
        value += 4.0 * s * s;
    }
    return value;
}

Graph Torus::graph() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(total_) * dims_.size());
    for (Eigen::Index flat = 0; flat < total_; ++flat) {
        std::vector<int> coords = coordinates(flat);
        for (std::size_t j = 0; j < dims_.size(); ++j) {
            std::vector<int> step = coords;
            step[j] = (coords[j] + 1) % dims_[j];
            int u = static_cast<int>(flat);
            int v = static_cast<int>(flat_index(step));
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    return Graph(total_, std::move(edges));
}

void Torus::check_size(const Signal& f) const {
    if (f.size() != total_) {
        std::ostringstream msg;
        msg << "signal has " << f.size() << " entries but the torus has " << total_
            << " sites";
        raise(ErrorCode::GraphMismatch, msg.str());
    }
}

Eigen::VectorXcd Torus::dft(const Signal& f) const {
    check_size(f);
    Eigen::VectorXcd data = f;
    Eigen::FFT<double> fft;
    Eigen::Index stride = total_;
    for (std::size_t axis = 0; axis < dims_.size(); ++axis) {
        const int n = dims_[axis];
        stride /= n;
        const Eigen::Index block = stride * n;
        Eigen::VectorXcd line(n);
        Eigen::VectorXcd out(n);
        for (Eigen::Index base = 0; base < total_; base += block) {
            for (Eigen::Index off = 0; off < stride; ++off) {
                for (int i = 0; i < n; ++i) {
                    line[i] = data[base + off + i * stride];
                }
                fft.fwd(out, line);
                for (int i = 0; i < n; ++i) {
                    data[base + off + i * stride] = out[i];
                }
            }
        }
    }
    return data;
}

Signal Torus::idft(const Eigen::VectorXcd& coeffs) const {
    check_size(coeffs);
    Eigen::VectorXcd data = coeffs;
    Eigen::FFT<double> fft;
    Eigen::Index stride = total_;
    for (std::size_t axis = 0; axis < dims_.size(); ++axis) {
        const int n = dims_[axis];
        stride /= n;
        const Eigen::Index block = stride * n;
        Eigen::VectorXcd line(n);
        Eigen::VectorXcd out(n);
        for (Eigen::Index base = 0; base < total_; base += block) {
            for (Eigen::Index off = 0; off < stride; ++off) {
                for (int i = 0; i < n; ++i) {
                    line[i] = data[base + off + i * stride];
                }
                fft.inv(out, line);
                for (int i = 0; i < n; ++i) {
                    data[base + off + i * stride] = out[i];
                }
            }
        }
    }
    return data;
}

Signal fft_pw_project(const Torus& torus, const Signal& f, Bandwidth omega) {
    double cut = omega.value() + pw_cutoff_tol;
    return apply_symbol(torus, f,
                        [cut](double sigma) { return sigma <= cut ? 1.0 : 0.0; });
}

Signal fft_filter(const Torus& torus, const Signal& f, Bandwidth omega, int m,
                  const FilterKernel& kernel) {
    if (m < 1) {
        raise(ErrorCode::InvalidArgument, "reproducing filter order must be at least 1");
    }
    if (kernel.order() < m + 2) {
        std::ostringstream msg;
        msg << "reproducing filter of order " << m << " needs kernel order at least "
            << (m + 2) << ", got " << kernel.order();
        raise(ErrorCode::OrderMismatch, msg.str());
    }
    double w = omega.value();
    if (!(w > 0.0)) {
        raise(ErrorCode::InvalidArgument, "filtering needs a strictly positive bandwidth");
    }
    return apply_symbol(torus, f, [&kernel, m, w](double sigma) {
        return p_multiplier(kernel, m, w, sigma);
    });
}

Signal fft_schrodinger(const Torus& torus, const Signal& f, double t) {
    return apply_symbol(torus, f,
                        [t](double sigma) { return std::polar(1.0, t * sigma); });
}

DownsamplePattern parse_pattern(const std::string& name) {
    if (name == "checker-complement") {
        return DownsamplePattern::CheckerComplement;
    }
    if (name == "alternate-rows") {
        return DownsamplePattern::AlternateRows;
    }
    if (name == "third-rows") {
        return DownsamplePattern::ThirdRows;
    }
    raise(ErrorCode::InvalidArgument,
          "unknown pattern '" + name +
              "'; expected checker-complement, alternate-rows, or third-rows");
}

const char* pattern_name(DownsamplePattern pattern) {
    switch (pattern) {
    case DownsamplePattern::CheckerComplement:
        return "checker-complement";
    case DownsamplePattern::AlternateRows:
        return "alternate-rows";
    case DownsamplePattern::ThirdRows:
        return "third-rows";
    }
    return "unknown";
}

std::vector<int> downsample_set(const Torus& torus, DownsamplePattern pattern) {
    const auto& dims = torus.dims();
    if (pattern == DownsamplePattern::CheckerComplement) {
        for (int n : dims) {
            if (n % 2 != 0) {
                raise(ErrorCode::PatternMismatch,
                      "checker-complement needs every axis length even");
            }
        }
    } else if (pattern == DownsamplePattern::AlternateRows) {
        if (dims.back() % 2 != 0) {
            raise(ErrorCode::PatternMismatch, "alternate-rows needs an even last axis");
        }
    } else if (dims.back() % 3 != 0) {
        raise(ErrorCode::PatternMismatch,
              "third-rows needs the last axis divisible by 3");
    }

    std::vector<int> kept;
    for (Eigen::Index flat = 0; flat < torus.site_count(); ++flat) {
        std::vector<int> coords = torus.coordinates(flat);
        bool keep = false;
        switch (pattern) {
        case DownsamplePattern::CheckerComplement: {
            bool all_even = true;
            for (int c : coords) {
                all_even = all_even && c % 2 == 0;
            }
            keep = !all_even;
            break;
        }
        case DownsamplePattern::AlternateRows:
            keep = coords.back() % 2 == 0;
            break;
        case DownsamplePattern::ThirdRows:
            keep = coords.back() % 3 == 0;
            break;
        }
        if (keep) {
            kept.push_back(static_cast<int>(flat));
        }
    }
    return kept;
}

} // namespace gpw
