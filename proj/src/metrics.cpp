// Copyright 2026 The rdct Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rdct/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "rdct/codec.hpp"
#include "rdct/format.hpp"

namespace rdct {

namespace {

void require_same_shape(const GrayImage& a, const GrayImage& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw std::invalid_argument("image dimensions differ");
  }
}

// Summed-area table with a zero border row and column.
using Integral = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <typename F>
Integral integral(int h, int w, F&& value) {
  Integral s = Integral::Zero(h + 1, w + 1);
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < w; ++j) {
      s(i + 1, j + 1) = value(i, j) + s(i, j + 1) + s(i + 1, j) - s(i, j);
    }
  }
  return s;
}

std::int64_t window_sum(const Integral& s, int i, int j, int n) {
  return s(i + n, j + n) - s(i, j + n) - s(i + n, j) + s(i, j);
}

// Sum that does not depend on the order values were produced in.
double order_free_sum(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum;
}

}  // namespace

double mse(const GrayImage& a, const GrayImage& b) {
  require_same_shape(a, b);
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  if (pa.empty()) throw std::invalid_argument("mse of empty images");
  std::int64_t sum = 0;
  for (std::size_t k = 0; k < pa.size(); ++k) {
    const int d = int(pa[k]) - int(pb[k]);
    sum += d * d;
  }
  return static_cast<double>(sum) / static_cast<double>(pa.size());
}

double psnr_from_mse(double mse) {
  if (mse == 0.0) return kInfinitePsnr;
  return 10.0 * std::log10(kPsnrPeak * kPsnrPeak / mse);
}

double psnr(const GrayImage& a, const GrayImage& b) { return psnr_from_mse(mse(a, b)); }

double uqi(const GrayImage& a, const GrayImage& b, int window) {
  require_same_shape(a, b);
  if (window < 1 || a.width() < window || a.height() < window) {
    throw std::invalid_argument("uqi: image smaller than window");
  }
  const int h = a.height();
  const int w = a.width();
  const Integral sa = integral(h, w, [&](int i, int j) { return std::int64_t{a(i, j)}; });
  const Integral sb = integral(h, w, [&](int i, int j) { return std::int64_t{b(i, j)}; });
  const Integral saa = integral(h, w, [&](int i, int j) { return std::int64_t{a(i, j)} * a(i, j); });
  const Integral sbb = integral(h, w, [&](int i, int j) { return std::int64_t{b(i, j)} * b(i, j); });
  const Integral sab = integral(h, w, [&](int i, int j) { return std::int64_t{a(i, j)} * b(i, j); });

  // All terms below are scaled by window area powers so they stay integral.
  const std::int64_t n = std::int64_t{window} * window;
  double total = 0.0;
  for (int i = 0; i + window <= h; ++i) {
    for (int j = 0; j + window <= w; ++j) {
      const std::int64_t x = window_sum(sa, i, j, window);
      const std::int64_t y = window_sum(sb, i, j, window);
      const std::int64_t cov = n * window_sum(sab, i, j, window) - x * y;
      const std::int64_t var = n * (window_sum(saa, i, j, window) + window_sum(sbb, i, j, window)) -
                               x * x - y * y;
      const std::int64_t lum = x * x + y * y;
      double q = 1.0;
      if (var != 0 && lum != 0) {
        q = (4.0 * static_cast<double>(cov) * static_cast<double>(x * y)) /
            (static_cast<double>(var) * static_cast<double>(lum));
      } else if (var == 0 && lum != 0) {
        q = 2.0 * static_cast<double>(x * y) / static_cast<double>(lum);
      } else if (var != 0 && lum == 0) {
        q = 2.0 * static_cast<double>(cov) / static_cast<double>(var);
      }
      total += q;
    }
  }
  const double windows = double(h - window + 1) * double(w - window + 1);
  return total / windows;
}

QualityScores score(const GrayImage& reference, const GrayImage& test) {
  QualityScores s;
  s.mse = mse(reference, test);
  s.psnr = psnr_from_mse(s.mse);
  s.uqi = uqi(reference, test);
  return s;
}

double ape(double value, double reference) {
  if (reference == 0.0) throw std::domain_error("ape: zero reference");
  return 100.0 * std::abs(value - reference) / std::abs(reference);
}

std::vector<CompressionReport> corpus_sweep(std::span<const GrayImage> images,
                                            std::span<const TransformSpec> specs, int r_min,
                                            int r_max, unsigned threads) {
  if (images.empty()) throw std::invalid_argument("corpus_sweep: empty corpus");
  if (r_min > r_max) throw std::invalid_argument("corpus_sweep: r_min > r_max");
  RetentionPolicy{r_min};
  RetentionPolicy{r_max};
  for (std::size_t k = 0; k < images.size(); ++k) {
    try {
      require_block_aligned(images[k]);
    } catch (const std::exception& e) {
      throw std::invalid_argument("corpus image #" + std::to_string(k) + ": " + e.what());
    }
  }

  const Matrix8 dct = exact_dct_matrix();
  std::vector<TransformSpec> all(specs.begin(), specs.end());
  auto is_dct = [&](const TransformSpec& s) { return s.exact_matrix == dct; };
  auto ref_it = std::find_if(all.begin(), all.end(), is_dct);
  if (ref_it == all.end()) {
    all.insert(all.begin(), dct_transform());
    ref_it = all.begin();
  }
  const std::size_t ref = static_cast<std::size_t>(ref_it - all.begin());

  const std::size_t n_r = static_cast<std::size_t>(r_max - r_min + 1);
  const std::size_t n_img = images.size();
  // scores[(spec * n_r + r) * n_img + image]
  std::vector<QualityScores> scores(all.size() * n_r * n_img);

  const std::size_t jobs = all.size() * n_img;
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t job; (job = next.fetch_add(1)) < jobs;) {
      const std::size_t s = job / n_img;
      const std::size_t k = job % n_img;
      try {
        const TransformedImage coeffs(images[k], all[s]);
        for (std::size_t ri = 0; ri < n_r; ++ri) {
          const GrayImage out = coeffs.compress(RetentionPolicy(r_min + static_cast<int>(ri)));
          scores[(s * n_r + ri) * n_img + k] = score(images[k], out);
        }
      } catch (const std::exception& e) {
        std::lock_guard lock(error_mutex);
        if (!error) {
          error = std::make_exception_ptr(std::runtime_error(
              "corpus image #" + std::to_string(k) + ", transform '" + all[s].name + "': " + e.what()));
        }
        next = jobs;
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, jobs));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (error) std::rethrow_exception(error);

  auto average = [&](std::size_t s, std::size_t ri, double QualityScores::*field) {
    std::vector<double> v(n_img);
    for (std::size_t k = 0; k < n_img; ++k) v[k] = scores[(s * n_r + ri) * n_img + k].*field;
    return order_free_sum(std::move(v)) / static_cast<double>(n_img);
  };

  std::vector<CompressionReport> out;
  out.reserve(all.size() * n_r);
  for (std::size_t s = 0; s < all.size(); ++s) {
    for (std::size_t ri = 0; ri < n_r; ++ri) {
      CompressionReport rep;
      rep.transform = all[s].name;
      rep.r = r_min + static_cast<int>(ri);
      rep.avg_mse = average(s, ri, &QualityScores::mse);
      rep.avg_psnr = average(s, ri, &QualityScores::psnr);
      rep.avg_uqi = average(s, ri, &QualityScores::uqi);
      const double ref_mse = average(ref, ri, &QualityScores::mse);
      const double ref_uqi = average(ref, ri, &QualityScores::uqi);
      rep.ape_mse = ref_mse == 0.0 ? std::nan("") : ape(rep.avg_mse, ref_mse);
      rep.ape_uqi = ref_uqi == 0.0 ? std::nan("") : ape(rep.avg_uqi, ref_uqi);
      out.push_back(std::move(rep));
    }
  }
  return out;
}

void write_report_csv(std::ostream& out, std::span<const CompressionReport> reports) {
  out << "transform,r,avg_mse,avg_psnr,avg_uqi,ape_mse,ape_uqi\n";
  for (const auto& r : reports) {
    out << r.transform << ',' << r.r << ',' << format_real(r.avg_mse) << ','
        << format_real(r.avg_psnr) << ',' << format_real(r.avg_uqi) << ','
        << format_real(r.ape_mse) << ',' << format_real(r.ape_uqi) << '\n';
  }
}

}  // namespace rdct
