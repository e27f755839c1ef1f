#include "rdct/transforms.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "rdct/flow_graph.hpp"

namespace rdct {
namespace {

constexpr double kTight = 1e-12;

oracle::Vec to_array(const Vector8& v) {
  oracle::Vec a;
  for (int i = 0; i < 8; ++i) a[i] = v[i];
  return a;
}

oracle::Mat to_array(const Matrix8& m) {
  oracle::Mat a;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) a[i][j] = m(i, j);
  return a;
}

TEST(ExactDct, DcRowIsConstant) {
  const Matrix8 c = exact_dct_matrix();
  for (int n = 0; n < 8; ++n) EXPECT_NEAR(c(0, n), 0.35355339059327373, kTight);
}

TEST(ExactDct, IsOrthonormal) {
  EXPECT_LT(orthogonality_residual(exact_dct_matrix()), kTight);
}

TEST(ExactDct, MatchesExtendedPrecisionOracle) {
  const Matrix8 c = exact_dct_matrix();
  // 0.5 cos(pi/16) evaluated to 40 digits.
  EXPECT_NEAR(c(1, 0), 0.490392640201615224563, 1e-15);
  for (int m = 0; m < 8; ++m)
    for (int n = 0; n < 8; ++n) EXPECT_NEAR(c(m, n), double(oracle::dct_entry(m, n)), 1e-15);
}

TEST(RoundHalfAway, TiesGoAwayFromZero) {
  EXPECT_EQ(round_half_away(0.5), 1);
  EXPECT_EQ(round_half_away(-0.5), -1);
  EXPECT_EQ(round_half_away(2.5), 3);
  EXPECT_EQ(round_half_away(-2.5), -3);
  EXPECT_EQ(round_half_away(0.49999999), 0);
  EXPECT_EQ(round_half_away(0.9807852804032304), 1);
}

TEST(RoundHalfAway, RejectsNonFinite) {
  EXPECT_THROW(round_half_away(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
  EXPECT_THROW(round_half_away(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST(C0, MatchesDisplayedMatrix) {
  const Matrix8 c0 = c0_matrix();
  for (int m = 0; m < 8; ++m)
    for (int n = 0; n < 8; ++n) EXPECT_EQ(c0(m, n), oracle::kDisplayedC0[m][n]) << m << "," << n;
}

TEST(C0, EqualsRoundedDoubledDct) {
  const Matrix8 c0 = c0_matrix();
  const Matrix8 c = exact_dct_matrix();
  for (int m = 0; m < 8; ++m)
    for (int n = 0; n < 8; ++n) EXPECT_EQ(c0(m, n), double(round_half_away(2.0 * c(m, n))));
}

TEST(C0, ConstructionAcceptsOtherRoundingRules) {
  // floor(2C) is a legal construction; only checks the hook is wired.
  const Matrix8 floored = round_off_matrix(2.0, [](double x) {
    return static_cast<std::int64_t>(std::floor(x));
  });
  EXPECT_EQ(floored(0, 0), 0.0);
  EXPECT_EQ(floored(1, 7), -1.0);
}

TEST(Orthogonalizer, MatchesClosedForm) {
  const Vector8 d = orthogonalizer_diagonal();
  const double a = 1.0 / (2.0 * std::sqrt(2.0));
  const double b = 1.0 / std::sqrt(6.0);
  const Vector8 expected = (Vector8() << a, b, 0.5, b, a, b, 0.5, b).finished();
  EXPECT_LT((d - expected).cwiseAbs().maxCoeff(), kTight);
}

TEST(Orthogonalizer, EqualsInverseRowNorms) {
  const Vector8 d = orthogonalizer_diagonal();
  for (int k = 0; k < 8; ++k) {
    double sq = 0.0;
    for (int n = 0; n < 8; ++n) sq += oracle::kDisplayedC0[k][n] * oracle::kDisplayedC0[k][n];
    EXPECT_NEAR(d[k], 1.0 / std::sqrt(sq), kTight);
  }
}

TEST(Orthogonalizer, RejectsNonOrthogonalKernel) {
  Matrix8 bad = c0_matrix();
  bad(6, 0) = 1.0;
  EXPECT_THROW(orthogonalizer_diagonal(bad), std::domain_error);
}

TEST(Proposed, IsOrthogonalWithUnitRows) {
  const TransformSpec p = proposed_transform();
  EXPECT_LT(orthogonality_residual(p.exact_matrix), kTight);
  for (int m = 0; m < 8; ++m) EXPECT_NEAR(p.exact_matrix.row(m).norm(), 1.0, kTight);
  EXPECT_LT((p.exact_matrix.row(0) - exact_dct_matrix().row(0)).cwiseAbs().maxCoeff(), kTight);
  EXPECT_NEAR(p.exact_matrix(1, 0), 0.408248290463863016, kTight);
  EXPECT_NO_THROW(validate(p));
}

TEST(Coarse, IsHalfC0AndNotOrthogonal) {
  const TransformSpec c = coarse_transform();
  EXPECT_EQ(c.exact_matrix(0, 0), 0.5);
  EXPECT_EQ(c.exact_matrix, Matrix8(0.5 * c0_matrix()));
  EXPECT_FALSE(is_orthogonal(c.exact_matrix));
}

TEST(FrobeniusScale, RoundsToReportedValue) {
  const double s = frobenius_optimal_scale();
  EXPECT_EQ(std::round(s * 1e4) / 1e4, 0.3922);
  EXPECT_NEAR(s, 0.39215985171747997632, 1e-15);
}

TEST(FrobeniusScale, SelfMatchIsOne) {
  const Matrix8 c = exact_dct_matrix();
  EXPECT_NEAR(frobenius_optimal_scale(c, c), 1.0, kTight);
}

TEST(FrobeniusScale, AgreesWithGoldenSectionSearch) {
  const Matrix8 c0 = c0_matrix();
  const Matrix8 c = exact_dct_matrix();
  const double numeric = oracle::golden_section_min(
      [&](double a) { return (a * c0 - c).squaredNorm(); }, 0.0, 1.0);
  EXPECT_NEAR(frobenius_optimal_scale(), numeric, 1e-8);
}

TEST(Sdct, KernelRows) {
  const TransformSpec s = sdct_transform();
  const Matrix8& k = *s.integer_kernel;
  for (int n = 0; n < 8; ++n) EXPECT_EQ(k(0, n), 1.0);
  const double row1[] = {1, 1, 1, 1, -1, -1, -1, -1};
  for (int n = 0; n < 8; ++n) EXPECT_EQ(k(1, n), row1[n]);
  for (int m = 0; m < 8; ++m)
    for (int n = 0; n < 8; ++n)
      EXPECT_EQ(k(m, n), oracle::dct_entry(m, n) > 0 ? 1.0 : -1.0);
  EXPECT_LT((s.exact_matrix - k / (2.0 * std::sqrt(2.0))).cwiseAbs().maxCoeff(), kTight);
}

TEST(Validate, RejectsBrokenSpecs) {
  TransformSpec s = proposed_transform();
  s.exact_matrix(3, 3) += 1e-6;
  EXPECT_THROW(validate(s), std::invalid_argument);

  s = proposed_transform();
  (*s.integer_kernel)(0, 0) = 2.0;
  EXPECT_THROW(validate(s), std::invalid_argument);

  s = dct_transform();
  s.exact_matrix(0, 0) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(validate(s), std::invalid_argument);
}

TEST(FastForward, KnownVectors) {
  const Vector8 ones = Vector8::Ones();
  const Vector8 expected_ones = (Vector8() << 8, 0, 0, 0, 0, 0, 0, 0).finished();
  EXPECT_EQ(fast_forward(ones), expected_ones);
  const Vector8 e0 = Vector8::Unit(0);
  const Vector8 col0 = (Vector8() << 1, 1, 1, 1, 1, 1, 0, 0).finished();
  EXPECT_EQ(fast_forward(e0), col0);
}

TEST(FastForward, EqualsDenseProductOnIntegers) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-255, 255);
  for (int trial = 0; trial < 1000; ++trial) {
    oracle::Vec x;
    for (auto& v : x) v = dist(rng);
    const Vector8 got = fast_forward(Eigen::Map<const Vector8>(x.data()));
    EXPECT_EQ(to_array(got), oracle::dense_apply(oracle::kDisplayedC0, x));
  }
}

TEST(FastForward, IsLinear) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(-10.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    Vector8 x, y;
    for (int i = 0; i < 8; ++i) {
      x[i] = dist(rng);
      y[i] = dist(rng);
    }
    const double a = dist(rng), b = dist(rng);
    const Vector8 lhs = fast_forward(a * x + b * y);
    const Vector8 rhs = a * fast_forward(x) + b * fast_forward(y);
    EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(FastInverse, FirstBasisVectorGivesFirstRowOfTranspose) {
  const Vector8 expected = (Vector8() << 1, 1, 1, 1, 1, 1, 1, 1).finished();
  EXPECT_EQ(fast_inverse(Vector8::Unit(0)), expected);
  const Vector8 col1 = (Vector8() << 1, 1, 1, 0, 0, -1, -1, -1).finished();
  EXPECT_EQ(fast_inverse(Vector8::Unit(1)), col1);
}

TEST(FastInverse, EqualsDenseTransposeOnIntegers) {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> dist(-2040, 2040);
  for (int trial = 0; trial < 1000; ++trial) {
    oracle::Vec x;
    for (auto& v : x) v = dist(rng);
    const Vector8 got = fast_inverse(Eigen::Map<const Vector8>(x.data()));
    EXPECT_EQ(to_array(got), oracle::dense_apply_transposed(oracle::kDisplayedC0, x));
  }
}

TEST(FastInverse, RoundTripsWithSquaredDiagonal) {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> dist(-255.0, 255.0);
  const Vector8 d2 = orthogonalizer_diagonal().array().square();
  for (int trial = 0; trial < 200; ++trial) {
    Vector8 x;
    for (auto& v : x) v = dist(rng);
    const Vector8 back = fast_inverse(d2.asDiagonal() * fast_forward(x));
    EXPECT_LT((back - x).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(SignedDctGraph, MatchesDenseKernelBothWays) {
  const oracle::Mat k = to_array(signed_dct_kernel());
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> dist(-255, 255);
  for (int trial = 0; trial < 500; ++trial) {
    graph::Samples<double> x;
    for (auto& v : x) v = dist(rng);
    EXPECT_EQ(graph::signed_dct_forward(x), oracle::dense_apply(k, x));
    EXPECT_EQ(graph::signed_dct_inverse(x), oracle::dense_apply_transposed(k, x));
  }
}

TEST(AuditCost, BuiltInGraphs) {
  EXPECT_EQ(audit_cost(proposed_transform()), (ArithmeticCost{22, 0, 0}));
  EXPECT_EQ(audit_cost(proposed_transform()).total(), 22);
  EXPECT_EQ(audit_cost(sdct_transform()), (ArithmeticCost{24, 0, 0}));
  EXPECT_EQ(audit_cost(coarse_transform()), (ArithmeticCost{22, 0, 0}));
}

TEST(AuditCost, InverseGraphsCostTheSame) {
  ArithmeticCost fwd, inv, sfwd, sinv;
  graph::Samples<Counted> x;
  for (int i = 0; i < 8; ++i) x[i] = Counted(i + 1.0, &inv);
  graph::round_off_inverse(x);
  for (int i = 0; i < 8; ++i) x[i] = Counted(i + 1.0, &sinv);
  graph::signed_dct_inverse(x);
  EXPECT_EQ(inv, (ArithmeticCost{22, 0, 0}));
  EXPECT_EQ(sinv, (ArithmeticCost{24, 0, 0}));
}

TEST(AuditCost, DenseFallback) {
  TransformSpec id;
  id.name = "identity";
  id.exact_matrix = Matrix8::Identity();
  id.integer_kernel = Matrix8::Identity();
  EXPECT_EQ(audit_cost(id), (ArithmeticCost{0, 0, 0}));

  TransformSpec c0;
  c0.name = "c0-dense";
  c0.integer_kernel = c0_matrix();
  c0.exact_matrix = c0_matrix();
  // 8 + 6 + 4 + 6 + 8 + 6 + 4 + 6 nonzeros per row, one fewer add each.
  EXPECT_EQ(audit_cost(c0).additions, 40);
}

TEST(AuditCost, RequiresKernel) {
  EXPECT_THROW(audit_cost(dct_transform()), std::invalid_argument);
}

TEST(Comparator, ParsesAndFactors) {
  std::istringstream in(
      "# identity comparator\n"
      "name identity\n"
      "cost 0 0 0\n"
      "1 0 0 0 0 0 0 0\n0 1 0 0 0 0 0 0\n0 0 1 0 0 0 0 0\n0 0 0 1 0 0 0 0\n"
      "0 0 0 0 1 0 0 0\n0 0 0 0 0 1 0 0\n0 0 0 0 0 0 1 0\n0 0 0 0 0 0 0 1  # last\n");
  const TransformSpec s = parse_comparator(in);
  EXPECT_EQ(s.name, "identity");
  EXPECT_EQ(s.exact_matrix, Matrix8(Matrix8::Identity()));
  ASSERT_TRUE(s.integer_kernel.has_value());
  EXPECT_EQ(audit_cost(s), (ArithmeticCost{0, 0, 0}));
}

TEST(Comparator, RoundTripsProposed) {
  std::stringstream io;
  write_comparator(io, proposed_transform());
  const TransformSpec back = parse_comparator(io);
  EXPECT_LT((back.exact_matrix - proposed_transform().exact_matrix).cwiseAbs().maxCoeff(), 1e-9);
  EXPECT_EQ(back.graph, KernelGraph::kRoundOff);
  EXPECT_EQ(back.declared_cost, (ArithmeticCost{22, 0, 0}));
  EXPECT_EQ(audit_cost(back), (ArithmeticCost{22, 0, 0}));
}

TEST(Comparator, RejectsMalformedFiles) {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_comparator(in);
  };
  std::string seven_rows = "name x\ncost 1 2 3\n";
  for (int i = 0; i < 7; ++i) seven_rows += "1 1 1 1 1 1 1 1\n";
  EXPECT_THROW(parse(seven_rows), std::runtime_error);
  EXPECT_THROW(parse("cost 1 2 3\nname x\n"), std::runtime_error);
  std::string short_row = "name x\ncost 0 0 0\n1 1 1 1 1 1 1\n";
  EXPECT_THROW(parse(short_row), std::runtime_error);
  std::string nan_entry = "name x\ncost 0 0 0\n";
  for (int i = 0; i < 8; ++i) nan_entry += i == 3 ? "1 1 nan 1 1 1 1 1\n" : "1 1 1 1 1 1 1 1\n";
  EXPECT_THROW(parse(nan_entry), std::runtime_error);
  std::string junk = "name x\ncost 0 0 0\n";
  for (int i = 0; i < 8; ++i) junk += "1 1 1x 1 1 1 1 1\n";
  EXPECT_THROW(parse(junk), std::runtime_error);
  EXPECT_THROW(load_comparator("/nonexistent/file.mat"), std::runtime_error);
}

}  // namespace
}  // namespace rdct
