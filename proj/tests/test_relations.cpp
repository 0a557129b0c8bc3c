#include <gtest/gtest.h>

#include "oracles.hpp"
#include "snlkit/instances.hpp"
#include "snlkit/relations.hpp"

using namespace snlkit;

namespace {

Vector v(std::initializer_list<double> xs) {
  Vector out(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) out[i++] = x;
  return out;
}

Matrix rot90() { return (Matrix(2, 2) << 0, -1, 1, 0).finished(); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::CommandError;
}

bool flag(const CheckReport& r, const char* name) { return *r.value(name) != 0.0; }

}  // namespace

TEST(RelationFromMatrix, Examples) {
  const LinearRelation id = relation_from_matrix(Matrix::Identity(1, 1));
  EXPECT_TRUE(same_subspace(id.graph, span({v({1, 1})})));
  EXPECT_TRUE(is_monotone(relation_from_matrix(rot90())).passed());
  EXPECT_EQ(is_monotone(relation_from_matrix(-Matrix::Identity(2, 2))).status, Status::Fail);
  EXPECT_THROW(LinearRelation(2, Subspace(3)), Error);
}

TEST(IsMonotone, Examples) {
  EXPECT_EQ(is_monotone(LinearRelation(1, span({v({1, -1})}))).status, Status::Fail);
  EXPECT_TRUE(is_monotone(relation_from_matrix(Matrix::Zero(3, 3))).passed());
  // Agrees with the PSD test on M + M^T over random matrices.
  std::mt19937_64 rng(2);
  for (int i = 0; i < 50; ++i) {
    const Eigen::Index d = 1 + static_cast<Eigen::Index>(rng() % 5);
    Matrix m = Matrix::NullaryExpr(d, d, [&] { return std::normal_distribution<>()(rng); });
    if (i % 2 == 0) m = instances::random_monotone_matrix(d, rng);
    const double lam = Eigen::SelfAdjointEigenSolver<Matrix>(m + m.transpose()).eigenvalues().minCoeff();
    if (std::abs(lam) < 1e-6) continue;
    EXPECT_EQ(is_monotone(relation_from_matrix(m)).passed(), lam > 0) << m;
  }
}

TEST(Rho, Examples) {
  EXPECT_TRUE(same_subspace(rho(span({v({1, -1})})), span({v({1, 1})})));
  EXPECT_EQ(code_of([] { rho(Subspace(3)); }), ErrorCode::OddDimension);
  std::mt19937_64 rng(5);
  const SnlSpace p = make_product_space(3);
  for (int i = 0; i < 20; ++i) {
    const Subspace s = instances::random_subspace(6, 1 + i % 6, rng);
    EXPECT_TRUE(same_subspace(rho(rho(s)), s));
    const Vector w = instances::gaussian(6, rng);
    const Vector rw = (Vector(6) << w.head(3), -w.tail(3)).finished();
    EXPECT_TRUE(contains(rho(span({w})), rw));
    EXPECT_NEAR(q_dual(p, rw), -q_dual(p, w), 1e-12 * w.squaredNorm());
    // Negative exactly when rho of it is positive.
    EXPECT_EQ(is_negative(p.dual_space(), s).passed(), is_positive(p.dual_space(), rho(s)).passed());
  }
}

TEST(Adjoint, Examples) {
  const LinearRelation id = relation_from_matrix(Matrix::Identity(1, 1));
  EXPECT_TRUE(same_subspace(adjoint(id).graph, id.graph));
  // {(x, 0)}: the constraint x y* = 0 for all x leaves {(0, y**)}.
  const LinearRelation zero_map = relation_from_matrix(Matrix::Zero(1, 1));
  EXPECT_TRUE(same_subspace(adjoint(zero_map).graph, span({v({0, 1})})));
  // <x, y*> = <Mx, y**> for all x forces y* = M^T y**: the adjoint is {(M^T z, z)}.
  std::mt19937_64 rng(6);
  for (int i = 0; i < 20; ++i) {
    const Eigen::Index d = 1 + i % 5;
    const Matrix m = Matrix::NullaryExpr(d, d, [&] { return std::normal_distribution<>()(rng); });
    Matrix cols(2 * d, d);
    cols << m.transpose(), Matrix::Identity(d, d);
    EXPECT_TRUE(same_subspace(adjoint(relation_from_matrix(m)).graph, Subspace::from_columns(cols)));
  }
}

TEST(Adjoint, Properties) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    const Eigen::Index d = 1 + i % 5;
    const LinearRelation r(d, instances::random_subspace(2 * d, static_cast<Eigen::Index>(rng() % (2 * d + 1)), rng));
    const LinearRelation a = adjoint(r);
    EXPECT_TRUE(same_subspace(a.graph, rho(polar(r.graph))));
    EXPECT_TRUE(same_subspace(adjoint(a).graph, r.graph));
    EXPECT_EQ(a.graph.rank(), 2 * d - r.graph.rank());
    // The bilinear identity, and it characterises the adjoint: a kernel computed
    // by LU from the constraint rows (a, -a*) gives the same subspace.
    Matrix rows(std::max<Eigen::Index>(r.graph.rank(), 1), 2 * d);
    rows.setZero();
    for (Eigen::Index j = 0; j < r.graph.rank(); ++j) {
      const Vector x = r.graph.basis().col(j);
      rows.row(j) << x.head(d).transpose(), -x.tail(d).transpose();
      for (Eigen::Index k = 0; k < a.graph.rank(); ++k) {
        const Vector y = a.graph.basis().col(k);
        EXPECT_LE(std::abs(x.head(d).dot(y.head(d)) - x.tail(d).dot(y.tail(d))), 1e-10);
      }
    }
    if (a.graph.rank() > 0) {
      EXPECT_TRUE(same_subspace(Subspace::from_columns(oracle::lu_kernel(rows)), a.graph));
    }
  }
}

TEST(NiInfimum, Examples) {
  const LinearRelation id = relation_from_matrix(Matrix::Identity(1, 1));
  const ExtReal x = ni_infimum(id, v({0, 1}));
  ASSERT_TRUE(x.is_finite());
  EXPECT_NEAR(x.value(), -0.25, 1e-14);
  // Brute force: inf_t q~((0,1) - L(t,t)) = inf_t (-t)(1 - t).
  EXPECT_NEAR(oracle::golden_min([](double t) { return -t * (1 - t); }, -10, 10), -0.25, 1e-12);
  EXPECT_EQ(code_of([] { ni_infimum(LinearRelation(1, span({v({1, -1})})), v({0, 1})); }),
            ErrorCode::NotMonotone);
}

TEST(NiInfimum, RandomAgainstBruteForceAndMaximal) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    const auto ri = instances::random_relation(rng, 4, i % 2 == 0);
    const Eigen::Index d = ri.relation.edim;
    const SnlSpace p = make_product_space(d);
    const Subspace& g = ri.relation.graph;
    for (int k = 0; k < 20; ++k) {
      const Vector ds = instances::gaussian(2 * d, rng);
      const ExtReal x = ni_infimum(ri.relation, ds);
      auto f = [&](const Vector& t) { return q_dual(p, ds - p.L() * (g.basis() * t)); };
      const double sampled = g.is_zero() ? q_dual(p, ds)
                                         : oracle::sampled_min(f, g.rank(), 4.0, 200, rng);
      EXPECT_TRUE(x <= sampled + 1e-9);
      if (ri.maximal) EXPECT_TRUE(x <= 1e-9);
      // d* = L a with a in A gives a value <= 0.
      if (!g.is_zero()) {
        const Vector a = g.basis() * instances::gaussian(g.rank(), rng);
        EXPECT_TRUE(ni_infimum(ri.relation, p.L() * a) <= 1e-12);
      }
    }
  }
}

TEST(PdenseWitness, Examples) {
  const SnlSpace p = make_product_space(1);
  const DenseWitness w = pdense_witness(p, v({2, 3}));
  EXPECT_EQ(w.d, v({0, 5}));
  const Vector res = v({2, 3}) - p.L() * w.d;
  EXPECT_EQ(res, v({-3, 3}));
  EXPECT_EQ(w.value, 0.0);
  const DenseWitness w0 = pdense_witness(p, v({4, 0}));
  EXPECT_EQ(w0.d, v({0, 4}));
  EXPECT_EQ(w0.value, 0.0);
  EXPECT_EQ(code_of([] { pdense_witness(make_snl_space(Matrix::Identity(2, 2)), v({1, 1})); }),
            ErrorCode::NotProductSpace);
  std::mt19937_64 rng(3);
  for (Eigen::Index d = 1; d <= 6; ++d) {
    const SnlSpace s = make_product_space(d);
    for (int k = 0; k < 100; ++k) EXPECT_LE(pdense_witness(s, instances::gaussian(2 * d, rng)).value, 1e-10);
  }
}

TEST(TypeNi, Examples) {
  const CheckReport id = is_type_ni(relation_from_matrix(Matrix::Identity(1, 1)));
  EXPECT_TRUE(id.passed());
  for (const char* k : {"polar_negative", "sweep_all", "sweep_polar", "maximal", "pattern_ok"}) {
    EXPECT_TRUE(flag(id, k)) << k;
  }
  const LinearRelation zero(1, Subspace(2));
  const CheckReport z = is_type_ni(zero);
  EXPECT_EQ(z.status, Status::Fail);
  EXPECT_FALSE(flag(z, "polar_negative"));
  EXPECT_FALSE(flag(z, "sweep_all"));
  EXPECT_FALSE(flag(z, "maximal"));
  EXPECT_TRUE(flag(z, "pattern_ok"));
  const Vector& ds = *z.witness("dstar");
  EXPECT_GT(ni_infimum(zero, ds).to_double(), 1e-8);
  EXPECT_EQ(code_of([] { is_type_ni(LinearRelation(1, span({v({1, -1})}))); }), ErrorCode::NotMonotone);
}

TEST(BrezisBrowder, Examples) {
  const CheckReport r = brezis_browder_check(relation_from_matrix(rot90()));
  EXPECT_TRUE(r.passed());
  for (const char* k : {"maximal", "adjoint_monotone", "adjoint_maximal", "type_ni"}) {
    EXPECT_TRUE(flag(r, k)) << k;
  }
  const LinearRelation zero(1, Subspace(2));
  const CheckReport z = brezis_browder_check(zero);
  EXPECT_TRUE(z.passed());
  for (const char* k : {"maximal", "adjoint_monotone", "adjoint_maximal", "type_ni"}) {
    EXPECT_FALSE(flag(z, k)) << k;
  }
  // The adjoint is everything; the pairs (1,0), (0,1) have difference with product -1.
  const Vector a = v({1, 0}), b = v({0, 1});
  EXPECT_TRUE(contains(adjoint(zero).graph, a));
  EXPECT_TRUE(contains(adjoint(zero).graph, b));
  EXPECT_EQ((a - b)[0] * (a - b)[1], -1.0);
  const Vector& w = *z.witness("adjoint_witness");
  EXPECT_LT(q(make_product_space(1), w), 0.0);
}

class RelationEnsemble : public ::testing::TestWithParam<int> {};

TEST_P(RelationEnsemble, NiAndBrezisBrowder) {
  std::mt19937_64 rng(9000 + GetParam());
  const auto ri = instances::random_relation(rng, 5, GetParam() % 2 == 0);
  ASSERT_TRUE(is_monotone(ri.relation).passed());
  const CheckReport ni = is_type_ni(ri.relation, 1e-8, {200, static_cast<std::uint64_t>(GetParam())});
  EXPECT_TRUE(flag(ni, "pattern_ok"));
  EXPECT_EQ(flag(ni, "maximal"), ri.maximal);
  EXPECT_EQ(ni.passed(), flag(ni, "maximal") && flag(ni, "sweep_all"));
  EXPECT_EQ(flag(ni, "polar_negative"), flag(ni, "sweep_all"));
  EXPECT_EQ(flag(ni, "polar_negative"), flag(ni, "sweep_polar"));
  const CheckReport bb = brezis_browder_check(ri.relation);
  EXPECT_TRUE(bb.passed());
  EXPECT_EQ(flag(bb, "maximal"), ri.maximal);
  // The maximal graph dimension is d.
  EXPECT_EQ(ri.relation.graph.rank() == ri.relation.edim, ri.maximal);
}

INSTANTIATE_TEST_SUITE_P(Random, RelationEnsemble, ::testing::Range(0, 60));
