"""核心服务单元测试 - infimax、代换与偏差"""

import random
from fractions import Fraction

import numpy as np
import pytest
import sympy

from rotkit.core.errors import InfimaxError
from rotkit.core.infimax import (
    AbelMatrix,
    Substitution,
    abelianization,
    build_goober,
    deviation_profile,
    df_char_test,
    infimax_rational,
    is_primitive,
    lambda_n,
    pf_eigen,
    subst_fixed_prefix,
    substitution_checkpoints,
    sturmian,
)
from rotkit.core.polytope import df_approx
from rotkit.core.words import DigitWord, FreqVector, Status, is_maximal

F = Fraction
GOLDEN = (5 ** 0.5 - 1) / 2


def alpha(a0, a1, a2) -> FreqVector:
    return FreqVector(F(a0), F(a1), F(a2))


class TestInfimaxRational:
    """有理 infimax 预言机"""

    @pytest.mark.parametrize(
        "vec,expected",
        [
            (("1/2", 0, "1/2"), "(20)"),
            ((0, 0, 1), "(2)"),
            (("1/3", "1/3", "1/3"), "(201)"),
            (("1/4", "1/4", "1/2"), "(2120)"),
            ((0, "1/2", "1/2"), "(21)"),
        ],
    )
    def test_values(self, vec, expected):
        word = infimax_rational(alpha(*vec))
        assert word == DigitWord.parse(expected)
        assert is_maximal(word).status is Status.YES

    def test_no_two(self):
        with pytest.raises(InfimaxError):
            infimax_rational(alpha("1/2", "1/2", 0))

    def test_bound(self):
        vec = alpha(F(1, 13), 0, F(12, 13))
        with pytest.raises(InfimaxError):
            infimax_rational(vec)
        assert infimax_rational(vec, bound=13) == DigitWord.parse("(2222222222220)")

    def test_char_test(self):
        w = DigitWord.parse("2(1)")
        assert df_char_test(alpha("1/2", 0, "1/2"), w)
        assert df_char_test(alpha("1/3", "1/3", "1/3"), w)
        assert not df_char_test(alpha(0, "1/2", "1/2"), w)
        assert df_char_test(alpha(0, "1/2", "1/2"), DigitWord.parse("(2220)"))

    def test_char_test_undecided(self):
        with pytest.raises(InfimaxError):
            df_char_test(alpha(0, 0, 1), DigitWord.finite((2, 2)))

    @pytest.mark.parametrize("text", ["(2)", "2(1)", "(211)", "(20)", "(221)", "(2220)"])
    def test_char_test_matches_closed_approx(self, text):
        """分母 ≤ 6 的所有 α：I(α) ≤ w 当且仅当 α 落在闭合的逼近多边形中"""
        w = DigitWord.parse(text)
        approx = df_approx(w, 8, 8)
        assert approx.closed

        vectors = {
            FreqVector.from_counts((c0, c1, q - c0 - c1))
            for q in range(1, 7)
            for c0 in range(q)
            for c1 in range(q - c0)
        }
        for vec in sorted(vectors, key=FreqVector.as_tuple):
            assert df_char_test(vec, w) == approx.inner.contains_point(vec.chart), vec


class TestSubstitution:
    """代换与不动点前缀"""

    def test_parse_roundtrip(self):
        sub = Substitution.parse("0>1;1>200;2>20")
        assert sub == lambda_n(1)
        assert str(sub) == "0>1;1>200;2>20"

    @pytest.mark.parametrize("text", ["0>1;1>200", "0>1;0>2;1>1;2>2", "3>1;0>1;1>1;2>2", "0>;1>1;2>2", "0>13;1>1;2>2"])
    def test_parse_invalid(self, text):
        with pytest.raises(InfimaxError):
            Substitution.parse(text)

    def test_lambda_n(self):
        assert lambda_n(2).images == ((1,), (2, 0, 0, 0), (2, 0, 0))
        with pytest.raises(InfimaxError):
            lambda_n(0)

    def test_fixed_prefix(self):
        assert str(subst_fixed_prefix(lambda_n(1), 2, 3)) == "201"
        assert str(subst_fixed_prefix(lambda_n(1), 2, 10)) == "2012002011"

    def test_fixed_prefix_is_fixed(self):
        prefix = subst_fixed_prefix(lambda_n(2), 2, 500).preperiod
        assert lambda_n(2).apply(prefix)[:500] == prefix

    @pytest.mark.parametrize("seed", [0, 1])
    def test_bad_seed(self, seed):
        with pytest.raises(InfimaxError):
            subst_fixed_prefix(lambda_n(1), seed, 10)

    def test_compose(self):
        sub = lambda_n(1)
        square = sub.compose(sub)
        assert square.images == ((2, 0, 0), (2, 0, 1, 1), (2, 0, 1))
        assert abelianization(square) == abelianization(sub) @ abelianization(sub)

    def test_abelianization_homomorphism(self):
        """随机小代换上 A(Λ∘Λ′) = A(Λ)·A(Λ′)"""
        rng = random.Random(7)

        def random_substitution() -> Substitution:
            return Substitution(tuple(
                tuple(rng.randint(0, 2) for _ in range(rng.randint(1, 3))) for _ in range(3)
            ))

        for _ in range(100):
            a, b = random_substitution(), random_substitution()
            assert abelianization(a.compose(b)) == abelianization(a) @ abelianization(b)


class TestPerronFrobenius:
    """阿贝尔化矩阵与特征数据"""

    def test_abelianization(self):
        assert abelianization(lambda_n(1)).rows == ((0, 2, 1), (1, 0, 0), (0, 1, 1))
        assert abelianization(lambda_n(2)).rows == ((0, 3, 2), (1, 0, 0), (0, 1, 1))
        identity = abelianization(Substitution.parse("0>0;1>1;2>2"))
        assert identity.rows == ((1, 0, 0), (0, 1, 0), (0, 0, 1))

    def test_characteristic_polynomial(self):
        x = sympy.Symbol("x")
        rows = abelianization(lambda_n(1)).rows
        assert sympy.expand(sympy.Matrix(rows).charpoly(x).as_expr() - (x**3 - x**2 - 2 * x + 1)) == 0

    def test_eigen_data(self):
        matrix = abelianization(lambda_n(1))
        pf = pf_eigen(matrix)
        v = np.array(pf.alpha)
        assert np.allclose(matrix.to_numpy() @ v, pf.lambda1 * v, atol=1e-9)
        assert v.sum() == pytest.approx(1.0)
        assert (v > 0).all()
        assert pf.lambda1 ** 3 - pf.lambda1 ** 2 - 2 * pf.lambda1 + 1 == pytest.approx(0, abs=1e-9)
        assert pf.lambda2_abs == pytest.approx(1.2469796, abs=1e-6)
        assert pf.nu == pytest.approx(0.375, abs=2e-3)

    @pytest.mark.parametrize("text", ["0>0;1>1;2>2", "0>1;1>2;2>0"])
    def test_not_primitive(self, text):
        matrix = abelianization(Substitution.parse(text))
        assert not is_primitive(matrix)
        with pytest.raises(InfimaxError):
            pf_eigen(matrix)

    def test_invalid_matrix(self):
        with pytest.raises(InfimaxError):
            AbelMatrix(((1, 0), (0, 1)))
        with pytest.raises(InfimaxError):
            AbelMatrix(((1, 0, 0), (0, -1, 0), (0, 0, 1)))

    def test_counts_match_matrix_powers(self):
        """Λ₁^i(2) 的数字计数等于 A₁^i e₂（i ≤ 12）"""
        sub = lambda_n(1)
        matrix = abelianization(sub).to_numpy()
        word: tuple = (2,)
        for i in range(13):
            counts = np.array([word.count(d) for d in (0, 1, 2)])
            expected = np.linalg.matrix_power(matrix, i) @ np.array([0, 0, 1])
            assert (counts == expected).all(), i
            word = sub.apply(word)

    def test_checkpoints(self):
        matrix = abelianization(lambda_n(1))
        assert substitution_checkpoints(matrix, 2, 30) == [1, 2, 3, 6, 10, 19]


class TestDeviation:
    """偏差剖面"""

    def test_exact_profile(self):
        profile = deviation_profile(DigitWord.parse("(20)"), alpha("1/2", 0, "1/2"), [1, 2, 3, 4])
        assert [dev for _, dev in profile.samples] == [F(1, 2), 0, F(1, 2), 0]
        assert profile.max_deviation == F(1, 2)
        assert profile.rows()[1] == (2, "0", "1/2")
        assert profile.bounded_by(1)

    @pytest.mark.parametrize("points", [[2, 1], [0, 1], [1, 1]])
    def test_invalid_checkpoints(self, points):
        with pytest.raises(InfimaxError):
            deviation_profile(DigitWord.parse("(20)"), alpha("1/2", 0, "1/2"), points)

    def test_beyond_prefix(self):
        with pytest.raises(InfimaxError):
            deviation_profile(DigitWord.finite((2, 0)), alpha("1/2", 0, "1/2"), [1, 3])

    def test_unbounded_growth(self):
        """Λ₁ 不动点：偏差沿代换检查点严格递增，增长指数接近 ν"""
        limit = 10**6
        sub = lambda_n(1)
        matrix = abelianization(sub)
        pf = pf_eigen(matrix)
        checkpoints = substitution_checkpoints(matrix, 2, limit)
        word = subst_fixed_prefix(sub, 2, checkpoints[-1])
        profile = deviation_profile(word, pf.alpha, checkpoints)
        assert profile.strictly_increasing_from(3)
        assert profile.loglog_slope() == pytest.approx(pf.nu, rel=0.15)


class TestSturmian:
    """Sturmian 序列与 goober"""

    def test_golden(self):
        assert "".join(map(str, sturmian(GOLDEN, 10))) == "0101101011"

    def test_rational_slope(self):
        assert sturmian(0.5, 6) == (0, 1, 0, 1, 0, 1)
        assert sturmian(0.0, 3) == (0, 0, 0)

    def test_slope_range(self):
        with pytest.raises(InfimaxError):
            sturmian(1.5, 4)

    def test_balance(self):
        """前缀中 1 的个数与 rλ 之差始终小于 1"""
        length = 100_000
        bits = np.array(sturmian(GOLDEN, length))
        r = np.arange(1, length + 1)
        assert np.all(np.abs(np.cumsum(bits) - r * GOLDEN) < 1)

    def test_goober_bounded(self):
        """W₀=(20)、W₁=(21)，10⁵ 位内偏差始终小于 2q = 4"""
        length = 100_000
        goober = build_goober((2, 0), (2, 1), 1, 1, GOLDEN, length)
        assert goober.q == 2
        assert len(goober.word.preperiod) == length
        assert sum(goober.target) == pytest.approx(1.0)
        profile = deviation_profile(goober.word, goober.target, range(1, length + 1))
        assert profile.bounded_by(2 * goober.q)

    def test_goober_repeated_block(self):
        """块按原样重复，22 不约化为 2"""
        goober = build_goober((2, 0), (2, 2), 1, 1, GOLDEN, 1000)
        assert goober.block1 == (2, 2)
        assert goober.q == 2
        assert goober.target[1] == 0

        powered = build_goober((2, 0), (2,), 1, 2, GOLDEN, 1000)
        assert powered.block1 == (2, 2)

    @pytest.mark.parametrize(
        "w0, w1",
        [((2, 0), (2, 2, 1)), ((), ()), ((2, 3), (2, 0))],
    )
    def test_goober_invalid_blocks(self, w0, w1):
        with pytest.raises(InfimaxError):
            build_goober(w0, w1, 1, 1, GOLDEN, 100)
