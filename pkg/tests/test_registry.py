from fractions import Fraction

import pytest

from amhs.errors import AMHSError, NotPIntegral, ParseError
from amhs.registry import (
    CatalogOptions,
    CheckId,
    CheckRegistry,
    CongruenceCheck,
    PrimeContext,
    Status,
    SuitePrefix,
    bernoulli_residue,
    catalog,
    effective_power,
    encode_param,
    registry,
    run_check,
)
from amhs.residue import Residue


@pytest.fixture(scope="module")
def checks():
    return {check.id: check for check in catalog()}


def stub(lhs, rhs, **kwargs) -> CongruenceCheck:
    return CongruenceCheck(
        id="C99.stub", family="C99", statement="stub", lhs=lhs, rhs=rhs, **kwargs
    )


@pytest.mark.parametrize(
    "name, value, expected",
    [
        ("a", 2, "a2"),
        ("x", -1, "x-1"),
        ("x", Fraction(1, 2), "xhalf"),
        ("x", Fraction(5, 3), "x5over3"),
        ("x", Fraction(4, 2), "x2"),
        ("s", (1, -2, -1), "s1_-2_-1"),
    ],
)
def test_encode_param(name, value, expected):
    assert encode_param(name, value) == expected


@pytest.mark.parametrize("value", [True, 1.5, "2"])
def test_encode_param_rejects(value):
    with pytest.raises(ValueError):
        encode_param("a", value)


def test_check_id_codec():
    check_id = CheckId.build("C04", "H", a=2, b=3)
    assert check_id.pack() == "C04.H.a2.b3"
    assert str(check_id) == "C04.H.a2.b3"
    assert CheckId.unpack("C04.H.a2.b3") == check_id
    assert CheckId.unpack("C08.known-fail.p7").parts == ("known-fail", "p7")


@pytest.mark.parametrize("text", ["X04.a1", "C4.a1", "C04..a1", "C04.a1."])
def test_check_id_unpack_errors(text):
    with pytest.raises(ParseError):
        CheckId.unpack(text)


def test_check_id_rejects_separator_in_part():
    with pytest.raises(ValueError):
        CheckId(family="C04", parts=("a.b",))


@pytest.mark.parametrize(
    "prefix, check_id, expected",
    [
        ("all", "C04.H.a1.b2", True),
        ("C04", "C04.H.a1.b2", True),
        ("C04.H", "C04.H.a1.b2", True),
        ("C04.H", "C04.Hnn.a1.b2", False),
        ("C0", "C04.H.a1.b2", False),
        ("C21.p1093", "C21.p1093", True),
    ],
)
def test_suite_prefix(prefix, check_id, expected):
    assert SuitePrefix(prefix)(check_id) is expected


def test_registry_codes():
    catalog()
    assert registry.codes == [f"C{n:02d}" for n in range(1, 38)]


def test_registry_rejects_duplicates():
    local = CheckRegistry()

    @local("C01")
    def builder(options):
        yield stub(lambda ctx: 1, lambda ctx: 1)

    with pytest.raises(ValueError):
        local.add(builder, "C01")
    with pytest.raises(ValueError):
        local.get("C02")
    # the stub says C99 but is registered under C01
    with pytest.raises(ValueError):
        local.build(CatalogOptions())


def test_catalog_ids(checks):
    assert "C01.k3" in checks
    assert "C08.known-fail.p7" in checks
    assert "C21.p1093" in checks
    assert "C21.wieferich.p3511" in checks
    for check_id, check in checks.items():
        assert CheckId.unpack(check_id).family == check.family


def test_catalog_is_deterministic():
    first = [c.id for c in catalog(seed=3)]
    assert first == [c.id for c in catalog(seed=3)]
    randomized = [i for i in first if i.startswith(("C30", "C31"))]
    assert len(randomized) == 24
    assert randomized != [c.id for c in catalog(seed=4) if c.id.startswith(("C30", "C31"))]


def test_catalog_options():
    with pytest.raises(ValueError):
        CatalogOptions(weight_cap=9)
    assert len(catalog(weight_cap=2)) < len(catalog(weight_cap=4))


def test_known_counterexample(checks):
    result = run_check(checks["C08.known-fail.p7"], 7)
    assert result.status is Status.PASS
    assert (result.lhs - result.rhs).value == 5
    assert run_check(checks["C08.known-fail.p7"], 11).status is Status.SKIPPED


def test_precondition_skips(checks):
    result = run_check(checks["C01.k3"], 5)
    assert result.status is Status.SKIPPED
    assert result.ok
    assert result.model_dump(mode="json")["lhs"] is None


def test_run_check_needs_prime(checks):
    with pytest.raises(ValueError):
        run_check(checks["C01.k3"], 9)


@pytest.mark.parametrize(
    "p, expected",
    [
        (1093, (1023, 529, 670, 952)),
        pytest.param(3511, (1618, 2160, 1620, 540), marks=pytest.mark.slow),
    ],
)
def test_wieferich_spot_values(p, expected):
    ctx = PrimeContext(p)
    values = (ctx.conv.J, ctx.H(-3, 1), ctx.H(-1, -1, -1, 1), ctx.H(1, 1, 1, -1))
    assert tuple(v.value for v in values) == expected
    assert ctx.q == 0


def test_wieferich_checks(checks):
    assert run_check(checks["C21.p1093"], 1093).status is Status.PASS
    assert run_check(checks["C21.wieferich.p1093"], 1093).status is Status.PASS
    assert run_check(checks["C21.p1093"], 3511).status is Status.SKIPPED
    assert run_check(checks["C21.wieferich.p1093"], 1097).status is Status.SKIPPED


def test_result_serialization(checks):
    result = run_check(checks["C01.k2"], 11)
    record = result.model_dump(mode="json")
    assert list(record) == ["id", "p", "k", "lhs", "rhs", "status", "elapsed_us"]
    assert record["k"] == 3
    assert record["status"] == "pass"
    assert record["lhs"] == str(result.lhs.value)


def test_effective_power(checks):
    check = checks["C01.k2"]
    assert effective_power(check) == 3
    assert effective_power(check, 1) == 1
    assert effective_power(check, 6) == 3
    assert run_check(check, 11, power_override=1).k == 1


def test_arithmetic_errors_become_failures():
    def boom(ctx):
        raise NotPIntegral(Fraction(1, ctx.p), ctx.p)

    result = run_check(stub(boom, lambda ctx: 0), 7)
    assert result.status is Status.FAIL
    assert "not 7-integral" in result.diagnostic
    assert "diagnostic" not in result.model_dump()


def test_vector_sides():
    same = run_check(stub(lambda ctx: (1, 2, 3), lambda ctx: (8, 9, 10)), 7)
    assert same.status is Status.PASS
    assert same.lhs.value == 6
    diff = run_check(stub(lambda ctx: (1, 2, 3), lambda ctx: (1, 5, 3)), 7)
    assert diff.status is Status.FAIL
    assert diff.diagnostic == "coordinate 1 differs"


def test_prime_context():
    ctx = PrimeContext(11, 3)
    assert ctx.pk(1, 2) == Residue(22, 11, 3)
    assert ctx.pk(3, 5) == 0
    assert ctx.pk(2, Residue(4, 11)) == Residue(484, 11, 3)
    with pytest.raises(ValueError):
        ctx.pk(1, Residue(4, 11))
    assert ctx.H(1, n=3) == Fraction(11, 6)
    assert ctx.two(10) == 1024
    with pytest.raises(ValueError):
        PrimeContext(15)


def test_bernoulli_sum_falls_back_to_exact_products():
    ctx = PrimeContext(7)
    # B_6 is not 7-integral but 7 B_6 is
    assert ctx.bernoulli_sum([(7, (6,))]) == ctx.r(7 * Fraction(1, 42))
    assert ctx.bernoulli_sum([(1, (2, 2)), (0, (6,)), (5, (3,))]) == Fraction(1, 36)
    with pytest.raises(NotPIntegral):
        bernoulli_residue(6, 7)
    assert issubclass(NotPIntegral, AMHSError)


def test_catalog_holds_at_small_primes():
    for p in (11, 13):
        for check in catalog(weight_cap=4):
            result = run_check(check, p)
            assert result.ok, (check.id, p, result.diagnostic)


@pytest.mark.slow
@pytest.mark.parametrize("p", [7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67])
def test_full_catalog(checks, p):
    for check in checks.values():
        result = run_check(check, p)
        assert result.ok, (check.id, p, result.diagnostic)


def test_binomial_lemma_grid(checks):
    grid = [i for i in checks if i.startswith("C24.general.")]
    assert len(grid) == 16
    assert "C24.general.d4.x5over3" in checks
    assert "C24.binomial-u.d1.x-1" in checks
    for check_id in ("C24.general.d4.x5over3", "C24.binomial-u.d4.x5over3"):
        assert run_check(checks[check_id], 13).status is Status.PASS
