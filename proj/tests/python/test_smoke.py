"""Smoke tests for the compiled extension via the mhz package."""

from fractions import Fraction

import mhz


def test_value_report():
    report = mhz.value(["1", "1"], [0, 0])
    assert report["n"] == 2
    assert report["variant"] == "corrected"
    assert report["polar"] is False
    assert report["value"] == Fraction(-1, 6)
    assert report["term_count"] == 7


def test_zeta_shortcuts():
    assert mhz.zeta("1", [0]) == Fraction(-1, 2)
    assert mhz.zeta([1, 1], [0, 0]) == Fraction(-1, 6)
    assert mhz.zeta(Fraction(1, 2), [2]) == 0
    assert mhz.zeta([1, 1], [0, 0], variant="paper") == Fraction(1, 3)


def test_hurwitz_special_matches_general():
    for N in range(6):
        assert mhz.hurwitz_special(Fraction(1, 3), N) == mhz.zeta("1/3", [N])


def test_oracle_agreement():
    assert mhz.oracle([1, "3/2"], [1, 2]) == mhz.zeta([1, "3/2"], [1, 2])
    try:
        mhz.oracle([1, 1], [0, 0])
    except ValueError:
        pass
    else:
        raise AssertionError("irregular point should require the override")
    assert mhz.oracle([1, 1], [0, 0], allow_irregular=True) == Fraction(-1, 6)


def test_no_polar_points():
    assert mhz.is_polar([0, 0]) is False
    assert mhz.is_polar([3, 1, 2]) is False


def test_bernoulli():
    assert mhz.bernoulli(12) == Fraction(-691, 2730)
    assert mhz.bernoulli_polynomial(2) == [Fraction(1, 6), -1, 1]


def test_errors_translate():
    for bad in (lambda: mhz.zeta("0", [0]), lambda: mhz.zeta("1", [-1]),
                lambda: mhz.value(["1"], [0], "bogus")):
        try:
            bad()
        except (ValueError, ZeroDivisionError):
            pass
        else:
            raise AssertionError("expected a raised error")


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"{name}: ok")
            except Exception as exc:  # noqa: BLE001
                failures += 1
                print(f"{name}: FAIL {exc!r}")
    raise SystemExit(1 if failures else 0)
