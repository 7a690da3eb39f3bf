"""Smoke test for the `dedekind` extension module.

Build and install first, e.g. `pip install --no-build-isolation -e crates/py`.
"""

import json

import dedekind


def main():
    z2 = dedekind.Group("cyclic:2")
    assert z2.order == 2
    assert z2.theta() == "x_0^2 - x_1^2", z2.theta()

    s3 = dedekind.Group("sym:3")
    assert not s3.is_abelian()
    f = dedekind.factorize(s3, "a3")
    assert f.passed, f.checks
    assert len(f.factors) == 3
    assert all(v is not False for v in f.checks.values())
    doc = json.loads(f.to_json())
    assert doc["theta"]["text"] == f.theta

    z4 = dedekind.Group("cyclic:4")
    t = z4.element([0, 1, 0, 0])
    assert t.is_central()
    assert t.conjugate("2") == -t
    a = z4.generic()
    assert a.conjugate("2").conjugate("2") == a
    assert (a * a.conjugate("2")).is_central()
    assert (t * t).augmentation() == "1"

    try:
        dedekind.Group("nope")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown catalog key accepted")

    try:
        dedekind.Group.from_table([[0, 1], [1, 1]])
    except ValueError:
        pass
    else:
        raise AssertionError("non-group table accepted")

    print("smoke test ok")


if __name__ == "__main__":
    main()
