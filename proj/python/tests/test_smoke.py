"""Smoke tests for the _heckeforms extension module."""

import _heckeforms as hf


def test_context_basics():
    ctx = hf.Context(5)
    assert ctx.q == 5
    assert ctx.degree == 2
    assert ctx.min_poly() == ["-1", "-1", "1"]
    dec = ctx.lambda_decimal(64)
    assert dec.startswith("1.618033988749894848")


def test_worked_instance():
    ctx = hf.Context(3)
    form = ctx.form("[1;1;-1;+]")
    assert str(form.matrix()) == "[[1,1],[1,2]]"
    decision = form.matrix().decide()
    assert decision["member"] is True
    assert decision["word"] == ["g2^-1", "g1^-1"]
    for q in range(4, 13):
        other = hf.Context(q).matrix("[[1,1],[1,2]]")
        assert other.decide()["member"] is False


def test_reduce_dict():
    ctx = hf.Context(3)
    result = ctx.form("[3;3;-3;+]").reduce()
    assert result["level"] == 2
    assert result["hyperbolic_element"] == {"a": "2", "b": "3", "c": "3", "d": "5"}
    assert [f["B"] for f in result["period"]] == ["-3", "3"]


def test_matrix_roundtrip_and_action():
    ctx = hf.Context(4)
    g = ctx.matrix("[[1,L],[0,1]]")
    assert g.classify() == "parabolic"
    assert g * g.inverse() == ctx.matrix("[[1,0],[0,1]]")
    h = ctx.word_multiply(["g1^-1", "g3^-1", "g2^-1"])
    assert h.decide()["member"] is True
    form = h.form()
    assert form.matrix() == h
    assert g.act(form).discriminant == form.discriminant


def test_enumeration():
    ctx = hf.Context(3)
    report = ctx.enumerate_reduced("5")
    assert report["dmax"] == "5"
    assert len(report["forms"]) == 2
    assert report == ctx.enumerate_reduced("5", threads=2)


def test_displacement_encloses():
    ctx = hf.Context(3)
    g = ctx.matrix("[[1,1],[1,2]]")
    d = g.displacement(96)
    assert d["lo"] <= d["hi"]
    assert d["hi"] - d["lo"] < 1e-12
    assert d["decimal"].startswith("1.9248")


def test_errors():
    ctx = hf.Context(3)
    try:
        ctx.form("[1;1;-1")
        raise AssertionError("grammar error expected")
    except ValueError:
        pass
    try:
        ctx.form("[1;0;-1;+]").reduce()
        raise AssertionError("domain error expected")
    except ValueError:
        pass
    try:
        hf.Context(2)
        raise AssertionError("q >= 3 expected")
    except ValueError:
        pass


def main():
    failures = 0
    for name, fn in sorted(globals().items()):
        if not name.startswith("test_"):
            continue
        try:
            fn()
            print(f"ok   {name}")
        except Exception as exc:  # noqa: BLE001
            print(f"FAIL {name}: {exc!r}")
            failures += 1
    return failures


if __name__ == "__main__":
    raise SystemExit(main())
