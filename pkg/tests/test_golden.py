"""Golden canonical renderings of the full pipeline over every fixture.

Any change to normal forms, term ordering or the renderer shows up here as
an exact string diff.  Values were derived in the per-module tests; this
table just pins their canonical text.
"""

from motivic import fixtures, nearby_cycle, vanishing_cycle, zeta_function

GOLDEN = {
    ("z2", "zeta"): "(1 - L^(1/2)) * (L^-1 T^2)/(1 - L^-1 T^2)",
    ("z2", "nearby"): "1 - L^(1/2)",
    ("z2", "vanishing"): "1",
    ("z3", "zeta"): "[mu_3] * (L^-1 T^3)/(1 - L^-1 T^3)",
    ("z3", "nearby"): "[mu_3]",
    ("z3", "vanishing"): "L^(-1/2) - L^(-1/2) ⊙ [mu_3]",
    ("z4", "zeta"): "[mu_4] * (L^-1 T^4)/(1 - L^-1 T^4)",
    ("z4", "nearby"): "[mu_4]",
    ("z4", "vanishing"): "L^(-1/2) - L^(-1/2) ⊙ [mu_4]",
    ("x2", "zeta"): "(1 - L^(1/2)) * (L^-1 T^2)/(1 - L^-1 T^2)",
    ("x2", "nearby"): "1 - L^(1/2)",
    ("x2", "vanishing"): "L^(-1/2)",
    ("x2y", "zeta"): "(1 - L^(1/2) ⊙ Y(p1)) * (L^-1 T^2)/(1 - L^-1 T^2)",
    ("x2y", "nearby"): "1 - L^(1/2) ⊙ Y(p1)",
    ("x2y", "vanishing"): "L^(-1/2) ⊙ Y(p1)",
    ("x2y_plane", "zeta"):
        "[axY] * (L^-1 T^1)/(1 - L^-1 T^1)"
        " + ((-1 + L) ⊙ [orig]) * (L^-1 T^1)/(1 - L^-1 T^1)"
        " * (L^-1 T^2)/(1 - L^-1 T^2)"
        " + ([axX] - L^(1/2) ⊙ Y(pu) ⊙ [axX])"
        " * (L^-1 T^2)/(1 - L^-1 T^2)",
    ("x2y_plane", "nearby"):
        "[axX] - L^(1/2) ⊙ Y(pu) ⊙ [axX] + [axY]"
        " + (1 - L) ⊙ [orig]",
    ("x2y_plane", "vanishing"):
        "L^(-1/2) ⊙ Y(p) ⊙ [GmX0] + [ptX0]",
    ("x2_line", "zeta"):
        "((1 - L^(1/2)) ⊙ [Gm0] + (1 - L^(1/2)) ⊙ [pt0])"
        " * (L^-1 T^2)/(1 - L^-1 T^2)",
    ("x2_line", "nearby"):
        "(1 - L^(1/2)) ⊙ [Gm0] + (1 - L^(1/2)) ⊙ [pt0]",
    ("x2_line", "vanishing"):
        "L^(-1/2) ⊙ [Gm0] + L^(-1/2) ⊙ [pt0]",
    ("x2_line_blowup", "zeta"):
        "((1 - L^(1/2)) ⊙ [Gm0]) * (L^-1 T^2)/(1 - L^-1 T^2)"
        " + ((-1 + L^(1/2) + L - L^(3/2)) ⊙ [pt0])"
        " * (L^-1 T^2)/(1 - L^-1 T^2) * (L^-2 T^2)/(1 - L^-2 T^2)"
        " + ((L - L^(3/2)) ⊙ [pt0]) * (L^-2 T^2)/(1 - L^-2 T^2)",
    ("x2_line_blowup", "nearby"):
        "(1 - L^(1/2)) ⊙ [Gm0] + (1 - L^(1/2)) ⊙ [pt0]",
    ("x2_line_blowup", "vanishing"):
        "L^(-1/2) ⊙ [Gm0] + L^(-1/2) ⊙ [pt0]",
}


def _resolutions():
    for name, builder in (("z2", fixtures.z2), ("z3", fixtures.z3),
                          ("z4", fixtures.z4), ("x2", fixtures.x2),
                          ("x2y", fixtures.x2y),
                          ("x2y_plane", fixtures.x2y_plane)):
        yield name, builder().resolution
    _reg, plain, blowup = fixtures.redundant_blowup_pair()
    yield "x2_line", plain
    yield "x2_line_blowup", blowup


def test_golden_pipeline_renderings():
    for name, res in _resolutions():
        assert zeta_function(res).text() == GOLDEN[(name, "zeta")], name
        assert nearby_cycle(res).text() == GOLDEN[(name, "nearby")], name
        assert vanishing_cycle(res).text() == GOLDEN[(name, "vanishing")], name


def test_same_function_same_limits_different_zetas():
    # the pair shares nearby and vanishing text but not the rational form
    assert GOLDEN[("x2_line", "nearby")] == GOLDEN[("x2_line_blowup", "nearby")]
    assert GOLDEN[("x2_line", "vanishing")] == \
        GOLDEN[("x2_line_blowup", "vanishing")]
    assert GOLDEN[("x2_line", "zeta")] != GOLDEN[("x2_line_blowup", "zeta")]
