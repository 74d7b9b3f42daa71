"""Tests for the encoding families: frozen examples, invariants, gradients, configs."""

import numpy as np
import pytest
from hypothesis import given, seed, settings, strategies as st

from ropekit import encodings as E
from ropekit.encodings import FrequencyTable

ISO_RTOL = 1e-10
FLOW_TOL = 1e-10
FAST_TOL = 1e-12
GRAD_RTOL = 1e-5
FD_H = 1e-5


def unit_table(scheme, blocks, axes):
    return FrequencyTable(scheme, np.ones((blocks, axes)))


# ---------------------------------------------------------------------------
# frequency schedule and tables
# ---------------------------------------------------------------------------


def test_schedule_frozen_values():
    s = E.frequency_schedule(8)
    assert s[0] == 1.0
    assert s[1] == pytest.approx(0.31622776601683794, rel=1e-15)
    assert s[7] == pytest.approx(3.1622776601683794e-4, rel=1e-15)
    assert np.all(np.diff(s) < 0)


def test_schedule_single_block():
    np.testing.assert_array_equal(E.frequency_schedule(1), [1.0])


def test_schedule_validation():
    with pytest.raises(ValueError):
        E.frequency_schedule(0)
    with pytest.raises(ValueError):
        E.frequency_schedule(4, base=-2.0)


def test_table_rejects_nonfinite():
    with pytest.raises(ValueError):
        FrequencyTable("mixed", np.array([[1.0, np.inf]]))


def test_table_rejects_unknown_scheme():
    with pytest.raises(ValueError):
        FrequencyTable("spiral", np.ones((2, 2)))


def test_uniform_table_requires_shared_value():
    with pytest.raises(ValueError):
        FrequencyTable("uniform", np.array([[1.0, 2.0]]))


def test_fixed_table_shapes():
    assert FrequencyTable.fixed("rope1d", 16).freqs.shape == (8, 1)
    assert FrequencyTable.fixed("axial", 16).freqs.shape == (4, 2)
    assert FrequencyTable.fixed("mixed", 16).freqs.shape == (8, 2)
    assert FrequencyTable.fixed("spherical", 12).freqs.shape == (4, 2)
    t = FrequencyTable.fixed("axial", 16)
    np.testing.assert_array_equal(t.freqs[:, 0], t.freqs[:, 1])


def test_fixed_table_divisibility():
    with pytest.raises(ValueError):
        FrequencyTable.fixed("spherical", 16)
    with pytest.raises(ValueError):
        FrequencyTable.fixed("axial", 6)


def test_table_is_immutable():
    t = FrequencyTable.fixed("rope1d", 8)
    with pytest.raises(ValueError):
        t.freqs[0, 0] = 5.0


# ---------------------------------------------------------------------------
# frozen encoding examples
# ---------------------------------------------------------------------------


def test_rope1d_quarter_turn():
    t = unit_table("rope1d", 1, 1)
    np.testing.assert_allclose(E.rope1d([1.0, 0.0], np.pi / 2, t), [0.0, 1.0], atol=1e-15)


def test_rope1d_zero_position_identity():
    t = FrequencyTable.fixed("rope1d", 8)
    z = np.arange(8.0)
    np.testing.assert_array_equal(E.rope1d(z, 0.0, t), z)


def test_rope1d_dimension_mismatch():
    t = FrequencyTable.fixed("rope1d", 8)
    with pytest.raises(ValueError):
        E.rope1d(np.zeros(6), 0.1, t)


def test_trivial2d_equals_rope1d_on_sum():
    t = FrequencyTable.fixed("rope1d", 8)
    rng = np.random.default_rng(0)
    z = rng.standard_normal(8)
    np.testing.assert_array_equal(
        E.trivial2d(z, (0.4, -1.1), t), E.rope1d(z, 0.4 + -1.1, t)
    )


def test_trivial2d_antidiagonal_shift_exact():
    t = FrequencyTable.fixed("rope1d", 8)
    rng = np.random.default_rng(1)
    z = rng.standard_normal(8)
    a, b, s = 0.37, -0.9, 0.61
    lhs = E.trivial2d(z, (a + s, b - s), t)
    rhs = E.trivial2d(z, (a, b), t)
    np.testing.assert_allclose(lhs, rhs, atol=1e-12)


def test_axial_frozen_block():
    t = unit_table("axial", 1, 2)
    out = E.axial([1.0, 0.0, 1.0, 0.0], (np.pi / 2, np.pi), t)
    np.testing.assert_allclose(out, [0.0, 1.0, -1.0, 0.0], atol=1e-15)


def test_axial_x_pairs_ignore_y():
    t = FrequencyTable.fixed("axial", 16)
    rng = np.random.default_rng(2)
    z = rng.standard_normal(16)
    a = E.axial(z, (0.3, -2.0), t)
    b = E.axial(z, (0.3, 1.4), t)
    np.testing.assert_array_equal(a.reshape(-1, 4)[:, :2], b.reshape(-1, 4)[:, :2])


def test_mixed_frozen_pair():
    t = unit_table("mixed", 1, 2)
    out = E.mixed([1.0, 0.0], (np.pi / 2, np.pi / 2), t)
    np.testing.assert_allclose(out, [-1.0, 0.0], atol=1e-15)


def test_mixed_zero_y_equals_rope1d():
    fx = E.frequency_schedule(4)
    tm = FrequencyTable("mixed", np.column_stack([fx, np.zeros(4)]))
    tr = FrequencyTable("rope1d", fx[:, None])
    rng = np.random.default_rng(3)
    z = rng.standard_normal(8)
    np.testing.assert_array_equal(E.mixed(z, (0.3, -1.7), tm), E.rope1d(z, 0.3, tr))


def test_spherical_frozen_examples():
    t = unit_table("spherical", 1, 2)
    np.testing.assert_allclose(
        E.spherical([0.0, 0.0, 1.0], (0.0, np.pi / 2), t), [0.0, -1.0, 0.0], atol=1e-15
    )
    np.testing.assert_allclose(
        E.spherical([1.0, 2.0, 3.0], (np.pi / 2, np.pi / 2), t), [3.0, 1.0, 2.0], atol=1e-14
    )


def test_spherical_fast_matches_matrix_route():
    t = FrequencyTable.fixed("spherical", 12)
    rng = np.random.default_rng(4)
    worst = 0.0
    for _ in range(300):
        z = rng.standard_normal(12)
        p = rng.uniform(-np.pi, np.pi, 2)
        worst = max(worst, np.max(np.abs(E.spherical(z, p, t) - E.spherical_fast(z, p, t))))
    assert worst <= FAST_TOL


def test_uniform_equals_axial_constant_table():
    rng = np.random.default_rng(5)
    z = rng.standard_normal(8)
    t = FrequencyTable("uniform", np.full((2, 2), 1.0))
    np.testing.assert_array_equal(E.uniform(z, (0.2, 0.9)), E.axial(z, (0.2, 0.9), t))


def test_uniform_full_cycle_identity():
    rng = np.random.default_rng(6)
    z = rng.standard_normal(8)
    np.testing.assert_allclose(E.uniform(z, (2 * np.pi, 0.0)), z, atol=1e-12)


def test_liere_single_generator_matches_rope1d():
    omega = 0.6180339887
    gen = np.array([[0.0, -omega], [omega, 0.0]])
    t = FrequencyTable("rope1d", np.array([[omega]]))
    for p in (-2.0, 0.0, 0.25, 3.1):
        got = E.liere([1.0, 0.5], [p], [gen])
        want = E.rope1d([1.0, 0.5], p, t)
        np.testing.assert_allclose(got, want, atol=1e-12)


def test_liere_rejects_bad_inputs():
    gen = np.array([[0.0, -1.0], [1.0, 0.0]])
    with pytest.raises(ValueError):
        E.liere([1.0, 0.0, 0.0], [0.5], [gen])
    with pytest.raises(ValueError):
        E.liere([1.0, 0.0], [0.5, 0.5], [gen])
    with pytest.raises(ValueError):
        E.liere([1.0, 0.0], [0.5], [])


def test_sinusoidal_ape_frozen():
    t = unit_table("rope1d", 2, 1)
    np.testing.assert_allclose(
        E.sinusoidal_ape(np.zeros(4), 0.0, t), [0.0, 1.0, 0.0, 1.0], atol=0
    )
    t1 = unit_table("rope1d", 1, 1)
    out = E.sinusoidal_ape(np.zeros(2), np.pi / 2, t1)
    assert out[0] == pytest.approx(1.0)


def test_sinusoidal_ape_not_isometric():
    t = unit_table("rope1d", 2, 1)
    x = np.ones(4)
    assert abs(np.linalg.norm(E.sinusoidal_ape(x, 0.7, t)) - np.linalg.norm(x)) > 0.1


# ---------------------------------------------------------------------------
# isometry and flow invariants
# ---------------------------------------------------------------------------

ROTARY_CASES = [
    ("rope1d", 16, 1),
    ("trivial2d", 16, 2),
    ("axial", 16, 2),
    ("mixed", 16, 2),
    ("spherical", 12, 2),
    ("uniform", 16, 2),
]


@pytest.mark.parametrize("scheme,dim,axes", ROTARY_CASES)
def test_isometry(scheme, dim, axes):
    enc = E.make_encoder(scheme, dim)
    rng = np.random.default_rng(7)
    for _ in range(50):
        z = rng.standard_normal(dim)
        p = rng.uniform(-np.pi, np.pi, axes)
        if axes == 1:
            p = p[0]
        out = enc.encode(z, p)
        assert abs(np.linalg.norm(out) - np.linalg.norm(z)) <= ISO_RTOL * np.linalg.norm(z)


@pytest.mark.parametrize("scheme,dim,axes", ROTARY_CASES[:4] + [ROTARY_CASES[5]])
def test_flow_property_abelian(scheme, dim, axes):
    enc = E.make_encoder(scheme, dim)
    rng = np.random.default_rng(8)
    for _ in range(25):
        z = rng.standard_normal(dim)
        p1 = rng.uniform(-np.pi, np.pi, axes)
        p2 = rng.uniform(-np.pi, np.pi, axes)
        if axes == 1:
            p1, p2 = p1[0], p2[0]
        lhs = enc.encode(enc.encode(z, p1), p2)
        rhs = enc.encode(z, p1 + p2)
        assert np.max(np.abs(lhs - rhs)) <= FLOW_TOL


def test_flow_property_fails_spherical():
    t = unit_table("spherical", 1, 2)
    z = np.array([1.0, 2.0, 3.0])
    p1, p2 = np.array([1.0, 0.7]), np.array([-0.3, 1.2])
    lhs = E.spherical(E.spherical(z, p1, t), p2, t)
    rhs = E.spherical(z, p1 + p2, t)
    assert np.linalg.norm(lhs - rhs) > 1e-3


@seed(77)
@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from(["rope1d", "axial", "mixed", "spherical"]),
    st.integers(min_value=0, max_value=2**31 - 1),
)
def test_property_isometry(scheme, rs):
    dim = 12
    enc = E.make_encoder(scheme, dim)
    rng = np.random.default_rng(rs)
    z = rng.standard_normal(dim)
    p = rng.uniform(-np.pi, np.pi, enc.axes)
    if enc.axes == 1:
        p = p[0]
    assert abs(np.linalg.norm(enc.encode(z, p)) - np.linalg.norm(z)) <= ISO_RTOL * np.linalg.norm(z)


# ---------------------------------------------------------------------------
# frequency gradients vs central differences
# ---------------------------------------------------------------------------


def _score(scheme, zq, zk, pq, pk, table):
    fn = {"rope1d": E.rope1d, "axial": E.axial, "mixed": E.mixed,
          "spherical": E.spherical, "uniform": E.axial}[scheme]
    return float(fn(zq, pq, table) @ fn(zk, pk, table))


def _fd_grad(scheme, zq, zk, pq, pk, table, h=FD_H):
    f = np.asarray(table.freqs)
    if scheme == "uniform":
        up = FrequencyTable("uniform", f + h)
        dn = FrequencyTable("uniform", f - h)
        val = (_score(scheme, zq, zk, pq, pk, up) - _score(scheme, zq, zk, pq, pk, dn)) / (2 * h)
        return np.full_like(f, val)
    out = np.zeros_like(f)
    for d in range(f.shape[0]):
        for m in range(f.shape[1]):
            fp, fm = f.copy(), f.copy()
            fp[d, m] += h
            fm[d, m] -= h
            tp = FrequencyTable(table.scheme, fp)
            tm = FrequencyTable(table.scheme, fm)
            out[d, m] = (_score(scheme, zq, zk, pq, pk, tp) - _score(scheme, zq, zk, pq, pk, tm)) / (2 * h)
    return out


GRAD_CASES = [("rope1d", 8, 1), ("axial", 16, 2), ("mixed", 8, 2),
              ("spherical", 9, 2), ("uniform", 8, 2)]


@pytest.mark.parametrize("scheme,dim,axes", GRAD_CASES)
def test_grad_frequencies_matches_fd(scheme, dim, axes):
    rng = np.random.default_rng(17)
    block = E.SCHEMES[scheme][0]
    for _ in range(20):
        if scheme == "uniform":
            table = FrequencyTable("uniform", np.full((dim // block, 2), rng.uniform(0.3, 2.0)))
        else:
            table = FrequencyTable(scheme, rng.uniform(0.1, 2.0, (dim // block, axes)))
        zq, zk = rng.standard_normal(dim), rng.standard_normal(dim)
        pq = rng.uniform(-np.pi, np.pi, axes)
        pk = rng.uniform(-np.pi, np.pi, axes)
        if axes == 1:
            pq, pk = pq[0], pk[0]
        got = E.grad_frequencies(scheme, zq, zk, pq, pk, table)
        want = _fd_grad(scheme, zq, zk, pq, pk, table)
        err = np.abs(got - want) / np.maximum(np.abs(want), 1e-3)
        assert np.max(err) <= GRAD_RTOL


def test_grad_zero_positions_is_zero():
    table = FrequencyTable.fixed("mixed", 8)
    g = E.grad_frequencies("mixed", np.ones(8), np.ones(8), (0.0, 0.0), (0.0, 0.0), table)
    np.testing.assert_array_equal(g, np.zeros_like(table.freqs))


def test_grad_uniform_entries_all_equal():
    table = FrequencyTable("uniform", np.full((2, 2), 0.8))
    rng = np.random.default_rng(21)
    g = E.grad_frequencies("uniform", rng.standard_normal(8), rng.standard_normal(8),
                           (0.2, -0.5), (1.0, 0.3), table)
    assert np.all(g == g.flat[0])


def test_grad_unsupported_scheme():
    table = FrequencyTable.fixed("rope1d", 8)
    with pytest.raises(ValueError):
        E.grad_frequencies("trivial2d", np.ones(8), np.ones(8), (0, 0), (1, 1), table)


# ---------------------------------------------------------------------------
# encoder objects and configs
# ---------------------------------------------------------------------------


def test_make_encoder_validation():
    with pytest.raises(ValueError):
        E.make_encoder("axial", 10)
    with pytest.raises(ValueError):
        E.make_encoder("nope", 8)
    with pytest.raises(ValueError):
        E.make_encoder("rope1d")
    with pytest.raises(ValueError):
        E.make_encoder("liere")
    with pytest.raises(ValueError):
        E.make_encoder("uniform", 8, table=FrequencyTable.fixed("axial", 8))


def test_encoder_pattern_slices():
    enc = E.make_encoder("axial", 16)
    assert enc.pattern_blocks == 8
    assert enc.pattern_slice(0) == slice(0, 2)
    sph = E.make_encoder("spherical", 12)
    assert sph.pattern_blocks == 4
    assert sph.pattern_slice(3) == slice(9, 12)
    with pytest.raises(ValueError):
        sph.pattern_slice(4)


def test_config_round_trip_base():
    enc = E.make_encoder("axial", 16, base=50.0)
    cfg = E.encoder_to_config(enc)
    assert cfg == {"scheme": "axial", "dim": 16, "axes": 2, "base": 50.0}
    enc2 = E.encoder_from_config(cfg)
    assert E.encoder_to_config(enc2) == cfg
    np.testing.assert_array_equal(enc.table.freqs, enc2.table.freqs)


def test_config_round_trip_explicit_freqs():
    f = [[0.5, 1.25], [0.125, 2.0]]
    enc = E.encoder_from_config({"scheme": "mixed", "dim": 4, "freqs": f})
    cfg = E.encoder_to_config(enc)
    assert cfg["freqs"] == f
    enc2 = E.encoder_from_config(cfg)
    assert E.encoder_to_config(enc2) == cfg


def test_config_round_trip_uniform():
    cfg = {"scheme": "uniform", "dim": 8, "axes": 2, "uniform_freq": 0.75}
    enc = E.encoder_from_config(cfg)
    assert E.encoder_to_config(enc) == cfg


def test_config_dump_is_byte_stable():
    cfg = {"scheme": "rope1d", "dim": 16, "axes": 1, "base": 100.0}
    text = E.dump_config(cfg)
    assert E.dump_config(E.parse_config(text)) == text


def test_config_rejects_bad_inputs():
    with pytest.raises(ValueError):
        E.encoder_from_config({"scheme": "axial", "dim": 8, "base": 10.0, "freqs": [[1, 1]]})
    with pytest.raises(ValueError):
        E.encoder_from_config({"scheme": "axial", "dim": 8, "volume": 11})
    with pytest.raises(ValueError):
        E.encoder_from_config({"scheme": "axial"})
    with pytest.raises(ValueError):
        E.encoder_from_config({"scheme": "rope1d", "dim": 8, "axes": 2})
    with pytest.raises(ValueError):
        E.encoder_from_config({"scheme": "rope1d", "dim": 8, "uniform_freq": 2.0})
    with pytest.raises(ValueError):
        E.parse_config("{not json")
    with pytest.raises(ValueError):
        E.encoder_to_config(E.make_encoder("liere", generators=[np.array([[0.0, -1.0], [1.0, 0.0]])]))


def test_encoder_liere_round_trip_dim():
    gen = np.array([[0.0, -1.0], [1.0, 0.0]])
    enc = E.make_encoder("liere", generators=[gen, 0.5 * gen])
    assert enc.dim == 2
    assert enc.axes == 2
    out = enc.encode([1.0, 0.0], [0.3, 0.4])
    assert np.linalg.norm(out) == pytest.approx(1.0)
