import numpy as np
import pytest
import scipy.linalg

from lctkit import (
    Metric,
    Signature,
    boost_matrix,
    embed_fourier_like,
    embed_pseudo_orthogonal,
    is_pseudo_unitary,
    make_lct,
    make_pseudo_unitary_lct,
    pair_to_json_dict,
    pseudo_unitarity_residuals,
    random_lct,
    relation_residuals,
    to_bogoliubov,
)

M10 = Metric(Signature(1, 0))
M13 = Metric(Signature(1, 3))


def identity_lct(metric):
    n = metric.dim
    eye, zero = np.eye(n), np.zeros((n, n))
    return make_lct(eye, zero, zero, eye, metric)


def random_pseudo_unitary(metric, rng):
    """Random U(N+, N-) element w = exp(i eta S), split as (a, b) with w = a - i b."""
    n = metric.dim
    eta = metric.matrix
    raw = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    S = 0.5 * (raw + raw.conj().T)
    w = scipy.linalg.expm(1j * eta @ S)
    return w.real, -w.imag


def test_identity_maps_to_trivial_pair():
    pair = to_bogoliubov(identity_lct(M13))
    np.testing.assert_array_equal(pair.w, np.eye(4))
    np.testing.assert_array_equal(pair.v, np.zeros((4, 4)))
    assert pseudo_unitarity_residuals(pair) == (0.0, 0.0)


def test_fourier_pair():
    fourier = make_lct([[0.0]], [[1.0]], [[-1.0]], [[0.0]], M10)
    pair = to_bogoliubov(fourier)
    np.testing.assert_allclose(pair.w, [[-1j]], atol=1e-15)
    np.testing.assert_allclose(pair.v, [[0.0]], atol=1e-15)


def test_fractional_pair_is_unit_phase():
    theta = 0.8
    c, s = np.cos(theta), np.sin(theta)
    L = make_lct([[c]], [[s]], [[-s]], [[c]], M10)
    pair = to_bogoliubov(L)
    np.testing.assert_allclose(pair.w, [[np.exp(-1j * theta)]], atol=1e-15)
    np.testing.assert_allclose(pair.v, [[0.0]], atol=1e-15)


def test_shear_is_not_pseudo_unitary():
    shear = make_lct([[1.0]], [[1.0]], [[0.0]], [[1.0]], M10)
    pair = to_bogoliubov(shear)
    np.testing.assert_allclose(pair.v, [[-0.5j]], atol=1e-15)
    r_v, _ = pseudo_unitarity_residuals(pair)
    assert r_v == pytest.approx(0.5)
    assert not is_pseudo_unitary(pair)


def test_pseudo_unitary_construction_classifies_correctly():
    rng = np.random.default_rng(5)
    for metric in (M10, Metric(Signature(1, 1)), M13):
        for _ in range(10):
            a, b = random_pseudo_unitary(metric, rng)
            L = make_pseudo_unitary_lct(a, b, metric, tol=1e-10)
            r_v, r_u = pseudo_unitarity_residuals(to_bogoliubov(L))
            assert r_v <= 1e-12
            assert r_u <= 1e-10


def test_embeddings_classify_pseudo_unitary():
    boost = embed_pseudo_orthogonal(boost_matrix(M13, 0, 1, 0.8), M13)
    assert is_pseudo_unitary(to_bogoliubov(boost))
    fourier_like = embed_fourier_like(np.eye(4), M13)
    assert is_pseudo_unitary(to_bogoliubov(fourier_like))


def test_group_relation_holds_for_every_valid_lct():
    # the daggers-on-the-right first relation repackages the symplectic
    # condition exactly; the as-printed variant only does so when v+ eta v
    # happens to be real (always true in 1-D)
    for sig in (Signature(1, 0), Signature(1, 1), Signature(1, 3), Signature(2, 1)):
        for seed in range(15):
            pair = to_bogoliubov(random_lct(sig, seed, 0.5))
            res = relation_residuals(pair)
            assert res.first_group <= 1e-9
            if sig.dim == 1:
                assert res.first_printed <= 1e-9


def test_vanishing_v_iff_pseudo_unitary_block_structure():
    rng = np.random.default_rng(11)
    for seed in range(10):
        L = random_lct(Signature(1, 1), seed, 0.5)
        pair = to_bogoliubov(L)
        gap = max(np.max(np.abs(L.a - L.d)), np.max(np.abs(L.b + L.c)))
        r_v = pseudo_unitarity_residuals(pair)[0]
        if r_v <= 1e-12:
            assert gap <= 2e-12
        if gap <= 1e-12:
            assert r_v <= 1e-12
    # forced pseudo-unitary block structure gives v = 0 identically
    a, b = random_pseudo_unitary(M13, rng)
    L = make_pseudo_unitary_lct(a, b, M13, tol=1e-10)
    assert pseudo_unitarity_residuals(to_bogoliubov(L))[0] == 0.0


def test_pair_json_uses_re_im_pairs():
    pair = to_bogoliubov(identity_lct(M10))
    data = pair_to_json_dict(pair)
    assert data["w"] == [[[1.0, 0.0]]]
    assert data["v"] == [[[0.0, 0.0]]]
    assert data["signature"] == {"n_plus": 1, "n_minus": 0}
