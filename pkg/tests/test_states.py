import numpy as np
import pytest

from oam_mzi.states import (
    Basis,
    KET_L,
    KET_P45,
    KET_R,
    KET_X,
    KET_Y,
    PhotonState,
    PolVector,
    convert_basis,
    inner_product,
    total_norm,
)

TOL = 1e-12


def test_x_in_rl_basis():
    v = convert_basis(KET_X, Basis.RL)
    assert v.basis is Basis.RL
    assert abs(v.c0 - 1 / np.sqrt(2)) <= TOL
    assert abs(v.c1 - 1 / np.sqrt(2)) <= TOL


def test_same_basis_conversion_is_identity():
    assert convert_basis(KET_R, Basis.RL) is KET_R


def test_p45_in_xy_basis():
    v = convert_basis(KET_P45, Basis.XY)
    assert abs(v.c0 - 1 / np.sqrt(2)) <= TOL
    assert abs(v.c1 - 1 / np.sqrt(2)) <= TOL


def test_inner_product_orthonormality():
    assert abs(inner_product(KET_X, KET_X) - 1) <= TOL
    assert abs(inner_product(KET_X, KET_Y)) <= TOL


def test_inner_product_p45_L():
    # oracle: expand both kets in XY and multiply componentwise
    got = inner_product(KET_P45, KET_L)
    assert abs(got - (0.5 + 0.5j)) <= TOL


def test_total_norm_of_normalized_input():
    state = PhotonState({("single", 2): PolVector(Basis.RL, 0.6, 0.8j)})
    assert abs(total_norm(state) - 1.0) <= TOL


def test_total_norm_two_orthogonal_labels():
    f = 1 / np.sqrt(2)
    state = PhotonState(
        {
            ("single", 1): PolVector(Basis.XY, f, 0.0),
            ("single", -1): PolVector(Basis.XY, 0.0, f),
        }
    )
    assert abs(total_norm(state) - 1.0) <= TOL


def test_total_norm_empty_map():
    assert total_norm(PhotonState({})) == 0.0


def test_oam_cap_enforced():
    with pytest.raises(ValueError):
        PhotonState({("single", 65): KET_X})


def test_round_trip_random_vectors():
    rng = np.random.default_rng(7)
    for _ in range(1000):
        c = rng.standard_normal(4)
        v = PolVector(Basis.XY, complex(c[0], c[1]), complex(c[2], c[3]))
        w = convert_basis(
            convert_basis(convert_basis(v, Basis.RL), Basis.DIAG), Basis.XY
        )
        assert np.max(np.abs(w.components() - v.components())) <= TOL
        for target in Basis:
            assert abs(convert_basis(v, target).norm() - v.norm()) <= TOL * max(
                1.0, v.norm()
            )


def test_inner_product_conjugate_symmetry():
    rng = np.random.default_rng(11)
    for _ in range(200):
        c = rng.standard_normal(8)
        u = PolVector(Basis.XY, complex(c[0], c[1]), complex(c[2], c[3]))
        v = PolVector(Basis.RL, complex(c[4], c[5]), complex(c[6], c[7]))
        assert abs(inner_product(u, v) - np.conj(inner_product(v, u))) <= 1e-15 * max(
            1.0, u.norm() * v.norm()
        )
