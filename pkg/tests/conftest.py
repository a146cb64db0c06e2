import numpy as np
import pytest

from slocc4 import PureState, apply_slocc
from slocc4.canonical import TRI_STATES, FamilySpec, make_canonical, random_slocc

GHZ3 = np.array([1, 0, 0, 0, 0, 0, 0, 1], dtype=np.complex128)
W3 = np.array([0, 1, 1, 0, 1, 0, 0, 0], dtype=np.complex128)

FAMILY_TAGS = (
    "W000_000",
    "W000_0Psi",
    "W000_GHZ",
    "W000_W",
    "W0kPsi_0kPsi",
    "W0iPsi_0jPsi",
    "W0Psi_GHZ",
    "W0kPsi_W",
    "WGHZ_W",
    "WW_W",
)


@pytest.fixture(scope="session")
def canonical_states():
    return {tag: make_canonical(FamilySpec(tag)) for tag in FAMILY_TAGS}


def tri_canonical(name) -> PureState:
    return PureState(np.array(TRI_STATES[name], dtype=np.complex128))


def random_image(base: PureState, rng, max_condition=1e3) -> PureState:
    return apply_slocc(base, random_slocc(base.n, max_condition, rng))


def iva1_phi0(psi00=1.0, psi01=2.0, psi10=3.0) -> np.ndarray:
    """|0> x Psi with Psi = psi00|00> + psi01|01> + psi10|10> (entangled,
    vanishing |11> component): the separable-point construction."""
    psi = np.array([psi00, psi01, psi10, 0.0], dtype=np.complex128)
    return np.kron(np.array([1.0, 0.0], dtype=np.complex128), psi)
