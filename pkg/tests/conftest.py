import pytest

from tricore.families import VariableSpec, build_restricted_sl2, build_truncated_poly
from tricore.gmod import ModuleCategory


@pytest.fixture(scope="session")
def xy():
    """K[x,y]/(x^2,y^2), deg x = -1, deg y = +1."""
    A, tri, tau = build_truncated_poly(
        [VariableSpec("x", -1, 2), VariableSpec("y", 1, 2)])
    return A, tri, tau, ModuleCategory(A, tri)


@pytest.fixture(scope="session")
def x3y3():
    """K[x,y]/(x^3,y^3), deg x = -1, deg y = +1."""
    A, tri, tau = build_truncated_poly(
        [VariableSpec("x", -1, 3), VariableSpec("y", 1, 3)])
    return A, tri, tau, ModuleCategory(A, tri)


@pytest.fixture(scope="session")
def sl2():
    """Restricted enveloping algebra of sl2 at p = 3."""
    A, tri, omega = build_restricted_sl2(3)
    return A, tri, omega, ModuleCategory(A, tri)


@pytest.fixture(scope="session")
def xyz():
    """K[x,y,z]/(x^2,y^2,z^2), degrees -1, +1, +1 (not graded symmetric)."""
    A, tri, tau = build_truncated_poly(
        [VariableSpec("x", -1, 2), VariableSpec("y", 1, 2),
         VariableSpec("z", 1, 2)])
    return A, tri, tau, ModuleCategory(A, tri)
