import pytest

from src.api.commands.free_space import asymptotes, free_space_point


@pytest.mark.parametrize("pair_name", ["pair", "mixed_pair"])
def test_nonretarded_asymptote_matches_potential(request, potentials, forces, pair_name):
    pair = request.getfixturevalue(pair_name)
    coeffs = potentials.asymptotic_coefficients(pair)

    row = free_space_point(1e-3, potentials, forces, pair, coeffs)

    assert row["U_nonretarded_asymptote"] == pytest.approx(row["U"], rel=1e-2)


def test_em_asymptotes_are_repulsive_powers(potentials, mixed_pair):
    coeffs = potentials.asymptotic_coefficients(mixed_pair)

    retarded, nonretarded = asymptotes(0.1, mixed_pair, coeffs)

    assert retarded == pytest.approx(coeffs.c7_em * 1e7)
    assert nonretarded == pytest.approx(coeffs.c4 * 1e4)
    assert retarded > 0 and nonretarded > 0


def test_ee_asymptotes_are_attractive(potentials, pair):
    coeffs = potentials.asymptotic_coefficients(pair)

    retarded, nonretarded = asymptotes(2.0, pair, coeffs)

    assert retarded == pytest.approx(-coeffs.c7_ee / 2.0 ** 7)
    assert nonretarded == pytest.approx(-coeffs.c6 / 2.0 ** 6)
