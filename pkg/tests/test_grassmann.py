import random

import pytest
from sympy import Matrix, Rational, zeros

from conftest import random_cactus_networks, random_connected_networks, random_networks

from app.core.combinat import enumerate_noncrossing, kreweras_complement
from app.core.electrical import lstar_from_resistance, resistance_matrix, response_matrix
from app.core.errors import ChartPivotError, NotInImageError, PreconditionError
from app.core.exterior import parse_index_set, plucker, proportional, subspace_from_coordinates
from app.core.forms import d_matrix, is_isotropic, kappa, omega, omega_d
from app.core.grassmann import (
    block_wedge,
    chart_for_network,
    chart_from_lstar,
    chart_from_response,
    cyclic_shift,
    extract_from_network,
    extract_symmetric,
    extreme_coordinates,
    f_sigma,
    lam_map,
    lambda_from_coordinates,
    representative,
    resistance_from_coordinates,
    response_from_coordinates,
    shift_coordinates,
)
from app.core.groves import lambda_vector
from app.core.models import ExteriorVector, GroveMeasurements, NoncrossingPartition, SubspaceRep

S = Rational

# Representatives of the star network Y(1, 2, 3) in the two charts.
STAR_X = Matrix([
    [0, 6, 0, -6, 0, 6],
    [1, S(1, 3), 0, 0, 0, S(-1, 2)],
    [0, S(-1, 3), -1, -1, 0, 0],
    [0, 0, 0, 1, 1, S(1, 2)],
])
STAR_X_TILDE = Matrix([
    [6, 0, -6, 0, 6, 0],
    [1, 1, S(1, 2), 0, 0, 0],
    [0, 0, S(-1, 2), -1, S(-1, 3), 0],
    [-1, 0, 0, 0, S(1, 3), 1],
])


def coordinate(vector, text):
    return vector.get(parse_index_set(text))


def random_response(n: int, rng: random.Random, nonnegative: bool = True) -> Matrix:
    m = zeros(n, n)
    for i in range(n):
        for j in range(i + 1, n):
            low = 0 if nonnegative else -3
            m[i, j] = m[j, i] = S(rng.randint(low, 4), rng.randint(1, 3))
    for i in range(n):
        m[i, i] = -sum(m[i, j] for j in range(n) if j != i)
    return m


# -----------------------------
# Lam's map
# -----------------------------

def test_f_sigma_for_two_singletons():
    v = f_sigma(NoncrossingPartition.singletons(2))
    assert {v.key_label(k): c for k, c in v.coords.items()} == {"1,1~,2": 1, "1,2,2~": 1}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_f_sigma_matches_the_block_wedge_up_to_sign(n):
    for sigma in enumerate_noncrossing(n):
        left, right = f_sigma(sigma), block_wedge(sigma)
        factor = proportional(right, left)
        assert factor in (1, -1)


def test_star_image_coordinates(y_net):
    v = lam_map(lambda_vector(y_net))
    assert coordinate(v, "1,2,3,1~") == 6
    assert coordinate(v, "1,2,1~,2~") == 6
    assert coordinate(v, "1,2,2~,3~") == 9
    assert coordinate(v, "1,1~,2~,3~") == 6


def test_star_representatives_span_the_image(y_net):
    v = lam_map(lambda_vector(y_net))
    for rep in (STAR_X, STAR_X_TILDE):
        point = SubspaceRep(matrix=rep)
        assert proportional(plucker(point), v) is not None
        assert is_isotropic(point, omega(3))
        assert is_isotropic(SubspaceRep(matrix=rep * d_matrix(3)), omega_d(3))
    factor = proportional(plucker(SubspaceRep(matrix=STAR_X)), plucker(SubspaceRep(matrix=STAR_X_TILDE)))
    assert factor in (1, -1)


def test_star_charts_match_the_worked_representatives(y_net):
    by_response = chart_from_response(response_matrix(y_net))
    by_lstar = chart_from_lstar(lstar_from_resistance(resistance_matrix(y_net)))
    assert proportional(plucker(by_response), plucker(SubspaceRep(matrix=STAR_X))) is not None
    assert proportional(plucker(by_lstar), plucker(SubspaceRep(matrix=STAR_X_TILDE))) is not None


@pytest.mark.parametrize("net", random_networks(15, seed=3))
def test_lambda_is_recovered_from_coordinates(net):
    values = lambda_vector(net)
    assert lambda_from_coordinates(lam_map(values)).values == values.values


def test_vector_outside_the_span_is_rejected():
    v = ExteriorVector(n=2, degree=3, coords={(0, 1, 2): 1})
    with pytest.raises(NotInImageError):
        lambda_from_coordinates(v)


# -----------------------------
# Converse direction at desk scale
# -----------------------------

@pytest.mark.parametrize("seed", range(12))
def test_chart_points_have_nonnegative_measurements(seed):
    rng = random.Random(seed)
    n = 2 + seed % 2
    rep = chart_from_response(random_response(n, rng))
    assert is_isotropic(rep, omega(n))
    values = lambda_from_coordinates(plucker(rep))
    base = values.get(NoncrossingPartition.singletons(n))
    assert base != 0
    assert all(value * base > 0 for value in values.values.values())


@pytest.mark.parametrize("net", random_connected_networks(6, sizes=(4,), seed=17))
def test_four_point_response_charts_have_nonnegative_measurements(net):
    rep = chart_from_response(response_matrix(net))
    values = lambda_from_coordinates(plucker(rep))
    base = values.get(NoncrossingPartition.singletons(4))
    assert all(value * base > 0 for value in values.values.values())
    assert proportional(lam_map(values), lam_map(lambda_vector(net))) is not None


@pytest.mark.parametrize("seed", range(4))
def test_signed_four_point_charts_lie_in_the_span(seed):
    rep = chart_from_response(random_response(4, random.Random(seed), nonnegative=False))
    v = plucker(rep)
    assert kappa(omega(4), v).is_zero()
    assert lam_map(lambda_from_coordinates(v)).coords == v.coords


# -----------------------------
# Cyclic shift
# -----------------------------

@pytest.mark.parametrize("net", random_connected_networks(8, seed=23))
def test_shift_of_a_representative_shifts_its_coordinates(net):
    rep = chart_from_response(response_matrix(net))
    assert plucker(cyclic_shift(rep)).coords == shift_coordinates(plucker(rep)).coords
    assert is_isotropic(cyclic_shift(rep), omega(net.n))


def test_shift_coordinates_of_a_basis_vector():
    v = ExteriorVector(n=2, degree=3, coords={(0, 1, 2): 1})
    assert shift_coordinates(v).coords == {(0, 1, 3): 1}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_shift_sends_each_basis_vector_to_the_complement(n):
    for sigma in enumerate_noncrossing(n):
        assert shift_coordinates(f_sigma(sigma)).coords == f_sigma(kreweras_complement(sigma)).coords


# -----------------------------
# Extreme coordinates and Δ-ratio forms
# -----------------------------

def test_extreme_coordinates(y_net, shorted_net, disconnected_net):
    star = extreme_coordinates(lam_map(lambda_vector(y_net)))
    assert (star.not_shorted, star.connected) == (6, 6)
    shorted = extreme_coordinates(lam_map(lambda_vector(shorted_net)))
    assert shorted.not_shorted == 0 and shorted.connected == 2
    apart = extreme_coordinates(lam_map(lambda_vector(disconnected_net)))
    assert apart.not_shorted == 1 and apart.connected == 0


def test_extreme_coordinates_need_an_isotropic_vector():
    with pytest.raises(NotInImageError):
        extreme_coordinates(ExteriorVector(n=2, degree=3, coords={(0, 1, 2): 1}))


@pytest.mark.parametrize("net", random_networks(20, seed=41))
def test_extreme_coordinates_are_constant(net):
    result = extreme_coordinates(lam_map(lambda_vector(net)))
    values = lambda_vector(net)
    assert result.not_shorted == values.get(NoncrossingPartition.singletons(net.n))
    assert result.connected == values.get(NoncrossingPartition.whole(net.n))


@pytest.mark.parametrize("net", random_cactus_networks(12, seed=47))
def test_extreme_coordinates_of_glued_networks(net):
    result = extreme_coordinates(lam_map(lambda_vector(net)))
    assert result.not_shorted == 0
    assert result.connected == lambda_vector(net).get(NoncrossingPartition.whole(net.n))


@pytest.mark.parametrize("net", random_connected_networks(12, seed=13))
def test_ratio_forms_agree_with_linear_algebra(net):
    v = lam_map(lambda_vector(net))
    assert response_from_coordinates(v) == response_matrix(net).matrix
    assert resistance_from_coordinates(v) == resistance_matrix(net).matrix


def test_ratio_forms_on_degenerate_points(shorted_net, disconnected_net):
    with pytest.raises(ChartPivotError):
        response_from_coordinates(lam_map(lambda_vector(shorted_net)))
    with pytest.raises(ChartPivotError):
        resistance_from_coordinates(lam_map(lambda_vector(disconnected_net)))


# -----------------------------
# Charts and extraction
# -----------------------------

@pytest.mark.parametrize("net", random_connected_networks(12, seed=29))
def test_chart_round_trips(net):
    response = response_matrix(net)
    lstar = lstar_from_resistance(resistance_matrix(net))
    assert extract_symmetric(chart_from_response(response), "not-shorted").matrix == response.matrix
    assert extract_symmetric(chart_from_lstar(lstar), "connected").matrix == lstar.matrix
    assert extract_from_network(net, "not-shorted").matrix == response.matrix
    assert extract_from_network(net, "connected").matrix == lstar.matrix


def test_star_extraction(y_net):
    assert extract_from_network(y_net, "not-shorted").matrix == response_matrix(y_net).matrix


def test_chart_rejects_nonzero_row_sums():
    with pytest.raises(PreconditionError):
        chart_from_response(Matrix([[1, 1], [1, 1]]))


def test_points_outside_a_chart(shorted_net, disconnected_net):
    with pytest.raises(ChartPivotError):
        representative(lam_map(lambda_vector(shorted_net)), "not-shorted")
    with pytest.raises(ChartPivotError):
        representative(lam_map(lambda_vector(disconnected_net)), "connected")


def test_reconstructed_representative_is_the_same_point(cactus6_net):
    v = lam_map(lambda_vector(cactus6_net))
    rep = subspace_from_coordinates(v)
    assert proportional(plucker(rep), v) is not None
    assert is_isotropic(rep, omega(6))


def test_measurements_model_drops_zero_entries():
    values = GroveMeasurements(n=2, values={NoncrossingPartition.whole(2): 0, NoncrossingPartition.singletons(2): 3})
    assert list(values.values) == [NoncrossingPartition.singletons(2)]


# T for the star network, written with T_{j,1} free: each row differs from the
# chart's normalization T_{j,1} = 0 by a constant.
STAR_T = [[1, S(-1, 2), 0], [0, S(1, 2), S(-1, 3)], [-1, 0, S(1, 3)]]


def t_representative(t) -> SubspaceRep:
    n = len(t)
    pattern = zeros(n + 1, 2 * n)
    for i in range(n):
        pattern[0, 2 * i] = 1
    for j in range(n):
        pattern[j + 1, 2 * j + 1] = 1
        for i in range(n):
            pattern[j + 1, 2 * i] = t[j][i]
    return SubspaceRep(matrix=pattern * d_matrix(n))


def test_star_t_matrix_differences_are_the_dual_response(y_net):
    lstar = lstar_from_resistance(resistance_matrix(y_net)).matrix
    for j in range(3):
        for i in range(3):
            assert STAR_T[j][(i + 1) % 3] - STAR_T[j][i] == lstar[i, j]


def test_star_t_matrix_is_the_connected_chart_up_to_row_constants(y_net):
    chart = chart_for_network(y_net, "resistance")
    pattern = Matrix(chart.matrix) * d_matrix(3)
    assert [pattern[0, c] for c in range(6)] == [1, 0, 1, 0, 1, 0]
    for j in range(3):
        assert len({pattern[j + 1, 2 * i] - STAR_T[j][i] for i in range(3)}) == 1
    rep = t_representative(STAR_T)
    assert is_isotropic(rep, omega(3))
    assert extract_symmetric(rep, "connected").matrix == lstar_from_resistance(resistance_matrix(y_net)).matrix


def test_resistance_chart_of_a_shorted_network(shorted_net):
    rep = chart_for_network(shorted_net, "resistance")
    assert is_isotropic(rep, omega(3))
    assert proportional(plucker(rep), lam_map(lambda_vector(shorted_net))) is not None
    expected = Matrix([[0, 0, 0], [0, S(-1, 2), S(1, 2)], [0, S(1, 2), S(-1, 2)]])
    assert extract_symmetric(rep, "connected").matrix == expected
    assert extract_from_network(shorted_net, "connected").matrix == expected
    with pytest.raises(PreconditionError):
        chart_for_network(shorted_net, "response")
