import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genkostka.core import QPoly, n_stat, partitions, rects, transpose, transpose_rects
from genkostka.kostka import cocharge_kostka_foulkes
from genkostka.lrtab import lr_seq_coeff
from genkostka.riggedconf import (
    QUANTUM,
    Configuration,
    ConfigurationError,
    ConventionError,
    MatrixFormatError,
    MMatrix,
    RiggedConfiguration,
    RiggingError,
    charge_config,
    charge_rc,
    cocharge_config,
    cocharge_rc,
    config_sizes,
    duality_type,
    enumerate_configurations,
    enumerate_rc,
    enumerate_riggings,
    fishel_m_poly,
    fishel_rects,
    from_m_matrix,
    is_admissible,
    m_matrix,
    omega_complement,
    rc_duality,
    rc_polynomial,
    rc_transpose,
    size_valid_configurations,
    vacancy,
    vacancy_table,
    zeta_embed,
)

import reference_data as ref


@pytest.fixture(scope="module")
def nu():
    (c,) = enumerate_configurations(ref.LAM, ref.R)
    return c


def test_unique_admissible_configuration(nu):
    assert nu.nus == ref.NU
    assert vacancy_table(nu, 7, 3) == ref.VACANCY


def test_cocharge_of_configuration(nu):
    assert cocharge_config(nu) == 3


def test_riggings(nu):
    rs = enumerate_riggings(nu)
    assert len(rs) == 4
    want = {RiggedConfiguration(nu, L) for L in ref.RIGGINGS}
    assert set(rs) == want
    L_max = tuple(tuple(vacancy(nu, k, n) for n in p) for k, p in enumerate(nu.nus, 1))
    assert L_max == ref.L_MAX


def test_rc_polynomial_both_routes():
    want = QPoly({3: 1}) * QPoly({0: 1, 1: 1}) * QPoly({0: 1, 1: 1})
    assert rc_polynomial(ref.LAM, ref.R, "fermionic") == want
    assert rc_polynomial(ref.LAM, ref.R, "enumerate") == want


def test_transposed_configuration_and_vacancies():
    (c,) = enumerate_configurations(ref.LAM_T, transpose_rects(ref.R))
    assert c.nus == ref.NU_HAT
    assert cocharge_config(c) == 4
    assert vacancy_table(c, 6, 4) == ref.NU_HAT_VACANCY
    assert rc_polynomial(ref.LAM_T, transpose_rects(ref.R)) == ref.K


def test_rc_transpose_on_reference(nu):
    for rc in enumerate_riggings(nu):
        h = rc_transpose(rc)
        assert h.config.nus == ref.NU_HAT
        assert cocharge_rc(rc) + cocharge_rc(h) == ref.N_R
        assert rc_transpose(h) == rc


def test_omega_and_charge(nu):
    for rc in enumerate_riggings(nu):
        om = omega_complement(rc)
        assert om.convention == QUANTUM
        assert omega_complement(om) == rc
        assert charge_rc(om) + cocharge_rc(rc) == ref.N_R
    assert sorted(charge_rc(omega_complement(rc)) for rc in enumerate_riggings(nu)) == [4, 5, 5, 6]


def test_convention_guards(nu):
    rc = enumerate_riggings(nu)[0]
    with pytest.raises(ConventionError):
        charge_rc(rc)
    with pytest.raises(ConventionError):
        cocharge_rc(omega_complement(rc))
    with pytest.raises(ConventionError):
        RiggedConfiguration(nu, rc.labels, "other")


def test_m_matrix(nu):
    m = m_matrix(nu)
    assert all(s == 0 for s in m.col_sums())
    assert from_m_matrix(m, ref.LAM, ref.R) == nu
    assert cocharge_config(nu) == sum(x * (x - 1) // 2 for row in m.entries for x in row)
    with pytest.raises(MatrixFormatError):
        from_m_matrix(MMatrix(((1,),)), ref.LAM, ref.R)


def test_charge_config_matches_omega(nu):
    om = omega_complement(enumerate_riggings(nu)[0])
    assert charge_config(nu) == charge_rc(om) - om.label_sum()


def test_zeta_preserves_charge(nu):
    for rc in enumerate_riggings(nu):
        om = omega_complement(rc)
        z = zeta_embed(om)
        assert z.config.R == rects(*[(1, 3)] * 2, *[(1, 2)] * 4, *[(1, 1)] * 3)
        assert charge_rc(z) == charge_rc(om)


def test_rc_duality_on_transposed_type():
    Rt = transpose_rects(ref.R)
    for rc in enumerate_rc(ref.LAM_T, Rt):
        d = rc_duality(rc, 5)
        assert d.config.lam == transpose((5, 5, 5, 4, 3, 3, 2, 1))
        assert d.config.R == rects((2, 2), (3, 4), (4, 3))
        assert cocharge_rc(d) == cocharge_rc(rc)
        assert rc_duality(d, 5) == rc
    assert duality_type(ref.LAM_T, Rt, 5)[1] == rects((2, 2), (3, 4), (4, 3))


def test_duality_rejects_small_box():
    rc = enumerate_rc(ref.LAM_T, transpose_rects(ref.R))[0]
    with pytest.raises(ValueError):
        rc_duality(rc, 2)


def test_configuration_validation():
    with pytest.raises(ConfigurationError):
        Configuration((2,), rects((1, 1)), ())
    with pytest.raises(ConfigurationError):
        Configuration((1, 1), rects((1, 1), (1, 1)), ((2,),))
    assert config_sizes((1, 1), rects((1, 1), (1, 1))) == [1]


def test_rigging_validation(nu):
    with pytest.raises(RiggingError):
        RiggedConfiguration(nu, ((1,), (0, 0), (0, 0), (0, 0), (0,)))
    with pytest.raises(RiggingError):
        RiggedConfiguration(nu, ((0,),))


def test_json_round_trip(nu):
    for rc in enumerate_riggings(nu):
        assert RiggedConfiguration.from_json(rc.to_json()) == rc
    assert Configuration.from_json(nu.to_json()) == nu


def test_fishel_examples():
    assert fishel_rects(4, 1, 1) == rects((2, 1), (1, 1), (1, 1))
    assert fishel_m_poly((2, 1), 3, 0, 0) == QPoly({2: 1, 1: 1})
    assert fishel_m_poly((2, 2), 4, 1, 1) == QPoly({2: 1})
    with pytest.raises(ValueError):
        fishel_rects(3, 2, 0)


@pytest.mark.parametrize("mu", [(2, 1), (1, 1, 1), (2, 2), (2, 1, 1), (3, 1, 1), (2, 2, 1)])
def test_single_rows_give_cocharge_kostka_foulkes(mu):
    R = rects(*[(1, m) for m in mu])
    for lam in partitions(sum(mu)):
        assert rc_polynomial(lam, R) == cocharge_kostka_foulkes(lam, mu)


type_strategy = st.sampled_from(
    [
        ((3, 2, 1), rects((1, 2), (2, 1), (1, 1))),
        ((2, 2, 1), rects((2, 1), (1, 2), (1, 1))),
        ((3, 3), rects((2, 2), (1, 2))),
        ((4, 2, 2), rects((2, 2), (2, 2))),
        ((3, 2, 2, 1), rects((2, 3), (2, 1))),
        ((2, 2, 2, 2), rects((2, 2), (2, 1), (2, 1))),
    ]
)


@settings(max_examples=25, deadline=None)
@given(type_strategy)
def test_fermionic_count_is_lr_coefficient(inst):
    lam, R = inst
    assert len(enumerate_rc(lam, R)) == lr_seq_coeff(lam, R)
    assert rc_polynomial(lam, R, "fermionic") == rc_polynomial(lam, R, "enumerate")


@settings(max_examples=25, deadline=None)
@given(type_strategy)
def test_admissibility_modes_agree(inst):
    lam, R = inst
    for c in size_valid_configurations(lam, R):
        modes = {is_admissible(c, m) for m in ("direct", "support", "strengthened")}
        assert len(modes) == 1


@settings(max_examples=25, deadline=None)
@given(type_strategy)
def test_transpose_is_cocharge_complementing_bijection(inst):
    lam, R = inst
    N = n_stat(R)
    images = set()
    for rc in enumerate_rc(lam, R):
        h = rc_transpose(rc)
        images.add(h)
        assert cocharge_rc(rc) + cocharge_rc(h) == N
        assert rc_transpose(h) == rc
    assert len(images) == len(enumerate_rc(transpose(lam), transpose_rects(R)))


def test_convexity_holds_off_the_support_but_not_on_it():
    # nu = ((1)) for (2,1);(1x1,1x2): P_{1,n} = 0, 0, 1 for n = 0, 1, 2
    c = Configuration((2, 1), rects((1, 1), (1, 2)), ((1,),))
    assert is_admissible(c)
    assert [vacancy(c, 1, n) for n in range(3)] == [0, 0, 1]
    assert 2 * vacancy(c, 1, 1) < vacancy(c, 1, 0) + vacancy(c, 1, 2)
    for k in range(1, 4):
        for n in range(1, 5):
            second = 2 * vacancy(c, k, n) - vacancy(c, k, n - 1) - vacancy(c, k, n + 1)
            delta = sum(1 for r in c.R if r.rows == k and r.cols == n)
            assert second == c.mult(k - 1, n) - 2 * c.mult(k, n) + c.mult(k + 1, n) + delta


def test_transpose_exchange_carries_a_shape_correction():
    lam, R = (1, 1), rects((1, 1), (1, 1))
    (rc,) = enumerate_rc(lam, R)
    h = rc_transpose(rc)
    assert rc.config.mult(1, 1) == 1 and vacancy(h.config, 1, 1) == 2
    lt = transpose(lam)
    at = lambda p, i: p[i - 1] if i <= len(p) else 0
    for i in range(1, 4):
        for j in range(1, 4):
            assert vacancy(h.config, i, j) == rc.config.mult(j, i) + min(at(lt, i), j) - min(at(lt, i + 1), j)
