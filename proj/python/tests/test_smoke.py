import pytest

import lieord


def test_sym():
    assert lieord.nr_element_orders_sym(4) == 4
    assert lieord.partition_number_matrix(3) == [[0, 0], [1, 0], [0, 1]]
    assert lieord.omicron_sym_constants_argmax(lieord.omicron_sym_constants(200)) == 66


def test_big_integers():
    assert lieord.lcm_list([]) == 1
    assert lieord.nr_divisors(2**200 * 3**100) == 201 * 101
    assert lieord.group_order("E8", 0, 2) > 2**64
    assert lieord.factorize(360) == [(2, 3), (3, 2), (5, 1)]


def test_lie():
    assert lieord.group_order("2B2", 0, 8) == 29120
    assert lieord.spec_name("2A", 2, 9) == "2A_2(9)"
    assert lieord.exceptional_spectrum("2B2", 8) == [1, 2, 4, 5, 7, 13]
    r = lieord.epsilon_omega_lower("2B2", 0, 8)
    assert r["omega_bound"] == 4
    assert r["value"] == pytest.approx(0.14012, abs=1e-4)


def test_errors():
    with pytest.raises(lieord.NotAvailable, match="Please set the quality level to 2."):
        lieord.nr_aut_orbits_lower("A", 1, 5, level=1)
    with pytest.raises(ValueError):
        lieord.group_order("A", 1, 6)
    assert lieord.epsilon_omega_general2(5) is None


def test_oracle():
    info = lieord.group_info("PSL(2,7)", aut=True)
    assert info["order"] == 168
    assert info["element_orders"] == [1, 2, 3, 4, 7]
    assert info["omega"] == 5


def test_cli():
    code, out, err = lieord.run_cli(["sym", "omicron", "--n", "10"])
    assert (code, out, err) == (0, "16\n", "")
