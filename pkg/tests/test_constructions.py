import itertools

import pytest

from groupcodes.codes import is_divisible, min_weight, paut_contains, paut_enumerate
from groupcodes.constructions import (
    BlockIndex,
    PAutDecomposition,
    build_A5,
    build_cyclic,
    build_dihedral,
    build_Gpqm,
    decompose_paut_element,
    direct_product,
    parse_group_spec,
    prescribed_commutator_group,
    rep_code,
    rep_sum_code,
    rep_sum_paut_generators,
    smallest_valid_m,
)
from groupcodes.ffield import parse_field_spec
from groupcodes.perms import (
    Perm,
    derived_subgroup,
    find_isomorphism,
    format_cycles,
    is_regular,
    regular_representation,
)

from .helpers import naive_weight_counts

F2 = parse_field_spec("2")
F3 = parse_field_spec("3")


def brute_derived_order(table):
    """Commutator-closure oracle working directly on the table."""
    comms = {
        table.mul(table.mul(table.inv(a), table.inv(b)), table.mul(a, b))
        for a in range(table.order)
        for b in range(table.order)
    }
    closure = {table.identity}
    frontier = list(closure)
    while frontier:
        nxt = []
        for x in frontier:
            for c in comms:
                y = table.mul(x, c)
                if y not in closure:
                    closure.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(closure)


class TestRepCodes:
    def test_rep_code_length_one_is_full_space(self):
        C = rep_code(1, F3)
        assert C.k == 1 and C.n == 1

    def test_rep_code_basics(self):
        C = rep_code(3, F2)
        assert C.gen.tolist() == [[1, 1, 1]] and min_weight(C) == 3
        C = rep_code(4, F3)
        counts = naive_weight_counts(C.gen.tolist(), F3)
        assert C.k == 1 and set(counts) == {0, 4}

    def test_rep_sum_layout(self):
        assert rep_sum_code(1, 3, F2) == rep_code(3, F2)
        C = rep_sum_code(2, 3, F2)
        assert C.gen.tolist() == [[1, 1, 1, 0, 0, 0], [0, 0, 0, 1, 1, 1]]

    @pytest.mark.parametrize("s,t", [(1, 2), (2, 2), (2, 3), (3, 2), (2, 4)])
    def test_rep_sum_min_weight_and_divisibility(self, s, t):
        for field in (F2, F3):
            C = rep_sum_code(s, t, field)
            assert C.k == s and C.n == s * t
            assert min_weight(C) == t
            if t > 1:
                assert is_divisible(C, t)


class TestBlockIndex:
    def test_round_trip(self):
        idx = BlockIndex(3, 4)
        for r in range(12):
            h, i = idx.to_pair(r)
            assert 0 <= h < 4 and 0 <= i < 3
            assert idx.to_coord(h, i) == r

    def test_range_checks(self):
        idx = BlockIndex(2, 2)
        with pytest.raises(ValueError):
            idx.to_pair(4)
        with pytest.raises(ValueError):
            idx.to_coord(2, 0)


class TestGroupBuilders:
    def test_cyclic_trivial(self):
        assert build_cyclic(1).order == 1

    def test_dihedral_six_nonabelian(self):
        table = build_dihedral(3)
        assert table.order == 6 and not table.is_abelian()

    def test_dihedral_degenerate_cases(self):
        assert build_dihedral(1).order == 2
        assert build_dihedral(2).is_abelian()  # the Klein group

    def test_product_of_coprime_cyclics_is_cyclic(self):
        prod = direct_product(build_cyclic(2), build_cyclic(3))
        assert find_isomorphism(prod, build_cyclic(6)) is not None

    def test_gpqm_232_is_dihedral(self):
        table = build_Gpqm(2, 3, 2)
        assert table.order == 6
        assert find_isomorphism(table, build_dihedral(3)) is not None

    def test_gpqm_derived_orders(self):
        reg, _ = regular_representation(build_Gpqm(2, 3, 2))
        assert derived_subgroup(reg).order == 3
        reg21, _ = regular_representation(build_Gpqm(3, 7, 2))
        D = derived_subgroup(reg21)
        assert reg21.order == 21 and D.order == 7
        assert reg21.order // D.order == 3

    def test_gpqm_structure(self):
        table = build_Gpqm(3, 7, 2)
        assert not table.is_abelian()
        reg, _ = regular_representation(table)
        D = derived_subgroup(reg)
        # the derived subgroup is the normal Sylow q-subgroup: unique order-7
        assert sorted(x.order() for x in D.elements) == [1] + [7] * 6
        from groupcodes.perms import quotient

        q_table, _ = quotient(reg, D)
        assert q_table.is_cyclic() and q_table.order == 3

    def test_gpqm_precondition_errors(self):
        with pytest.raises(ValueError, match="not prime"):
            build_Gpqm(4, 3, 2)
        with pytest.raises(ValueError, match="not prime"):
            build_Gpqm(2, 9, 2)
        with pytest.raises(ValueError, match="does not divide"):
            build_Gpqm(3, 5, 2)
        with pytest.raises(ValueError, match="is 1 modulo"):
            build_Gpqm(2, 3, 1)
        with pytest.raises(ValueError, match="not 1 modulo"):
            build_Gpqm(3, 7, 3)

    def test_smallest_valid_m(self):
        assert smallest_valid_m(2, 3) == 2
        assert smallest_valid_m(3, 7) == 2
        assert smallest_valid_m(2, 7) == 6

    def test_a5(self):
        table = build_A5()
        assert table.order == 60
        assert brute_derived_order(table) == 60  # perfect
        center = [
            a
            for a in range(60)
            if all(table.mul(a, b) == table.mul(b, a) for b in range(60))
        ]
        assert center == [table.identity]


class TestPrescribed:
    def test_t_one_is_cyclic(self):
        result = prescribed_commutator_group(5, 1)
        assert result.supported and result.case == "cyclic"
        assert result.table.is_cyclic()

    def test_2_3_is_dihedral_six(self):
        result = prescribed_commutator_group(2, 3)
        assert result.case == "dihedral-odd"
        assert find_isomorphism(result.table, build_dihedral(3)) is not None

    def test_4_2_is_dihedral_eight(self):
        result = prescribed_commutator_group(4, 2)
        assert result.case == "dihedral-even"
        assert find_isomorphism(result.table, build_dihedral(4)) is not None

    def test_2_2_unsupported(self):
        result = prescribed_commutator_group(2, 2)
        assert not result.supported
        assert result.table is None and result.case is None
        assert "does not prove" in result.reason

    def test_prime_matching_case(self):
        result = prescribed_commutator_group(3, 7)
        assert result.supported and result.case == "split-metacyclic-product"
        assert result.table.order == 21

    def test_perfect_case(self):
        result = prescribed_commutator_group(2, 60)
        assert result.supported and result.case == "perfect-a5"
        assert result.table.order == 120

    @pytest.mark.parametrize("s,t", [(2, 3), (4, 2), (2, 5), (3, 7), (6, 3), (4, 6)])
    def test_supported_outputs_have_prescribed_invariants(self, s, t):
        result = prescribed_commutator_group(s, t)
        assert result.supported
        assert result.table.order == s * t
        reg, _ = regular_representation(result.table)
        D = derived_subgroup(reg)
        assert D.order == t and reg.order // D.order == s
        assert brute_derived_order(result.table) == t  # independent oracle


class TestRepSumGenerators:
    def test_2_2_explicit(self):
        shift, rotate, G = rep_sum_paut_generators(2, 2)
        assert format_cycles(shift) == "(1 3)(2 4)"
        assert format_cycles(rotate) == "(1 2)(3 4)"
        assert G.order == 4 and is_regular(G)
        assert all(g.order() <= 2 for g in G.elements)  # the Klein group

    def test_2_3_cyclic(self):
        _, _, G = rep_sum_paut_generators(2, 3)
        assert G.order == 6
        assert G.cyclic_generator() is not None

    def test_trivial(self):
        _, _, G = rep_sum_paut_generators(1, 1)
        assert G.order == 1 and is_regular(G)

    @pytest.mark.parametrize("s", [2, 3, 4])
    @pytest.mark.parametrize("t", [2, 3, 4])
    def test_properties_all_small_pairs(self, s, t):
        shift, rotate, G = rep_sum_paut_generators(s, t)
        assert G.order == s * t
        assert is_regular(G)
        assert shift * rotate == rotate * shift
        assert G.is_abelian()
        for field in (F2, F3):
            C = rep_sum_code(s, t, field)
            assert paut_contains(C, shift) and paut_contains(C, rotate)


class TestDecomposition:
    def test_identity(self):
        dec = decompose_paut_element(Perm.identity(6), 2, 3)
        assert dec.sigma.is_identity()
        assert all(tau.is_identity() for tau in dec.taus)

    def test_shift_generator(self):
        shift, _, _ = rep_sum_paut_generators(2, 3)
        dec = decompose_paut_element(shift, 2, 3)
        assert format_cycles(dec.sigma) == "(1 2)"
        assert all(tau.is_identity() for tau in dec.taus)
        assert dec.recompose() == shift

    def test_all_paut_elements_round_trip(self):
        C = rep_sum_code(2, 2, F2)
        group = paut_enumerate(C)
        assert group.order == 8
        for pi in group.elements:
            dec = decompose_paut_element(pi, 2, 2)
            assert dec.recompose() == pi
        # converse: every (sigma, taus) recomposition lands in PAut
        perms2 = [Perm(p) for p in itertools.permutations(range(2))]
        count = 0
        for sigma in perms2:
            for taus in itertools.product(perms2, repeat=2):
                pi = PAutDecomposition(sigma, taus).recompose()
                assert pi in group
                count += 1
        assert count == 8

    def test_non_block_map_rejected(self):
        bad = Perm((0, 2, 1, 3))  # mixes blocks of rep_sum(2, 2)
        with pytest.raises(ValueError, match="single block"):
            decompose_paut_element(bad, 2, 2)

    def test_t_one_rejected(self):
        with pytest.raises(ValueError, match="t >= 2"):
            decompose_paut_element(Perm.identity(3), 3, 1)

    def test_membership_iff_decomposable(self):
        # for n <= 8 both directions against the enumerated group
        for s, t in [(2, 2), (2, 3), (4, 2), (2, 4)]:
            C = rep_sum_code(s, t, F2)
            group = paut_enumerate(C)
            for p in itertools.permutations(range(s * t)):
                pi = Perm(p)
                try:
                    dec = decompose_paut_element(pi, s, t)
                    ok = dec.recompose() == pi
                except ValueError:
                    ok = False
                assert ok == (pi in group)


class TestGroupSpecs:
    def test_named_builders(self):
        assert parse_group_spec("cyclic:4").order == 4
        assert parse_group_spec("dihedral:3").order == 6
        assert parse_group_spec("gpqm:3,7,2").order == 21
        assert parse_group_spec("a5").order == 60
        assert parse_group_spec("product:cyclic:2xcyclic:3").order == 6
        assert parse_group_spec("prescribed:2,3").order == 6

    def test_unsupported_prescribed_raises(self):
        with pytest.raises(ValueError, match="no supported construction"):
            parse_group_spec("prescribed:2,2")

    def test_garbage_rejected(self):
        with pytest.raises(ValueError):
            parse_group_spec("octonions:8")
        with pytest.raises(ValueError):
            parse_group_spec("product:cyclic:2")
