from fractions import Fraction as F
from itertools import permutations, product

import pytest

from qaut import exact_linalg as la
from qaut.diagram import Arrow, Diagram, graph_diagram, single_object
from qaut.finite_hopf import function_hopf
from qaut.measured_algebra import copairing, function_algebra, gram, matrix_algebra
from qaut.ncrewrite import NCPolynomial, Verdict, complete
from qaut.presentation import (
    HopfPresentation,
    UnsupportedDiagram,
    antipode_axioms,
    check_coaction,
    check_hopf_wellformedness,
    classical_point_failures,
    classical_points,
    generator_name,
    magic_unitary_relations,
    present,
    verify_classical_point,
)

P = NCPolynomial.parse


def three_cycle():
    return graph_diagram([0, 1, 2], [(0, 1), (1, 2), (2, 0)])


def weighted():
    return single_object(function_algebra(2, ["1/3", "2/3"]))


def test_generator_names():
    pres = present(single_object(function_algebra(2)))
    assert pres.generators == ("u0_11", "u0_12", "u0_21", "u0_22")
    big = present(single_object(function_algebra(10)))
    assert big.generators[1] == "u0_1_2"


def test_uniform_relations_specialize_to_magic():
    pres = present(single_object(function_algebra(2)))
    by_label = {r.label: r.polynomial for r in pres.relations}
    # mult(i, j, l): delta_ij u_li - u_li u_lj
    assert by_label["mult[0](1,1,2)"] == P("u0_21 - u0_21*u0_21")
    assert by_label["mult[0](1,2,1)"] == P("-u0_11*u0_12")
    assert by_label["unit[0](1)"] == P("u0_11 + u0_12 - 1")
    assert by_label["measure[0](2)"] == P("u0_12/2 + u0_22/2 - 1/2")
    assert by_label["B[0](1,2)"] == P("u0_11*u0_12/2 + u0_21*u0_22/2")
    assert by_label["Bprime[0](1,1)"] == P("2*u0_11*u0_11 + 2*u0_12*u0_12 - 2")
    assert {r.family for r in pres.relations} == {"mult", "unit", "measure", "B", "Bprime"}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_ideal_equals_magic_ideal(n):
    pres = present(single_object(function_algebra(n)))
    ours = pres.system()
    magic = complete(magic_unitary_relations(n), pres.default_cap(), pres.generators)
    for p in magic_unitary_relations(n):
        assert ours.membership(p).verdict is Verdict.ZERO
    for p in pres.polynomials():
        assert magic.membership(p).verdict is Verdict.ZERO


def test_dimension_one():
    pres = present(single_object(function_algebra(1)))
    assert pres.generators == ("u0_11",)
    assert pres.membership(P("u0_11 - 1")).is_zero
    assert pres.antipode["0"] == [[P("u0_11")]]
    assert check_hopf_wellformedness(pres).ok


def test_graph_intertwiners():
    d = three_cycle()
    pres = present(d)
    inter = {r.label: r.polynomial for r in pres.relations if r.family == "intertwine"}
    # s is the identity matrix: u1_mi - u0_mi
    for m, i in product(range(1, 4), repeat=2):
        if m != i:
            assert inter[f"intertwine[s]({m},{i})"] == P(f"u1_{m}{i} - u0_{m}{i}")
    # oracle: entries of u1*T - T*u0 assembled directly
    t = d.arrow("t").matrix
    u0, u1 = pres.matrix("0"), pres.matrix("1")
    for m, i in product(range(3), repeat=2):
        p = sum((u1[m][l] * t[l][i] for l in range(3)), NCPolynomial()) - sum(
            (t[m][j] * u0[j][i] for j in range(3)), NCPolynomial())
        assert inter.get(f"intertwine[t]({m + 1},{i + 1})", NCPolynomial()) == p


def test_relation_order_is_deterministic():
    a = [r.label for r in present(three_cycle()).relations]
    b = [r.label for r in present(three_cycle()).relations]
    assert a == b
    families = [lbl.split("[")[0] for lbl in a]
    order = ["mult", "unit", "measure", "B", "Bprime", "intertwine"]
    assert families == sorted(families, key=order.index)


def test_invalid_diagram_rejected():
    d = Diagram({"0": function_algebra(2), "1": function_algebra(3)},
                [Arrow("f", "0", "1", [[1, 0], [0, 0], [0, 1]])])
    with pytest.raises(ValueError):
        present(d)


@pytest.mark.parametrize("d", [single_object(function_algebra(n)) for n in (1, 2, 3)] + [three_cycle(), weighted()],
                         ids=["n1", "n2", "n3", "cycle", "weighted"])
def test_counit_kills_relations(d):
    pres = present(d)
    assert all(pres.counit(r.polynomial) == 0 for r in pres.relations)


# antipode ------------------------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3])
def test_uniform_antipode_is_transpose(n):
    pres = present(single_object(function_algebra(n)))
    for i, j in product(range(n), repeat=2):
        assert pres.antipode["0"][i][j] == pres.u("0", j + 1, i + 1)


def _closed_formula_transposed(pres, x):
    # S(u_ij) = sum_{a,b} B'_ja G_bi u_ab, i.e. the transpose of B' u G
    z = pres.diagram.objects[x]
    g, bp, n = gram(z), copairing(z).matrix, z.dim
    return [[sum((pres.u(x, a + 1, b + 1) * (bp[j][a] * g[b][i]) for a in range(n) for b in range(n)),
                 NCPolynomial()) for j in range(n)] for i in range(n)]


def test_weighted_antipode_agrees_modulo_ideal():
    w = [F(1, 6), F(1, 3), F(1, 2)]
    pres = present(single_object(function_algebra(3, w)))
    other = _closed_formula_transposed(pres, "0")
    for i, j in product(range(3), repeat=2):
        assert other[i][j] == pres.u("0", j + 1, i + 1) * (w[i] / w[j])
        assert pres.antipode["0"][i][j] == pres.u("0", j + 1, i + 1) * (w[j] / w[i])
        assert pres.membership(other[i][j] - pres.antipode["0"][i][j]).is_zero


def _conjugation_point(q):
    """Matrix of x -> q x q^-1 on M_2 in the row-major basis E_11, E_12, E_21, E_22."""
    qi = la.invert(q)
    cols = []
    for a, b in product(range(2), repeat=2):
        e = la.matrix([[int((r, c) == (a, b)) for c in range(2)] for r in range(2)])
        img = la.matmul(la.matmul(q, e), qi)
        cols.append([img[r][c] for r in range(2) for c in range(2)])
    return la.transpose(la.matrix(cols))


def test_antipode_inverts_classical_point_of_non_tracial_matrix_algebra():
    # phi(x) = tr(Dx) with D = [[1, 1], [0, 2]]; conjugation by D preserves phi
    z = matrix_algebra(2, [1, 0, 1, 2])
    pres = present(single_object(z))
    point = _conjugation_point(la.matrix([[1, 1], [0, 2]]))
    assert verify_classical_point(pres, {"0": point})
    values = {pres.generators[4 * i + j]: point[i][j] for i in range(4) for j in range(4)}
    inverse = la.invert(point)

    def evaluate(mat):
        return la.matrix([[p.evaluate(values) for p in row] for row in mat])

    assert evaluate(pres.antipode["0"]) == inverse
    # the transposed form of the closed formula does not invert this point
    assert evaluate(_closed_formula_transposed(pres, "0")) != inverse


def test_antipode_axioms_at_classical_points():
    for d in (three_cycle(), weighted(), single_object(function_algebra(3))):
        pres = present(d)
        for point in classical_points(d):
            values = {}
            for x, m in point.items():
                n = pres.objects[x]
                for i, j in product(range(n), repeat=2):
                    values[generator_name(x, i + 1, j + 1, n)] = m[i][j]
            for _, p in antipode_axioms(pres):
                assert p.evaluate(values) == 0


@pytest.mark.parametrize("d", [single_object(function_algebra(2)), single_object(function_algebra(1)),
                               graph_diagram([0], [(0, 0)]), weighted()],
                         ids=["n2", "n1", "loop", "weighted"])
def test_wellformedness_all_zero(d):
    check = check_hopf_wellformedness(present(d))
    assert check.ok
    assert check.status == "complete" and check.tensor_status == "complete"
    assert not check.inconclusive and not check.failed


@pytest.mark.slow
def test_wellformedness_three_points_and_cycle():
    for d in (single_object(function_algebra(3)), three_cycle()):
        assert check_hopf_wellformedness(present(d)).ok


def test_wrong_antipode_detected():
    pres = present(single_object(function_algebra(2)))
    pres.antipode = {"0": pres.matrix("0")}
    pres.antipode["0"][0][1] = pres.u("0", 1, 1)
    check = check_hopf_wellformedness(pres, coproduct=False)
    assert not check.ok
    assert check.failed


# derived relation families ---------------------------------------------------------


@pytest.mark.parametrize("d", [single_object(function_algebra(n)) for n in (2, 3)] + [weighted(), three_cycle()],
                         ids=["n2", "n3", "weighted", "cycle"])
def test_pairing_relations_follow_from_mult_and_measure(d):
    pres = present(d)
    system = pres.system(families=("mult", "measure"))
    for r in pres.relations:
        if r.family == "B":
            assert system.membership(r.polynomial).is_zero, r.label


def test_composite_relation_is_redundant():
    # C(2) -> C(3) -> C(3): pull back along 3 -> 2 and along a 3-cycle of points
    f = [[1, 0], [1, 0], [0, 1]]
    g = [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    h = la.matmul(la.matrix(g), la.matrix(f))
    objs = {"0": function_algebra(2), "1": function_algebra(3), "2": function_algebra(3)}
    base = Diagram(objs, [Arrow("f", "0", "1", f), Arrow("g", "1", "2", g)])
    full = Diagram(objs, [Arrow("f", "0", "1", f), Arrow("g", "1", "2", g), Arrow("h", "0", "2", h)],
                   [("g", "f", "h")])
    pres = present(base)
    extra = [r for r in present(full).relations if r.family == "intertwine" and r.owner == "h"]
    assert extra
    for r in extra:
        assert pres.membership(r.polynomial).is_zero, r.label


# classical points ------------------------------------------------------------------


def test_classical_point_counts():
    assert len(classical_points(single_object(function_algebra(3)))) == 6
    assert len(classical_points(three_cycle())) == 3
    assert len(classical_points(weighted())) == 1
    assert len(classical_points(single_object(function_algebra(3, [1, 1, 2])))) == 2


def test_classical_points_verify():
    for d in (single_object(function_algebra(3)), three_cycle(), weighted()):
        pres = present(d)
        for point in classical_points(d):
            assert verify_classical_point(pres, point)


def _points_by_relation_evaluation(d, candidates):
    pres = present(d)
    found = []
    for combo in product(candidates, repeat=len(d.objects)):
        point = dict(zip(d.objects, combo))
        if all(la.shape(point[x])[0] == pres.objects[x] for x in point) and verify_classical_point(pres, point):
            found.append(point)
    return found


def _zero_one_matrices(n):
    for bits in product((0, 1), repeat=n * n):
        yield la.matrix([bits[r * n:(r + 1) * n] for r in range(n)])


def test_brute_force_oracle_uniform_and_weighted():
    # every 0/1 matrix is tried; only permutations satisfy the relations
    for d, count in ((single_object(function_algebra(3)), 6), (weighted(), 1)):
        n = next(iter(d.objects.values())).dim
        found = _points_by_relation_evaluation(d, list(_zero_one_matrices(n)))
        assert len(found) == count
        assert sorted(p["0"] for p in found) == sorted(p["0"] for p in classical_points(d))


def test_brute_force_oracle_cycle():
    perms = [la.matrix([[int(s[i] == j) for i in range(3)] for j in range(3)]) for s in permutations(range(3))]
    found = _points_by_relation_evaluation(three_cycle(), perms)
    assert len(found) == 3
    key = lambda p: (p["0"], p["1"])  # noqa: E731
    assert sorted(map(key, found)) == sorted(map(key, classical_points(three_cycle())))


def test_swap_violates_weighted_measure():
    pres = present(weighted())
    failures = classical_point_failures(pres, {"0": [[0, 1], [1, 0]]})
    assert failures and all(lbl.startswith(("measure", "B")) for lbl in failures)


def test_enumeration_unsupported_for_matrix_algebra():
    with pytest.raises(UnsupportedDiagram):
        classical_points(single_object(matrix_algebra(2)))


def test_point_shape_errors():
    pres = present(single_object(function_algebra(2)))
    with pytest.raises(la.DimensionError):
        verify_classical_point(pres, {"0": la.identity(3)})
    with pytest.raises(ValueError):
        verify_classical_point(pres, {})


# universal property and serialization ------------------------------------------------


def test_check_coaction_swap_action():
    # functions on Z/2 coacting on two points through the swap: u_ji = sum over g with g.i = j of delta_g
    pres = present(single_object(function_algebra(2)))
    h = function_hopf(2)
    u = [[[int((i + g) % 2 == j) for g in range(2)] for i in range(2)] for j in range(2)]
    assert check_coaction(pres, h, {"0": u})
    not_unital = [[[int(i == j and g == 0) for g in range(2)] for i in range(2)] for j in range(2)]
    report = check_coaction(pres, h, {"0": not_unital})
    assert not report
    assert any(f.witness[0].startswith("unit") for f in report.failures)


def test_round_trip_dict():
    pres = present(three_cycle())
    back = HopfPresentation.from_dict(pres.to_dict())
    assert back.generators == pres.generators
    assert [r.label for r in back.relations] == [r.label for r in pres.relations]
    assert back.polynomials() == pres.polynomials()
    assert back.antipode == pres.antipode
    for point in classical_points(three_cycle()):
        assert verify_classical_point(back, point)


def test_from_dict_rejects_unknown_generators():
    data = present(single_object(function_algebra(2))).to_dict()
    data["relations"][0] = "u9_11 - 1"
    with pytest.raises(ValueError):
        HopfPresentation.from_dict(data)
