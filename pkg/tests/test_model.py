import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import BOOL, L3, random_graph, random_relation, random_set, seeds
from mvgraph.algebra import big_meet
from mvgraph.casestudy import PHI, case_study
from mvgraph.formula import And, Atom, Bottom, Box, Dia, Or, Top
from mvgraph.graph import AGraph, GraphFrame, RelationPair, check_E_compatibility
from mvgraph.model import (
    StabilityError,
    UnknownAtomError,
    check_monotone_in_beta,
    evaluate,
    make_valuation,
    refutation_degree,
    refutes,
    sequent_true,
    sequent_valid_on_frame,
    support_degree,
    supports,
)
from mvgraph.mvsets import Situation


class Oracle:
    """Clause-by-clause evaluation over dictionaries of TruthValues."""

    def __init__(self, M):
        self.M = M
        self.F = M.frame
        self.A = self.F.algebra
        self.Z = list(self.F.graph.nodes)
        self.S = [(b, z) for b in range(self.A.size) for z in self.Z]
        self.E = self.F.graph.E

    def beta(self, b):
        return self.A.element(b)

    def down(self, u):
        return {(b, z): big_meet(self.A, [u[z2] >> (self.E(z, z2) >> self.beta(b)) for z2 in self.Z])
                for b, z in self.S}

    def up(self, f):
        return {z: big_meet(self.A, [f[(b, z2)] >> (self.E(z2, z) >> self.beta(b)) for b, z2 in self.S])
                for z in self.Z}

    def ev(self, phi):
        """Return ``(extent, intent)`` as dictionaries."""
        A = self.A
        if isinstance(phi, Atom):
            c = self.M.valuation[phi.name]
            return ({(b, z): c.extent(Situation(b, z)) for b, z in self.S},
                    {z: c.intent(z) for z in self.Z})
        if isinstance(phi, Top):
            f = {s: A.element(A.top) for s in self.S}
            return f, self.up(f)
        if isinstance(phi, Bottom):
            u = {z: A.element(A.top) for z in self.Z}
            return self.down(u), u
        if isinstance(phi, And):
            (f, _), (g, _) = self.ev(phi.left), self.ev(phi.right)
            h = {s: f[s] & g[s] for s in self.S}
            return h, self.up(h)
        if isinstance(phi, Or):
            (_, u), (_, v) = self.ev(phi.left), self.ev(phi.right)
            w = {z: u[z] & v[z] for z in self.Z}
            return self.down(w), w
        if isinstance(phi, Box):
            R = self.F.box_relation(phi.label)
            _, u = self.ev(phi.sub)
            f = {(b, z): big_meet(A, [u[z2] >> (R(z, z2) >> self.beta(b)) for z2 in self.Z])
                 for b, z in self.S}
            return f, self.up(f)
        if isinstance(phi, Dia):
            R = self.F.dia_relation(phi.label)
            f, _ = self.ev(phi.sub)
            u = {z: big_meet(A, [f[(b, z2)] >> (R(z, z2) >> self.beta(b)) for b, z2 in self.S])
                 for z in self.Z}
            return self.down(u), u
        raise TypeError(phi)


def random_model(seed, n_nodes=2, algebras=(BOOL, L3)):
    rng = np.random.default_rng(seed)
    A = algebras[int(rng.integers(0, len(algebras)))]
    G = random_graph(rng, A, n_nodes)
    cands = [random_relation(rng, A, G.nodes, G.nodes) for _ in range(30)]
    box = next((R for R in cands if check_E_compatibility(G, R, None).ok), G.E)
    dia = next((R for R in reversed(cands) if check_E_compatibility(G, None, R).ok), G.E.converse())
    F = GraphFrame(G, {"K": RelationPair(box, dia), "E": RelationPair(G.E, G.E.converse())})
    tables = {p: random_set(rng, A, G.situations) for p in ("p", "q", "r")}
    return make_valuation(F, tables, mode="close")


small_formulas = st.recursive(
    st.sampled_from([Bottom(), Top(), Atom("p"), Atom("q"), Atom("r")]),
    lambda sub: st.one_of(
        st.builds(And, sub, sub),
        st.builds(Or, sub, sub),
        st.builds(Box, st.sampled_from(["K", "E"]), sub),
        st.builds(Dia, st.sampled_from(["K", "E"]), sub),
    ),
    max_leaves=6,
)


@settings(max_examples=150, deadline=None)
@given(seeds, small_formulas)
def test_evaluation_matches_oracle(seed, phi):
    M = random_model(seed)
    c = evaluate(M, phi)
    f, u = Oracle(M).ev(phi)
    assert all(c.extent(Situation(*s)) == v for s, v in f.items())
    assert all(c.intent(z) == v for z, v in u.items())
    assert M.frame.polarity.up(c.extent) == c.intent


@settings(max_examples=80, deadline=None)
@given(seeds, small_formulas)
def test_extents_monotone_in_beta(seed, phi):
    assert check_monotone_in_beta(random_model(seed), phi).ok


@settings(max_examples=80, deadline=None)
@given(seeds, small_formulas, small_formulas)
def test_monotone_rules(seed, phi, psi):
    M = random_model(seed)
    if sequent_true(M, phi, psi):
        for op in (Box, Dia):
            assert sequent_true(M, op("K", phi), op("K", psi))


def test_constants_on_case_study():
    M = case_study().model
    G = M.frame.graph
    bot = evaluate(M, "bot")
    assert (G.as_table(bot.extent) == np.arange(11)[:, None]).all()
    assert (evaluate(M, "top").intent.values == 0).all()


def test_case_study_atoms_are_stable_and_monotone():
    M = case_study().model
    for p in ("phi", "psi"):
        assert check_monotone_in_beta(M, p).ok


def test_perturbed_table_is_rejected_with_witness():
    loaded = case_study()
    bad = [list(r) for r in PHI]
    bad[7][1] = "0.6"  # one cell below the column value 1.0
    with pytest.raises(StabilityError) as err:
        make_valuation(loaded.frame, {"phi": bad})
    assert err.value.atom == "phi"
    assert err.value.point == ("0.7", "z_M")
    M = make_valuation(loaded.frame, {"phi": bad}, mode="close")
    assert M.valuation["phi"].extent == loaded.model.valuation["phi"].extent


def test_support_and_refutation_queries():
    M = case_study().model
    assert str(support_degree(M, "0.3", "z_A", "[]_M psi")) == "0.7"
    assert supports(M, "0.3", "z_A", "0.7", "[]_M psi")
    assert not supports(M, "0.3", "z_A", "0.8", "[]_M psi")
    d = refutation_degree(M, "z_A", "phi")
    assert refutes(M, "z_A", d, "phi")
    with pytest.raises(UnknownAtomError):
        evaluate(M, "nope")


def test_case_study_sequents():
    M = case_study().model
    assert sequent_true(M, "[]_M psi", "phi")
    assert sequent_true(M, "[]_M psi", "psi")
    assert not sequent_true(M, "phi", "psi")


def test_box_t_failure_certificate_on_boolean_frame():
    Z = ["x", "y"]
    G = AGraph.discrete(BOOL, Z)
    R = G.relation([[0, 1], [0, 1]])
    F = GraphFrame(G, {"": RelationPair(R, R.converse())})
    result = sequent_valid_on_frame(F, "[] p", "p")
    assert not result.valid
    M = make_valuation(F, {"p": result.counterexample["p"].extent})
    assert not sequent_true(M, "[] p", "p")
    assert sequent_valid_on_frame(F, "p & q", "q").valid
