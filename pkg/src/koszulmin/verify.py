"""Checkers confronting the computed products with every pinned value.

Each checker returns a report {check_name, status, witnesses, ...}; a fail
always carries witnesses (inputs, expected, got).  The checkers recompute
what they verify through routes independent of the table assembly wherever
one exists: the arity-d products against iterated partial derivatives, the
coordinate-free contract-then-differentiate expressions against the local
mixed partials, the vanishing claims by honest tree evaluation rather than
by the degree pruning that predicts them.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import factorial

from .bases import subsets
from .exterior import contract_theta, wedge_e, wedge_estar
from .koszul import check_factorization
from .poly import Context, Polynomial, mixed_partial, mono_de_rham, mono_u_shift
from .serialize import avector_text
from .tensors import AVector, FVector, coh_a, degrees_a, _merged
from .transfer import side_conditions
from .trees import DEFAULT_M_CAP, mu_k, mu_table

# fixed verification potentials: every degree from 2 to 4, ranks 1 to 3,
# including quadrics with cross terms and a quartic with a mixed monomial
TEST_MATRIX: tuple[tuple[int, int, str], ...] = (
    (1, 2, "x1^2"),
    (2, 2, "x1*x2"),
    (2, 2, "x1^2 + x2^2"),
    (3, 2, "x1^2 + 3*x1*x2 + 2*x2^2 + x2*x3 + 5*x3^2"),
    (1, 3, "x1^3"),
    (3, 3, "x1*x2*x3"),
    (2, 3, "x1^3 + x2^3"),
    (2, 4, "x1^4 + x2^4"),
    (3, 4, "x1^4 + x2^4 + x3^4 + x1*x2*x3^2"),
)

# integer quadrics with all cross terms present, used by the d = 2 checks
GENERIC_QUADRICS: dict[int, str] = {
    1: "3*x1^2",
    2: "x1^2 + 3*x1*x2 + 2*x2^2",
    3: "x1^2 + 3*x1*x2 + 2*x2^2 + x2*x3 + 5*x3^2 + 2*x1*x3",
    4: "x1^2 + 2*x2^2 + 3*x3^2 + 5*x4^2 + x1*x2 + x2*x3 + x3*x4 + 7*x1*x3 + 2*x2*x4 + 3*x1*x4",
}

_MAX_WITNESSES = 10


def _witness(inputs, expected, got) -> dict:
    return {"inputs": inputs, "expected": expected, "got": got}


def _report(name: str, witnesses: list, **extra) -> dict:
    rep = {
        "check_name": name,
        "status": "pass" if not witnesses else "fail",
        "witnesses": witnesses[:_MAX_WITNESSES],
    }
    rep.update(extra)
    return rep


def _monos(n: int, cap: int) -> list[tuple[int, ...]]:
    return [th for th in subsets(n) if len(th) <= cap]


def _table_lookup(table: dict, k: int, inputs) -> AVector:
    want = [list(m) for m in inputs]
    for e in table["entries"]:
        if e["k"] == k and e["inputs"] == want:
            return e["output"]
    return AVector()


def check_minimality(ctx: Context, table: dict, chain_m_max: int = 3) -> dict:
    """mu^1 vanishes: no stored arity-1 entries, and the chains of stacked
    perturbation vertices are evaluated honestly and sum to zero."""
    bad = []
    for e in table["entries"]:
        if e["k"] == 1:
            bad.append(_witness(e["inputs"], "0", avector_text(e["output"])))
    cache: dict = {}
    for th in _monos(ctx.n, 1):
        for m in range(1, chain_m_max + 1):
            got = mu_k(ctx, ((0, th),), m_values=[m], cache=cache)
            if got:
                bad.append(
                    _witness([list(th), f"chain m={m}"], "0", avector_text(got))
                )
    return _report("minimality", bad)


def _wedge_value(th1, th2) -> AVector:
    step = wedge_estar(th1, th2)
    if step is None:
        return AVector()
    sign, mono = step
    return AVector.term(0, mono, sign)


def check_mu2(ctx: Context, table: dict, cap: int = 1) -> dict:
    """Arity 2: the plain wedge for d >= 3; for d = 2 the anticommutator is
    u times the Hessian entry, the associated graded is the wedge, and the
    symmetric part matches the u/2! normalization of the arity-d formula."""
    n, d = ctx.n, ctx.d
    bad = []
    cache: dict = {}
    monos = _monos(n, cap)
    if d >= 3:
        for th1 in monos:
            for th2 in monos:
                got = mu_k(ctx, ((0, th1), (0, th2)), cache=cache)
                want = _wedge_value(th1, th2)
                if got != want:
                    bad.append(
                        _witness(
                            [list(th1), list(th2)],
                            avector_text(want),
                            avector_text(got),
                        )
                    )
                stored = _table_lookup(table, 2, (th1, th2))
                if stored != got:
                    bad.append(
                        _witness(
                            [list(th1), list(th2)],
                            "table entry equal to recomputation",
                            avector_text(stored),
                        )
                    )
        return _report("mu2", bad)

    vals = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            vals[(i, j)] = mu_k(ctx, ((0, (i,)), (0, (j,))), cache=cache)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            hess = mixed_partial(ctx.potential.p, (i, j)).constant_value()
            want = AVector.term(1, (), hess) if hess else AVector()
            got = vals[(i, j)] + vals[(j, i)]
            if got != want:
                bad.append(
                    _witness(
                        [[i], [j], "anticommutator"],
                        avector_text(want),
                        avector_text(got),
                    )
                )
            # symmetric part = (u/2!) Hessian entry: the arity-d normalization
            sym = (vals[(i, j)] + vals[(j, i)]) * Fraction(1, 2)
            want_sym = AVector.term(1, (), Fraction(hess, 2)) if hess else AVector()
            if sym != want_sym:
                bad.append(
                    _witness(
                        [[i], [j], "symmetric part"],
                        avector_text(want_sym),
                        avector_text(sym),
                    )
                )
    for th1 in monos:
        for th2 in monos:
            got = mu_k(ctx, ((0, th1), (0, th2)), cache=cache)
            graded = AVector({k: c for k, c in got.terms.items() if k[0] == 0})
            want = _wedge_value(th1, th2)
            if graded != want:
                bad.append(
                    _witness(
                        [list(th1), list(th2), "associated graded"],
                        avector_text(want),
                        avector_text(graded),
                    )
                )
    return _report(
        "mu2",
        bad,
        notes=(
            "the anticommutator carries the u power forced by the internal "
            "grading (inputs have internal degree 2 = d); the symmetric part "
            "equals u/2! times the second partial, matching the arity-d "
            "normalization specialized to d = 2"
        ),
    )


def check_window(
    ctx: Context, table: dict, cap: int = 1, honest_m_max: int = 2
) -> dict:
    """mu^k = 0 for 2 < k < d, by honest tree evaluation over small
    perturbation counts on top of the stored-table scan."""
    d = ctx.d
    bad = []
    for e in table["entries"]:
        if 2 < e["k"] < d:
            bad.append(_witness(e["inputs"], "0", avector_text(e["output"])))
    cache: dict = {}
    monos = _monos(ctx.n, cap)
    for k in range(3, d):
        for tup in product(monos, repeat=k):
            inputs = tuple((0, th) for th in tup)
            for m in range(honest_m_max + 1):
                got = mu_k(ctx, inputs, m_values=[m], cache=cache)
                if got:
                    bad.append(
                        _witness(
                            [list(t) for t in tup] + [f"m={m}"],
                            "0",
                            avector_text(got),
                        )
                    )
    return _report("window", bad)


def check_mu_d(ctx: Context, table: dict, cap: int = 1) -> dict:
    """Arity d on generators: (u/d!) times the iterated partial of the
    potential, exactly, on every tuple with repeats.  For d = 2 the wedge
    part belongs to the classical product, so the comparison is against the
    u part alone."""
    n, d = ctx.n, ctx.d
    bad = []
    cache: dict = {}
    # cross-check stored entries only when the table build reached arity d
    table_covers_d = any(e["k"] == d for e in table["entries"])
    for tup in product(range(1, n + 1), repeat=d):
        mixed = mixed_partial(ctx.potential.p, tup).constant_value()
        want = (
            AVector.term(1, (), Fraction(mixed, factorial(d)))
            if mixed
            else AVector()
        )
        got = mu_k(ctx, tuple((0, (i,)) for i in tup), cache=cache)
        if d == 2:
            got = AVector({k: c for k, c in got.terms.items() if k[0] != 0})
        if got != want:
            bad.append(
                _witness([[i] for i in tup], avector_text(want), avector_text(got))
            )
        if d >= 3 and cap >= 1 and table_covers_d:
            stored = _table_lookup(table, d, tuple((i,) for i in tup))
            if stored != got:
                bad.append(
                    _witness(
                        [[i] for i in tup],
                        "table entry equal to recomputation",
                        avector_text(stored),
                    )
                )
    return _report("mu_d", bad)


def _form_dw(ctx: Context) -> FVector:
    out: dict = {}
    for i in range(1, ctx.n + 1):
        for mono, c in ctx.gradients[i - 1].terms.items():
            _merged(out, ((((i,), mono_u_shift(mono, 1)), c),))
    return FVector(out)


def _form_de_rham(v: FVector) -> FVector:
    out: dict = {}
    for (beta, f), c in v.terms.items():
        for i, mult, f2 in mono_de_rham(f):
            step = wedge_e((i,), beta)
            if step is None:
                continue
            sign, beta2 = step
            _merged(out, (((beta2, f2), c * mult * sign),))
    return FVector(out)


def _form_contract(v: FVector, j: int) -> FVector:
    out: dict = {}
    for (beta, f), c in v.terms.items():
        step = contract_theta(j, beta)
        if step is None:
            continue
        sign, beta2 = step
        _merged(out, (((beta2, f), c * sign),))
    return FVector(out)


def global_forms(ctx: Context, sections) -> Polynomial:
    """(1/k!) d( ... d(dw contract s_1) contract s_2 ...) contract s_k
    for constant sections s_j = v_{sections[j]}; dw carries the u of w."""
    indices = tuple(sections)
    form = _form_dw(ctx)
    for pos, j in enumerate(indices):
        form = _form_contract(form, j)
        if pos < len(indices) - 1:
            form = _form_de_rham(form)
    out = Polynomial.zero(ctx.n)
    for (beta, f), c in form.terms.items():
        if beta:
            raise AssertionError("contraction left residual form degree")
        out = out + Polynomial.monomial(ctx.n, f, c)
    return Fraction(1, factorial(len(indices))) * out


def check_global_forms(ctx: Context) -> dict:
    """The coordinate-free iterated expression against the local oracle
    u/d! times the mixed partial, on all generator tuples with repeats."""
    n, d = ctx.n, ctx.d
    bad = []
    for tup in product(range(1, n + 1), repeat=d):
        got = global_forms(ctx, tup)
        mixed = mixed_partial(ctx.potential.p, tup)
        want = Fraction(1, factorial(d)) * mixed.u_shift(1)
        if got != want:
            bad.append(_witness([[i] for i in tup], want.pretty(), got.pretty()))
    return _report("global_forms", bad)


def stasheff_defect(ctx: Context, inputs, N: int, cache: dict) -> AVector:
    """sum over r+s+t = N, s >= 1 of
    (-1)^(r+st) mu^(r+1+t)(1^r x mu^s x 1^t) with the Koszul sign of moving
    mu^s (parity s) past the first r inputs."""
    total = AVector()
    for r in range(N):
        for s in range(1, N - r + 1):
            t = N - r - s
            e = r + s * t + s * sum(coh_a(a) for a in inputs[:r])
            sign = -1 if e % 2 else 1
            inner = mu_k(ctx, inputs[r : r + s], cache=cache)
            for key, c in inner.terms.items():
                outer = mu_k(ctx, inputs[:r] + (key,) + inputs[r + s :], cache=cache)
                total = total + outer * (c * sign)
    return total


def stasheff_check(
    ctx: Context,
    max_relation: int = 4,
    degrees: tuple[int, ...] = (0, 1),
    cache: dict | None = None,
) -> dict:
    """The relations up to the requested arity on all input tuples whose
    wedge degrees lie in `degrees` (0 admits the unit)."""
    if cache is None:
        cache = {}
    monos = [th for th in subsets(ctx.n) if len(th) in degrees]
    identities = []
    all_bad: list = []
    for N in range(2, max_relation + 1):
        bad = []
        for tup in product(monos, repeat=N):
            inputs = tuple((0, th) for th in tup)
            defect = stasheff_defect(ctx, inputs, N, cache)
            if defect:
                bad.append(
                    _witness([list(t) for t in tup], "0", avector_text(defect))
                )
        identities.append(
            {
                "identity": f"relation N={N}",
                "status": "pass" if not bad else "fail",
                "witnesses": bad[:_MAX_WITNESSES],
            }
        )
        all_bad.extend(bad)
    return _report(
        "stasheff",
        all_bad,
        identities=identities,
        notes=(
            "sign convention: (-1)^(r+st) on the composition, Koszul sign "
            "for moving the inner product past the first r inputs in their "
            "cohomological degrees; crossing signs inside tree evaluation "
            "use the shifted degrees (see conventions)"
        ),
    )


def check_grading(table: dict) -> dict:
    """Every stored product obeys both grading laws: internal degree is the
    sum of the input degrees, cohomological degree the sum plus 2 - k."""
    d = table["d"]
    bad = []
    for e in table["entries"]:
        k = e["k"]
        int_in = sum(len(m) for m in e["inputs"])
        coh_in = sum(len(m) for m in e["inputs"]) + 2 - k
        for key in e["output"].terms:
            internal, coh = degrees_a(key, d)
            if internal != int_in or coh != coh_in:
                bad.append(
                    _witness(
                        e["inputs"],
                        f"internal {int_in}, cohomological {coh_in}",
                        f"internal {internal}, cohomological {coh}",
                    )
                )
    return _report("grading", bad)


def check_u_linearity(ctx: Context, cap: int = 1, m_cap: int = DEFAULT_M_CAP) -> dict:
    """mu^k with one u-shifted input equals u times the unshifted product."""
    bad = []
    cache: dict = {}
    monos = _monos(ctx.n, cap)
    arities = sorted({2, ctx.d})
    for k in arities:
        for tup in product(monos, repeat=k):
            base = mu_k(ctx, tuple((0, th) for th in tup), m_cap=m_cap, cache=cache)
            for slot in range(k):
                shifted_inputs = tuple(
                    (1 if pos == slot else 0, th) for pos, th in enumerate(tup)
                )
                shifted = mu_k(ctx, shifted_inputs, m_cap=m_cap, cache=cache)
                want = AVector({(t + 1, th): c for (t, th), c in base.terms.items()})
                if shifted != want:
                    bad.append(
                        _witness(
                            [list(t) for t in tup] + [f"u in slot {slot}"],
                            avector_text(want),
                            avector_text(shifted),
                        )
                    )
    return _report("u_linearity", bad)


def factorization_report(ctx: Context, sym_bound: int | None = None) -> dict:
    rep = check_factorization(ctx, sym_bound)
    rep["check_name"] = "factorization"
    rep.setdefault("witnesses", [])
    if rep["status"] == "fail" and rep.get("counterexample"):
        rep["witnesses"] = [rep["counterexample"]]
    return rep


def run_suite(
    ctx: Context,
    suite: str,
    *,
    max_k: int | None = None,
    theta_cap: int = 1,
    m_cap: int = DEFAULT_M_CAP,
    sym_bound: int | None = None,
    max_relation: int = 4,
    f_bound: int = 3,
) -> list[dict]:
    """Run one named verification suite (or all of them) on a context."""
    if suite not in ("side", "factorization", "mu", "stasheff", "all"):
        raise ValueError(f"unknown suite: {suite}")
    reports: list[dict] = []
    if suite in ("side", "all"):
        reports.append(side_conditions(ctx.n, f_bound=f_bound))
    if suite in ("factorization", "all"):
        reports.append(factorization_report(ctx, sym_bound))
    if suite in ("mu", "all"):
        k_top = max_k if max_k is not None else max(ctx.d, 2)
        table = mu_table(ctx, k_top, theta_cap=theta_cap, m_cap=m_cap)
        reports.append(check_minimality(ctx, table))
        reports.append(check_mu2(ctx, table, cap=theta_cap))
        reports.append(check_window(ctx, table, cap=theta_cap))
        reports.append(check_mu_d(ctx, table, cap=theta_cap))
        reports.append(check_grading(table))
        reports.append(check_u_linearity(ctx, cap=theta_cap, m_cap=m_cap))
        reports.append(check_global_forms(ctx))
    if suite in ("stasheff", "all"):
        reports.append(stasheff_check(ctx, max_relation=max_relation))
    return reports
